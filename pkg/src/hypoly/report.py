"""Verdict records and proof-by-sampling for two-variable polynomial identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

from .polycore import Poly, Scalar, format_rational

Witness = Union[Poly, Fraction, None]


@dataclass(frozen=True)
class VerdictReport:
    """Outcome of one identity check; ``witness`` is the nonzero residual on failure."""

    identity_name: str
    family_label: str
    parameters: tuple = ()
    passed: bool = True
    witness: Witness = None
    skipped: bool = False
    note: str = ""

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("a verdict passes exactly when it carries no witness")

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        params = " ".join(f"{k}={_fmt(v)}" for k, v in self.parameters)
        out = f"{self.status} {self.identity_name} {self.family_label} {params}".rstrip()
        if self.note:
            out += f"  # {self.note}"
        if self.witness is not None:
            out += f"  residual: {self.witness}"
        return out

    def to_dict(self) -> dict:
        w = self.witness
        if isinstance(w, Poly):
            witness = {"poly": [format_rational(c) for c in w.coeffs]}
        elif w is None:
            witness = None
        else:
            witness = {"value": format_rational(w)}
        return {
            "identity": self.identity_name,
            "family": self.family_label,
            "parameters": {k: _fmt(v) for k, v in self.parameters},
            "status": self.status,
            "witness": witness,
            "note": self.note,
        }


def _fmt(v) -> str:
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    return str(v)


def verdict_from_residual(name: str, label: str, params, residual: Poly, note: str = "") -> VerdictReport:
    if residual.is_zero():
        return VerdictReport(name, label, tuple(params), True, None, note=note)
    return VerdictReport(name, label, tuple(params), False, residual, note=note)


@dataclass(frozen=True)
class SampleGrid:
    """(d1+1) x (d2+1) grid of distinct rational coordinates."""

    xs: tuple
    ys: tuple
    points: tuple = field(init=False)

    def __post_init__(self):
        if len(set(self.xs)) != len(self.xs) or len(set(self.ys)) != len(self.ys):
            raise ValueError("grid coordinates must be distinct along each axis")
        object.__setattr__(self, "points", tuple((a, b) for a in self.xs for b in self.ys))

    @classmethod
    def for_degrees(cls, d1: int, d2: int) -> "SampleGrid":
        # small, mixed-sign, non-integer nodes exercise the rational arithmetic
        def nodes(d):
            return tuple(Fraction(k - d // 2, 1) + Fraction(1, 3) for k in range(d + 1))

        return cls(nodes(d1), nodes(d2))


def check_bivariate_on_grid(
    lhs: Callable[[Fraction, Fraction], Scalar],
    rhs: Callable[[Fraction, Fraction], Scalar],
    d1: int,
    d2: int,
    name: str = "bivariate",
    label: str = "-",
    params=(),
) -> VerdictReport:
    """Exact comparison on a grid one node larger than each coordinate degree.

    Two polynomials of degree <= d1 in x1 and <= d2 in x2 that agree on such a
    grid are identical, so this decides the identity.
    """
    grid = SampleGrid.for_degrees(d1, d2)
    for x1, x2 in grid.points:
        diff = Fraction(lhs(x1, x2)) - Fraction(rhs(x1, x2))
        if diff != 0:
            note = f"first mismatch at ({format_rational(x1)}, {format_rational(x2)})"
            return VerdictReport(name, label, tuple(params), False, diff, note=note)
    return VerdictReport(name, label, tuple(params), True, None, note=f"{len(grid.points)} grid points")
