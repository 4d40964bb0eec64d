"""Suite configuration and the deterministic identity-suite runner."""

from __future__ import annotations

import json
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Callable

from . import classical, identities
from .construct import genfun_series
from .family import Family, hermite, jacobi, laguerre, make_family, random_families
from .polycore import parse_rational
from .report import VerdictReport


class ConfigError(ValueError):
    pass


# canonical identity order; reports come out grouped in this order
IDENTITIES = (
    "route_agreement",
    "genfun_series",
    "hypergeometric",
    "sturm_liouville",
    "eigen_recursion",
    "generalized_rodrigues",
    "addition_theorem",
    "parity",
    "derivative_ladder",
    "differential_recursion",
    "degree",
    "classical_map",
    "closed_genfun",
    "classical_recursions",
    "laguerre_addition",
    "jacobi_product",
)

DEFAULT_FAMILIES = ("hermite", "laguerre", "jacobi(1/2,1/2)", "jacobi(1,-1/2)", "random:5")


@dataclass
class SuiteConfig:
    families: list = field(default_factory=lambda: list(DEFAULT_FAMILIES))
    l_max: int = 8
    nu_extra: int = 2
    identities: list = field(default_factory=lambda: list(IDENTITIES))
    seed: int = 20240611
    eigen_nu_max: int = 12
    addition_l_max: int = 4
    addition_nu_max: int = 6
    genfun_order: int = 10
    genfun_points: list = field(default_factory=lambda: ["0", "1/3", "-2", "5/7"])
    laguerre_nu_max: int = 6
    laguerre_n_max: int = 4
    product_total: int = 6
    product_params: list = field(default_factory=lambda: ["0", "1/2", "1", "3/2"])
    classical_nu_max: int = 6

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if f.type == "int" and (not isinstance(v, int) or isinstance(v, bool)):
                raise ConfigError(f"{f.name} must be an integer")
            if f.type == "int" and f.name != "seed" and v < 0:
                raise ConfigError(f"{f.name} must be nonnegative, got {v}")
        unknown = [n for n in self.identities if n not in IDENTITIES]
        if unknown:
            raise ConfigError(f"unknown identities: {', '.join(map(str, unknown))}")
        try:
            self.genfun_points = [Fraction(parse_rational(str(p))) for p in self.genfun_points]
            self.product_params = [Fraction(parse_rational(str(p))) for p in self.product_params]
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteConfig":
        if not isinstance(data, dict):
            raise ConfigError("suite config must be a JSON object")
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(extra))}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "SuiteConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from None
        return cls.from_dict(data)


_JACOBI_RE = re.compile(r"^jacobi\(([^,]+),([^)]+)\)$")
_CUSTOM_RE = re.compile(r"^custom\(([^;]+);([^)]+)\)$")


def parse_family(entry, seed: int = 0) -> list[Family]:
    """Family names: hermite, laguerre, jacobi(a,b), custom(e,f,g;a,b), random:N.

    A dict ``{"sigma": [e,f,g], "tau": [a,b], "label": ...}`` is also accepted.
    """
    try:
        if isinstance(entry, dict):
            e, f, g = (parse_rational(str(v)) for v in entry["sigma"])
            a, b = (parse_rational(str(v)) for v in entry["tau"])
            return [make_family(e, f, g, a, b, entry.get("label", "custom"))]
        text = str(entry).replace(" ", "")
        if text == "hermite":
            return [hermite()]
        if text == "laguerre":
            return [laguerre()]
        m = _JACOBI_RE.match(text)
        if m:
            return [jacobi(parse_rational(m.group(1)), parse_rational(m.group(2)))]
        m = _CUSTOM_RE.match(text)
        if m:
            e, f, g = (parse_rational(v) for v in m.group(1).split(","))
            a, b = (parse_rational(v) for v in m.group(2).split(","))
            return [make_family(e, f, g, a, b, text)]
        if text.startswith("random:"):
            return random_families(int(text.split(":", 1)[1]), seed)
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"bad family {entry!r}: {exc}") from None
    raise ConfigError(f"unknown family {entry!r}")


def classical_kind(fam: Family):
    """(kind, params) when ``fam`` is one of the three classical normalizations, else None."""
    if fam == hermite():
        return "hermite", ()
    if fam == laguerre():
        return "laguerre", ()
    if fam.e == -1 and fam.f == 0 and fam.g == 1:
        # tau = (b - a) - (2 + a + b) x
        s = -fam.b - 2
        d = fam.a
        return "jacobi", ((s - d) / 2, (s + d) / 2)
    return None


Task = Callable[[], VerdictReport]


def _family_tasks(name: str, fam: Family, cfg: SuiteConfig) -> list[Task]:
    L = range(cfg.l_max + 1)
    out: list[Task] = []
    add = out.append
    if name == "route_agreement":
        for l in L:
            for nu in range(l + cfg.nu_extra + 1):
                add(lambda l=l, nu=nu: identities.check_route_agreement(fam, l, nu))
    elif name == "genfun_series":
        for l in L:
            add(lambda l=l: identities.check_genfun_series(fam, l, cfg.genfun_order))
    elif name == "hypergeometric":
        for l in L:
            add(lambda l=l: identities.check_hypergeometric(fam, l))
    elif name == "sturm_liouville":
        for l in L:
            for nu in range(l + 1):
                add(lambda l=l, nu=nu: identities.check_sturm_liouville(fam, l, nu))
    elif name == "eigen_recursion":
        for l in L:
            for nu in range(cfg.eigen_nu_max + 1):
                add(lambda l=l, nu=nu: identities.check_eigen_recursion(fam, l, nu))
    elif name == "generalized_rodrigues":
        for l in L:
            for nu in range(l + 1):
                for mu in range(nu + 1):
                    add(lambda l=l, nu=nu, mu=mu: identities.check_generalized_rodrigues(fam, l, nu, mu))
    elif name == "addition_theorem":
        for l1 in range(cfg.addition_l_max + 1):
            for l2 in range(cfg.addition_l_max + 1):
                for nu in range(cfg.addition_nu_max + 1):
                    add(lambda l1=l1, l2=l2, nu=nu: identities.check_addition_theorem(fam, l1, l2, nu))
    elif name == "parity":
        try:
            identities.parity_exponent(fam)
        except identities.HypothesisNotMet as exc:
            add(lambda exc=exc: VerdictReport("parity", fam.label, skipped=True,
                                              note=f"HypothesisNotMet: {exc}"))
            return out
        for l in L:
            for nu in range(cfg.l_max + 1):
                add(lambda l=l, nu=nu: identities.check_parity(fam, l, nu))
    elif name == "derivative_ladder":
        for l in L:
            for nu in range(l + 1):
                add(lambda l=l, nu=nu: identities.check_derivative_ladder(fam, l, nu))
    elif name == "differential_recursion":
        for l in L:
            for nu in range(l + 1):
                add(lambda l=l, nu=nu: identities.check_differential_recursion(fam, l, nu))
    elif name == "degree":
        for l in L:
            for nu in range(l + cfg.nu_extra + 1):
                add(lambda l=l, nu=nu: identities.check_degree(fam, l, nu))
    else:
        ck = classical_kind(fam)
        if ck is None:
            return out
        kind, params = ck
        if name == "classical_map":
            for l in L:
                for nu in range(l + 1):
                    add(lambda l=l, nu=nu: classical.check_classical_map(kind, params, l, nu))
        elif name == "closed_genfun":
            for l in L:
                for x0 in cfg.genfun_points:
                    add(lambda l=l, x0=x0: check_closed_genfun(fam, kind, params, l, x0, cfg.genfun_order))
        elif name == "classical_recursions":
            for nu in range(1, cfg.classical_nu_max + 1):
                add(lambda nu=nu: classical.check_classical_recursions(kind, params, nu))
    return out


def check_closed_genfun(fam: Family, kind: str, params, l: int, x0: Fraction, order: int) -> VerdictReport:
    """Series route evaluated at x0 against the closed form's Taylor coefficients."""
    ps = (("l", l), ("x", x0), ("order", order))
    series = genfun_series(fam, l, order).eval_x(x0)
    try:
        closed = classical.closed_genfun_expand(kind, params, l, x0, order)
    except classical.BasePointSingular as exc:
        return VerdictReport("closed_genfun", fam.label, ps, skipped=True, note=f"BasePointSingular: {exc}")
    for n, (s, c) in enumerate(zip(series, closed)):
        if s != c:
            return VerdictReport("closed_genfun", fam.label, ps, False, s - c, note=f"coefficient {n}")
    return VerdictReport("closed_genfun", fam.label, ps)


def _global_tasks(name: str, cfg: SuiteConfig) -> list[Task]:
    out: list[Task] = []
    if name == "laguerre_addition":
        n = cfg.laguerre_n_max
        for nu in range(cfg.laguerre_nu_max + 1):
            for n1 in range(n + 1):
                for n2 in range(n + 1):
                    out.append(lambda nu=nu, n1=n1, n2=n2: classical.check_laguerre_addition(nu, n1, n2))
    elif name == "jacobi_product":
        for a in cfg.product_params:
            for b in cfg.product_params:
                for nu1 in range(cfg.product_total + 1):
                    for nu2 in range(cfg.product_total + 1 - nu1):
                        out.append(lambda nu1=nu1, nu2=nu2, a=a, b=b:
                                   classical.check_jacobi_product(nu1, nu2, a, b))
    return out


def build_tasks(cfg: SuiteConfig) -> list[Task]:
    fams = []
    for entry in cfg.families:
        fams.extend(parse_family(entry, cfg.seed))
    wanted = set(cfg.identities)
    tasks: list[Task] = []
    for name in IDENTITIES:
        if name not in wanted:
            continue
        if name in ("laguerre_addition", "jacobi_product"):
            tasks.extend(_global_tasks(name, cfg))
            continue
        for fam in fams:
            tasks.extend(_family_tasks(name, fam, cfg))
    return tasks


def run_suite(config: SuiteConfig | dict | None = None, workers: int = 1) -> list[VerdictReport]:
    """Run every configured check; the report order never depends on ``workers``."""
    if config is None:
        config = SuiteConfig()
    elif isinstance(config, dict):
        config = SuiteConfig.from_dict(config)
    tasks = build_tasks(config)
    if workers <= 1:
        return [t() for t in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda t: t(), tasks))


def all_passed(reports: list[VerdictReport]) -> bool:
    return all(r.passed for r in reports)
