"""hypoly command line: coefficient tables, point evaluation, generating functions, identity suites.

    hypoly table   --family laguerre --l 2 --nu 0..2 --format csv
    hypoly eval    --family jacobi --a 1/2 --b 1/2 --l 3 --nu 0..3 --x 1/3
    hypoly genfun  --family laguerre --l 2 --x 0 --order 4
    hypoly verify  --suite default

stdout carries the payload, stderr diagnostics.  Exit codes: 0 success,
1 identity failure, 2 usage error, 3 internal route disagreement.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import construct
from .classical import BasePointSingular, closed_genfun_expand
from .family import DegenerateSigma, Family, hermite, jacobi, laguerre, make_family
from .polycore import Poly, format_rational, parse_rational
from .suite import IDENTITIES, ConfigError, SuiteConfig, all_passed, classical_kind, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class RouteDisagreement(Exception):
    pass


# -- output documents --------------------------------------------------------


@dataclass(frozen=True)
class Row:
    family: str
    l: int
    nu: int
    values: tuple  # coefficients (table) or a single value (eval)
    x: Optional[Fraction] = None


@dataclass(frozen=True)
class OutputDocument:
    format: str
    rows: tuple

    def to_json(self) -> str:
        rows = []
        for r in self.rows:
            d = {"family": r.family, "l": r.l, "nu": r.nu}
            if r.x is None:
                d["coefficients"] = [format_rational(c) for c in r.values]
            else:
                d["x"] = format_rational(r.x)
                d["value"] = format_rational(r.values[0])
            rows.append(d)
        return json.dumps({"rows": rows}, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OutputDocument":
        rows = []
        for d in json.loads(text)["rows"]:
            if "x" in d:
                rows.append(Row(d["family"], d["l"], d["nu"], (parse_rational(d["value"]),),
                                parse_rational(d["x"])))
            else:
                rows.append(Row(d["family"], d["l"], d["nu"],
                                tuple(parse_rational(c) for c in d["coefficients"])))
        return cls("json", tuple(rows))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        evaluated = any(r.x is not None for r in self.rows)
        if evaluated:
            w.writerow(["family", "l", "nu", "x", "value"])
            for r in self.rows:
                w.writerow([r.family, r.l, r.nu, format_rational(r.x), format_rational(r.values[0])])
        else:
            width = max((len(r.values) for r in self.rows), default=0)
            w.writerow(["family", "l", "nu"] + [f"c{i}" for i in range(width)])
            for r in self.rows:
                w.writerow([r.family, r.l, r.nu] + [format_rational(c) for c in r.values])
        return buf.getvalue().rstrip("\n")

    def to_latex(self) -> str:
        lines = []
        for r in self.rows:
            if r.x is None:
                lines.append(f"${latex_poly(Poly(r.values))}$")
            else:
                lines.append(f"${latex_rational(r.values[0])}$")
        return "\n".join(lines)

    def render(self) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "latex": self.to_latex}[self.format]()


def latex_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def latex_poly(p: Poly, var: str = "x") -> str:
    """Descending powers with explicit signs, e.g. ``x^{2} - 4x + 2``."""
    if p.is_zero():
        return "0"
    out = ""
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = latex_rational(mag)
        else:
            power = var if i == 1 else f"{var}^{{{i}}}"
            body = power if mag == 1 else latex_rational(mag) + power
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


# -- argument handling -------------------------------------------------------


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or N..M, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return range(lo, hi + 1)


def _rational_list(n: int):
    def conv(text: str):
        parts = text.split(",")
        if len(parts) != n:
            raise argparse.ArgumentTypeError(f"expected {n} comma-separated rationals, got {text!r}")
        return tuple(_rational(p) for p in parts)

    return conv


def _add_family_args(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument("--family", choices=["hermite", "laguerre", "jacobi", "custom"],
                   required=required)
    p.add_argument("--a", type=_rational, default=Fraction(0), help="Jacobi parameter a")
    p.add_argument("--b", type=_rational, default=Fraction(0), help="Jacobi parameter b")
    p.add_argument("--sigma", type=_rational_list(3), help="e,f,g with sigma = e x^2 + 2 f x + g")
    p.add_argument("--tau", type=_rational_list(2), help="a,b with tau = a + b x")


def family_from_args(args) -> Family:
    if args.family == "hermite":
        return hermite()
    if args.family == "laguerre":
        return laguerre()
    if args.family == "jacobi":
        return jacobi(args.a, args.b)
    if args.sigma is None or args.tau is None:
        raise UsageError("--family custom needs --sigma e,f,g and --tau a,b")
    try:
        label = "custom(" + ",".join(map(format_rational, args.sigma)) + ";" \
            + ",".join(map(format_rational, args.tau)) + ")"
        return make_family(*args.sigma, *args.tau, label)
    except DegenerateSigma as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypoly", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="exact coefficients of P_nu(x; l)")
    _add_family_args(t)
    t.add_argument("--l", type=_range, required=True)
    t.add_argument("--nu", type=_range, help="default 0..l")
    t.add_argument("--format", choices=["json", "csv", "latex"], default="json")

    e = sub.add_parser("eval", help="exact values P_nu(x0; l)")
    _add_family_args(e)
    e.add_argument("--l", type=_range, required=True)
    e.add_argument("--nu", type=_range, help="default 0..l")
    e.add_argument("--x", type=_rational, required=True)
    e.add_argument("--format", choices=["json", "csv", "latex"], default="json")

    g = sub.add_parser("genfun", help="generating-function coefficients at x0, series and closed form")
    _add_family_args(g)
    g.add_argument("--l", type=int, default=0)
    g.add_argument("--x", type=_rational, required=True)
    g.add_argument("--order", type=int, default=5)
    g.add_argument("--format", choices=["json", "csv"], default="json")

    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("--suite", default="default",
                   help="'default' or a comma-separated list of: " + ", ".join(IDENTITIES))
    _add_family_args(v, required=False)
    v.add_argument("--config", help="path to a JSON suite config")
    v.add_argument("--l", type=int, help="largest l to check")
    v.add_argument("--seed", type=int)
    v.add_argument("--json", action="store_true", help="machine-readable reports")
    v.add_argument("--workers", type=int, default=1)
    return parser


# -- commands ------------------------------------------------------------------


def _pairs(args):
    for l in args.l:
        nus = args.nu if args.nu is not None else range(l + 1)
        for nu in nus:
            yield l, nu


def cmd_table(args) -> OutputDocument:
    fam = family_from_args(args)
    rows = []
    for l, nu in _pairs(args):
        p = construct.comp_poly_recursive(fam, l, nu)
        if construct.comp_poly_three_term(fam, l, nu) != p:
            raise RouteDisagreement(f"routes disagree for {fam.label} l={l} nu={nu}")
        rows.append(Row(fam.label, l, nu, p.coeffs))
    return OutputDocument(args.format, tuple(rows))


def cmd_eval(args) -> OutputDocument:
    fam = family_from_args(args)
    rows = []
    for l, nu in _pairs(args):
        p = construct.comp_poly_recursive(fam, l, nu)
        if construct.comp_poly_three_term(fam, l, nu) != p:
            raise RouteDisagreement(f"routes disagree for {fam.label} l={l} nu={nu}")
        rows.append(Row(fam.label, l, nu, (p(args.x),), args.x))
    return OutputDocument(args.format, tuple(rows))


def cmd_genfun(args) -> dict:
    if args.l < 0 or args.order < 0:
        raise UsageError("--l and --order must be nonnegative")
    fam = family_from_args(args)
    series = construct.genfun_series(fam, args.l, args.order).eval_x(args.x)
    ck = classical_kind(fam)
    closed = None
    if ck is not None:
        try:
            closed = closed_genfun_expand(ck[0], ck[1], args.l, args.x, args.order)
        except BasePointSingular as exc:
            raise UsageError(f"x = {format_rational(args.x)} is a singular base point: {exc}") from None
    if closed is None:
        # no closed form: cross-check against the recursive route, P_n(x0; l) / n!
        reference = "recursive"
        expected = [construct.comp_poly_recursive(fam, args.l, n)(args.x) / math.factorial(n)
                    for n in range(args.order + 1)]
    else:
        reference, expected = "closed_form", closed
    return {
        "family": fam.label,
        "l": args.l,
        "x": format_rational(args.x),
        "order": args.order,
        "series": [format_rational(c) for c in series],
        "closed": None if closed is None else [format_rational(c) for c in closed],
        "reference": reference,
        "agree": list(series) == list(expected),
    }


def render_genfun(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2)
    lines = [",".join(["series"] + doc["series"])]
    if doc["closed"] is not None:
        lines.append(",".join(["closed"] + doc["closed"]))
    lines.append(f"agree,{str(doc['agree']).lower()}")
    return "\n".join(lines)


def cmd_verify(args) -> tuple[str, bool]:
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                cfg = SuiteConfig.from_json(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from None
    else:
        cfg = SuiteConfig()
        if args.suite != "default":
            cfg.identities = [s.strip() for s in args.suite.split(",") if s.strip()]
            unknown = [s for s in cfg.identities if s not in IDENTITIES]
            if unknown:
                raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
        if args.family is not None:
            fam = family_from_args(args)
            cfg.families = [{"sigma": [format_rational(v) for v in (fam.e, fam.f, fam.g)],
                             "tau": [format_rational(v) for v in (fam.a, fam.b)],
                             "label": fam.label}]
        if args.l is not None:
            if args.l < 0:
                raise UsageError("--l must be nonnegative")
            cfg.l_max = args.l
        if args.seed is not None:
            cfg.seed = args.seed
    reports = run_suite(cfg, workers=args.workers)
    if args.json:
        out = json.dumps({"seed": cfg.seed, "reports": [r.to_dict() for r in reports]}, indent=2)
    else:
        counts = {s: sum(r.status == s for r in reports) for s in ("PASS", "FAIL", "SKIP")}
        out = "\n".join([r.line() for r in reports]
                        + [f"# {counts['PASS']} passed, {counts['FAIL']} failed, {counts['SKIP']} skipped"])
    return out, all_passed(reports)


_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?(,\S*)?$")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--x -2/3`` into ``--x=-2/3``; argparse only recognises ``-2`` as a value."""
    out: list[str] = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEGATIVE_VALUE.match(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "table":
            print(cmd_table(args).render())
        elif args.command == "eval":
            print(cmd_eval(args).render())
        elif args.command == "genfun":
            doc = cmd_genfun(args)
            print(render_genfun(doc, args.format))
            if not doc["agree"]:
                print("hypoly: internal inconsistency: generating-function routes disagree", file=sys.stderr)
                return EXIT_INTERNAL
        else:
            out, ok = cmd_verify(args)
            print(out)
            return EXIT_OK if ok else EXIT_FAIL
    except (UsageError, ConfigError) as exc:
        print(f"hypoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RouteDisagreement as exc:
        print(f"hypoly: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
