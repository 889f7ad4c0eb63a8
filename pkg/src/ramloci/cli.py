"""Command-line front end: parse curves, run suites, emit reports.

Exit codes: 0 all checks passed, 1 verification failure, 2 usage or
configuration error, 3 inconclusive (precision cap or an internal
consistency stop).  Output is byte-deterministic for a fixed
configuration: stable case order, canonical "p/q" rationals, no
timestamps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import formulas
from .curves import (
    HyperellipticModel,
    Place,
    build_basis,
    order_sequence_at,
    torsion_check,
    total_weight,
)
from .errors import (
    ConfigError,
    CurveSyntaxError,
    InconclusiveError,
    InternalCheckError,
    IrrationalBranchError,
    RamlociError,
)
from .numeric import UniPoly

SCHEMA_VERSION = 1

_FORMATS = ("json", "tsv", "pretty")


# ---------------------------------------------------------------------------
# Curve equation parser: "y^2 = <monic odd polynomial in x>"


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            tokens.append(("num", text[start:pos], start))
            continue
        if ch in "xy":
            tokens.append(("name", ch, pos))
            pos += 1
            continue
        if ch in "^*+-=/":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        raise CurveSyntaxError(f"unexpected character {ch!r}", pos)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.idx]
        found = repr(tok[1]) if tok[1] else "end of input"
        if kind is not None and tok[0] != kind:
            raise CurveSyntaxError(f"expected {value or kind}, found {found}", tok[2])
        if value is not None and tok[1] != value:
            raise CurveSyntaxError(f"expected {value!r}, found {found}", tok[2])
        self.idx += 1
        return tok

    def parse_equation(self) -> UniPoly:
        self.take("name", "y")
        self.take("^")
        tok = self.take("num")
        if tok[1] != "2":
            raise CurveSyntaxError("the left side must be y^2", tok[2])
        self.take("=")
        poly = self.parse_poly()
        end = self.peek()
        if end[0] != "end":
            raise CurveSyntaxError(f"trailing input {end[1]!r}", end[2])
        return poly

    def parse_poly(self) -> UniPoly:
        total = UniPoly()
        sign = 1
        tok = self.peek()
        if tok[0] in "+-":
            sign = -1 if tok[0] == "-" else 1
            self.take(tok[0])
        while True:
            total = total + sign * self.parse_term()
            tok = self.peek()
            if tok[0] in "+-":
                sign = -1 if tok[0] == "-" else 1
                self.take(tok[0])
                continue
            return total

    def parse_number(self) -> Fraction:
        tok = self.take("num")
        value = Fraction(int(tok[1]))
        if self.peek()[0] == "/":
            self.take("/")
            dtok = self.take("num")
            if int(dtok[1]) == 0:
                raise CurveSyntaxError("zero denominator", dtok[2])
            value /= int(dtok[1])
        return value

    def parse_term(self) -> UniPoly:
        tok = self.peek()
        coeff = None
        if tok[0] == "num":
            coeff = self.parse_number()
            if self.peek()[0] == "*":
                self.take("*")
        tok = self.peek()
        exponent = 0
        if tok[0] == "name":
            if tok[1] == "y":
                raise CurveSyntaxError("y may only appear on the left side", tok[2])
            self.take("name", "x")
            if self.peek()[0] == "^":
                self.take("^")
                exponent = int(self.take("num")[1])
            else:
                exponent = 1
        elif coeff is None:
            raise CurveSyntaxError(
                f"expected a coefficient or x, found {tok[1] or 'end of input'!r}", tok[2]
            )
        if coeff is None:
            coeff = Fraction(1)
        return UniPoly([Fraction(0)] * exponent + [coeff])


def parse_curve(text: str, require_split: bool = False) -> HyperellipticModel:
    """Parse and validate "y^2 = f(x)" into a hyperelliptic model.

    With ``require_split`` the model must have all branch x-coordinates
    rational; weight bookkeeping itself handles non-split f, so this is
    only a strictness switch.
    """
    poly = _Parser(text).parse_equation()
    model = HyperellipticModel.from_poly(poly)
    if require_split and not model.splits:
        raise IrrationalBranchError(
            "f does not split over Q; rerun without --require-split"
        )
    return model


def _parse_place(model: HyperellipticModel, text: str) -> Place:
    text = text.strip()
    if text in ("inf", "infinity", "oo"):
        return Place.infinity()
    parts = [p.strip() for p in text.split(",")]
    try:
        coords = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"cannot parse place {text!r}") from None
    if len(coords) == 1:
        place = Place.branch(coords[0])
    elif len(coords) == 2:
        place = Place.branch(coords[0]) if coords[1] == 0 else Place.ordinary(*coords)
    else:
        raise ConfigError(f"cannot parse place {text!r}")
    model.check_place(place)
    return place


# ---------------------------------------------------------------------------
# Run configuration


@dataclass(frozen=True)
class RunConfig:
    g_min: int = 1
    g_max: int = 9
    i_min: int = 0
    i_max: int = 8
    fmt: str = "pretty"
    case_filter: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if not 1 <= self.g_min <= self.g_max:
            raise ConfigError(f"need 1 <= g_min <= g_max, got {self.g_min}..{self.g_max}")
        if not 0 <= self.i_min <= self.i_max:
            raise ConfigError(f"need 0 <= i_min <= i_max, got {self.i_min}..{self.i_max}")
        if self.fmt not in _FORMATS:
            raise ConfigError(f"unknown format {self.fmt!r}")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")

    @property
    def g_range(self):
        return range(self.g_min, self.g_max + 1)

    @property
    def i_range(self):
        return range(self.i_min, self.i_max + 1)


def _parse_span(text: str, name: str):
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ConfigError(f"cannot parse --{name} span {text!r}; use A or A..B") from None
    return lo, hi


def _default_jobs() -> int:
    env = os.environ.get("RAMLOCI_JOBS", "")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# Rendering


def _emit(text: str, out):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _render_verify(reports, config: RunConfig, out) -> None:
    if config.fmt == "json":
        doc = {
            "schema": SCHEMA_VERSION,
            "suite": "verify",
            "grid": {
                "g": [config.g_min, config.g_max],
                "i": [config.i_min, config.i_max],
            },
            "cases": [r.to_json_dict() for r in reports],
            "passed": all(r.verdict for r in reports),
        }
        _emit(json.dumps(doc, indent=2), out)
    elif config.fmt == "tsv":
        for r in reports:
            size = "x".join(map(str, r.grid_size)) if r.grid_size else "symbolic"
            _emit(
                "\t".join(
                    [r.name, "pass" if r.verdict else "fail", size, str(len(r.failures))]
                ),
                out,
            )
    else:
        width = max(len(r.name) for r in reports)
        for r in reports:
            status = "PASS" if r.verdict else "FAIL"
            size = (
                f"grid {r.grid_size[0]}x{r.grid_size[1]}" if r.grid_size else "symbolic"
            )
            _emit(f"[{status}] {r.name:<{width}}  {size}", out)
            for g, i, engine, closed in r.failures[:5]:
                _emit(f"       at (g={g}, i={i}): engine {engine} != closed {closed}", out)
        n_pass = sum(1 for r in reports if r.verdict)
        _emit(f"{n_pass}/{len(reports)} cases passed", out)


def _json_or_pretty(doc: dict, lines, config_fmt: str, out) -> None:
    if config_fmt == "json":
        _emit(json.dumps(doc, indent=2), out)
    elif config_fmt == "tsv":
        for row in lines:
            _emit("\t".join(str(c) for c in row), out)
    else:
        for row in lines:
            _emit(" ".join(str(c) for c in row), out)


# ---------------------------------------------------------------------------
# Commands


def cmd_verify(args, out) -> int:
    g_span = _parse_span(args.g, "g")
    i_span = _parse_span(args.i, "i")
    config = RunConfig(
        g_min=g_span[0],
        g_max=g_span[1],
        i_min=i_span[0],
        i_max=i_span[1],
        fmt=args.format,
        case_filter=args.filter,
        jobs=args.jobs,
    )
    reports = formulas.run_suite(
        g_range=config.g_range,
        i_range=config.i_range,
        name_filter=config.case_filter,
        jobs=config.jobs,
    )
    if not reports:
        raise ConfigError(f"no cases match filter {config.case_filter!r}")
    _render_verify(reports, config, out)
    return 0 if all(r.verdict for r in reports) else 1


def cmd_curve(args, out) -> int:
    model = parse_curve(args.model, require_split=args.require_split)
    fmt = args.format
    equation = f"y^2 = {model.f}"
    if args.curve_cmd == "basis":
        basis = build_basis(model, args.i)
        doc = {
            "schema": SCHEMA_VERSION,
            "command": "basis",
            "model": equation,
            "genus": model.genus,
            "i": args.i,
            "dimension": len(basis),
            "monomials": list(basis.monomial_names()),
            "pole_orders": list(basis.pole_orders),
        }
        lines = [("monomial", "pole_order")] if fmt == "tsv" else []
        lines += list(zip(basis.monomial_names(), basis.pole_orders))
        _json_or_pretty(doc, lines, fmt, out)
        return 0
    if args.curve_cmd == "orders":
        if not args.place:
            raise ConfigError("orders needs --place")
        place = _parse_place(model, args.place)
        basis = build_basis(model, args.i)
        seq = order_sequence_at(model, basis, place)
        doc = {
            "schema": SCHEMA_VERSION,
            "command": "orders",
            "model": equation,
            "i": args.i,
            "place": str(place),
            "orders": list(seq.orders),
            "weight": seq.weight,
        }
        lines = [
            ("place", str(place)),
            ("orders", ", ".join(map(str, seq.orders))),
            ("weight", seq.weight),
        ]
        _json_or_pretty(doc, lines, fmt, out)
        return 0
    if args.curve_cmd == "weights":
        report = total_weight(model, args.i)
        entries = [
            {"place": str(place), "orders": list(seq.orders), "weight": seq.weight}
            for place, seq in report.entries
        ]
        doc = {
            "schema": SCHEMA_VERSION,
            "command": "weights",
            "model": equation,
            "i": args.i,
            "entries": entries,
            "remainder": report.remainder,
            "remainder_ordinary": report.remainder_ordinary,
            "remainder_branch": report.remainder_branch,
            "total": report.total,
        }
        lines = [(e["place"], f"orders ({', '.join(map(str, e['orders']))})", f"weight {e['weight']}") for e in entries]
        lines.append(("remainder", report.remainder, ""))
        lines.append(("total", report.total, ""))
        _json_or_pretty(doc, lines, fmt, out)
        return 0
    if args.curve_cmd == "torsion":
        verdict = torsion_check(model, args.i)
        doc = {
            "schema": SCHEMA_VERSION,
            "command": "torsion",
            "model": equation,
            "j": args.i,
            "torsion_order": args.i + 1,
            "verdict": "pass" if verdict else "fail",
        }
        _json_or_pretty(
            doc, [("torsion_order", args.i + 1), ("verdict", "pass" if verdict else "fail")], fmt, out
        )
        return 0 if verdict else 1
    raise ConfigError(f"unknown curve subcommand {args.curve_cmd!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramloci",
        description="Exact verification of ramification counts on explicit curves "
        "and of the enumerative identities behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the certification suite")
    verify.add_argument("--g", default="1..9", metavar="A..B", help="genus span")
    verify.add_argument("--i", default="0..8", metavar="A..B", help="twist span")
    verify.add_argument("--format", choices=_FORMATS, default="pretty")
    verify.add_argument("--filter", default=None, help="case name glob")
    verify.add_argument("--jobs", type=int, default=_default_jobs())

    curve = sub.add_parser("curve", help="compute on an explicit curve")
    curve.add_argument("curve_cmd", choices=("basis", "orders", "weights", "torsion"))
    curve.add_argument("model", help='curve equation, e.g. "y^2 = x^3 - x"')
    curve.add_argument("--i", type=int, default=0, help="twist index (torsion order minus one for torsion)")
    curve.add_argument("--place", default=None, help='place: "inf", "x0" (branch), or "x0,y0"')
    curve.add_argument("--format", choices=_FORMATS, default="pretty")
    curve.add_argument("--require-split", action="store_true")
    return parser


_EXIT_INCONCLUSIVE = {InconclusiveError, InternalCheckError}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_curve(args, out)
    except RamlociError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        if isinstance(exc, (InconclusiveError, InternalCheckError)):
            return 3
        return 2


if __name__ == "__main__":
    sys.exit(main())
