"""Command-line front end.

Graph files are JSON in one of three shapes::

    {"orders": [2, 4], "set": [[1, 0], [0, 1], [0, 3]]}   general abelian
    {"n": 6, "set": [1, 5]}                                circulant Z_n
    {"r": 3, "set": ["010", "110"]}                        cubelike Z2^r

Exit codes: 0 success / revival found, 1 analysed but no revival (or check
failed), 2 input error, 3 undetermined by exact arithmetic.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .bent import bent_graph_fr
from .groups import GroupElement, GroupSpec, parse_element
from .oracle import scan_fidelity
from .revival import (
    FRDecision,
    UndeterminedExactError,
    build_N,
    check_conditions_ab,
    first_failing_pair,
    search_all_fr,
)
from .spectra import ConnectionSet, full_spectrum, validate_connection_set

EXIT_OK = 0
EXIT_NO_FR = 1
EXIT_INPUT = 2
EXIT_UNDETERMINED = 3

DIGITS = 12


class InputError(Exception):
    pass


def fmt(x: float) -> str:
    """Fixed 12-decimal rendering with negative zero folded to zero."""
    s = f"{x:.{DIGITS}f}"
    if s.startswith("-") and float(s) == 0:
        s = s[1:]
    return s


def fmt_complex(z: complex) -> str:
    im = fmt(z.imag)
    sign = "-" if im.startswith("-") else "+"
    return f"{fmt(z.real)} {sign} {im.lstrip('-')}i"


def _num(x: float) -> float:
    return float(fmt(x))


def _field_error(name: str, index: int | None, message: str) -> InputError:
    where = f"field '{name}'" if index is None else f"field '{name}', entry {index}"
    return InputError(f"{where}: {message}")


def _int_field(data: dict, name: str) -> int:
    value = data[name]
    if isinstance(value, bool) or not isinstance(value, int):
        raise _field_error(name, None, f"expected an integer, got {value!r}")
    return value


def parse_graph(data: Any) -> ConnectionSet:
    """Turn a decoded graph file into a validated connection set."""
    if not isinstance(data, dict):
        raise InputError("top level must be a JSON object")
    shapes = [k for k in ("orders", "n", "r") if k in data]
    if len(shapes) != 1:
        raise InputError("exactly one of 'orders', 'n' or 'r' must be given")
    if "set" not in data:
        raise InputError("missing field 'set'")
    unknown = set(data) - {"orders", "n", "r", "set"}
    if unknown:
        raise InputError(f"unknown field(s): {', '.join(sorted(unknown))}")
    raw = data["set"]
    if not isinstance(raw, list):
        raise _field_error("set", None, "expected a list")

    kind = shapes[0]
    try:
        if kind == "orders":
            orders = data["orders"]
            if not isinstance(orders, list) or not all(
                isinstance(n, int) and not isinstance(n, bool) for n in orders
            ):
                raise _field_error("orders", None, "expected a list of integers")
            spec = GroupSpec(tuple(orders))
        elif kind == "n":
            spec = GroupSpec((_int_field(data, "n"),))
        else:
            spec = GroupSpec((2,) * _int_field(data, "r"))
    except ValueError as exc:
        raise _field_error(kind, None, str(exc)) from None

    elements = []
    for i, entry in enumerate(raw):
        try:
            if kind == "n":
                if isinstance(entry, bool) or not isinstance(entry, int):
                    raise ValueError(f"expected an integer, got {entry!r}")
                elements.append(spec.element(entry))
            elif kind == "r":
                if not isinstance(entry, str) or len(entry) != spec.rank or set(entry) - {"0", "1"}:
                    raise ValueError(f"expected a {spec.rank}-character 0/1 string, got {entry!r}")
                elements.append(spec.element([int(ch) for ch in entry]))
            else:
                if not isinstance(entry, list) or not all(
                    isinstance(c, int) and not isinstance(c, bool) for c in entry
                ):
                    raise ValueError(f"expected a list of integers, got {entry!r}")
                elements.append(spec.element(entry))
        except ValueError as exc:
            raise _field_error("set", i, str(exc)) from None
    try:
        return validate_connection_set(spec, elements)
    except ValueError as exc:
        raise _field_error("set", None, str(exc)) from None


def load_graph(path: str) -> ConnectionSet:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_graph(data)


_PI_EXPR = re.compile(
    r"^\s*(?P<num>[0-9]*\.?[0-9]+)?\s*\*?\s*pi\s*(?:/\s*(?P<den>[0-9]*\.?[0-9]+))?\s*$"
)


def parse_time(text: str) -> float:
    """A float, or a multiple of pi such as ``pi``, ``2pi/3``, ``2*pi/3``."""
    m = _PI_EXPR.match(text.replace("π", "pi"))
    if m:
        num = float(m.group("num") or 1)
        den = float(m.group("den") or 1)
        return num * math.pi / den
    try:
        return float(text)
    except ValueError:
        raise InputError(f"cannot parse time {text!r}") from None


def parse_fraction(text: str) -> Fraction:
    try:
        frac = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse time fraction {text!r}; expected p/q") from None
    return frac


def _element(spec: GroupSpec, text: str, name: str) -> GroupElement:
    try:
        return parse_element(spec, text)
    except ValueError as exc:
        raise InputError(f"--{name}: {exc}") from None


def _coords(x: GroupElement | None) -> list[int] | None:
    return None if x is None else list(x.coords)


def _complex(z: complex) -> dict[str, float]:
    return {"re": _num(z.real), "im": _num(z.imag)}


def decision_record(d: FRDecision) -> dict[str, Any]:
    rec: dict[str, Any] = {"a": _coords(d.a), "verdict": d.verdict.value}
    cert = d.certificate
    if cert is not None:
        if cert.all_times:
            rec["time"] = None
        else:
            rec["time"] = {
                "p": cert.time.numerator,
                "q": cert.time.denominator,
                "t": _num(cert.t),
            }
        rec["all_times"] = cert.all_times
        rec["M"] = cert.M
        rec["alpha"] = _complex(cert.alpha)
        rec["beta"] = _complex(cert.beta)
        rec["classification"] = cert.classification.value
        rec["witness"] = None
    else:
        if isinstance(d.witness, tuple):
            x, y = d.witness
            rec["witness"] = {"x": _coords(x), "y": _coords(y)}
        else:
            rec["witness"] = d.witness
    if d.evidence is not None:
        rec["evidence"] = {"t": _num(d.evidence[0]), "max_total": _num(d.evidence[1])}
    return rec


def cmd_validate(args: argparse.Namespace) -> int:
    S = load_graph(args.file)
    print(f"valid: Cay({S.spec}, S) with |S| = {len(S)}, {S.spec.size} vertices")
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    S = load_graph(args.file)
    spectrum = full_spectrum(S.spec, S)
    out = sys.stdout
    out.write("element\texact\tvalue\n")
    for x, exact, value in zip(S.spec.elements(), spectrum.exact, spectrum.values):
        out.write(f"{x}\t{exact}\t{fmt(value)}\n")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    S = load_graph(args.file)
    result = search_all_fr(S, evidence_steps=args.evidence_steps)
    records = [decision_record(d) for d in result]
    print(json.dumps(records, indent=2))
    if result.has_fr:
        return EXIT_OK
    if result.has_undetermined:
        return EXIT_UNDETERMINED
    return EXIT_NO_FR


def cmd_check(args: argparse.Namespace) -> int:
    S = load_graph(args.file)
    spec = S.spec
    a = _element(spec, args.a, "a")
    if a.is_zero():
        raise InputError("--a: a must be nonzero")
    check = check_conditions_ab(spec, a)
    if not check:
        raise InputError(f"--a: {check.reason}")
    frac = parse_fraction(args.time)
    spectrum = full_spectrum(spec, S)
    N = build_N(spec, a)
    try:
        pair = first_failing_pair(spectrum, N, frac.numerator, frac.denominator)
    except UndeterminedExactError as exc:
        x, y = exc.pair
        print(f"undetermined: lambda_{x} - lambda_{y} is not an integer")
        return EXIT_UNDETERMINED
    if pair is None:
        print(f"revival: t = 2pi * {frac} satisfies the condition on all {len(N)} pairs")
        return EXIT_OK
    x, y = pair
    d = spectrum[x] - spectrum[y]
    print(
        f"no revival at t = 2pi * {frac}: pair ({x}, {y}) has "
        f"lambda_x - lambda_y = {d}, and {frac} * ({d}) is not an integer"
    )
    return EXIT_NO_FR


def cmd_simulate(args: argparse.Namespace) -> int:
    S = load_graph(args.file)
    spec = S.spec
    u = _element(spec, args.u, "u")
    v = _element(spec, args.v, "v")
    if u == v:
        raise InputError("--u and --v must be distinct vertices")
    if args.steps < 2:
        raise InputError("--steps must be >= 2")
    t_max = parse_time(args.tmax)
    samples = scan_fidelity(S, u, v, t_max, args.steps, engine=args.engine)
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["t", "p_uu", "p_uv", "total"])
        for s in samples:
            writer.writerow([fmt(s.t), fmt(s.p_uu), fmt(s.p_uv), fmt(s.total)])
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_bent(args: argparse.Namespace) -> int:
    if args.m < 2:
        raise InputError("--m must be >= 2")
    report = bent_graph_fr(args.m, oracle=not args.no_oracle)
    cert = report.certificate
    print(f"m: {report.m}")
    print(f"vertices: {report.vertices}")
    print(f"M: {report.M}")
    print(f"time: 2pi * {cert.time} = pi/{2 ** report.m} = {fmt(cert.t)}")
    print(f"alpha: {fmt_complex(cert.alpha)}")
    print(f"beta: {fmt_complex(cert.beta)}")
    print(f"classification: {cert.classification.value}")
    if not args.no_oracle:
        print(f"oracle fidelity total: {fmt(report.oracle_total)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleyfr",
        description="Fractional revival on Cayley graphs over finite abelian groups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that a graph file is a valid Cayley graph")
    p.add_argument("file", help="graph JSON file, or - for stdin")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("spectrum", help="print exact and floating eigenvalues")
    p.add_argument("file")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("analyze", help="decide revival for every involution (JSON)")
    p.add_argument("file")
    p.add_argument(
        "--evidence-steps",
        type=int,
        default=4000,
        help="grid size of the oracle scan attached to undetermined verdicts (0 disables)",
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="exact check of revival at t = 2pi * p/q")
    p.add_argument("file")
    p.add_argument("--a", required=True, help="involution, e.g. 3 or 1,1,1")
    p.add_argument("--time", required=True, help="p/q, the time as a fraction of 2pi")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("simulate", help="fidelity scan as CSV")
    p.add_argument("file")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--tmax", required=True, help="end time, e.g. 6.5 or 2pi/3")
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--engine", choices=("spectral", "series"), default="spectral")
    p.add_argument("--output", "-o", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("bent", help="revival on the bent-function cubelike graph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--no-oracle", action="store_true", help="skip the series-engine fidelity")
    p.set_defaults(func=cmd_bent)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
