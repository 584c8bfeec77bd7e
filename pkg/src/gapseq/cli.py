"""Command-line front end.

Subcommands cover sequence terms, gaps, gap sums and products, Horadam
generating functions, raw rational-function expansion, Fuss-Catalan and
Raney numbers, identity checks, reference-table reproduction, and OEIS
b-file cross-checks. Exit codes: 0 success or match, 1 mismatch or
failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

from . import oeis, tables
from .combinatorics import (
    check_fc_identity,
    check_raney_identity,
    fuss_catalan,
    gap_product_closed,
    raney,
)
from .gaps import gap, gap_product, gap_sum, gap_sum_abs, gap_sum_signed
from .genfun import (
    Poly,
    RatFunc,
    horadam_gap_sum_gf,
    horadam_gf,
    horadam_shift_gf,
    horadam_shift_square_gf,
    horadam_square_gf,
    integer_coefficients,
    ratfunc_to_text,
)
from .sequences import (
    FIBONACCI,
    JACOBSTHAL,
    PELL,
    Binomial,
    Explicit,
    Fold,
    Geometric,
    Horadam,
    Linear,
    Polynomial,
    Primes,
    SeqSpec,
    SpecError,
    term,
    terms,
)


class SpecParseError(ValueError):
    """A sequence-spec string failed to parse; carries the failure position."""

    def __init__(self, message: str, text: str, pos: int) -> None:
        super().__init__(f"{message} (at position {pos} in {text!r})")
        self.text = text
        self.pos = pos


_ALIASES: dict[str, SeqSpec] = {
    "fib": FIBONACCI,
    "jacobsthal": JACOBSTHAL,
    "pell": PELL,
    "primes": Primes(),
    "fold": Fold(),
}

_GRAMMAR = (
    "linear:K,R | geom:K[,OFFSET] | poly:C0,C1,... | binom:SHIFT,LOWER | "
    "horadam:A,B,R,S[,SHIFT] | primes | fold | explicit:T0,T1,... | "
    "fib | jacobsthal | pell"
)


def parse_spec(text: str) -> SeqSpec:
    """Parse a sequence spec string; see _GRAMMAR for the accepted forms."""
    bare = text.strip()
    if bare in _ALIASES:
        return _ALIASES[bare]
    name, sep, rest = bare.partition(":")
    if not sep:
        raise SpecParseError(f"unknown sequence family {bare!r}", text, 0)
    base = text.index(":") + 1
    args = _split_args(rest, base)
    arities = {"linear": (2,), "geom": (1, 2), "binom": (2,), "horadam": (4, 5)}
    try:
        if name in arities:
            values = [_int(a, text) for a in args]
            if len(values) not in arities[name]:
                wanted = " or ".join(str(w) for w in arities[name])
                raise SpecParseError(
                    f"{name} takes {wanted} arguments, got {len(values)}", text, base
                )
            kind = {"linear": Linear, "geom": Geometric, "binom": Binomial,
                    "horadam": Horadam}[name]
            return kind(*values)
        if name == "poly":
            if not rest:
                raise SpecParseError("poly needs at least one coefficient", text, base)
            return Polynomial(tuple(_fraction(a, text) for a in args))
        if name == "explicit":
            return Explicit(tuple(_int(a, text) for a in args))
    except SpecError as exc:
        raise SpecParseError(str(exc), text, base) from exc
    raise SpecParseError(f"unknown sequence family {name!r}", text, 0)


def _split_args(rest: str, base: int) -> list[tuple[str, int]]:
    args: list[tuple[str, int]] = []
    offset = base
    for token in rest.split(","):
        args.append((token.strip(), offset))
        offset += len(token) + 1
    return args


def _int(arg: tuple[str, int], text: str) -> int:
    token, pos = arg
    try:
        return int(token)
    except ValueError:
        raise SpecParseError(f"expected an integer, got {token!r}", text, pos) from None


def _fraction(arg: tuple[str, int], text: str) -> Fraction:
    token, pos = arg
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise SpecParseError(f"expected a rational, got {token!r}", text, pos) from None


# ---------------------------------------------------------------------------
# argparse types (failures surface as usage errors, exit code 2)


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _int_list(count: int) -> Callable[[str], tuple[int, ...]]:
    def parse(text: str) -> tuple[int, ...]:
        parts = text.split(",")
        if len(parts) != count:
            raise argparse.ArgumentTypeError(
                f"expected {count} comma-separated integers, got {text!r}"
            )
        try:
            return tuple(int(p) for p in parts)
        except ValueError:
            raise argparse.ArgumentTypeError(f"non-integer in {text!r}") from None

    return parse


def _coeff_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(p.strip()) for p in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad coefficient list {text!r}") from None


def _a_number(text: str) -> str:
    if not oeis.A_NUMBER.match(text):
        raise argparse.ArgumentTypeError(f"expected 'A' + 6 digits, got {text!r}")
    return text


# ---------------------------------------------------------------------------
# output helpers


def _json_value(v: Union[int, Fraction]) -> Union[int, str]:
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    return v


def _emit_indexed(ns: argparse.Namespace, payload: dict, values: Sequence, n0: int = 0) -> None:
    if ns.format == "json":
        payload = dict(payload, values=[_json_value(v) for v in values], start=n0)
        print(json.dumps(payload))
    elif ns.format == "csv":
        print("n,value")
        for i, v in enumerate(values):
            print(f"{n0 + i},{v}")
    else:
        print(" ".join(str(v) for v in values))


def _emit_scalar(ns: argparse.Namespace, payload: dict, value: Union[int, Fraction]) -> None:
    if ns.format == "json":
        print(json.dumps(dict(payload, value=_json_value(value))))
    elif ns.format == "csv":
        raise ValueError("csv output is not supported for scalar results")
    else:
        print(value)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_terms(ns: argparse.Namespace) -> int:
    spec = parse_spec(ns.spec)
    values = terms(spec, ns.start, ns.count)
    _emit_indexed(ns, {"command": "terms", "spec": ns.spec}, values, ns.start)
    return 0


def _cmd_gaps(ns: argparse.Namespace) -> int:
    spec = parse_spec(ns.spec)
    gaps = [(n, gap(spec, n)) for n in range(ns.count)]
    if ns.format == "json":
        print(
            json.dumps(
                {
                    "command": "gaps",
                    "spec": ns.spec,
                    "gaps": [
                        {"n": n, "start": g.start, "length": g.length,
                         "elements": list(g.elements)}
                        for n, g in gaps
                    ],
                }
            )
        )
    elif ns.format == "csv":
        print("n,start,length")
        for n, g in gaps:
            print(f"{n},{g.start},{g.length}")
    else:
        for n, g in gaps:
            elements = ",".join(str(e) for e in g.elements) or "-"
            print(f"{n} {g.start} {g.length} {elements}")
    return 0


def _cmd_gapsum(ns: argparse.Namespace) -> int:
    spec = parse_spec(ns.spec)
    func = gap_sum_signed if ns.signed else gap_sum_abs if ns.abs else gap_sum
    kind = "signed" if ns.signed else "abs" if ns.abs else "clamped"
    values = [func(spec, n) for n in range(ns.count)]
    _emit_indexed(ns, {"command": "gapsum", "spec": ns.spec, "kind": kind}, values)
    return 0


def _cmd_gapprod(ns: argparse.Namespace) -> int:
    spec = parse_spec(ns.spec)
    values = [gap_product(spec, n) for n in range(ns.count)]
    _emit_indexed(ns, {"command": "gapprod", "spec": ns.spec}, values)
    return 0


_GF_BUILDERS: dict[str, Callable[[Horadam], RatFunc]] = {
    "plain": horadam_gf,
    "shift": horadam_shift_gf,
    "square": horadam_square_gf,
    "square-shift": horadam_shift_square_gf,
    "gapsum": horadam_gap_sum_gf,
}


def _cmd_gf(ns: argparse.Namespace) -> int:
    spec = Horadam(*ns.horadam)
    f = _GF_BUILDERS[ns.kind](spec)
    expansion = f.expand(ns.expand) if ns.expand is not None else None
    if ns.format == "json":
        num, den = integer_coefficients(f)
        payload = {
            "command": "gf",
            "horadam": list(ns.horadam),
            "kind": ns.kind,
            "text": ratfunc_to_text(f),
            "num": num,
            "den": den,
        }
        if expansion is not None:
            payload["expansion"] = [_json_value(v) for v in expansion]
        print(json.dumps(payload))
    elif ns.format == "csv":
        if expansion is None:
            raise ValueError("csv output for gf needs --expand")
        print("n,value")
        for i, v in enumerate(expansion):
            print(f"{i},{v}")
    else:
        print(ratfunc_to_text(f))
        if expansion is not None:
            print(" ".join(str(v) for v in expansion))
    return 0


def _cmd_expand(ns: argparse.Namespace) -> int:
    f = RatFunc(Poly(ns.num), Poly(ns.den))
    values = f.expand(ns.count)
    _emit_indexed(ns, {"command": "expand", "text": ratfunc_to_text(f)}, values)
    return 0


def _cmd_fc(ns: argparse.Namespace) -> int:
    _emit_scalar(ns, {"command": "fc", "p": ns.p, "m": ns.m}, fuss_catalan(ns.p, ns.m))
    return 0


def _cmd_raney(ns: argparse.Namespace) -> int:
    value = raney(ns.p, ns.r, ns.n)
    _emit_scalar(ns, {"command": "raney", "p": ns.p, "r": ns.r, "n": ns.n}, value)
    return 0


def _cmd_check_identity(ns: argparse.Namespace) -> int:
    if ns.fc is not None:
        k, n = ns.fc
        ok = check_fc_identity(k, n)
        lhs = gap_product_closed(k, 1, n)
        rhs = factorial(k) * fuss_catalan(n, k)
        detail = f"P_{n}(kn+1, k={k}) = {lhs} vs k! * fc({n},{k}) = {rhs}"
        payload = {"command": "check-identity", "identity": "fc", "k": k, "n": n}
    else:
        k, r, n = ns.raney
        ok = check_raney_identity(k, r, n)
        lhs = gap_product_closed(k, r, n)
        rhs = Fraction(factorial(k), r) * raney(n + 1, r, k)
        detail = f"P_{n}(kn+r, k={k}, r={r}) = {lhs} vs (k!/r) * raney({n + 1},{r},{k}) = {rhs}"
        payload = {"command": "check-identity", "identity": "raney", "k": k, "r": r, "n": n}
    if ns.format == "json":
        print(json.dumps(dict(payload, holds=ok, detail=detail)))
    elif ns.format == "csv":
        raise ValueError("csv output is not supported for check-identity")
    else:
        print(f"{detail}: {'holds' if ok else 'FAILS'}")
    return 0 if ok else 1


_TABLE_BUILDERS: dict[str, Callable[[], list[tables.RefTable]]] = {
    "figurate": lambda: [tables.figurate_table()],
    "fc": tables.fc_tables,
    "raney": tables.raney_tables,
    "horadam": lambda: [tables.horadam_table()],
}


def _cmd_table(ns: argparse.Namespace) -> int:
    built = _TABLE_BUILDERS[ns.name]()
    if ns.format == "json":
        print(
            json.dumps(
                [
                    {
                        "title": t.title,
                        "headers": list(t.headers),
                        "rows": [list(row) for row in t.rows],
                        "corrections": list(t.corrections),
                    }
                    for t in built
                ]
            )
        )
    elif ns.format == "csv":
        raise ValueError("csv output is not supported for tables")
    else:
        print("\n".join(tables.render_table(t) for t in built), end="")
    return 0


_KIND_FUNCS: dict[str, Callable[[SeqSpec, int], int]] = {
    "terms": term,
    "gapsum": gap_sum,
    "gapprod": gap_product,
}


def _cmd_check_oeis(ns: argparse.Namespace) -> int:
    spec = parse_spec(ns.spec)
    if ns.bfile is not None:
        bfile = oeis.parse_bfile(Path(ns.bfile).read_bytes(), ns.id)
    else:
        bfile = oeis.fetch_bfile(ns.id)
    count = ns.count if ns.count is not None else len(bfile.entries) + ns.max_shift
    if isinstance(spec, Explicit):
        available = len(spec.terms) if ns.kind == "terms" else len(spec.terms) - 1
        count = min(count, available)
    func = _KIND_FUNCS[ns.kind]
    values = [func(spec, n) for n in range(count)]
    report = oeis.cross_check(values, bfile, ns.max_shift)
    if ns.format == "json":
        payload = {
            "command": "check-oeis",
            "id": ns.id,
            "spec": ns.spec,
            "kind": ns.kind,
            "matched": report.matched,
            "shift": report.shift,
            "compared": report.compared,
        }
        if report.first_mismatch is not None:
            payload["first_mismatch"] = {
                "index": report.first_mismatch.index,
                "expected": report.first_mismatch.expected,
                "got": report.first_mismatch.got,
            }
        print(json.dumps(payload))
    elif ns.format == "csv":
        raise ValueError("csv output is not supported for check-oeis")
    else:
        if report.matched:
            print(f"{ns.id}: matched shift={report.shift} compared={report.compared}")
        else:
            mm = report.first_mismatch
            print(
                f"{ns.id}: MISMATCH at index {mm.index}: b-file has {mm.expected}, "
                f"computed {mm.got} (best shift {report.shift})"
            )
    return 0 if report.matched else 1


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapseq",
        description="Exact gap-sum and gap-product sequence toolkit.",
        epilog=f"sequence spec grammar: {_GRAMMAR}",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("terms", parents=[fmt], help="sequence terms")
    p.add_argument("--spec", required=True)
    p.add_argument("--count", type=_nonneg, required=True)
    p.add_argument("--from", dest="start", type=_nonneg, default=0)
    p.set_defaults(func=_cmd_terms)

    p = sub.add_parser("gaps", parents=[fmt], help="gap start/length/elements")
    p.add_argument("--spec", required=True)
    p.add_argument("--count", type=_nonneg, required=True)
    p.set_defaults(func=_cmd_gaps)

    p = sub.add_parser("gapsum", parents=[fmt], help="gap-sum sequence")
    p.add_argument("--spec", required=True)
    p.add_argument("--count", type=_nonneg, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--signed", action="store_true")
    group.add_argument("--abs", action="store_true")
    p.set_defaults(func=_cmd_gapsum)

    p = sub.add_parser("gapprod", parents=[fmt], help="gap-product sequence")
    p.add_argument("--spec", required=True)
    p.add_argument("--count", type=_nonneg, required=True)
    p.set_defaults(func=_cmd_gapprod)

    p = sub.add_parser("gf", parents=[fmt], help="Horadam generating functions")
    p.add_argument("--horadam", type=_int_list(4), required=True, metavar="A,B,R,S")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--plain", dest="kind", action="store_const", const="plain")
    group.add_argument("--shift", dest="kind", action="store_const", const="shift")
    group.add_argument("--square", dest="kind", action="store_const", const="square")
    group.add_argument(
        "--square-shift", dest="kind", action="store_const", const="square-shift"
    )
    group.add_argument("--gapsum", dest="kind", action="store_const", const="gapsum")
    p.add_argument("--expand", type=_nonneg, default=None, metavar="N")
    p.set_defaults(func=_cmd_gf, kind="plain")

    p = sub.add_parser("expand", parents=[fmt], help="expand num/den coefficient lists")
    p.add_argument("--num", type=_coeff_list, required=True, metavar="C0,C1,...")
    p.add_argument("--den", type=_coeff_list, required=True, metavar="C0,C1,...")
    p.add_argument("--count", type=_nonneg, required=True)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("fc", parents=[fmt], help="Fuss-Catalan number")
    p.add_argument("--p", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)
    p.set_defaults(func=_cmd_fc)

    p = sub.add_parser("raney", parents=[fmt], help="Raney number")
    p.add_argument("--p", type=_nonneg, required=True)
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=_cmd_raney)

    p = sub.add_parser("check-identity", parents=[fmt], help="verify product identities")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--fc", type=_int_list(2), metavar="K,N")
    group.add_argument("--raney", type=_int_list(3), metavar="K,R,N")
    p.set_defaults(func=_cmd_check_identity)

    p = sub.add_parser("table", parents=[fmt], help="reproduce a reference table")
    p.add_argument("name", choices=sorted(_TABLE_BUILDERS))
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("check-oeis", parents=[fmt], help="cross-check against a b-file")
    p.add_argument("--spec", required=True)
    p.add_argument("--kind", choices=sorted(_KIND_FUNCS), required=True)
    p.add_argument("--id", type=_a_number, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--bfile", metavar="PATH")
    group.add_argument("--fetch", action="store_true")
    p.add_argument("--max-shift", type=_nonneg, default=4)
    p.add_argument("--count", type=_nonneg, default=None)
    p.set_defaults(func=_cmd_check_oeis)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, execute one subcommand, and return the exit code."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return ns.func(ns)
    except oeis.FetchError as exc:
        print(f"gapseq: error: {exc}", file=sys.stderr)
        return 1
    except oeis.BFileError as exc:
        print(f"gapseq: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"gapseq: error: {exc}", file=sys.stderr)
        return 1
    except (SpecParseError, SpecError, ValueError, IndexError) as exc:
        print(f"gapseq: error: {exc}", file=sys.stderr)
        print(f"gapseq: spec grammar: {_GRAMMAR}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
