"""Command-line interface.

Subcommands: list (catalog), dims (coefficient data for one case), solve
(Einstein metrics for a case or a raw coefficient triple), verify (the
check suites). Exit codes: 0 success, 1 usage error, 2 verification
failure, 3 internal integrity error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .cases import case_dims, enumerate_cases, find_cases
from .coeffs import coefficients_for_case
from .checks import run_checks
from .einstein import (
    RootCoordinate,
    refine_solution,
    solve_case,
    solve_einstein,
    verify_solution,
)
from .errors import IntegrityError, NotApplicable, TrisymError
from .serialize import (
    encode_case,
    encode_fraction,
    encode_solution,
    envelope,
    render_csv,
    render_table,
    to_json,
)
from .surd import QuadraticSurd, exact_approx

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_INTEGRITY = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 1 on usage problems, not argparse's 2
        raise _UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"not a rational number: {text!r} ({exc})")


def _decimal_str(value: Fraction, digits: int) -> str:
    scale = 10**digits
    scaled = value * scale
    n = scaled.numerator // scaled.denominator
    if 2 * (scaled.numerator - n * scaled.denominator) >= scaled.denominator:
        n += 1
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, scale)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def _coord_decimal(c, digits: int) -> str:
    if isinstance(c, RootCoordinate):
        return _decimal_str(c.interval.midpoint, digits)
    if isinstance(c, QuadraticSurd):
        return _decimal_str(exact_approx(c, digits + 15), digits)
    return _decimal_str(Fraction(c), digits)


def _resolve_case(args):
    params = {k: getattr(args, k, None) for k in ("l", "i", "j", "k")}
    try:
        matches = find_cases(args.case, max_rank=args.max_rank, **params)
    except TrisymError as exc:
        raise _UsageError(str(exc))
    if not matches:
        raise _UsageError(f"no catalog entry matches {args.case!r} with {params}")
    if len(matches) > 1:
        opts = ", ".join(m.describe() for m in matches[:8])
        raise _UsageError(
            f"ambiguous selector {args.case!r}: matches {len(matches)} entries ({opts}, ...); "
            "pass --l/--i/--j (or --k for A-II)"
        )
    return matches[0]


def _add_case_args(p):
    p.add_argument("case", help="type label (e.g. E7-II) or InP tag (e.g. InP17)")
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--k", type=int, default=None, help="A-II alias: l = 2k - 1")
    p.add_argument("--max-rank", type=int, default=12, help="search bound for parameter-free selectors")


def _cmd_list(args) -> int:
    if args.max_rank < 1:
        raise _UsageError("--max-rank must be >= 1")
    cases = enumerate_cases(args.max_rank)
    payload = {"max_rank": args.max_rank, "cases": [encode_case(c) for c in cases]}
    warnings = [
        f"{c.describe()}: isotropy summands isomorphic; diagonal solver not applicable"
        for c in cases
        if c.isomorphic_summands
    ]
    if args.format == "json":
        sys.stdout.write(to_json(envelope("list", payload, warnings)))
        return EXIT_OK
    header = ["type", "tag", "ambient", "params", "isotropy", "dim_h", "d1", "d2", "d3", "flags"]
    rows = []
    for c in cases:
        dim_h, d1, d2, d3 = case_dims(c)
        rows.append(
            [
                c.type_label,
                c.inp_tag,
                f"{c.family}{c.rank}",
                ",".join(f"{k}={v}" for k, v in c.params),
                c.isotropy_type,
                str(dim_h),
                str(d1),
                str(d2),
                str(d3),
                "isomorphic-summands" if c.isomorphic_summands else "",
            ]
        )
    render = render_table if args.format == "table" else render_csv
    sys.stdout.write(render(rows, header))
    return EXIT_OK


def _cmd_dims(args) -> int:
    case = _resolve_case(args)
    data = coefficients_for_case(case)
    payload = encode_case(case, data)
    if args.format == "json":
        sys.stdout.write(to_json(envelope("dims", payload)))
        return EXIT_OK
    dim_h, d1, d2, d3 = case_dims(case)
    lines = [
        f"case       {case.describe()}  [{case.inp_tag}]",
        f"ambient    {case.family}{case.rank} (dim {dim_h + d1 + d2 + d3})",
        f"isotropy   {case.isotropy_type} (dim {dim_h})",
        f"dims       ({d1}, {d2}, {d3})",
        f"gamma      ({', '.join(str(g) for g in data.gammas)})",
        f"casimir    ({', '.join(str(c) for c in data.casimirs)})",
        f"A          {data.A}",
        f"a          ({', '.join(str(v) for v in data.a)})",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _solution_rows(solutions, digits: int):
    rows = []
    for s in solutions:
        rows.append(
            [
                s.branch,
                "(" + ", ".join(_coord_decimal(c, digits) for c in s.x) + ")",
                s.einstein_constant_sign,
                "exact" if s.is_exact else "certified interval",
            ]
        )
    return rows


def _cmd_solve(args) -> int:
    digits = args.digits
    if digits < 1 or digits > 50:
        raise _UsageError("--digits must be in 1..50")
    width = Fraction(1, 10 ** (digits + 3))
    warnings: list[str] = []
    if args.a:
        a = tuple(_fraction(t) for t in args.a)
        try:
            sols = solve_einstein(a)
        except TrisymError as exc:
            raise _UsageError(str(exc))
        label = None
    else:
        if not args.case:
            raise _UsageError("pass a case selector or --a p/q p/q p/q")
        case = _resolve_case(args)
        try:
            result = solve_case(case)
        except NotApplicable as exc:
            payload = {"case": encode_case(case), "applicable": False, "reason": str(exc)}
            if args.format == "json":
                sys.stdout.write(to_json(envelope("solve", payload, [str(exc)])))
            else:
                sys.stdout.write(f"not applicable: {exc}\n")
            return EXIT_OK
        a, sols, label = result.a, list(result.solutions), case
    sols = [refine_solution(s, width) for s in sols]
    tol = _fraction(args.tol)
    if tol <= 0:
        raise _UsageError("--tol must be positive")
    for s in sols:
        if not verify_solution(a, s, tol):
            raise IntegrityError(f"solution failed certification at tol {tol}: {s}")
    payload = {
        "a": [encode_fraction(v) for v in a],
        "solutions": [encode_solution(s) for s in sols],
        "applicable": True,
    }
    if label is not None:
        payload["case"] = encode_case(label)
    if args.format == "json":
        sys.stdout.write(to_json(envelope("solve", payload, warnings)))
        return EXIT_OK
    head = f"a = ({', '.join(str(v) for v in a)})"
    if label is not None:
        head = f"{label.describe()}  [{label.inp_tag}]  " + head
    sys.stdout.write(head + "\n")
    sys.stdout.write(
        render_table(_solution_rows(sols, digits), ["branch", f"(x1, x2, x3) to {digits} digits", "einstein const", "kind"])
    )
    sys.stdout.write(f"{len(sols)} invariant Einstein metric(s) up to proportionality\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_checks(args.scope, seed=args.seed)
    payload = {
        "scope": args.scope,
        "seed": args.seed,
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        "passed": all(r.passed for r in results),
    }
    if args.format == "json":
        sys.stdout.write(to_json(envelope("verify", payload)))
    else:
        for r in results:
            sys.stdout.write(r.line() + "\n")
        n_bad = sum(1 for r in results if not r.passed)
        sys.stdout.write(f"{len(results) - n_bad}/{len(results)} checks passed\n")
    return EXIT_OK if payload["passed"] else EXIT_VERIFY_FAILED


def _build_parser() -> _Parser:
    p = _Parser(prog="trisym", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    lp = sub.add_parser("list", parents=[], help="enumerate the catalog")
    lp.add_argument("--max-rank", type=int, default=8)
    lp.add_argument("--format", choices=("json", "table", "csv"), default="table")
    lp.set_defaults(fn=_cmd_list)

    dp = sub.add_parser("dims", help="dimension and coefficient data for one case")
    _add_case_args(dp)
    dp.add_argument("--format", choices=("json", "text"), default="text")
    dp.set_defaults(fn=_cmd_dims)

    sp = sub.add_parser("solve", help="invariant Einstein metrics for a case or coefficients")
    sp.add_argument("case", nargs="?", default=None, help="type label or InP tag")
    sp.add_argument("--a", nargs=3, metavar="p/q", default=None, help="solve a raw coefficient triple")
    sp.add_argument("--l", type=int, default=None)
    sp.add_argument("--i", type=int, default=None)
    sp.add_argument("--j", type=int, default=None)
    sp.add_argument("--k", type=int, default=None, help="A-II alias: l = 2k - 1")
    sp.add_argument("--max-rank", type=int, default=12)
    sp.add_argument("--digits", type=int, default=6, help="display precision")
    sp.add_argument("--tol", default="1/100000000000000000000", help="certification tolerance (rational)")
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp.set_defaults(fn=_cmd_solve)

    vp = sub.add_parser("verify", help="run the verification suites")
    vp.add_argument("scope", choices=("tables", "solutions", "properties", "all"))
    vp.add_argument("--seed", type=int, default=42)
    vp.add_argument("--format", choices=("json", "text"), default="text")
    vp.set_defaults(fn=_cmd_verify)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IntegrityError,) as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except TrisymError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
