"""Command-line interface: ``vogeldim VERB [options]``.

Exit codes: 0 success, 1 no solution or failed verification, 2 invalid
input (including poles at a user-supplied point), 3 internal inconsistency.
All output is assembled before anything is written, so a failing command
never leaves partial JSON on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    Divergent,
    FitUnstable,
    Indeterminate,
    Infeasible,
    VogelDimError,
)
from .reconstruct import build_problem, limit_polynomial, solve
from .symbolic import as_rational, classical_limit, evaluate_rational, format_rational
from .vogel import FORMULAS, VogelPoint, square_identities, verify_formula, vogel_point
from .weyl import RepSpec, qdim_at_rank, rank_interpolate
from .young import YoungDiagram

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _csv_floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def _ranks(text: str) -> list[int]:
    try:
        lo, hi = (int(v) for v in text.split(":"))
    except ValueError:
        raise UsageError(f"expected a rank range A:B, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty rank range {text!r}")
    return list(range(lo, hi + 1))


def _rep_spec(args) -> RepSpec:
    if args.series == "sl":
        if args.diagram is not None:
            raise UsageError("sl takes --lambda/--tau, not --diagram")
        if args.lam is None:
            raise UsageError("sl needs --lambda")
        return RepSpec.sl(YoungDiagram.parse(args.lam), YoungDiagram.parse(args.tau or ""))
    if args.lam is not None or args.tau is not None:
        raise UsageError(f"{args.series} takes --diagram, not --lambda/--tau")
    if args.diagram is None:
        raise UsageError(f"{args.series} needs --diagram")
    return RepSpec(args.series, YoungDiagram.parse(args.diagram))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _render_product(p, fmt, extra_text=()):
    if fmt == "json":
        return _dump(p.to_json())
    if fmt == "latex":
        return p.latex()
    return "\n".join([str(p), *extra_text])


def cmd_qdim(args):
    spec = _rep_spec(args)
    p = qdim_at_rank(spec, args.rank)
    dim = format_rational(classical_limit(p))
    return EXIT_OK, _render_product(p, args.format, [f"dim = {dim}"])


def cmd_interp(args):
    spec = _rep_spec(args)
    return EXIT_OK, _render_product(rank_interpolate(spec), args.format)


def cmd_reconstruct(args):
    lam, tau = YoungDiagram.parse(args.lam), YoungDiagram.parse(args.tau)
    problem = build_problem(lam, tau)
    try:
        solutions = solve(problem)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        for k, v in exc.multisets.items():
            print(f"  {k}: {v}", file=sys.stderr)
        if args.format != "json":
            return EXIT_FAIL, ""
        return EXIT_FAIL, _dump({"problem": problem.to_json(), "solution_count": 0,
                                 "solutions": []})
    shown = solutions if args.all_solutions else solutions[:1]
    code = EXIT_OK if solutions else EXIT_FAIL
    if not solutions:
        print("no consistent pairing", file=sys.stderr)
    elif len(solutions) > 1 and not args.all_solutions:
        print(f"{len(solutions)} solutions; showing the first (use --all-solutions)",
              file=sys.stderr)
    if args.format == "json":
        return code, _dump({"problem": problem.to_json(), "solution_count": len(solutions),
                            "solutions": [s.to_json() for s in shown]})
    if args.format == "latex":
        return code, "\n".join(s.denominator_product.latex() for s in shown)
    lines = [f"so diagram: ({problem.so_diagram})  sp diagram: ({problem.sp_diagram})",
             f"X    = {{{', '.join(map(str, problem.X))}}}",
             f"O_so = {{{', '.join(map(str, problem.O_so))}}}",
             f"O_sp = {{{', '.join(map(str, problem.O_sp))}}}",
             f"solutions: {len(solutions)}"]
    for i, s in enumerate(shown, 1):
        pairs = " ".join(f"({x},{y})" for x, y in s.pairs)
        lines.append(f"[{i}] pairs {pairs}" + ("" if s.y_k is None else f"  y_k = {s.y_k}"))
        lines.append(f"    denominator: {s.denominator_product}")
        lines.append(f"    small-x: {limit_polynomial(s)}")
    return code, "\n".join(lines)


def cmd_verify(args):
    if args.formula not in FORMULAS:
        raise UsageError(f"unknown formula {args.formula!r}; choose from {sorted(FORMULAS)}")
    entry = FORMULAS[args.formula]
    series = [s for s in args.series.split(",") if s]
    for s in series:
        if s not in entry.associated:
            raise UsageError(f"unknown series {s!r}")
    ranks, xs = _ranks(args.ranks), _csv_floats(args.x)
    reports = [verify_formula(entry, s, ranks, xs, args.tol) for s in series]
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    if args.format == "json":
        body = [r.to_json() for r in reports]
        return code, _dump(body[0] if len(body) == 1 else body)
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.formula} on {r.series}: ranks {r.checked_ranks}, "
                     f"max rel dev {r.max_rel_dev:.3e}"
                     + (f", skipped {r.skipped_ranks}" if r.skipped_ranks else ""))
        for f in r.failures:
            lines.append(f"  rank {f['rank']} x {f['x']}: universal {f['universal']} "
                         f"weyl {f['weyl']}" + (f" ({f['error']})" if "error" in f else ""))
    return code, "\n".join(lines)


def cmd_dim(args):
    if args.formula not in FORMULAS:
        raise UsageError(f"unknown formula {args.formula!r}; choose from {sorted(FORMULAS)}")
    body = FORMULAS[args.formula].body
    point = VogelPoint(as_rational(args.alpha), as_rational(args.beta), as_rational(args.gamma))
    if args.formula == "dimE":
        value = evaluate_rational(body, point.assignment())
    else:
        value = classical_limit(body, point.assignment())
    text = format_rational(value)
    if args.format == "json":
        return EXIT_OK, _dump({"formula": args.formula, "alpha": format_rational(point.alpha),
                               "beta": format_rational(point.beta),
                               "gamma": format_rational(point.gamma), "dimension": text})
    return EXIT_OK, text


def cmd_square_check(args):
    perm = tuple(int(v) for v in args.permutation.split(","))
    point = vogel_point(args.family, as_rational(args.param), perm)
    report = square_identities(point, _csv_floats(args.x), args.tol)
    code = EXIT_OK if report.passed else EXIT_FAIL
    if args.format == "json":
        return code, _dump(report.to_json())
    lines = [f"{'PASS' if report.passed else 'FAIL'} square identities at {point}"]
    for r in report.rows:
        lines.append(f"  x = {r['x']}: sym dev {r['rel_dev_sym']:.3e}, "
                     f"anti dev {r['rel_dev_anti']:.3e}")
    if report.classical:
        c = report.classical
        lines.append(f"  dims: adjoint {c['adjoint']}, Y2 {', '.join(c['Y2'])}, X2 {c['X2']}")
    lines.extend(f"  error: {e}" for e in report.errors)
    return code, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vogeldim",
        description="Quantum dimensions of classical representations and universal formulas.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def formats(p, choices=("text", "json", "latex")):
        p.add_argument("--format", choices=choices, default="text")

    def rep_args(p):
        p.add_argument("--series", choices=("sl", "so", "sp"), required=True)
        p.add_argument("--lambda", dest="lam", help="sl diagram lambda, e.g. 3,1")
        p.add_argument("--tau", help="sl diagram tau (may be empty)")
        p.add_argument("--diagram", help="so/sp diagram")

    p = sub.add_parser("qdim", help="quantum dimension at a fixed rank")
    rep_args(p)
    p.add_argument("--rank", type=int, required=True, help="defining-representation size N")
    formats(p)
    p.set_defaults(func=cmd_qdim)

    p = sub.add_parser("interp", help="quantum dimension as a function of the rank N")
    rep_args(p)
    formats(p)
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("reconstruct", help="gamma-free universal denominator")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--all-solutions", action="store_true")
    formats(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", help="check a universal formula against Weyl data")
    p.add_argument("--formula", required=True, help=", ".join(FORMULAS))
    p.add_argument("--series", default="sl,so,sp", help="comma-separated, e.g. sl,so")
    p.add_argument("--ranks", default="6:16", help="inclusive range A:B")
    p.add_argument("--x", default="0.1,0.25,0.5,1.0")
    p.add_argument("--tol", type=float, default=1e-9)
    formats(p, ("text", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dim", help="exact universal dimension at a point")
    p.add_argument("--formula", required=True, help=", ".join(FORMULAS))
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma", required=True)
    formats(p, ("text", "json"))
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("square-check", help="adjoint square decompositions at a point")
    p.add_argument("--family", choices=("sl", "so", "sp", "exc"), required=True)
    p.add_argument("--param", required=True)
    p.add_argument("--permutation", default="0,1,2")
    p.add_argument("--x", default="0.1,0.3,0.7")
    p.add_argument("--tol", type=float, default=1e-9)
    formats(p, ("text", "json"))
    p.set_defaults(func=cmd_square_check)
    return parser


def run(argv=None) -> tuple[int, str]:
    """Execute one command; returns ``(exit code, stdout text)``."""
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FitUnstable as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL, ""
    except (Divergent, Indeterminate) as exc:
        print(f"no finite value at this point: {exc}", file=sys.stderr)
        return EXIT_INPUT, ""
    except (UsageError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT, ""
    except VogelDimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL, ""


def main(argv=None) -> int:
    try:
        code, out = run(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except Exception as exc:  # pragma: no cover - last-resort guard
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    if out:
        sys.stdout.write(out + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
