"""Command-line surface: gcdpairs <list|check|count|graph|verify>.

All output is UTF-8 with LF line endings and is byte-deterministic for a given
invocation. Exit codes: 0 success (or positive check verdict), 1 negative
check verdict, 2 usage error, 3 verification failure or exact-count mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from . import oracle
from .graph import SearchBounds, analyze, build, export_dot
from .numtheory import is_prime, prime_power_decompose
from .pairs import (
    CountResult,
    canonical_residue,
    classify_elements,
    composite_lower_bound,
    count_prime_power_formula,
    count_zero_divisor_closed,
    enumerate_pairs,
    is_gcd_pair,
    iter_pairs,
    restrict,
)
from .verify import run_verification

_EPILOG = f"""\
exact-search bounds (override all with GCDPAIRS_MAX_EXACT=<n>):
  maximum clique {SearchBounds().clique_exact}, chromatic number {SearchBounds().chromatic_exact}
oracle bounds (fixed): exhaustive clique {oracle.MAX_CLIQUE_N}, chromatic {oracle.MAX_CHROMATIC_N}, \
cycles {oracle.MAX_CYCLE_N}, domination {oracle.MAX_DOMINATION_N}
exit codes: 0 ok / 1 not a gcd-pair / 2 usage / 3 verification failure
"""


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a modulus >= 1, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcdpairs",
        description="gcd-pairs in Z_n: enumeration, counting, graphs, and claim verification",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="print the gcd-pairs of Z_n")
    p_list.add_argument("n", type=_positive_int)
    p_list.add_argument(
        "--subset",
        default="all",
        help="all, units, zero-divisors, or an explicit comma list of residues",
    )
    p_list.add_argument("--json", action="store_true")
    p_list.set_defaults(func=cmd_list)

    p_check = sub.add_parser("check", help="is {a, b} a gcd-pair in Z_n?")
    p_check.add_argument("n", type=_positive_int)
    p_check.add_argument("a", type=int)
    p_check.add_argument("b", type=int)
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_count = sub.add_parser("count", help="count gcd-pairs by enumeration and/or formula")
    p_count.add_argument("n", type=_positive_int)
    p_count.add_argument("--method", choices=("enumerate", "formula", "both"), default="both")
    p_count.add_argument("--json", action="store_true")
    p_count.set_defaults(func=cmd_count)

    p_graph = sub.add_parser("graph", help="the graph of Z_n and its invariants")
    p_graph.add_argument("n", type=_positive_int)
    p_graph.add_argument("--analyze", action="store_true", help="compute graph invariants")
    p_graph.add_argument("--dot", metavar="PATH", help="write DOT text to PATH ('-' for stdout)")
    p_graph.add_argument("--json", action="store_true")
    p_graph.set_defaults(func=cmd_graph)

    p_verify = sub.add_parser("verify", help="re-derive every documented claim by brute force")
    p_verify.add_argument("--max-n", type=int, default=None, help="cap enumeration ranges")
    p_verify.add_argument(
        "--claims", default=None, help="comma-separated substrings selecting claim ids"
    )
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def _parse_subset(n: int, text: str) -> tuple[str, frozenset[int] | None]:
    """(label, residues or None for the full set); raises ValueError on bad input."""
    if text == "all":
        return "full", None
    if text in ("units", "zero-divisors"):
        if n < 2:
            raise ValueError(f"subset '{text}' needs n >= 2")
        classes = classify_elements(n)
        chosen = classes.units if text == "units" else classes.zero_divisors
        return text, chosen
    residues = frozenset(int(part) for part in text.split(","))
    for x in residues:
        if not 0 <= x < n:
            raise ValueError(f"residue {x} outside [0, {n})")
    return "subset:" + ",".join(map(str, sorted(residues))), residues


def _filtered_pairs(n: int, subset: frozenset[int] | None) -> Iterator[tuple[int, int]]:
    for a, b in iter_pairs(n):
        if subset is None or (a in subset and b in subset):
            yield (a, b)


def cmd_list(args: argparse.Namespace) -> int:
    try:
        label, subset = _parse_subset(args.n, args.subset)
    except ValueError as exc:
        print(f"gcdpairs list: {exc}", file=sys.stderr)
        return 2
    if args.json:
        ps = enumerate_pairs(args.n)
        if subset is not None:
            ps = restrict(ps, subset, label=label)
        print(json.dumps(ps.to_json_dict(), indent=2))
        return 0
    out = sys.stdout
    count = 0
    chunk: list[str] = []
    for a, b in _filtered_pairs(args.n, subset):
        chunk.append(f"{{{a},{b}}}")
        count += 1
        if len(chunk) >= 4096:
            out.write("\n".join(chunk) + "\n")
            chunk.clear()
    if chunk:
        out.write("\n".join(chunk) + "\n")
    out.write(f"The number of gcd-pairs is {count}\n")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    ra = canonical_residue(args.n, args.a)
    rb = canonical_residue(args.n, args.b)
    verdict = is_gcd_pair(args.n, args.a, args.b)
    lo, hi = min(ra, rb), max(ra, rb)
    if args.json:
        payload = {
            "schema": 1,
            "n": args.n,
            "input": [args.a, args.b],
            "residues": [lo, hi],
            "gcd_pair": verdict,
        }
        print(json.dumps(payload, indent=2))
    elif verdict:
        print(f"yes: {{{lo},{hi}}} is a gcd-pair in Z_{args.n}")
    else:
        print(f"no: {{{lo},{hi}}} is not a gcd-pair in Z_{args.n}")
    return 0 if verdict else 1


def _formula_counts(n: int) -> tuple[CountResult | None, CountResult | None]:
    """Best closed forms for the total and zero-divisor pair counts, or None
    where no formula applies."""
    total: CountResult | None = None
    if n >= 2:
        pp = prime_power_decompose(n)
        if pp is not None:
            total = count_prime_power_formula(pp)
        elif n >= 4 and not is_prime(n):
            total = composite_lower_bound(n)
    zero_div = count_zero_divisor_closed(n) if n >= 2 else None
    return total, zero_div


_KIND_SYMBOL = {"exact": "=", "strict-lower-bound": ">", "lower-bound": ">="}


def _format_count(result: CountResult | None) -> str:
    if result is None:
        return "unavailable"
    symbol = _KIND_SYMBOL[result.kind.value]
    return f"{symbol} {result.value} ({result.kind.value}, {result.provenance})"


def cmd_count(args: argparse.Namespace) -> int:
    n = args.n
    enumerated: dict[str, int] | None = None
    formulas: tuple[CountResult | None, CountResult | None] | None = None
    if args.method in ("enumerate", "both"):
        zero_divisors = classify_elements(n).zero_divisors if n >= 2 else frozenset()
        total = 0
        among_zero = 0
        for a, b in iter_pairs(n):
            total += 1
            if a in zero_divisors and b in zero_divisors:
                among_zero += 1
        enumerated = {"total": total, "zero_divisors": among_zero}
    if args.method in ("formula", "both"):
        formulas = _formula_counts(n)
    mismatch = False
    if enumerated is not None and formulas is not None:
        for result, actual in zip(formulas, (enumerated["total"], enumerated["zero_divisors"])):
            if result is not None and result.kind.value == "exact" and result.value != actual:
                mismatch = True
    if args.json:
        payload: dict = {"schema": 1, "n": n, "enumerate": enumerated}
        payload["formula"] = (
            None
            if formulas is None
            else {
                "total": formulas[0].to_json_dict() if formulas[0] else None,
                "zero_divisors": formulas[1].to_json_dict() if formulas[1] else None,
            }
        )
        payload["exact_match"] = (
            None if (enumerated is None or formulas is None) else not mismatch
        )
        print(json.dumps(payload, indent=2))
    else:
        if enumerated is not None:
            print(f"pairs total: {enumerated['total']}")
            print(f"pairs among zero divisors: {enumerated['zero_divisors']}")
        if formulas is not None:
            print(f"formula total: {_format_count(formulas[0])}")
            print(f"formula zero divisors: {_format_count(formulas[1])}")
        if mismatch:
            print("error: exact formula disagrees with enumeration", file=sys.stderr)
    return 3 if mismatch else 0


def cmd_graph(args: argparse.Namespace) -> int:
    bounds = SearchBounds.from_env()
    g = build(args.n)
    invariants: dict | None = None
    notes: list[str] = []
    if args.analyze:
        invariants, notes = analyze(g, bounds)
    dot_to_stdout = args.dot == "-"
    if args.dot is not None:
        text = export_dot(g)
        if dot_to_stdout:
            sys.stdout.write(text)
        else:
            try:
                with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
                    fh.write(text)
            except OSError as exc:
                print(f"gcdpairs graph: cannot write {args.dot}: {exc}", file=sys.stderr)
                return 2
    if dot_to_stdout and not args.json:
        return 0
    if args.json:
        payload = g.to_json_dict(invariants)
        payload["notes"] = notes
        print(json.dumps(payload, indent=2))
        return 0
    print(f"G_{args.n}: {args.n} vertices, {len(g.simple_edges)} edges, {len(g.loops)} loops")
    if invariants is not None:
        for key in (
            "connected",
            "gamma",
            "triangle",
            "traceable",
            "hamiltonian",
            "clique_number",
            "chromatic_number",
            "planar",
        ):
            value = invariants[key]
            print(f"{key.replace('_', ' ')}: {'null' if value is None else value}")
        for note in notes:
            print(f"note: {note}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    claim_filter = None
    if args.claims:
        claim_filter = [part.strip() for part in args.claims.split(",") if part.strip()]
    report = run_verification(
        max_n=args.max_n, claims=claim_filter, bounds=SearchBounds.from_env()
    )
    if not report.entries:
        print("gcdpairs verify: no claims match the filter", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        sys.stdout.write(report.to_text())
    return 3 if report.failures else 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has printed its own message
        code = exc.code
        return code if isinstance(code, int) else 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
