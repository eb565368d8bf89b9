"""Command-line interface.

Exit status: 0 success, 1 property failure, 2 input or parse error,
3 cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .decomp import decompose
from .enumerator import PREDICATES, EnumerationTask, canonical_form, enumerate_magmas, naive_enumerate, search
from .errors import CapExceeded, HypothesisViolation, InputError, MoufangError
from .generators import chain_semilattice, cyclic_group, jordan_left_zero, zn_multiplicative
from .magma import IdentityKind, check_identity, direct_product
from .report import (
    decomposition_report,
    dumps,
    hasse_dot,
    identities_report,
    property_suite,
    props_report,
)
from .tablefile import format_table, read_table

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

DEFAULT_CHECK = "commutative,central-moufang,idempotent,associative"


def _kinds(names: str) -> list[IdentityKind]:
    return [IdentityKind.parse(s) for s in names.split(",") if s.strip()]


def _emit(text: str, path: str | None):
    if path:
        Path(path).write_text(text, newline="\n")
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    M = read_table(args.path)
    reports = [check_identity(M, k) for k in _kinds(args.kinds)]
    for r in reports:
        verdict = "holds" if r.holds else f"fails at {r.counterexample}"
        print(f"{r.kind.value}: {verdict}")
    if args.json:
        _emit(dumps(identities_report(M, reports)), args.json)
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAIL


def cmd_decompose(args) -> int:
    M = read_table(args.path)
    d = decompose(M, require_hypotheses=not args.force, workers=args.workers)
    _emit(dumps(decomposition_report(M, d, explorative=args.force)), args.json)
    if args.dot:
        _emit(hasse_dot(d), args.dot)
    return EXIT_OK if d.certified.all() or not args.strict else EXIT_FAIL


def cmd_gen(args) -> int:
    family = args.family
    if family == "jordan":
        if args.p is None or args.m is None:
            raise InputError("jordan needs --p and --m")
        M, _ = jordan_left_zero(args.p, args.m)
        comment = f"jordan p={args.p} m={args.m}"
    elif family == "product":
        if not args.factors or len(args.factors) != 2:
            raise InputError("product needs --factors A B")
        M = direct_product(read_table(args.factors[0]), read_table(args.factors[1]))
        comment = None
    else:
        if args.k is None:
            raise InputError(f"{family} needs --k")
        build = {"chain": chain_semilattice, "zn": zn_multiplicative, "cyclic": cyclic_group}[family]
        M = build(args.k)
        comment = None
    text = format_table(M, comment if args.comment else None)
    _emit(text, args.output)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    constraints = frozenset(_kinds(args.constraints))
    task = EnumerationTask(args.order, constraints, args.iso, args.limit)
    found = list(enumerate_magmas(task, workers=args.workers))
    if args.count_only:
        print(len(found))
    else:
        for M in found:
            print(" ".join(map(str, M.entries())))
    if args.oracle_check:
        if args.order > 3:
            raise InputError("--oracle-check is limited to order <= 3")
        naive = naive_enumerate(args.order, constraints)
        if args.iso:
            expected = sorted({canonical_form(M) for M in naive})
        else:
            expected = sorted(M.entries() for M in naive)
        if args.limit is not None:
            expected = expected[:args.limit]
        got = sorted(M.entries() for M in found)
        if got != expected:
            print(f"oracle mismatch: enumerated {len(got)}, naive {len(expected)}", file=sys.stderr)
            return EXIT_FAIL
        print(f"oracle agrees: {len(expected)}", file=sys.stderr)
    return EXIT_OK


def cmd_props(args) -> int:
    M = read_table(args.path)
    d = decompose(M, require_hypotheses=not args.force, workers=args.workers)
    suite = property_suite(M, d, nmax=args.nmax, max_word=args.max_word)
    report = props_report(M, d, suite, args.nmax)
    _emit(dumps(report), args.json)
    return EXIT_OK if report["all_passed"] else EXIT_FAIL


def cmd_search(args) -> int:
    constraints = frozenset(_kinds(args.constraints)) if args.constraints else frozenset()
    if not constraints and not PREDICATES[args.predicate][0]:
        constraints = frozenset({IdentityKind.COMMUTATIVE, IdentityKind.CENTRAL_MOUFANG})
    constraints |= PREDICATES[args.predicate][0]
    found = None
    examined = 0
    for n in range(1, args.max_order + 1):
        result = search(EnumerationTask(n, constraints, args.iso), args.predicate)
        examined += result.examined
        if result.found:
            found = result.magma
            break
    out = {
        "predicate": args.predicate,
        "constraints": sorted(k.value for k in constraints),
        "max_order": args.max_order,
        "examined": examined,
        "found": found is not None,
        "table": [list(r) for r in found.table] if found else None,
    }
    sys.stdout.write(dumps(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moufang",
        description="Analyze finite commutative Moufang groupoids given as Cayley tables.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test identities exhaustively")
    p.add_argument("path")
    p.add_argument("kinds", nargs="?", default=DEFAULT_CHECK,
                   help=f"comma-separated identities (default: {DEFAULT_CHECK})")
    p.add_argument("--json", metavar="OUT", help="also write a JSON report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="split into Archimedean components")
    p.add_argument("path")
    p.add_argument("--json", metavar="OUT", help="write the JSON report here instead of stdout")
    p.add_argument("--dot", metavar="OUT", help="write the quotient's Hasse diagram")
    p.add_argument("--force", action="store_true",
                   help="run on inputs that are not commutative Moufang, reporting failed flags")
    p.add_argument("--strict", action="store_true", help="exit 1 unless every flag is certified")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gen", help="generate a table file")
    p.add_argument("--family", required=True, choices=["jordan", "chain", "zn", "cyclic", "product"])
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--factors", nargs=2, metavar="FILE")
    p.add_argument("--comment", action="store_true", help="prefix a comment naming the family")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="enumerate magmas satisfying identities")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--constraints", default="commutative,central-moufang")
    p.add_argument("--iso", action="store_true", help="one representative per isomorphism class")
    p.add_argument("--limit", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--oracle-check", action="store_true",
                   help="compare against unpruned generate-and-filter (order <= 3)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("props", help="run the full property suite")
    p.add_argument("path")
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--max-word", type=int, default=3)
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--force", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("search", help="look for small magmas bearing on open questions")
    p.add_argument("--predicate", required=True, choices=sorted(PREDICATES))
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--constraints", help="extra identities every candidate must satisfy")
    p.add_argument("--iso", action="store_true")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HypothesisViolation as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MoufangError as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
