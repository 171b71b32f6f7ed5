"""Command line front end.

Subcommands: construct, verify, search, bell, demo.  Inputs are JSON,
given as a file path, as ``-`` for stdin, or inline as a literal JSON
object.  Reports go to stdout, diagnostics to stderr.

Exit codes are a stable contract:

* 0  success, or candidate accepted
* 1  input error (malformed JSON, bad rational, non-partition, bad flags)
* 2  precondition failure (not correlated, not logically independent, ...)
* 3  verification rejected a structurally valid candidate
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import bell as bell_mod
from . import serialize
from .engine import construction_steps, verify_rccs
from .errors import InputError, PreconditionError
from .events import IntervalEvent

DEMO_A = IntervalEvent((("0", "1/2"),))
DEMO_B = IntervalEvent((("1/10", "1/2"), ("9/10", "1")))


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse hook
        raise _UsageError(message)


def _fmt(value: Fraction) -> str:
    return f"{value} ~ {float(value):.6f}"


def _read_payload(source: str):
    if source == "-":
        text = sys.stdin.read()
    elif Path(source).exists():
        text = Path(source).read_text()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        raise InputError(f"no such input file: {source}")
    return serialize.loads(text)


def _parse_lam(raw: str | None) -> Fraction:
    if raw is None:
        return Fraction(1, 2)
    lam = serialize.parse_rational(raw)
    if not 0 < lam < 1:
        raise InputError(f"--lambda must lie strictly between 0 and 1, got {lam}")
    return lam


def _print_report_human(report) -> None:
    for k, ok in enumerate(report.screening_off_ok):
        print(
            f"  cell {k + 1}: measure {_fmt(report.cell_measures[k])}; "
            f"P(a|cell) = {_fmt(report.cond_a[k])}; P(b|cell) = {_fmt(report.cond_b[k])}; "
            f"screening-off {'holds' if ok else 'FAILS'}"
        )
    for i, j, ok in report.cross_ok:
        print(f"  cells ({i + 1}, {j + 1}): cross-difference condition {'holds' if ok else 'FAILS'}")
    print(
        f"  decomposition identity: {_fmt(report.decomposition_lhs)} "
        f"vs {_fmt(report.decomposition_rhs)}"
    )
    print(f"  verdict: {'accepted' if report.verdict else 'rejected'}")
    if report.failure:
        print(f"  first failing condition: {report.failure}")


def _run_construct(args) -> int:
    payload = _read_payload(args.input)
    a = serialize.interval_event_from_obj(serialize._field(payload, "a"), normalize=args.normalize)
    b = serialize.interval_event_from_obj(serialize._field(payload, "b"), normalize=args.normalize)
    lam = _parse_lam(args.lam)
    steps = construction_steps(a, b, lam)
    if args.json:
        print(serialize.dumps(serialize.steps_to_obj(steps)))
        return 0
    print(f"a = {a}")
    print(f"b = {b}")
    if args.explain:
        print(f"joint excess (the correlation to explain): {_fmt(steps.joint_excess)}")
        print(f"admissible first-cell measure bound: {_fmt(steps.carve_bound)}")
        print(f"lambda: {_fmt(steps.lam)}")
        print(f"first cell carved from a & b with measure {_fmt(steps.full_cell_measure)}")
        print(f"second cell measure forced by screening-off: {_fmt(steps.null_cell_measure)}")
        if steps.null_cell_is_whole_remainder:
            print("second cell exhausts ~a & ~b (boundary case)")
        print("third cell is the complement of the union of the first two")
    print("size-3 common cause system:")
    for k, cell in enumerate(steps.system.cells.cells):
        print(f"  cell {k + 1}: {cell}")
    _print_report_human(steps.report)
    return 0


def _run_verify(args) -> int:
    payload = _read_payload(args.input)
    a = serialize.interval_event_from_obj(serialize._field(payload, "a"), normalize=args.normalize)
    b = serialize.interval_event_from_obj(serialize._field(payload, "b"), normalize=args.normalize)
    partition = serialize.interval_partition_from_obj(
        serialize._field(payload, "partition"), normalize=args.normalize
    )
    report = verify_rccs(a, b, partition)
    if args.json:
        print(serialize.dumps(serialize.report_to_obj(report)))
    else:
        print(f"a = {a}")
        print(f"b = {b}")
        _print_report_human(report)
    if not report.verdict:
        print(f"rejected: {report.failure}", file=sys.stderr)
        return 3
    return 0


def _run_search(args) -> int:
    from .finite import search_rccs

    payload = _read_payload(args.input)
    space = serialize.finite_space_from_obj(serialize._field(payload, "space"))
    a = serialize.finite_event_from_obj(serialize._field(payload, "a"), space)
    b = serialize.finite_event_from_obj(serialize._field(payload, "b"), space)
    n = serialize._field(payload, "n")
    if isinstance(n, bool) or not isinstance(n, int):
        raise InputError(f"'n' must be an integer, got {n!r}")
    hits = search_rccs(space, a, b, n, max_points=args.max_points)
    if args.json:
        obj = {
            "points": len(space),
            "n": n,
            "count": len(hits),
            "partitions": [[serialize.finite_event_to_obj(c) for c in p.cells] for p in hits],
        }
        print(serialize.dumps(obj))
    else:
        print(f"{len(hits)} size-{n} common cause system(s) found")
        for p in hits:
            print("  " + " / ".join(str(c) for c in p.cells))
    return 0


def _bell_obj() -> dict:
    witness = bell_mod.build_witness()
    expectations = bell_mod.bell_expectations(witness.phi, witness)
    value = bell_mod.bell_value(witness.phi, witness)
    return {"expectations": expectations, "bell_value": value}


def _print_bell_human(obj: dict) -> None:
    e = obj["expectations"]
    print("witness expectations in the entangled state:")
    print(f"  E[A1]    = {e['a1']:.17g}")
    print(f"  E[A2]    = {e['a2']:.17g}")
    print(f"  E[B1 B2] = {e['b1b2']:.17g}")
    print(f"  E[A1 A2] = {e['a1a2']:.17g}")
    print(f"  E[B1 A2] = {e['b1a2']:.17g}")
    print(f"  E[A1 B2] = {e['a1b2']:.17g}")
    value = obj["bell_value"]
    print(f"combination E[A1]+E[A2]+E[B1 B2]-E[A1 A2]-E[B1 A2]-E[A1 B2] = {value:.17g} (= -1/8)")
    print("below the classical lower bound 0: no single partition can screen off all four pairs")


def _run_bell(args) -> int:
    obj = _bell_obj()
    if args.json:
        print(serialize.dumps(obj))
    else:
        _print_bell_human(obj)
    return 0


def _run_demo(args) -> int:
    lam = _parse_lam(args.lam)
    steps = construction_steps(DEMO_A, DEMO_B, lam)
    bell_obj = _bell_obj()
    impossibility = bell_mod.no_common_ccs_demo(samples=10_000)
    if args.json:
        print(
            serialize.dumps(
                {
                    "construction": serialize.steps_to_obj(steps),
                    "bell": bell_obj,
                    "impossibility": impossibility,
                }
            )
        )
        return 0
    print("== size-3 construction on the worked example ==")
    print(f"a = {DEMO_A}")
    print(f"b = {DEMO_B}")
    print(f"joint excess: {_fmt(steps.joint_excess)}")
    print(f"first-cell measure bound: {_fmt(steps.carve_bound)}, lambda = {steps.lam}")
    for k, cell in enumerate(steps.system.cells.cells):
        print(f"  cell {k + 1}: {cell}")
    _print_report_human(steps.report)
    print()
    print("== Bell witness ==")
    _print_bell_human(bell_obj)
    print()
    print("== all-pairs ('common') common cause system ==")
    print(f"verdict: {impossibility['verdict']}")
    print(f"commutation requirement: {impossibility['commutation_requirement']}")
    for line in impossibility["argument"]:
        print(f"  - {line}")
    print(f"note: {impossibility['per_pair_note']}")
    print(f"note: {impossibility['scope_note']}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="rccs", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a size-3 common cause system for two interval events")
    construct.add_argument("input", help="JSON with fields 'a' and 'b' (path, '-', or inline)")
    construct.add_argument("--json", action="store_true")
    construct.add_argument("--explain", action="store_true", help="print the intermediate quantities")
    construct.add_argument("--normalize", action="store_true", help="accept non-canonical interval lists")
    construct.add_argument("--lambda", dest="lam", metavar="P/Q", help="first-cell fraction in (0, 1), default 1/2")
    construct.set_defaults(handler=_run_construct)

    verify = sub.add_parser("verify", help="verify a partition as a common cause system")
    verify.add_argument("input", help="JSON with fields 'a', 'b', 'partition'")
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--normalize", action="store_true")
    verify.set_defaults(handler=_run_verify)

    search = sub.add_parser("search", help="exhaustively search a finite space for size-n systems")
    search.add_argument("input", help="JSON with fields 'space', 'a', 'b', 'n'")
    search.add_argument("--json", action="store_true")
    search.add_argument("--max-points", type=int, default=14, help="refuse larger spaces (default 14)")
    search.set_defaults(handler=_run_search)

    bell = sub.add_parser("bell", help="evaluate the Bell witness")
    bell.add_argument("--json", action="store_true")
    bell.set_defaults(handler=_run_bell)

    demo = sub.add_parser("demo", help="worked construction plus the Bell impossibility report")
    demo.add_argument("--json", action="store_true")
    demo.add_argument("--lambda", dest="lam", metavar="P/Q")
    demo.set_defaults(handler=_run_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
