"""JSON encoding and strict parsing for events, spaces, and reports.

Rationals travel as strings, "p/q" or a bare integer "n", because JSON
numbers cannot hold them losslessly.  Interval lists are rejected unless
they are already canonical; pass ``normalize=True`` (the command line
flag ``--normalize``) to accept and merge arbitrary interval lists.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .engine import CommonCauseSystem, ConstructionSteps, VerificationReport
from .errors import InputError
from .events import IntervalEvent
from .finite import FiniteEvent, FiniteSpace
from .lattice import Partition

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/(\d+))?$")


def format_rational(value: Fraction) -> str:
    return str(value)


def parse_rational(text: Any) -> Fraction:
    """Parse a 'p/q' or integer string, rejecting anything else."""
    if not isinstance(text, str):
        raise InputError(f"rationals must be JSON strings, got {text!r}")
    match = _RATIONAL_RE.match(text.strip())
    if not match:
        raise InputError(f"malformed rational {text!r}; expected 'p/q' or an integer string")
    if match.group(1) == "0":
        raise InputError(f"zero denominator in rational {text!r}")
    return Fraction(text.strip())


def loads(text: str) -> Any:
    """json.loads with position info folded into the diagnostic."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _field(obj: Any, key: str) -> Any:
    if not isinstance(obj, dict):
        raise InputError(f"expected a JSON object with a {key!r} field, got {type(obj).__name__}")
    if key not in obj:
        raise InputError(f"missing {key!r} field")
    return obj[key]


def interval_event_to_obj(event: IntervalEvent) -> dict:
    return {"intervals": [[format_rational(lo), format_rational(hi)] for lo, hi in event.intervals]}


def interval_event_from_obj(obj: Any, *, normalize: bool = False) -> IntervalEvent:
    raw = _field(obj, "intervals")
    if not isinstance(raw, list):
        raise InputError("'intervals' must be a list of [lo, hi] pairs")
    pairs = []
    for k, item in enumerate(raw):
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise InputError(f"interval {k} must be a [lo, hi] pair")
        pairs.append((parse_rational(item[0]), parse_rational(item[1])))
    if normalize:
        return IntervalEvent.normalized(pairs)
    return IntervalEvent(tuple(pairs))


def interval_partition_from_obj(obj: Any, *, normalize: bool = False) -> Partition:
    if not isinstance(obj, list):
        raise InputError("a partition must be a JSON list of events")
    cells = tuple(interval_event_from_obj(cell, normalize=normalize) for cell in obj)
    return Partition(cells)


def partition_to_obj(partition: Partition) -> list:
    return [interval_event_to_obj(cell) for cell in partition.cells]


def finite_space_to_obj(space: FiniteSpace) -> dict:
    return {"weights": [format_rational(w) for w in space.weights]}


def finite_space_from_obj(obj: Any) -> FiniteSpace:
    raw = _field(obj, "weights")
    if not isinstance(raw, list):
        raise InputError("'weights' must be a list of rational strings")
    return FiniteSpace(tuple(parse_rational(w) for w in raw))


def finite_event_to_obj(event: FiniteEvent) -> dict:
    return {"members": list(event.members)}


def finite_event_from_obj(obj: Any, space: FiniteSpace) -> FiniteEvent:
    raw = _field(obj, "members")
    if not isinstance(raw, list):
        raise InputError("'members' must be a list of sample point indices")
    seen = set()
    for idx in raw:
        if isinstance(idx, bool) or not isinstance(idx, int):
            raise InputError(f"sample point index {idx!r} is not an integer")
        if idx in seen:
            raise InputError(f"duplicate sample point index {idx}")
        seen.add(idx)
    return space.event(raw)


def report_to_obj(report: VerificationReport) -> dict:
    return {
        "accepted": report.verdict,
        "screening_off_ok": list(report.screening_off_ok),
        "cross_ok": [{"i": i, "j": j, "ok": ok} for i, j, ok in report.cross_ok],
        "cell_measures": [format_rational(m) for m in report.cell_measures],
        "cond_a": [format_rational(x) for x in report.cond_a],
        "cond_b": [format_rational(x) for x in report.cond_b],
        "cond_ab": [format_rational(x) for x in report.cond_ab],
        "decomposition_lhs": format_rational(report.decomposition_lhs),
        "decomposition_rhs": format_rational(report.decomposition_rhs),
        "failure": report.failure,
    }


def system_to_obj(system: CommonCauseSystem) -> dict:
    return {
        "cells": [interval_event_to_obj(cell) for cell in system.cells.cells],
        "cell_measures": [format_rational(m) for m in system.cell_measures],
        "cond_a": [format_rational(x) for x in system.cond_a],
        "cond_b": [format_rational(x) for x in system.cond_b],
        "cond_ab": [format_rational(x) for x in system.cond_ab],
    }


def steps_to_obj(steps: ConstructionSteps) -> dict:
    obj = {
        "accepted": True,
        "joint_excess": format_rational(steps.joint_excess),
        "carve_bound": format_rational(steps.carve_bound),
        "lambda": format_rational(steps.lam),
        "full_cell_measure": format_rational(steps.full_cell_measure),
        "null_cell_measure": format_rational(steps.null_cell_measure),
        "null_cell_is_whole_remainder": steps.null_cell_is_whole_remainder,
        "report": report_to_obj(steps.report),
    }
    obj.update(system_to_obj(steps.system))
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
