"""Shared test utilities: independent oracles and random generators.

The oracles here deliberately avoid the code paths they are used to
check.  The set-operation oracle works pointwise on the elementary
subintervals induced by all endpoints; the Stirling numbers come from the
standard recurrence.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from rccs import FiniteSpace, IntervalEvent


def iv(*points: str) -> IntervalEvent:
    """Build an event from an even list of endpoint strings."""
    pairs = [(points[k], points[k + 1]) for k in range(0, len(points), 2)]
    return IntervalEvent(tuple(pairs))


@lru_cache(maxsize=None)
def stirling2(m: int, n: int) -> int:
    """Stirling number of the second kind via the standard recurrence."""
    if m == n:
        return 1
    if n == 0 or n > m:
        return 0
    return n * stirling2(m - 1, n) + stirling2(m - 1, n - 1)


def _contains(event: IntervalEvent, point: Fraction) -> bool:
    return any(lo <= point < hi for lo, hi in event.intervals)


def set_oracle(a: IntervalEvent, b: IntervalEvent | None, op) -> IntervalEvent:
    """Recompute a set operation by brute membership on elementary pieces.

    Collects every endpoint of both operands plus 0 and 1, then decides
    membership of each elementary piece by testing its midpoint, and
    finally merges contiguous pieces.  Independent of the two-pointer
    sweeps in the implementation.
    """
    points = {Fraction(0), Fraction(1)}
    for ev in (a, b):
        if ev is None:
            continue
        for lo, hi in ev.intervals:
            points.add(lo)
            points.add(hi)
    grid = sorted(points)
    pieces = []
    for lo, hi in zip(grid, grid[1:]):
        mid = (lo + hi) / 2
        in_a = _contains(a, mid)
        in_b = _contains(b, mid) if b is not None else False
        if op(in_a, in_b):
            pieces.append((lo, hi))
    merged: list[list[Fraction]] = []
    for lo, hi in pieces:
        if merged and merged[-1][1] == lo:
            merged[-1][1] = hi
        else:
            merged.append([lo, hi])
    return IntervalEvent(tuple((lo, hi) for lo, hi in merged))


def random_event(rng: random.Random, max_parts: int = 3) -> IntervalEvent:
    den = rng.choice([8, 12, 16, 24, 32, 60])
    count = rng.randint(0, max_parts)
    if count == 0:
        return IntervalEvent(())
    points = sorted(rng.sample(range(den + 1), 2 * count))
    pairs = tuple(
        (Fraction(points[2 * k], den), Fraction(points[2 * k + 1], den)) for k in range(count)
    )
    return IntervalEvent(pairs)


def random_nonzero_event(rng: random.Random, max_parts: int = 3) -> IntervalEvent:
    while True:
        ev = random_event(rng, max_parts)
        if not ev.is_zero and not ev.is_one:
            return ev


def random_correlated_independent_pair(rng: random.Random) -> tuple[IntervalEvent, IntervalEvent]:
    """Rejection-sample a compatible, logically independent, correlated pair."""
    from rccs import correlation, logically_independent

    while True:
        a = random_nonzero_event(rng)
        b = random_nonzero_event(rng)
        if logically_independent(a, b) and correlation(a, b) > 0:
            return a, b


def random_space(rng: random.Random, points: int) -> FiniteSpace:
    raw = [rng.randint(1, 9) for _ in range(points)]
    total = sum(raw)
    return FiniteSpace(tuple(Fraction(w, total) for w in raw))


def random_subset(rng: random.Random, space: FiniteSpace):
    members = [i for i in range(len(space)) if rng.random() < 0.5]
    return space.event(members)
