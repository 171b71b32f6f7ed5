"""Finite weighted probability spaces and exhaustive partition search.

A :class:`FiniteSpace` is a list of strictly positive rational weights
summing to one; events are subsets of the sample points.  This is the
brute-force instrument of the package: partitions into a given number of
cells can be enumerated exhaustively, which turns nonexistence claims
about small common cause systems into finite checks.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import InputError, PreconditionError
from .events import as_fraction
from .lattice import Partition, correlation

DEFAULT_MAX_POINTS = 14  # Bell-number growth makes larger spaces explode


@dataclass(frozen=True)
class FiniteSpace:
    """A finite sample space with one strictly positive weight per point.

    Weights must sum to exactly one, so the induced measure is faithful:
    only the empty event has measure zero.
    """

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cleaned = tuple(as_fraction(w) for w in self.weights)
        object.__setattr__(self, "weights", cleaned)
        if not cleaned:
            raise InputError("a finite space needs at least one point")
        for k, w in enumerate(cleaned):
            if w <= 0:
                raise InputError(f"weight {k} must be strictly positive, got {w}")
        total = sum(cleaned)
        if total != 1:
            raise InputError(f"weights must sum to exactly 1, got {total}")

    def __len__(self) -> int:
        return len(self.weights)

    def event(self, members: Iterable[int]) -> "FiniteEvent":
        return FiniteEvent(self, tuple(members))

    @property
    def empty(self) -> "FiniteEvent":
        return FiniteEvent(self, ())

    @property
    def full(self) -> "FiniteEvent":
        return FiniteEvent(self, tuple(range(len(self.weights))))


@dataclass(frozen=True)
class FiniteEvent:
    """A subset of the sample points of a :class:`FiniteSpace`."""

    space: FiniteSpace
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        seen = set()
        for idx in self.members:
            if isinstance(idx, bool) or not isinstance(idx, int):
                raise InputError(f"sample point indices must be integers, got {idx!r}")
            if not 0 <= idx < len(self.space):
                raise InputError(
                    f"sample point {idx} out of range for a {len(self.space)}-point space"
                )
            seen.add(idx)
        object.__setattr__(self, "members", tuple(sorted(seen)))

    def _require_same_space(self, other: "FiniteEvent") -> None:
        if self.space != other.space:
            raise InputError("events belong to different spaces")

    @property
    def is_zero(self) -> bool:
        return not self.members

    @property
    def is_one(self) -> bool:
        return len(self.members) == len(self.space)

    def measure(self) -> Fraction:
        return sum((self.space.weights[i] for i in self.members), Fraction(0))

    def meet(self, other: "FiniteEvent") -> "FiniteEvent":
        self._require_same_space(other)
        return FiniteEvent(self.space, tuple(set(self.members) & set(other.members)))

    def join(self, other: "FiniteEvent") -> "FiniteEvent":
        self._require_same_space(other)
        return FiniteEvent(self.space, tuple(set(self.members) | set(other.members)))

    def complement(self) -> "FiniteEvent":
        universe = range(len(self.space))
        return FiniteEvent(self.space, tuple(set(universe) - set(self.members)))

    def leq(self, other: "FiniteEvent") -> bool:
        self._require_same_space(other)
        return set(self.members) <= set(other.members)

    def __and__(self, other: "FiniteEvent") -> "FiniteEvent":
        return self.meet(other)

    def __or__(self, other: "FiniteEvent") -> "FiniteEvent":
        return self.join(other)

    def __invert__(self) -> "FiniteEvent":
        return self.complement()

    def __str__(self) -> str:
        return "{" + ", ".join(str(i) for i in self.members) + "}"


def finite_measure(space: FiniteSpace, event: FiniteEvent) -> Fraction:
    """Exact measure of an event: the sum of its member weights."""
    if event.space != space:
        raise InputError("event does not belong to the given space")
    return event.measure()


def enumerate_partitions(space: FiniteSpace, n: int) -> Iterator[Partition]:
    """Yield every partition of the sample points into exactly n nonempty cells.

    Cells are unlabeled; each partition appears exactly once, with its
    cells ordered by smallest member.  The stream is deterministic
    (lexicographic in the cell assignment of the points) and its length
    is the Stirling number of the second kind S(m, n).
    """
    m = len(space)
    if not 1 <= n <= m:
        raise InputError(f"cell count {n} out of range 1..{m}")
    labels = [0] * m

    def emit() -> Partition:
        groups: list[list[int]] = [[] for _ in range(n)]
        for point, lab in enumerate(labels):
            groups[lab].append(point)
        cells = tuple(space.event(group) for group in groups)
        # valid by construction: groups are disjoint, nonempty, and cover all points
        return Partition(cells, validate=False)

    def walk(i: int, used: int) -> Iterator[Partition]:
        if used + (m - i) < n:
            return
        if i == m:
            if used == n:
                yield emit()
            return
        top = used + 1 if used < n else n
        for lab in range(top):
            labels[i] = lab
            yield from walk(i + 1, used + 1 if lab == used else used)

    yield from walk(0, 0)


def _satisfies_system_conditions(a: FiniteEvent, b: FiniteEvent, partition: Partition) -> bool:
    # Deliberately independent of the engine verifier so the two can
    # cross-check each other.
    a_and_b = a.meet(b)
    conditionals = []
    for cell in partition.cells:
        weight = cell.measure()
        cond_a = a.meet(cell).measure() / weight
        cond_b = b.meet(cell).measure() / weight
        cond_ab = a_and_b.meet(cell).measure() / weight
        if cond_ab != cond_a * cond_b:
            return False
        conditionals.append((cond_a, cond_b))
    for i in range(len(conditionals)):
        for j in range(i + 1, len(conditionals)):
            da = conditionals[i][0] - conditionals[j][0]
            db = conditionals[i][1] - conditionals[j][1]
            if da * db <= 0:
                return False
    return True


def search_rccs(
    space: FiniteSpace,
    a: FiniteEvent,
    b: FiniteEvent,
    n: int,
    *,
    max_points: int = DEFAULT_MAX_POINTS,
) -> list[Partition]:
    """Exhaustively find every size-n common cause system for a correlated pair.

    Checks, exactly, the per-cell screening-off condition and the strict
    same-sign cross-difference condition on every partition of the space
    into n cells.  An empty result is therefore a proof that no such
    system exists in the space.

    The pair must be correlated (positive joint excess); spaces larger
    than ``max_points`` are refused because the candidate count grows
    like a Stirling number.
    """
    if a.space != space or b.space != space:
        raise InputError("events do not belong to the given space")
    m = len(space)
    if m > max_points:
        raise InputError(
            f"space has {m} points, above the cutoff {max_points}; "
            "raise max_points to force the search"
        )
    if m > DEFAULT_MAX_POINTS:
        warnings.warn(
            f"exhaustive search over {m} points enumerates a Stirling-number of "
            "candidates and may take a very long time",
            stacklevel=2,
        )
    excess = correlation(a, b)
    if excess <= 0:
        raise PreconditionError(
            f"events are not correlated (joint excess {excess}); "
            "a common cause system explains only positive correlations"
        )
    return [p for p in enumerate_partitions(space, n) if _satisfies_system_conditions(a, b, p)]
