"""Verification and construction of common cause systems.

A common cause system for a correlated pair (a, b) is a partition whose
cells all screen off the correlation (conditional on any cell, a and b
are independent) while the conditional probabilities of a and of b move
in the same direction between any two cells.  Size 2 recovers the
classic common cause.

The centerpiece is :func:`construct_size3`: for any correlated, logically
independent pair of interval events it builds, deterministically and in
exact arithmetic, a three-cell system

* one cell inside the joint event, where both conditionals are 1,
* one cell inside the complement of the union, where both are 0,
* the remaining cell, where both conditionals are strictly between.

Every verification here is exact; reports carry rationals, never floats,
so serialized results are bit-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InternalInvariantError, PreconditionError
from .events import IntervalEvent, as_fraction
from .lattice import LatticeEvent, Partition, compatible, correlation, logically_independent


def _require_correlated(a: LatticeEvent, b: LatticeEvent) -> Fraction:
    excess = correlation(a, b)
    if excess <= 0:
        raise PreconditionError(
            f"events are not correlated (joint excess {excess}); there is no correlation to explain"
        )
    return excess


def _require_compat_pair(a: LatticeEvent, b: LatticeEvent) -> None:
    if not compatible(a, b):
        raise PreconditionError("events are not compatible")


def _conditionals(
    a: LatticeEvent, b: LatticeEvent, cells: tuple[LatticeEvent, ...]
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...], tuple[Fraction, ...], tuple[Fraction, ...]]:
    a_and_b = a.meet(b)
    measures, cond_a, cond_b, cond_ab = [], [], [], []
    for k, cell in enumerate(cells):
        weight = cell.measure()
        if weight == 0:
            raise PreconditionError(f"cell {k} has measure zero; conditionals are undefined")
        if not (compatible(cell, a) and compatible(cell, b)):
            raise PreconditionError(f"cell {k} is not compatible with both events")
        measures.append(weight)
        cond_a.append(a.meet(cell).measure() / weight)
        cond_b.append(b.meet(cell).measure() / weight)
        cond_ab.append(a_and_b.meet(cell).measure() / weight)
    return tuple(measures), tuple(cond_a), tuple(cond_b), tuple(cond_ab)


def _decomposition_sides(
    a: LatticeEvent,
    b: LatticeEvent,
    measures: tuple[Fraction, ...],
    cond_a: tuple[Fraction, ...],
    cond_b: tuple[Fraction, ...],
) -> tuple[Fraction, Fraction]:
    lhs = a.meet(b).measure() - a.measure() * b.measure()
    rhs = Fraction(0)
    n = len(measures)
    for i in range(n):
        for j in range(n):
            if i != j:
                rhs += measures[i] * measures[j] * (cond_a[i] - cond_a[j]) * (cond_b[i] - cond_b[j])
    return lhs, rhs / 2


@dataclass(frozen=True)
class CommonCauseSystem:
    """A verified common cause system: a partition plus its conditionals.

    The constructor enforces the defining conditions exactly, so an
    instance of this type is always a genuine system: ``cond_ab`` equals
    the cellwise product of ``cond_a`` and ``cond_b``, and the
    cross-differences have a strictly positive product on every pair of
    cells.
    """

    cells: Partition
    cond_a: tuple[Fraction, ...]
    cond_b: tuple[Fraction, ...]
    cond_ab: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        n = self.cells.size
        if not (len(self.cond_a) == len(self.cond_b) == len(self.cond_ab) == n):
            raise InputError("conditional lists must align with the partition cells")
        if n < 2:
            raise InputError("a common cause system needs at least two cells")
        for name, row in (("cond_a", self.cond_a), ("cond_b", self.cond_b), ("cond_ab", self.cond_ab)):
            for k, value in enumerate(row):
                if not 0 <= value <= 1:
                    raise InputError(f"{name}[{k}] = {value} is outside [0, 1]")
        for k in range(n):
            if self.cond_ab[k] != self.cond_a[k] * self.cond_b[k]:
                raise InputError(f"screening-off fails on cell {k}")
        for i in range(n):
            for j in range(i + 1, n):
                if (self.cond_a[i] - self.cond_a[j]) * (self.cond_b[i] - self.cond_b[j]) <= 0:
                    raise InputError(f"cross-difference condition fails for cells ({i}, {j})")

    @property
    def size(self) -> int:
        return self.cells.size

    @property
    def cell_measures(self) -> tuple[Fraction, ...]:
        return tuple(cell.measure() for cell in self.cells.cells)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking the defining conditions on a candidate.

    ``screening_off_ok`` has one flag per cell, ``cross_ok`` one entry
    per unordered cell pair as ``(i, j, ok)``.  Both sides of the
    correlation decomposition identity are always included; they agree
    whenever screening-off holds on every cell.  ``verdict`` is True only
    if every flag is, and ``failure`` names the first condition that
    failed.
    """

    screening_off_ok: tuple[bool, ...]
    cross_ok: tuple[tuple[int, int, bool], ...]
    cell_measures: tuple[Fraction, ...]
    cond_a: tuple[Fraction, ...]
    cond_b: tuple[Fraction, ...]
    cond_ab: tuple[Fraction, ...]
    decomposition_lhs: Fraction
    decomposition_rhs: Fraction
    verdict: bool
    failure: str | None = None


def _first_failure(
    size_note: str | None,
    screening: tuple[bool, ...],
    cross: tuple[tuple[int, int, bool], ...],
    cross_labels: dict[tuple[int, int], str] | None = None,
) -> str | None:
    if size_note is not None:
        return size_note
    for k, ok in enumerate(screening):
        if not ok:
            return f"screening-off fails on cell {k}"
    for i, j, ok in cross:
        if not ok:
            if cross_labels and (i, j) in cross_labels:
                return cross_labels[(i, j)]
            return f"cross-difference condition fails for cells ({i}, {j})"
    return None


def verify_rccs(a: LatticeEvent, b: LatticeEvent, partition: Partition) -> VerificationReport:
    """Check, exactly, whether a partition is a common cause system for (a, b).

    The pair must be correlated; every cell must be compatible with both
    events and have positive measure.  Partitions of size 1 are
    structurally valid but are rejected with a "size < 2" diagnostic,
    since the cross-difference condition quantifies over distinct pairs.
    """
    _require_compat_pair(a, b)
    _require_correlated(a, b)
    measures, cond_a, cond_b, cond_ab = _conditionals(a, b, partition.cells)
    screening = tuple(cond_ab[k] == cond_a[k] * cond_b[k] for k in range(partition.size))
    cross = tuple(
        (i, j, (cond_a[i] - cond_a[j]) * (cond_b[i] - cond_b[j]) > 0)
        for i in range(partition.size)
        for j in range(i + 1, partition.size)
    )
    lhs, rhs = _decomposition_sides(a, b, measures, cond_a, cond_b)
    size_note = "size < 2: a single cell admits no cross-difference condition" if partition.size < 2 else None
    failure = _first_failure(size_note, screening, cross)
    verdict = failure is None
    return VerificationReport(
        screening_off_ok=screening,
        cross_ok=cross,
        cell_measures=measures,
        cond_a=cond_a,
        cond_b=cond_b,
        cond_ab=cond_ab,
        decomposition_lhs=lhs,
        decomposition_rhs=rhs,
        verdict=verdict,
        failure=failure,
    )


def verify_common_cause(a: LatticeEvent, b: LatticeEvent, cause: LatticeEvent) -> VerificationReport:
    """Check the classic two-cell common cause conditions for (a, b).

    Conditional on the cause and on its complement, a and b must be
    independent, and the cause must raise the probability of each event:
    P(a | cause) > P(a | not-cause) and likewise for b.  These are the
    size-2 system conditions with a fixed orientation.
    """
    _require_compat_pair(a, b)
    _require_compat_pair(a, cause)
    _require_compat_pair(b, cause)
    cause_measure = cause.measure()
    if not 0 < cause_measure < 1:
        raise PreconditionError(
            f"a common cause must have measure strictly between 0 and 1, got {cause_measure}"
        )
    _require_correlated(a, b)
    cells = (cause, cause.complement())
    measures, cond_a, cond_b, cond_ab = _conditionals(a, b, cells)
    screening = tuple(cond_ab[k] == cond_a[k] * cond_b[k] for k in range(2))
    raises_a = cond_a[0] > cond_a[1]
    raises_b = cond_b[0] > cond_b[1]
    cross = ((0, 1, raises_a and raises_b),)
    labels = {}
    if not raises_a:
        labels[(0, 1)] = "the cause does not raise the conditional probability of the first event"
    elif not raises_b:
        labels[(0, 1)] = "the cause does not raise the conditional probability of the second event"
    lhs, rhs = _decomposition_sides(a, b, measures, cond_a, cond_b)
    failure = _first_failure(None, screening, cross, labels)
    return VerificationReport(
        screening_off_ok=screening,
        cross_ok=cross,
        cell_measures=measures,
        cond_a=cond_a,
        cond_b=cond_b,
        cond_ab=cond_ab,
        decomposition_lhs=lhs,
        decomposition_rhs=rhs,
        verdict=failure is None,
        failure=failure,
    )


def correlation_decomposition(
    a: LatticeEvent, b: LatticeEvent, partition: Partition
) -> tuple[Fraction, Fraction]:
    """Both sides of the identity decomposing the joint excess over a partition.

    For a partition that screens off on every cell,

        measure(a&b) - measure(a)measure(b)
            = 1/2 * sum over i != j of
              m_i m_j (P(a|c_i) - P(a|c_j)) (P(b|c_i) - P(b|c_j))

    The two sides are computed independently and returned as a pair; they
    must be equal exactly.  Screening-off is a precondition and its
    failure raises, naming the offending cell.
    """
    _require_compat_pair(a, b)
    measures, cond_a, cond_b, cond_ab = _conditionals(a, b, partition.cells)
    for k in range(partition.size):
        if cond_ab[k] != cond_a[k] * cond_b[k]:
            raise PreconditionError(
                f"screening-off fails on cell {k}; the decomposition identity needs it on every cell"
            )
    return _decomposition_sides(a, b, measures, cond_a, cond_b)


@dataclass(frozen=True)
class ConstructionSteps:
    """Trace of the size-3 construction, for explanation and debugging.

    ``carve_bound`` is the admissible upper bound for the first cell's
    measure, joint excess divided by the measure of the complement of the
    union.  The first cell takes ``lam`` times that bound.  The second
    cell's measure is forced by requiring screening-off on the third
    cell; ``null_cell_is_whole_remainder`` records the boundary case in
    which it exhausts the complement of the union.
    """

    joint_excess: Fraction
    carve_bound: Fraction
    lam: Fraction
    full_cell_measure: Fraction
    null_cell_measure: Fraction
    null_cell_is_whole_remainder: bool
    system: CommonCauseSystem
    report: VerificationReport


def construction_steps(
    a: IntervalEvent, b: IntervalEvent, lam: Fraction | int | str = Fraction(1, 2)
) -> ConstructionSteps:
    """Run the deterministic size-3 construction and keep its intermediate values.

    Preconditions: the events must be correlated and logically
    independent.  A correlated pair that is not logically independent
    admits no common cause system of size 3 or more at all, so that case
    is refused outright.

    The recipe, all in exact arithmetic:

    1. Carve a first cell of measure lam * bound out of a&b, where
       bound = excess / measure(~(a|b)) and 0 < lam < 1.  Conditional on
       it, both events are certain.
    2. Forcing screening-off on the remainder fixes the second cell's
       measure; carve it out of ~a & ~b.  Conditional on it, both events
       are impossible.
    3. The third cell is the complement of the union of the first two;
       its conditionals land strictly between 0 and 1.

    The carve operation takes intervals left to right, so the whole
    construction is reproducible.  The result is re-verified exactly
    before being returned.
    """
    lam = as_fraction(lam)
    if not 0 < lam < 1:
        raise InputError(f"lam must lie strictly between 0 and 1, got {lam}")
    excess = _require_correlated(a, b)
    if not logically_independent(a, b):
        raise PreconditionError(
            "events are not logically independent; a correlation between such events "
            "admits no common cause system of size 3 or more (the no-go result for "
            "logically dependent events), so the construction cannot succeed"
        )
    joint = a.meet(b)
    union_gap = Fraction(1) - a.join(b).measure()
    if union_gap <= 0:
        raise InternalInvariantError(
            "a correlated pair must leave the union short of the whole space"
        )
    bound = excess / union_gap
    full_cell = joint.carve(lam * bound)

    rest_of_space = full_cell.complement()
    rest_measure = rest_of_space.measure()
    joint_rest = joint.meet(rest_of_space).measure()
    if joint_rest <= 0:
        raise InternalInvariantError("the first cell must not exhaust the joint event")
    null_target = rest_measure - (
        a.meet(rest_of_space).measure() * b.meet(rest_of_space).measure() / joint_rest
    )
    neither = a.join(b).complement()
    neither_measure = neither.measure()
    if not 0 < null_target <= neither_measure:
        raise InternalInvariantError(
            f"forced second-cell measure {null_target} escaped (0, {neither_measure}]"
        )
    if null_target < neither_measure:
        null_cell = neither.carve(null_target)
        whole_remainder = False
    else:
        # boundary case: the forced measure exhausts ~a & ~b, so take all of it
        null_cell = neither
        whole_remainder = True

    mixed_cell = full_cell.join(null_cell).complement()
    cells = Partition((full_cell, null_cell, mixed_cell))
    _, cond_a, cond_b, cond_ab = _conditionals(a, b, cells.cells)
    system = CommonCauseSystem(cells=cells, cond_a=cond_a, cond_b=cond_b, cond_ab=cond_ab)
    report = verify_rccs(a, b, cells)
    if not report.verdict:
        raise InternalInvariantError(f"constructed system failed verification: {report.failure}")
    return ConstructionSteps(
        joint_excess=excess,
        carve_bound=bound,
        lam=lam,
        full_cell_measure=full_cell.measure(),
        null_cell_measure=null_cell.measure(),
        null_cell_is_whole_remainder=whole_remainder,
        system=system,
        report=report,
    )


def construct_size3(
    a: IntervalEvent, b: IntervalEvent, lam: Fraction | int | str = Fraction(1, 2)
) -> CommonCauseSystem:
    """Build a verified size-3 common cause system for a correlated pair.

    See :func:`construction_steps` for the recipe and the preconditions;
    this wrapper returns only the finished system.
    """
    return construction_steps(a, b, lam).system
