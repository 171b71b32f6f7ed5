"""Shared event-lattice contract and structural predicates.

Both concrete models (interval events on [0, 1) and atom-set events on a
finite weighted space) are Boolean algebras presented through the same
small surface: ``meet``, ``join``, ``complement``, the induced order
``leq``, an exact ``measure``, and the ``is_zero`` / ``is_one`` flags.
Everything in this module is written against that surface only, so the
predicates work identically for either model and for any future one.

Only finite lattice operations appear in the contract.  Every algorithm
in the package manipulates finitely many events, so countable joins are
deliberately not part of the interface.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from fractions import Fraction
from functools import reduce
from typing import Protocol, TypeVar

from .errors import InputError, InternalInvariantError, PreconditionError


class LatticeEvent(Protocol):
    """Structural protocol for events of a Boolean probability model."""

    def meet(self, other): ...

    def join(self, other): ...

    def complement(self): ...

    def leq(self, other) -> bool: ...

    def measure(self) -> Fraction: ...

    @property
    def is_zero(self) -> bool: ...

    @property
    def is_one(self) -> bool: ...


E = TypeVar("E", bound=LatticeEvent)


def compatible(a: E, b: E) -> bool:
    """Check a = (a and b) or (a and not-b), the two-sided compatibility test.

    The test is symmetric in any orthomodular lattice, so both sides are
    evaluated and a disagreement is raised as an internal invariant
    failure rather than returned.  In the Boolean models shipped here the
    result is always True.
    """
    not_b = b.complement()
    not_a = a.complement()
    a_side = a.meet(b).join(a.meet(not_b)) == a
    b_side = b.meet(a).join(b.meet(not_a)) == b
    if a_side != b_side:
        raise InternalInvariantError(
            "compatibility test came out asymmetric; the event model is broken"
        )
    return a_side


def _require_compatible(*pairs: tuple[E, E]) -> None:
    for a, b in pairs:
        if not compatible(a, b):
            raise PreconditionError(f"events {a} and {b} are not compatible")


def logically_independent(a: E, b: E) -> bool:
    """True when all four meets a&b, a&~b, ~a&b, ~a&~b are nonzero.

    Logical independence formalizes the absence of any structural
    constraint between the events: no truth value of one forces a truth
    value of the other.
    """
    not_a = a.complement()
    not_b = b.complement()
    return not (
        a.meet(b).is_zero
        or a.meet(not_b).is_zero
        or not_a.meet(b).is_zero
        or not_a.meet(not_b).is_zero
    )


def _strictly_below(x: E, y: E) -> bool:
    return x.leq(y) and x != y


def logical_independence_equiv(a: E, b: E) -> bool:
    """Order-theoretic characterization of logical independence.

    Evaluates the four strict-order conditions

        a < a or b,   b < a or b,   a < a or not-b,   not-b < a or not-b

    which, for compatible events, hold exactly when ``logically_independent``
    does.  Exposed separately so the equivalence can be cross-validated.
    """
    if not compatible(a, b):
        raise PreconditionError("the order characterization needs compatible events")
    not_b = b.complement()
    a_or_b = a.join(b)
    a_or_not_b = a.join(not_b)
    return (
        _strictly_below(a, a_or_b)
        and _strictly_below(b, a_or_b)
        and _strictly_below(a, a_or_not_b)
        and _strictly_below(not_b, a_or_not_b)
    )


def correlation(a: E, b: E) -> Fraction:
    """Exact joint excess measure(a and b) - measure(a) * measure(b).

    A strictly positive value means the events are correlated.
    """
    _require_compatible((a, b))
    return a.meet(b).measure() - a.measure() * b.measure()


def check_product_inequality(a: E, b: E, c: E) -> bool:
    """Verify measure(a&c) * measure(b&c) >= measure(a&b&c) * measure((a|b)&c).

    This inequality is a theorem for mutually compatible triples, so a
    violation is raised loudly as an internal invariant failure.  The
    boolean return exists for property-test harnesses that assert it.
    """
    _require_compatible((a, b), (a, c), (b, c))
    lhs = a.meet(c).measure() * b.meet(c).measure()
    rhs = a.meet(b).meet(c).measure() * a.join(b).meet(c).measure()
    if lhs < rhs:
        raise InternalInvariantError(
            f"measure product inequality violated: {lhs} < {rhs}; the model is broken"
        )
    return True


@dataclass(frozen=True)
class Partition:
    """An ordered tuple of pairwise disjoint nonzero events covering the space.

    ``validate=False`` skips the structural checks; it is reserved for
    callers that produce partitions that are valid by construction, such
    as the exhaustive enumerator.
    """

    cells: tuple[LatticeEvent, ...]
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool) -> None:
        object.__setattr__(self, "cells", tuple(self.cells))
        if not validate:
            return
        if not self.cells:
            raise InputError("a partition needs at least one cell")
        for k, cell in enumerate(self.cells):
            if cell.is_zero:
                raise InputError(f"partition cell {k} is empty")
        for i in range(len(self.cells)):
            for j in range(i + 1, len(self.cells)):
                if not self.cells[i].meet(self.cells[j]).is_zero:
                    raise InputError(f"partition cells {i} and {j} overlap")
        whole = reduce(lambda x, y: x.join(y), self.cells)
        if not whole.is_one:
            raise InputError("partition cells do not cover the whole space")

    @property
    def size(self) -> int:
        return len(self.cells)
