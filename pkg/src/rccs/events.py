"""Exact event algebra on the unit interval.

Events are finite unions of half-open rational subintervals of ``[0, 1)``
kept in a unique canonical form: intervals are sorted, pairwise disjoint,
and separated by gaps of positive length.  Under Lebesgue measure this is
an atomless classical probability space with a faithful measure, and every
operation is exact: endpoints are :class:`fractions.Fraction` values and no
rounding happens anywhere.

Half-open intervals make the representation closed under complement and
union without any point-mass bookkeeping, and merging adjacent intervals
means two events are equal as point sets exactly when their
representations are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InputError, PreconditionError

RationalLike = Fraction | int | str


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, a Fraction, or a 'p/q' string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise InputError(
            f"float value {value!r} rejected: scalars must be exact; "
            "pass a Fraction or a 'p/q' string"
        )
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise InputError(f"zero denominator in rational {value!r}") from None
        except ValueError:
            raise InputError(f"malformed rational {value!r}") from None
    raise InputError(f"cannot interpret {type(value).__name__} as a rational scalar")


def _coerce_pairs(pairs: Iterable) -> tuple[tuple[Fraction, Fraction], ...]:
    out = []
    for item in pairs:
        try:
            lo, hi = item
        except (TypeError, ValueError):
            raise InputError("each interval must be a (lo, hi) pair") from None
        out.append((as_fraction(lo), as_fraction(hi)))
    return tuple(out)


@dataclass(frozen=True)
class IntervalEvent:
    """A canonical finite union of half-open intervals [lo, hi) inside [0, 1).

    The constructor is strict: it coerces endpoints to fractions but
    rejects any list that is not already canonical (unsorted, overlapping,
    touching, empty, or out-of-range intervals).  Use :meth:`normalized`
    to build an event from an arbitrary interval list instead.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        cleaned = _coerce_pairs(self.intervals)
        object.__setattr__(self, "intervals", cleaned)
        prev_hi: Fraction | None = None
        for k, (lo, hi) in enumerate(cleaned):
            if not 0 <= lo < hi <= 1:
                raise InputError(f"interval {k} must satisfy 0 <= lo < hi <= 1, got [{lo}, {hi})")
            if prev_hi is not None and lo <= prev_hi:
                raise InputError(
                    f"intervals {k - 1} and {k} overlap, touch, or are out of order; "
                    "canonical form needs strictly separated ascending intervals"
                )
            prev_hi = hi

    @classmethod
    def normalized(cls, pairs: Iterable) -> "IntervalEvent":
        """Build an event from any interval list, merging and sorting as needed.

        Degenerate pairs with lo == hi are dropped; overlapping and adjacent
        intervals are merged.  Pairs with lo > hi or endpoints outside [0, 1]
        are still rejected.
        """
        cleaned = _coerce_pairs(pairs)
        kept = []
        for k, (lo, hi) in enumerate(cleaned):
            if not 0 <= lo <= hi <= 1:
                raise InputError(f"interval {k} must satisfy 0 <= lo <= hi <= 1, got [{lo}, {hi})")
            if lo < hi:
                kept.append((lo, hi))
        kept.sort()
        merged: list[list[Fraction]] = []
        for lo, hi in kept:
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1][1] = hi
            else:
                merged.append([lo, hi])
        return cls(tuple((lo, hi) for lo, hi in merged))

    @property
    def is_zero(self) -> bool:
        return not self.intervals

    @property
    def is_one(self) -> bool:
        return self.intervals == ((Fraction(0), Fraction(1)),)

    def measure(self) -> Fraction:
        """Exact Lebesgue measure: the sum of the interval lengths."""
        return sum((hi - lo for lo, hi in self.intervals), Fraction(0))

    def meet(self, other: "IntervalEvent") -> "IntervalEvent":
        """Set intersection, returned in canonical form."""
        res = []
        a, b = self.intervals, other.intervals
        i = j = 0
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo < hi:
                res.append((lo, hi))
            if a[i][1] <= b[j][1]:
                i += 1
            else:
                j += 1
        return IntervalEvent(tuple(res))

    def join(self, other: "IntervalEvent") -> "IntervalEvent":
        """Set union, returned in canonical form (adjacent pieces merged)."""
        return IntervalEvent.normalized(self.intervals + other.intervals)

    def complement(self) -> "IntervalEvent":
        """Complement inside [0, 1)."""
        res = []
        cursor = Fraction(0)
        for lo, hi in self.intervals:
            if cursor < lo:
                res.append((cursor, lo))
            cursor = hi
        if cursor < 1:
            res.append((cursor, Fraction(1)))
        return IntervalEvent(tuple(res))

    def leq(self, other: "IntervalEvent") -> bool:
        """Containment as point sets: true iff meet(self, other) == self."""
        return self.meet(other) == self

    def carve(self, target: RationalLike) -> "IntervalEvent":
        """Return a strict subevent of exactly the requested measure.

        Requires 0 < target < measure(self).  The choice is deterministic,
        a left-to-right sweep: whole intervals are taken from the left
        while they fit, then the first interval that does not fit is
        truncated to the residual length.
        """
        want = as_fraction(target)
        total = self.measure()
        if not 0 < want < total:
            raise PreconditionError(
                f"carve target must lie strictly between 0 and the event measure: "
                f"got target {want} for measure {total}"
            )
        res = []
        remaining = want
        for lo, hi in self.intervals:
            length = hi - lo
            if remaining >= length:
                res.append((lo, hi))
                remaining -= length
            else:
                res.append((lo, lo + remaining))
                remaining = Fraction(0)
            if remaining == 0:
                break
        return IntervalEvent(tuple(res))

    def __and__(self, other: "IntervalEvent") -> "IntervalEvent":
        return self.meet(other)

    def __or__(self, other: "IntervalEvent") -> "IntervalEvent":
        return self.join(other)

    def __invert__(self) -> "IntervalEvent":
        return self.complement()

    def __str__(self) -> str:
        if self.is_zero:
            return "(empty)"
        return " | ".join(f"[{lo}, {hi})" for lo, hi in self.intervals)


EMPTY = IntervalEvent(())
FULL = IntervalEvent(((Fraction(0), Fraction(1)),))
