"""Finite spaces: measures, exhaustive partition enumeration, search."""

import random
from fractions import Fraction

import pytest

from rccs import (
    FiniteSpace,
    InputError,
    PreconditionError,
    enumerate_partitions,
    finite_measure,
    search_rccs,
    verify_rccs,
)

from .helpers import random_space, stirling2


def uniform_space(m: int) -> FiniteSpace:
    return FiniteSpace(tuple(Fraction(1, m) for _ in range(m)))


# 6-point image of a size-3 interval construction: atom 0 carries the cell
# inside a&b, atom 1 the cell inside neither, atoms 2..5 the mixed cell
# split along the four quadrant meets of (a, b).
EMBEDDED_WEIGHTS = ("3/16", "6/17", "17/80", "1/10", "1/10", "4/85")
EMBEDDED_A = (0, 2, 3)
EMBEDDED_B = (0, 2, 4)


class TestSpaceAndEvents:
    def test_measure_examples(self):
        space = FiniteSpace(("1/2", "1/4", "1/4"))
        assert finite_measure(space, space.event([0, 1])) == Fraction(3, 4)
        assert finite_measure(space, space.full) == 1
        assert finite_measure(space, space.empty) == 0

    def test_weights_must_sum_to_one(self):
        with pytest.raises(InputError):
            FiniteSpace(("1/2", "1/4"))

    def test_weights_must_be_positive(self):
        with pytest.raises(InputError):
            FiniteSpace(("1/2", "1/2", "0"))

    def test_empty_space_rejected(self):
        with pytest.raises(InputError):
            FiniteSpace(())

    def test_event_index_out_of_range(self):
        space = uniform_space(3)
        with pytest.raises(InputError):
            space.event([0, 5])

    def test_cross_space_operations_rejected(self):
        s1, s2 = uniform_space(3), uniform_space(4)
        with pytest.raises(InputError):
            s1.event([0]).meet(s2.event([0]))

    def test_boolean_ops(self):
        space = FiniteSpace(("1/2", "1/4", "1/4"))
        a, b = space.event([0, 1]), space.event([1, 2])
        assert a.meet(b) == space.event([1])
        assert a.join(b) == space.full
        assert a.complement() == space.event([2])
        assert space.event([1]).leq(a)


class TestEnumeration:
    def test_singleton_partition(self):
        parts = list(enumerate_partitions(uniform_space(3), 3))
        assert len(parts) == 1
        assert [cell.members for cell in parts[0].cells] == [(0,), (1,), (2,)]

    def test_stirling_counts_small(self):
        assert len(list(enumerate_partitions(uniform_space(4), 2))) == 7
        assert len(list(enumerate_partitions(uniform_space(4), 3))) == 6

    def test_stirling_counts_sweep(self):
        for m in range(1, 11):
            space = uniform_space(m)
            for n in range(1, m + 1):
                assert len(list(enumerate_partitions(space, n))) == stirling2(m, n), (m, n)

    def test_no_duplicates_and_canonical_cell_order(self):
        space = uniform_space(8)
        for n in (2, 3, 4):
            seen = set()
            for p in enumerate_partitions(space, n):
                key = tuple(cell.members for cell in p.cells)
                assert key not in seen
                seen.add(key)
                smallest = [cell.members[0] for cell in p.cells]
                assert smallest == sorted(smallest)
            assert len(seen) == stirling2(8, n)

    def test_yielded_partitions_satisfy_invariants(self):
        space = uniform_space(7)
        for n in range(1, 8):
            for p in enumerate_partitions(space, n):
                assert all(not cell.is_zero for cell in p.cells)
                for i in range(p.size):
                    for j in range(i + 1, p.size):
                        assert p.cells[i].meet(p.cells[j]).is_zero
                whole = p.cells[0]
                for cell in p.cells[1:]:
                    whole = whole.join(cell)
                assert whole.is_one

    def test_cell_count_out_of_range(self):
        space = uniform_space(4)
        with pytest.raises(InputError):
            list(enumerate_partitions(space, 0))
        with pytest.raises(InputError):
            list(enumerate_partitions(space, 5))


class TestSearch:
    def test_uncorrelated_pair_rejected(self):
        space = uniform_space(4)
        a, b = space.event([0, 1]), space.event([0, 2])
        with pytest.raises(PreconditionError):
            search_rccs(space, a, b, 2)

    def test_contained_pair_has_no_size3_system(self):
        space = uniform_space(6)
        a, b = space.event([0]), space.event([0, 1])
        assert search_rccs(space, a, b, 3) == []
        assert search_rccs(space, a, b, 4) == []

    def test_reverse_containment_has_no_size3_system(self):
        space = uniform_space(6)
        a, b = space.event([0, 1]), space.event([0])
        assert search_rccs(space, a, b, 3) == []

    def test_embedded_system_is_found_and_cross_verified(self):
        space = FiniteSpace(EMBEDDED_WEIGHTS)
        a, b = space.event(EMBEDDED_A), space.event(EMBEDDED_B)
        hits = search_rccs(space, a, b, 3)
        assert hits, "the embedded size-3 system must be found"
        keys = [tuple(cell.members for cell in p.cells) for p in hits]
        assert ((0,), (1,), (2, 3, 4, 5)) in keys
        for p in hits:
            assert verify_rccs(a, b, p).verdict

    def test_search_results_invariant_under_relabeling(self):
        rng = random.Random(55)
        space = FiniteSpace(("1/16", "3/16", "5/16", "2/16", "4/16", "1/16"))
        a, b = space.event([0, 1, 2]), space.event([1, 2, 3])
        perm = list(range(6))
        rng.shuffle(perm)
        perm_space = FiniteSpace(tuple(space.weights[perm.index(i)] for i in range(6)))
        # perm maps old index k to new index perm[k]
        pa = perm_space.event([perm[i] for i in a.members])
        pb = perm_space.event([perm[i] for i in b.members])
        base = search_rccs(space, a, b, 3)
        relabeled = search_rccs(perm_space, pa, pb, 3)

        def canon(parts, mapping=None):
            out = set()
            for p in parts:
                cells = []
                for cell in p.cells:
                    members = [mapping[i] for i in cell.members] if mapping else list(cell.members)
                    cells.append(tuple(sorted(members)))
                out.add(tuple(sorted(cells)))
            return out

        assert canon(base, perm) == canon(relabeled)

    def test_cutoff_refuses_large_space(self):
        space = uniform_space(15)
        a, b = space.event([0]), space.event([0, 1])
        with pytest.raises(InputError):
            search_rccs(space, a, b, 3)

    def test_cutoff_override_warns(self):
        space = uniform_space(15)
        a, b = space.event([0]), space.event([0, 1])
        with pytest.warns(UserWarning):
            search_rccs(space, a, b, 15, max_points=15)
