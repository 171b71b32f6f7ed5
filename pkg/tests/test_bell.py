"""Bell witness: operator invariants, the -1/8 value, the classical bound."""

import random

import numpy as np
import pytest

from rccs import (
    PreconditionError,
    basis_product_state,
    bell_expectations,
    bell_value,
    build_witness,
    classical_bound_check,
    commutator_norm,
    is_partial_isometry,
    is_projection,
    no_common_ccs_demo,
)
from rccs.bell import IDENTITY_TOLERANCE, TOLERANCE, _identity_sides


@pytest.fixture(scope="module")
def witness():
    return build_witness()


class TestWitnessInvariants:
    def test_isometries_square_to_zero(self, witness):
        assert np.max(np.abs(witness.v1 @ witness.v1)) < TOLERANCE
        assert np.max(np.abs(witness.v2 @ witness.v2)) < TOLERANCE

    def test_isometries_are_partial_isometries(self, witness):
        assert is_partial_isometry(witness.v1)
        assert is_partial_isometry(witness.v2)

    def test_first_observable_is_rank_two_diagonal_projection(self, witness):
        a1 = witness.a1
        expected = np.diag([0, 0, 1, 1]).astype(complex)  # span{e1} (x) C^2
        assert np.max(np.abs(a1 - expected)) < TOLERANCE
        assert abs(np.trace(a1).real - 2) < TOLERANCE

    def test_all_observables_are_projections(self, witness):
        for op in (witness.a1, witness.b1, witness.a2, witness.b2):
            assert is_projection(op)
            assert np.max(np.abs(op @ op - op)) < TOLERANCE
            assert np.max(np.abs(op - op.conj().T)) < TOLERANCE

    def test_cross_site_commutators_vanish(self, witness):
        for site1 in (witness.a1, witness.b1):
            for site2 in (witness.a2, witness.b2):
                assert commutator_norm(site1, site2) < TOLERANCE

    def test_state_is_unit(self, witness):
        assert abs(np.linalg.norm(witness.phi) - 1) < TOLERANCE

    def test_expectation_two_ways_agree(self, witness):
        # operator product versus explicit basis expansion
        op = witness.a1 @ witness.a2
        direct = np.vdot(witness.phi, op @ witness.phi).real
        expanded = 0.0
        for k in range(4):
            for l in range(4):
                expanded += (np.conj(witness.phi[k]) * op[k, l] * witness.phi[l]).real
        assert abs(direct - expanded) < TOLERANCE


class TestBellValue:
    def test_default_witness_hits_minus_one_eighth(self, witness):
        assert abs(bell_value(witness.phi, witness) + 0.125) < TOLERANCE

    def test_expectations_of_default_witness(self, witness):
        e = bell_expectations(witness.phi, witness)
        assert abs(e["a1"] - 0.5) < TOLERANCE
        assert abs(e["a2"] - 0.5) < TOLERANCE
        assert abs(e["b1b2"] - 0.125) < TOLERANCE
        assert abs(e["a1a2"] - 0.5) < TOLERANCE
        assert abs(e["b1a2"] - 0.375) < TOLERANCE
        assert abs(e["a1b2"] - 0.375) < TOLERANCE

    def test_product_state_obeys_classical_bound(self, witness):
        psi = basis_product_state(1, 1)
        value = bell_value(psi, witness)
        assert abs(value - 0.0625) < TOLERANCE  # 1 + 1 + 9/16 - 1 - 3/4 - 3/4
        assert -TOLERANCE <= value <= 1 + TOLERANCE

    def test_mixed_surrogate_obeys_classical_bound(self, witness):
        values = [
            bell_value(basis_product_state(i, j), witness) for i in (0, 1) for j in (0, 1)
        ]
        average = sum(values) / 4
        assert -TOLERANCE <= average <= 1 + TOLERANCE
        for v in values:
            assert -TOLERANCE <= v <= 1 + TOLERANCE

    def test_non_unit_state_rejected(self, witness):
        with pytest.raises(PreconditionError):
            bell_value(2 * witness.phi, witness)

    def test_custom_seed_state(self):
        seed = (basis_product_state(1, 1) + basis_product_state(0, 1)) / np.sqrt(2)
        witness = build_witness(seed)
        e = bell_expectations(witness.phi, witness)
        for value in e.values():
            assert -TOLERANCE <= value <= 1 + TOLERANCE

    def test_seed_without_joint_component_rejected(self):
        with pytest.raises(PreconditionError):
            build_witness(basis_product_state(0, 0))


class TestClassicalBound:
    def test_corners(self):
        assert classical_bound_check(0, 0, 0, 0)
        assert classical_bound_check(1, 1, 1, 1)
        lhs, _ = _identity_sides(1, 1, 1, 1)
        assert lhs == 0

    def test_out_of_range_rejected(self):
        with pytest.raises(PreconditionError):
            classical_bound_check(1.5, 0, 0, 0)
        with pytest.raises(PreconditionError):
            classical_bound_check(0, 0, -0.1, 0)

    def test_random_quadruples(self):
        rng = random.Random(2024)
        for _ in range(10_000):
            quad = (rng.random(), rng.random(), rng.random(), rng.random())
            assert classical_bound_check(*quad)
            lhs, rhs = _identity_sides(*quad)
            assert abs(lhs - rhs) < IDENTITY_TOLERANCE


class TestImpossibilityReport:
    def test_report_contents(self):
        report = no_common_ccs_demo(samples=2_000)
        assert abs(report["bell_value"] + 0.125) < TOLERANCE
        assert report["bell_value_exact_form"] == "-1/8"
        assert report["violates_classical_lower_bound"]
        assert report["classical_bound_holds"]
        assert report["classical_bound_max_identity_residual"] < IDENTITY_TOLERANCE
        assert report["verdict"] == "common CCS impossible"
        assert "[A1,Cj] = [A2,Cj] = [B1,Cj] = [B2,Cj] = 0" in report["commutation_requirement"]
        assert "construct_size3" in report["per_pair_note"]
        assert "quantum" in report["scope_note"]
