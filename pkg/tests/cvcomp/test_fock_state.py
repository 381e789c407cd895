#
# Copyright (c) 2026, cv-complementarity authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
import math
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from cvcomp.exceptions import InvalidDensityMatrix, InvalidDimension, InvalidParameter, InvalidSubsystem, \
    NotNormalized
from cvcomp.fock_state import BipartitePureState, DensityMatrix, HioeEberlyBasis, Subsystem, TruncatedTMSS, \
    apply_local_unitary, concurrence_2qubit, iconcurrence_sq, linear_entropy, make_truncated_tmss, \
    predictability_sq, predictability_sq_bloch, quadrature_vm_oracle, random_pure_state, reduce, single_party_sq, \
    tmss_fidelity_oracle, triality_check, truncated_norm_sq, visibility_sq, visibility_sq_bloch
from tests.cvcomp.random_utils import a_random_pure_state, a_random_pure_states, a_random_unitary, an_rng
from tests.cvcomp.utils.assertions import AssertionExtensions

BELL_STATE = BipartitePureState(np.array([[1, 0], [0, 1]]) / math.sqrt(2))
PLUS_ZERO_STATE = BipartitePureState(np.array([[1, 0], [1, 0]]) / math.sqrt(2))


class TestBipartitePureState(unittest.TestCase):

    def test_rejects_non_square_table(self):
        # expect
        with self.assertRaises(InvalidDimension):
            BipartitePureState(np.ones((2, 3)) / math.sqrt(6))

    def test_rejects_unnormalized_table(self):
        # expect
        with self.assertRaises(NotNormalized):
            BipartitePureState(np.ones((2, 2)))

    def test_normalizes_on_request(self):
        # when
        state = BipartitePureState(np.ones((2, 2)), normalize=True)

        # then
        self.assertAlmostEqual(1.0, float(np.sum(np.abs(state.amp) ** 2)), places=14)
        self.assertEqual(2, state.d)

    def test_zero_table_cannot_be_normalized(self):
        # expect
        with self.assertRaises(NotNormalized):
            BipartitePureState(np.zeros((2, 2)), normalize=True)

    def test_amplitudes_are_read_only(self):
        # given
        state = a_random_pure_state(3)

        # expect
        with self.assertRaises(ValueError):
            state.amp[0, 0] = 1.0

    def test_vector_is_product_basis_order(self):
        # when
        vector = PLUS_ZERO_STATE.vector()

        # then
        np.testing.assert_allclose(np.array([1, 0, 1, 0]) / math.sqrt(2), vector)


class TestTruncatedTMSS(unittest.TestCase, AssertionExtensions):

    def test_amplitudes_are_diagonal_geometric(self):
        # given
        r, t = 0.5, 3
        xi = math.tanh(r)

        # when
        state = make_truncated_tmss(r, t)

        # then
        self.assertEqual(t + 1, state.d)
        norm = math.sqrt((1 - xi ** 2) / (1 - xi ** (2 * t + 2)))
        expected = np.diag([norm * xi ** n for n in range(t + 1)])
        self.assert_matrix_close(expected, state.amp, 1e-15)

    def test_zero_cutoff_is_one_dimensional_vacuum(self):
        # when
        state = make_truncated_tmss(1.0, 0)

        # then
        self.assertEqual(1, state.d)
        self.assertAlmostEqual(1.0, abs(state.amp[0, 0]), places=15)

    def test_zero_squeezing_is_vacuum_at_any_cutoff(self):
        # when
        state = make_truncated_tmss(0.0, 5)

        # then
        self.assertEqual(1.0, abs(state.amp[0, 0]))
        self.assertEqual(1.0, float(np.sum(np.abs(state.amp) ** 2)))

    def test_rejects_negative_squeezing(self):
        # expect
        with self.assertRaises(InvalidParameter):
            make_truncated_tmss(-0.1, 3)

    def test_rejects_negative_or_fractional_cutoff(self):
        # expect
        with self.assertRaises(InvalidParameter):
            TruncatedTMSS(0.5, -1)
        with self.assertRaises(InvalidParameter):
            TruncatedTMSS(0.5, 2.5)

    @given(r=st.floats(min_value=0.0, max_value=5.0), t=st.integers(min_value=0, max_value=60))
    @settings(max_examples=50, deadline=None)
    def test_populations_sum_to_one(self, r, t):
        # expect
        self.assertAlmostEqual(1.0, float(np.sum(TruncatedTMSS(r, t).populations())), places=12)

    def test_normalization_series_branch_matches_quotient(self):
        # given
        xi, t = 0.995, 10

        # expect
        self.assert_close((1 - xi ** 2) / (1 - xi ** (2 * t + 2)), truncated_norm_sq(xi, t), 1e-12)

    def test_normalization_at_zero_xi(self):
        # expect
        self.assertEqual(1.0, truncated_norm_sq(0.0, 7))


class TestSubsystem(unittest.TestCase):

    def test_parses_labels(self):
        # expect
        self.assertIs(Subsystem.A, Subsystem.of('a'))
        self.assertIs(Subsystem.B, Subsystem.of('B'))
        self.assertIs(Subsystem.B, Subsystem.of(Subsystem.B))

    def test_rejects_unknown_label(self):
        # expect
        with self.assertRaises(InvalidSubsystem):
            Subsystem.of('c')


class TestDensityMatrix(unittest.TestCase):

    def test_rejects_non_hermitian(self):
        # expect
        with self.assertRaises(InvalidDensityMatrix):
            DensityMatrix([[0.5, 0.1], [0.2, 0.5]])

    def test_rejects_wrong_trace(self):
        # expect
        with self.assertRaises(InvalidDensityMatrix):
            DensityMatrix(np.eye(2))

    def test_rejects_negative_eigenvalue(self):
        # expect
        with self.assertRaises(InvalidDensityMatrix):
            DensityMatrix([[1.5, 0], [0, -0.5]])

    def test_purity_of_maximally_mixed_state(self):
        # expect
        self.assertAlmostEqual(1.0 / 3, DensityMatrix(np.eye(3) / 3).purity(), places=15)


class TestReduce(unittest.TestCase, AssertionExtensions):

    def test_reduced_tmss_is_diagonal_with_schmidt_weights(self):
        # given
        tmss = TruncatedTMSS(0.7, 4)

        # when
        rho_a = reduce(tmss.to_state(), Subsystem.A)
        rho_b = reduce(tmss.to_state(), 'b')

        # then
        self.assert_matrix_close(np.diag(tmss.populations()), rho_a.rho, 1e-15)
        self.assert_matrix_close(rho_a.rho, rho_b.rho, 1e-15)

    def test_both_reductions_share_purity(self):
        # given
        state = a_random_pure_state(5, seed=7)

        # expect
        self.assert_close(reduce(state, 'a').purity(), reduce(state, 'b').purity(), 1e-12)

    def test_reduction_of_product_state(self):
        # when
        rho_a = reduce(PLUS_ZERO_STATE, Subsystem.A)
        rho_b = reduce(PLUS_ZERO_STATE, Subsystem.B)

        # then
        self.assert_matrix_close([[0.5, 0.5], [0.5, 0.5]], rho_a.rho, 1e-15)
        self.assert_matrix_close([[1, 0], [0, 0]], rho_b.rho, 1e-15)


class TestSinglePartyQuantities(unittest.TestCase, AssertionExtensions):

    def test_unsqueezed_state_has_maximal_predictability(self):
        # given
        t = 9

        # when
        rho = reduce(make_truncated_tmss(0.0, t))

        # then
        self.assert_close(2.0 * t / (t + 1), predictability_sq(rho), 1e-15)
        self.assert_close(0.0, visibility_sq(rho), 1e-15)
        self.assert_close(0.0, iconcurrence_sq(rho), 1e-15)

    def test_truncated_tmss_has_no_visibility(self):
        # expect
        self.assert_close(0.0, visibility_sq(reduce(make_truncated_tmss(1.2, 20))), 1e-15)

    def test_plus_state_is_fully_visible(self):
        # when
        rho = reduce(PLUS_ZERO_STATE, Subsystem.A)

        # then
        self.assert_close(1.0, visibility_sq(rho), 1e-15)
        self.assert_close(0.0, predictability_sq(rho), 1e-15)

    def test_bound_holds_with_equality_on_random_states(self):
        for d in (2, 3, 5, 8):
            bound = 2.0 * (d - 1) / d
            for state in a_random_pure_states(d, 200, seed=d):
                # when
                rho = reduce(state)

                # then
                self.assert_close(bound, predictability_sq(rho) + visibility_sq(rho) + iconcurrence_sq(rho), 1e-10)

    @given(d=st.integers(min_value=2, max_value=6), seed=st.integers(min_value=0, max_value=2 ** 32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_bound_property(self, d, seed):
        # given
        rho = reduce(random_pure_state(d, np.random.default_rng(seed)), Subsystem.B)

        # expect
        self.assert_close(2.0 * (d - 1) / d, single_party_sq(rho) + iconcurrence_sq(rho), 1e-10)

    def test_bloch_route_agrees_with_matrix_elements(self):
        for d in (2, 3, 4, 7):
            basis = HioeEberlyBasis(d)
            for state in a_random_pure_states(d, 50, seed=10 + d):
                # when
                rho = reduce(state)

                # then
                self.assert_close(visibility_sq(rho), visibility_sq_bloch(rho, basis), 1e-10)
                self.assert_close(predictability_sq(rho), predictability_sq_bloch(rho, basis), 1e-10)

    def test_local_unitary_preserves_single_party_and_bipartite_totals(self):
        # given
        rng = an_rng(99)
        state = a_random_pure_state(4, seed=3)
        unitary = a_random_unitary(4, rng)

        # when
        rotated = apply_local_unitary(state, unitary, Subsystem.A)

        # then
        before, after = reduce(state), reduce(rotated)
        self.assert_close(single_party_sq(before), single_party_sq(after), 1e-10)
        self.assert_close(iconcurrence_sq(before), iconcurrence_sq(after), 1e-10)

    def test_local_unitary_converts_predictability_into_visibility(self):
        # given
        hadamard = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
        zero_zero = BipartitePureState([[1, 0], [0, 0]])

        # when
        rho = reduce(apply_local_unitary(zero_zero, hadamard, 'a'))

        # then
        self.assert_close(1.0, visibility_sq(rho), 1e-15)
        self.assert_close(0.0, predictability_sq(rho), 1e-15)

    def test_local_unitary_rejects_wrong_dimension(self):
        # expect
        with self.assertRaises(InvalidDimension):
            apply_local_unitary(a_random_pure_state(3), np.eye(2))

    def test_linear_entropy_is_half_iconcurrence(self):
        # given
        rho = reduce(a_random_pure_state(4, seed=5))

        # expect
        self.assert_close(iconcurrence_sq(rho) / 2.0, linear_entropy(rho), 1e-15)


class TestHioeEberlyBasis(unittest.TestCase, AssertionExtensions):

    def test_operator_count(self):
        for d in (1, 2, 3, 6):
            # expect
            self.assertEqual(d * d - 1, len(HioeEberlyBasis(d)))
            self.assertEqual(d * d - 1, len(HioeEberlyBasis(d).operators()))

    def test_operators_are_traceless_hermitian_and_orthogonal(self):
        # given
        operators = HioeEberlyBasis(4).operators()

        # when
        gram = np.array([[np.trace(a.dot(b)) for b in operators] for a in operators])

        # then
        for operator in operators:
            self.assert_close(0.0, abs(np.trace(operator)), 1e-15)
            self.assert_matrix_close(operator.conj().T, operator, 1e-15)
        self.assert_matrix_close(2.0 * np.eye(len(operators)), gram, 1e-14)

    def test_rejects_empty_dimension(self):
        # expect
        with self.assertRaises(InvalidDimension):
            HioeEberlyBasis(0)


class TestTriality(unittest.TestCase, AssertionExtensions):

    def test_bell_state_is_fully_entangled(self):
        # when
        report = triality_check(BELL_STATE)

        # then
        self.assert_close(1.0, report.concurrence_sq, 1e-15)
        self.assert_close(0.0, report.visibility_sq, 1e-15)
        self.assert_close(0.0, report.predictability_sq, 1e-15)

    def test_product_state_is_fully_visible(self):
        # when
        report = triality_check(PLUS_ZERO_STATE, Subsystem.A)

        # then
        self.assert_close(1.0, report.visibility_sq, 1e-15)
        self.assert_close(0.0, report.concurrence_sq, 1e-15)

    def test_triality_on_random_qubit_pairs(self):
        for state in a_random_pure_states(2, 1000, seed=2008):
            for which in Subsystem:
                # expect
                self.assert_close(0.0, triality_check(state, which).residual, 1e-10)

    def test_concurrence_matches_iconcurrence_for_qubits(self):
        for state in a_random_pure_states(2, 100, seed=11):
            # expect
            self.assert_close(concurrence_2qubit(state) ** 2, iconcurrence_sq(reduce(state)), 1e-12)

    def test_requires_qubits(self):
        # expect
        with self.assertRaises(InvalidDimension):
            triality_check(a_random_pure_state(3))
        with self.assertRaises(InvalidDimension):
            concurrence_2qubit(a_random_pure_state(3))

    def test_random_state_needs_two_levels(self):
        # expect
        with self.assertRaises(InvalidDimension):
            random_pure_state(1, an_rng())


class TestFockOracles(unittest.TestCase, AssertionExtensions):

    def test_vacuum_has_identity_variance_matrix(self):
        # expect
        self.assert_matrix_close(np.eye(4), quadrature_vm_oracle(make_truncated_tmss(0.0, 0)).m, 1e-15)

    def test_oracle_pattern_for_truncated_tmss(self):
        # when
        v = quadrature_vm_oracle(make_truncated_tmss(0.5493061443340549, 1)).m

        # then
        self.assert_close(1.4, v[0, 0], 1e-12)
        self.assert_close(0.8, v[0, 2], 1e-12)
        self.assert_close(-0.8, v[1, 3], 1e-12)
        self.assert_close(v[0, 0], v[2, 2], 1e-12)
        self.assert_close(0.0, v[0, 1], 1e-15)

    def test_fidelity_oracle(self):
        # given
        r, t = 0.5493061443340549, 1

        # expect
        self.assert_close(0.9375, tmss_fidelity_oracle(r, t), 1e-12)
        self.assert_close(0.9375, tmss_fidelity_oracle(r, t, reference_cutoff=200), 1e-12)

    def test_fidelity_oracle_rejects_short_reference(self):
        # expect
        with self.assertRaises(InvalidParameter):
            tmss_fidelity_oracle(0.5, 10, reference_cutoff=5)


if __name__ == '__main__':
    unittest.main()
