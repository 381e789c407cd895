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

import numpy as np

from cvcomp.complementarity import approx_lhs_rhs, cutoff_bound, iconcurrence_closed, iconcurrence_from_vm, \
    predictability_closed, vm_elements_closed, vm_elements_series, xi_from_vm
from cvcomp.exceptions import InvalidGrid, InvalidSeed
from cvcomp.fock_state import HioeEberlyBasis, Subsystem, iconcurrence_sq, make_truncated_tmss, predictability_sq, \
    predictability_sq_bloch, quadrature_vm_oracle, random_pure_state, reduce, triality_check, visibility_sq, \
    visibility_sq_bloch
from cvcomp.gaussian_vm import apply_symplectic, local_antisqueeze, ppt_smallest_eigenvalue, symplectic_eigenvalues, \
    symplectic_eigenvalues_numeric, vm_beamsplitter_state, vm_tmss
from cvcomp.internal.verification.check import Check
from cvcomp.utils import inclusive_range, max_abs_deviation

DEFAULT_R_VALUES = inclusive_range(0.0, 3.0, 0.1)
DEFAULT_T_VALUES = list(range(1, 51))
ORACLE_R_VALUES = [0.1, 0.5, 1.0, 2.0]
ORACLE_T_VALUES = [1, 2, 5, 10, 50]
APPROXIMATION_XI = 0.5
APPROXIMATION_T_VALUES = [2, 5, 10, 20, 50]
APPROXIMATION_LARGE_T = 100
LIMIT_R_VALUES = [0.2, 0.5, 1.0, 1.5]
LIMIT_T = 500
PPT_R_VALUES = inclusive_range(0.1, 5.0, 0.1)
BLOCH_DIMENSIONS = [2, 3, 5, 8]
# Relative corruption applied to V13 by the fault-injection negative control.
FAULT_V13_FACTOR = 1.0 + 1e-6


class CheckSuiteFactory(object):
    """Builds the identity checks run by ``cvcomp verify``.

    Args:
        r_values (:obj:`list` of :obj:`float`): squeezing grid for the grid-wide identities.
        t_values (:obj:`list` of :obj:`int`): cut-off grid for the grid-wide identities.
        states (:obj:`int`): random pure states per dimension for the finite-dimensional checks.
        seed (:obj:`int`): seed of the random states.
        inject_fault (:obj:`bool`): corrupt ``V13`` in the xi identity, which must then fail.

    Raises:
        `InvalidGrid`: When a grid is empty or ``states < 1``.
        `InvalidSeed`: When ``seed`` is negative or not an integer.
    """

    def __init__(self, r_values=None, t_values=None, states=1000, seed=2008, inject_fault=False):
        self.__r_values = list(DEFAULT_R_VALUES if r_values is None else r_values)
        self.__t_values = list(DEFAULT_T_VALUES if t_values is None else t_values)
        if not self.__r_values or not self.__t_values:
            raise InvalidGrid('verification grid is empty')
        if states < 1:
            raise InvalidGrid('at least one random state per check is required')
        if not isinstance(seed, (int, np.integer)) or seed < 0:
            raise InvalidSeed(seed)
        self.__states = states
        self.__seed = seed
        self.__inject_fault = inject_fault

    def create_checks(self):
        return [
            Check(name=u'budget_identity',
                  description=u'P^2 + C_I^2 = 2t/(t+1) on the grid',
                  tolerance=1e-10,
                  evaluator=self.__budget_identity),
            Check(name=u'xi_identity',
                  description=u'(V11 - 1)/V13 = tanh r on the grid, r > 0',
                  tolerance=1e-10,
                  evaluator=self.__xi_identity),
            Check(name=u'vm_three_way_agreement',
                  description=u'closed form = series = Fock quadrature oracle',
                  tolerance=1e-10,
                  evaluator=self.__vm_three_way_agreement),
            Check(name=u'vm_asymptotics',
                  description=u'(V11, V13) -> (cosh 2r, sinh 2r) at r = 1, t = 200',
                  tolerance=1e-10,
                  evaluator=self.__vm_asymptotics),
            Check(name=u'schmidt_purity_approximation',
                  description=u'large-t relation residual decays in t and is tiny at t = 100',
                  tolerance=1e-9,
                  evaluator=self.__schmidt_purity_approximation),
            Check(name=u'iconcurrence_from_vm_limit',
                  description=u'2(1 - 1/cosh 2r) = C_I^2(r, 500)',
                  tolerance=1e-8,
                  evaluator=self.__iconcurrence_limit),
            Check(name=u'triality',
                  description=u'V^2 + P^2 + C^2 = 1 on random two-qubit states',
                  tolerance=1e-10,
                  evaluator=self.__triality),
            Check(name=u'd_level_bound',
                  description=u'P^2 + V^2 + C_I^2 = 2(d-1)/d on random pure states',
                  tolerance=1e-10,
                  evaluator=self.__d_level_bound),
            Check(name=u'hioe_eberly_agreement',
                  description=u'Bloch-vector and matrix-element routes to V^2 and P^2 agree',
                  tolerance=1e-10,
                  evaluator=self.__hioe_eberly_agreement),
            Check(name=u'antisqueeze_reduction',
                  description=u'local anti-squeezing maps the beam-splitter VM of r to TMSS(r/2)',
                  tolerance=1e-10,
                  evaluator=self.__antisqueeze_reduction),
            Check(name=u'pure_symplectic_spectrum',
                  description=u'nu_plus = nu_minus = 1 for TMSS(r)',
                  tolerance=1e-9,
                  evaluator=self.__pure_symplectic_spectrum),
            Check(name=u'eigensolver_agreement',
                  description=u'symplectic eigenvalue formula = |eig(i Omega V)|',
                  tolerance=1e-8,
                  evaluator=self.__eigensolver_agreement),
            Check(name=u'ppt_tmss',
                  description=u'partially transposed TMSS has nu\' = exp(-2r) < 1',
                  tolerance=1e-10,
                  evaluator=self.__ppt_tmss),
        ]

    def __grid(self):
        return [(r, t) for r in self.__r_values for t in self.__t_values]

    def __budget_identity(self):
        return max(abs(predictability_closed(r, t) + iconcurrence_closed(r, t) - cutoff_bound(t))
                   for r, t in self.__grid())

    def __xi_identity(self):
        residuals = [0.0]
        for r, t in self.__grid():
            if r <= 0 or t < 1:
                continue
            v11, v13 = vm_elements_closed(r, t)
            if self.__inject_fault:
                v13 *= FAULT_V13_FACTOR
            residuals.append(abs(xi_from_vm(v11, v13) - math.tanh(r)))
        return max(residuals)

    def __vm_three_way_agreement(self):
        residuals = []
        for r in ORACLE_R_VALUES:
            for t in ORACLE_T_VALUES:
                closed = vm_elements_closed(r, t)
                series = vm_elements_series(r, t)
                oracle = quadrature_vm_oracle(make_truncated_tmss(r, t)).m
                expected = np.array([[closed.v11, 0, closed.v13, 0],
                                     [0, closed.v11, 0, -closed.v13],
                                     [closed.v13, 0, closed.v11, 0],
                                     [0, -closed.v13, 0, closed.v11]])
                residuals.append(max_abs_deviation(closed, series))
                residuals.append(max_abs_deviation(oracle, expected))
        return max(residuals)

    @staticmethod
    def __vm_asymptotics():
        v11, v13 = vm_elements_closed(1.0, 200)
        return max(abs(v11 - math.cosh(2.0)), abs(v13 - math.sinh(2.0)))

    @staticmethod
    def __schmidt_purity_approximation():
        r = math.atanh(APPROXIMATION_XI)
        residuals = [approx_lhs_rhs(r, t).residual for t in APPROXIMATION_T_VALUES]
        if not all(later < earlier for earlier, later in zip(residuals, residuals[1:])):
            return float('inf')
        return approx_lhs_rhs(r, APPROXIMATION_LARGE_T).residual

    @staticmethod
    def __iconcurrence_limit():
        return max(abs(iconcurrence_from_vm(math.cosh(2 * r)) - iconcurrence_closed(r, LIMIT_T))
                   for r in LIMIT_R_VALUES)

    def __random_states(self, d, offset):
        rng = np.random.default_rng([self.__seed, d, offset])
        return [random_pure_state(d, rng) for _ in range(self.__states)]

    def __triality(self):
        return max(abs(triality_check(state, which).residual)
                   for state in self.__random_states(2, 0)
                   for which in Subsystem)

    def __d_level_bound(self):
        residuals = []
        for d in BLOCH_DIMENSIONS:
            bound = 2.0 * (d - 1) / d
            for state in self.__random_states(d, 1):
                rho = reduce(state)
                residuals.append(abs(predictability_sq(rho) + visibility_sq(rho) + iconcurrence_sq(rho) - bound))
        return max(residuals)

    def __hioe_eberly_agreement(self):
        residuals = []
        for d in BLOCH_DIMENSIONS:
            basis = HioeEberlyBasis(d)
            for state in self.__random_states(d, 2):
                rho = reduce(state, Subsystem.B)
                residuals.append(abs(visibility_sq(rho) - visibility_sq_bloch(rho, basis)))
                residuals.append(abs(predictability_sq(rho) - predictability_sq_bloch(rho, basis)))
        return max(residuals)

    def __antisqueeze_reduction(self):
        return max(max_abs_deviation(apply_symplectic(vm_beamsplitter_state(r), local_antisqueeze(r)).m,
                                     vm_tmss(r / 2.0).m)
                   for r in self.__r_values)

    def __pure_symplectic_spectrum(self):
        residuals = []
        for r in self.__r_values:
            spectrum = symplectic_eigenvalues(vm_tmss(r))
            residuals.extend([abs(spectrum.nu_plus - 1.0), abs(spectrum.nu_minus - 1.0)])
        return max(residuals)

    def __eigensolver_agreement(self):
        residuals = []
        for r in self.__r_values:
            for v in (vm_tmss(r), vm_beamsplitter_state(r)):
                spectrum = symplectic_eigenvalues(v)
                nu_plus, nu_minus = symplectic_eigenvalues_numeric(v)
                residuals.extend([abs(spectrum.nu_plus - nu_plus), abs(spectrum.nu_minus - nu_minus)])
        return max(residuals)

    @staticmethod
    def __ppt_tmss():
        residuals = []
        for r in PPT_R_VALUES:
            nu = ppt_smallest_eigenvalue(vm_tmss(r))
            if nu >= 1.0:
                return float('inf')
            residuals.append(abs(nu - math.exp(-2 * r)))
        return max(residuals)
