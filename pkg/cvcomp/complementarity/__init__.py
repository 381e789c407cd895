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
"""Closed-form complementarity quantities of the truncated TMSS and the sweeps built on them."""
from cvcomp.complementarity.closed_forms import ApproximationPair, ComplementarityBudget, VmElements, \
    approx_lhs_rhs, budget, cutoff_bound, fidelity_to_tmss, iconcurrence_closed, iconcurrence_from_local_determinant, \
    iconcurrence_from_vm, iconcurrence_from_vm_elements, predictability_closed, predictability_from_vm, \
    purity_constrained_v13, purity_discrepancy, schmidt_purity, vm_elements_closed, vm_elements_series, xi_from_vm
from cvcomp.complementarity.sweep_generator import generate_sweep
from cvcomp.complementarity.sweep_grid import SweepGrid, SweepQuantity, figure_grid
