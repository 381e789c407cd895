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
from cvcomp.complementarity.quantities import FidelityQuantity, IConcurrenceQuantity, PredictabilityQuantity, \
    VmDiscrepancyQuantity
from cvcomp.complementarity.sweep_grid import SweepQuantity
from cvcomp.exceptions import UnknownQuantity


class QuantityFactory(object):
    _QUANTITIES = {
        SweepQuantity.PREDICTABILITY: PredictabilityQuantity,
        SweepQuantity.FIDELITY: FidelityQuantity,
        SweepQuantity.ICONCURRENCE: IConcurrenceQuantity,
        SweepQuantity.VM_DISCREPANCY: VmDiscrepancyQuantity,
    }

    def create(self, quantity):
        try:
            return self._QUANTITIES[SweepQuantity.of(quantity)]()
        except KeyError:
            raise UnknownQuantity(quantity)
