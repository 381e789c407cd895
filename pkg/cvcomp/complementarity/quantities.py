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

from abc import ABCMeta, abstractmethod

from cvcomp.complementarity.closed_forms import fidelity_to_tmss, iconcurrence_closed, predictability_closed, \
    purity_constrained_v13, vm_elements_closed


class Quantity(metaclass=ABCMeta):

    @abstractmethod
    def name(self):
        """
        :return: Quantity name (str).
        """
        raise NotImplementedError()

    def columns(self):
        """
        :return: Output column names, one per value (tuple of str).
        """
        return ('value',)

    @abstractmethod
    def values(self, r, t):
        """
        :return: Values at squeezing ``r`` and cut-off ``t`` (tuple of float).
        """
        raise NotImplementedError()

    def __eq__(self, other):
        return self.__class__ == other.__class__

    def __repr__(self):
        return str(self.__class__.__name__)


class PredictabilityQuantity(Quantity):
    def name(self):
        return u'predictability'

    def values(self, r, t):
        return (predictability_closed(r, t),)


class FidelityQuantity(Quantity):
    def name(self):
        return u'fidelity'

    def values(self, r, t):
        return (fidelity_to_tmss(r, t),)


class IConcurrenceQuantity(Quantity):
    def name(self):
        return u'iconcurrence'

    def values(self, r, t):
        return (iconcurrence_closed(r, t),)


class VmDiscrepancyQuantity(Quantity):
    """``V13`` and the pure-Gaussian value ``sqrt(V11^2 - 1)`` side by side."""

    def name(self):
        return u'vm_discrepancy'

    def columns(self):
        return ('value', 'value2')

    def values(self, r, t):
        v11, v13 = vm_elements_closed(r, t)
        return v13, purity_constrained_v13(v11)
