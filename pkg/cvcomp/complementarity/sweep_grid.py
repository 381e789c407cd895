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
from enum import Enum

from cvcomp.exceptions import InvalidGrid, UnknownQuantity
from cvcomp.utils import inclusive_range, is_strictly_increasing

FIGURE_R_STEP = 0.05
FIGURE_R_MAX = 3.0
FIGURE_T_VALUES = list(range(1, 51))
FIGURE_XI_STEP = 0.01
FIGURE_XI_MAX = 0.99
DISCREPANCY_T_VALUES = [5, 10, 15, 20]


class SweepQuantity(Enum):
    PREDICTABILITY = 'predictability'
    FIDELITY = 'fidelity'
    ICONCURRENCE = 'iconcurrence'
    VM_DISCREPANCY = 'vm_discrepancy'

    @classmethod
    def of(cls, quantity):
        if isinstance(quantity, cls):
            return quantity
        try:
            return cls(str(quantity).replace('-', '_').lower())
        except ValueError:
            raise UnknownQuantity(quantity)


class SweepGrid(object):
    """Axes of a sweep and the quantity evaluated on them.

    Args:
        r_values (:obj:`list` of :obj:`float`): strictly increasing squeezing values, all ``>= 0``.
        t_values (:obj:`list` of :obj:`int`): strictly increasing cut-off values, all ``>= 0``.
        quantity (:obj:`SweepQuantity` or :obj:`str`): what to evaluate.
        axis (:obj:`dict`, optional): how the axes were generated, copied into output metadata.

    Raises:
        `InvalidGrid`: When an axis is empty, not strictly increasing or out of range.
    """

    def __init__(self, r_values, t_values, quantity, axis=None):
        r_values = [float(r) for r in r_values]
        t_values = list(t_values)
        for name, values in (('r', r_values), ('t', t_values)):
            if not values:
                raise InvalidGrid('{} axis is empty'.format(name))
            if not is_strictly_increasing(values):
                raise InvalidGrid('{} axis is not strictly increasing'.format(name))
        if r_values[0] < 0:
            raise InvalidGrid('r values must be non-negative')
        if any(int(t) != t for t in t_values) or t_values[0] < 0:
            raise InvalidGrid('t values must be non-negative integers')
        self.__r_values = r_values
        self.__t_values = [int(t) for t in t_values]
        self.__quantity = SweepQuantity.of(quantity)
        self.__axis = dict(axis or {})

    @classmethod
    def from_xi_values(cls, xi_values, t_values, quantity, axis=None):
        if any(not 0 <= xi < 1 for xi in xi_values):
            raise InvalidGrid('xi values must lie in [0, 1)')
        return cls([math.atanh(xi) for xi in xi_values], t_values, quantity, axis)

    @property
    def r_values(self):
        return list(self.__r_values)

    @property
    def t_values(self):
        return list(self.__t_values)

    @property
    def quantity(self):
        return self.__quantity

    @property
    def size(self):
        return len(self.__r_values) * len(self.__t_values)

    def to_metadata(self):
        metadata = {
            'quantity': self.__quantity.value,
            'r_count': len(self.__r_values),
            'r_min': self.__r_values[0],
            'r_max': self.__r_values[-1],
            't_values': self.__t_values,
        }
        metadata.update(self.__axis)
        return metadata

    def __repr__(self):
        return 'SweepGrid(quantity={}, r={}..{} ({} values), t={})'.format(
            self.__quantity.value, self.__r_values[0], self.__r_values[-1], len(self.__r_values), self.__t_values)

    def __eq__(self, other):
        return self.__class__ == other.__class__ and repr(self) == repr(other) and \
            self.r_values == other.r_values


def figure_grid(figure):
    """Preset grid for one of the four standard sweeps (1-3: surfaces over r and t, 4: curves over xi)."""
    figure = int(figure)
    if figure in (1, 2, 3):
        quantity = {1: SweepQuantity.PREDICTABILITY,
                    2: SweepQuantity.FIDELITY,
                    3: SweepQuantity.ICONCURRENCE}[figure]
        return SweepGrid(r_values=inclusive_range(0.0, FIGURE_R_MAX, FIGURE_R_STEP),
                         t_values=FIGURE_T_VALUES,
                         quantity=quantity,
                         axis={'figure': figure, 'r_step': FIGURE_R_STEP})
    if figure == 4:
        return SweepGrid.from_xi_values(xi_values=inclusive_range(0.0, FIGURE_XI_MAX, FIGURE_XI_STEP),
                                        t_values=DISCREPANCY_T_VALUES,
                                        quantity=SweepQuantity.VM_DISCREPANCY,
                                        axis={'figure': figure, 'xi_step': FIGURE_XI_STEP})
    raise InvalidGrid('unknown figure {}, expected 1, 2, 3 or 4'.format(figure))
