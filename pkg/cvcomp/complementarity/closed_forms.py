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
"""Closed forms for the truncated two-mode squeezed state and their bridge to the variance matrix.

Every closed-form quotient falls back to an explicit finite sum when
``xi > SERIES_THRESHOLD``, where the ``(1 - xi^2)(1 - xi^(2t+2))`` denominators cancel
catastrophically.
"""
import logging
import math
from collections import namedtuple

import numpy as np

from cvcomp.exceptions import InvalidParameter, InvalidVarianceElement
from cvcomp.fock_state import SERIES_THRESHOLD, truncated_norm_sq

_logger = logging.getLogger(__name__)

IDENTITY_TOLERANCE = 1e-10
DEGENERATE_V13 = 1e-14

VmElements = namedtuple('VmElements', ['v11', 'v13'])


class ApproximationPair(namedtuple('ApproximationPair', ['lhs', 'rhs'])):
    """Both sides of the large-cut-off relation between Schmidt purity and VM elements."""
    __slots__ = ()

    @property
    def residual(self):
        return abs(self.lhs - self.rhs)


class ComplementarityBudget(object):
    """Squared predictability, visibility and I-concurrence of one party, with the bound they obey.

    Args:
        p_sq (:obj:`float`): predictability squared.
        v_sq (:obj:`float`): visibility squared.
        c_i_sq (:obj:`float`): I-concurrence squared.
        bound (:obj:`float`): ``2t/(t+1)`` at cut-off ``t`` or ``2`` in the infinite limit.

    Raises:
        `InvalidParameter`: When an entry is negative or the entries exceed the bound.
    """

    ENTRY_TOLERANCE = 1e-12

    def __init__(self, p_sq, v_sq, c_i_sq, bound):
        for name, value in (('p_sq', p_sq), ('v_sq', v_sq), ('c_i_sq', c_i_sq)):
            if value < -self.ENTRY_TOLERANCE:
                raise InvalidParameter(name, value, 'a non-negative value')
        if p_sq + v_sq + c_i_sq > bound + IDENTITY_TOLERANCE:
            raise InvalidParameter('p_sq + v_sq + c_i_sq', p_sq + v_sq + c_i_sq, '<= {}'.format(bound))
        self.__p_sq = float(p_sq)
        self.__v_sq = float(v_sq)
        self.__c_i_sq = float(c_i_sq)
        self.__bound = float(bound)

    @property
    def p_sq(self):
        return self.__p_sq

    @property
    def v_sq(self):
        return self.__v_sq

    @property
    def c_i_sq(self):
        return self.__c_i_sq

    @property
    def bound(self):
        return self.__bound

    @property
    def total(self):
        return self.__p_sq + self.__v_sq + self.__c_i_sq

    @property
    def slack(self):
        return self.__bound - self.total

    def as_tuple(self):
        return self.__p_sq, self.__v_sq, self.__c_i_sq

    def __repr__(self):
        return 'ComplementarityBudget(p_sq={}, v_sq={}, c_i_sq={}, bound={})'.format(
            self.p_sq, self.v_sq, self.c_i_sq, self.bound)

    def __eq__(self, other):
        return self.__class__ == other.__class__ and repr(self) == repr(other)


def _validate(r, t):
    if r < 0:
        raise InvalidParameter('r', r, 'r >= 0')
    if t < 0 or int(t) != t:
        raise InvalidParameter('t', t, 'a non-negative integer')


def cutoff_bound(t):
    return 2.0 * t / (t + 1.0)


def schmidt_purity(r, t):
    """``N^4(xi) (1 - xi^(4t+4)) / (1 - xi^4)``: the purity of either reduced state."""
    _validate(r, t)
    xi = math.tanh(r)
    norm_sq = truncated_norm_sq(xi, t)
    if xi > SERIES_THRESHOLD:
        return float(norm_sq ** 2 * np.sum(xi ** (4 * np.arange(t + 1))))
    return norm_sq ** 2 * (1.0 - xi ** (4 * t + 4)) / (1.0 - xi ** 4)


def predictability_closed(r, t):
    """``P^2 = 2 [N^4 (1 - xi^(4t+4)) / (1 - xi^4) - 1/(t+1)]``."""
    return 2.0 * (schmidt_purity(r, t) - 1.0 / (t + 1))


def iconcurrence_closed(r, t):
    """``C_I^2 = 2 (1 - N^4 (1 - xi^(4t+4)) / (1 - xi^4))``."""
    return 2.0 * (1.0 - schmidt_purity(r, t))


def budget(r, t):
    """Complementarity budget of the truncated TMSS; visibility vanishes identically."""
    return ComplementarityBudget(p_sq=predictability_closed(r, t),
                                 v_sq=0.0,
                                 c_i_sq=iconcurrence_closed(r, t),
                                 bound=cutoff_bound(t))


def fidelity_to_tmss(r, t):
    """``|<psi(t)|TMSS>|^2 = 1 / (N^2 cosh^2 r)``."""
    _validate(r, t)
    return 1.0 / (truncated_norm_sq(math.tanh(r), t) * math.cosh(r) ** 2)


def vm_elements_series(r, t):
    """``V11 = N^2 sum_{n<=t} xi^(2n) (2n+1)`` and ``V13 = 2 N^2 sum_{n<t} xi^(2n+1) (n+1)``."""
    _validate(r, t)
    xi = math.tanh(r)
    norm_sq = truncated_norm_sq(xi, t)
    n = np.arange(t + 1)
    v11 = norm_sq * np.sum(xi ** (2 * n) * (2 * n + 1))
    v13 = 2.0 * norm_sq * np.sum(xi ** (2 * n[:-1] + 1) * (n[:-1] + 1))
    return VmElements(v11=float(v11), v13=float(v13))


def vm_elements_closed(r, t):
    """The two independent entries of the truncated TMSS variance matrix."""
    _validate(r, t)
    xi = math.tanh(r)
    if xi > SERIES_THRESHOLD:
        return vm_elements_series(r, t)
    denominator = (1.0 - xi ** 2) * (1.0 - xi ** (2 * t + 2))
    v11 = (1.0 + xi ** 2 - (3 + 2 * t) * xi ** (2 * t + 2) + (1 + 2 * t) * xi ** (2 * t + 4)) / denominator
    v13 = 2.0 * xi * (1.0 - (t + 1) * xi ** (2 * t) + t * xi ** (2 * t + 2)) / denominator
    return VmElements(v11=v11, v13=v13)


def xi_from_vm(v11, v13):
    """``xi = (V11 - 1) / V13``; exact for the truncated TMSS at any cut-off.

    Degenerate input (``V13 <= 1e-14``, the vacuum) returns ``0`` and logs a warning.
    """
    if v13 <= DEGENERATE_V13:
        _logger.warning('Degenerate variance matrix elements (V11=%s, V13=%s): xi taken as 0.', v11, v13)
        return 0.0
    return (v11 - 1.0) / v13


def purity_constrained_v13(v11):
    """``sqrt(V11^2 - 1)``: the value V13 would take for a pure Gaussian state."""
    if v11 < 1 - IDENTITY_TOLERANCE:
        raise InvalidVarianceElement('V11', v11, 'V11 >= 1')
    return math.sqrt(max(v11 ** 2 - 1.0, 0.0))


def purity_discrepancy(r, t):
    """``sqrt(V11^2 - 1) - V13``; vanishes as the cut-off grows."""
    v11, v13 = vm_elements_closed(r, t)
    return purity_constrained_v13(v11) - v13


def _schmidt_purity_from_vm(v11, v13):
    ratio = v13 ** 2
    gap = (v11 - 1.0) ** 2
    return (ratio - gap) / (ratio + gap)


def approx_lhs_rhs(r, t):
    """Schmidt purity and its large-cut-off estimate from ``(V11, V13)``.

    Raises:
        `InvalidParameter`: When ``r <= 0`` or ``t < 1``.
    """
    if r <= 0:
        raise InvalidParameter('r', r, 'r > 0')
    if t < 1:
        raise InvalidParameter('t', t, 't >= 1')
    v11, v13 = vm_elements_closed(r, t)
    return ApproximationPair(lhs=schmidt_purity(r, t), rhs=_schmidt_purity_from_vm(v11, v13))


def predictability_from_vm(v11, v13, t):
    """Predictability at cut-off ``t`` with the Schmidt purity estimated from the VM (valid for ``t >> 1``)."""
    return 2.0 * (_schmidt_purity_from_vm(v11, v13) - 1.0 / (t + 1))


def iconcurrence_from_vm_elements(v11, v13):
    return 2.0 * (1.0 - _schmidt_purity_from_vm(v11, v13))


def iconcurrence_from_vm(v11):
    """``C_I^2 = 2 (1 - 1/V11)`` for a pure two-mode squeezed state.

    Raises:
        `InvalidVarianceElement`: When ``V11 < 1``.
    """
    if v11 < 1:
        raise InvalidVarianceElement('V11', v11, 'V11 >= 1')
    return 2.0 * (1.0 - 1.0 / v11)


def iconcurrence_from_local_determinant(det_a):
    """``C_I^2 = 2 (1 - 1/sqrt(det A))`` for any pure two-mode Gaussian state."""
    if det_a < 1:
        raise InvalidVarianceElement('det A', det_a, 'det A >= 1')
    return 2.0 * (1.0 - 1.0 / math.sqrt(det_a))
