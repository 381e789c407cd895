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
"""Variance-matrix algebra of two-mode Gaussian states.

Quadratures are ordered ``(x_a, p_a, x_b, p_b)`` and the vacuum variance matrix is
the identity.
"""
import math
from collections import namedtuple

import numpy as np
from scipy.linalg import block_diag

from cvcomp.exceptions import InvalidDimension, InvalidParameter, NonPhysicalVarianceMatrix, NotSymmetric, \
    NotSymplectic
from cvcomp.fock_state import Subsystem

SYMMETRY_TOLERANCE = 1e-12
SYMPLECTIC_TOLERANCE = 1e-8
PHYSICALITY_TOLERANCE = 1e-10
# |Delta^2 - 4 det V| below this (times max|V|^2) is rounding and is clamped to zero.
DISCRIMINANT_CLAMP = 1e-9

OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])
OMEGA = block_diag(OMEGA_1, OMEGA_1)
PARTIAL_TRANSPOSITION = np.diag([1.0, 1.0, 1.0, -1.0])

SymplecticSpectrum = namedtuple('SymplecticSpectrum', ['nu_plus', 'nu_minus', 'delta', 'det_v', 'physical'])


class VarianceMatrix(object):
    """Real symmetric 4x4 matrix ``[[A, C], [C^T, B]]``.

    Physicality is not enforced on construction; see :func:`is_physical`.

    Raises:
        `InvalidDimension`: When the matrix is not 4x4.
        `NotSymmetric`: When ``|m_jk - m_kj|`` exceeds ``1e-12``.
    """

    def __init__(self, matrix):
        m = np.array(matrix, dtype=float)
        if m.shape != (4, 4):
            raise InvalidDimension(expected=(4, 4), actual=m.shape)
        asymmetry = float(np.max(np.abs(m - m.T)))
        if asymmetry > SYMMETRY_TOLERANCE:
            raise NotSymmetric(asymmetry)
        m = (m + m.T) / 2.0
        m.setflags(write=False)
        self.__m = m

    @classmethod
    def from_blocks(cls, a, b, c):
        a, b, c = np.asarray(a, dtype=float), np.asarray(b, dtype=float), np.asarray(c, dtype=float)
        return cls(np.block([[a, c], [c.T, b]]))

    @property
    def m(self):
        return self.__m

    @property
    def a(self):
        return self.__m[:2, :2]

    @property
    def b(self):
        return self.__m[2:, 2:]

    @property
    def c(self):
        return self.__m[:2, 2:]

    def block(self, which):
        return self.a if Subsystem.of(which) is Subsystem.A else self.b

    def det(self):
        return float(np.linalg.det(self.__m))

    def __repr__(self):
        return 'VarianceMatrix({})'.format(np.array2string(self.__m, precision=6, separator=', '))

    def __eq__(self, other):
        return self.__class__ == other.__class__ and np.array_equal(self.m, other.m)

    def __ne__(self, other):
        return not self.__eq__(other)


class SymplecticTransform(object):
    """Real 4x4 matrix ``S`` with ``S^T Omega S = Omega``.

    Raises:
        `NotSymplectic`: When the condition is violated by more than ``1e-8``.
    """

    def __init__(self, matrix):
        s = np.array(matrix, dtype=float)
        if s.shape != (4, 4):
            raise InvalidDimension(expected=(4, 4), actual=s.shape)
        deviation = float(np.max(np.abs(s.T.dot(OMEGA).dot(s) - OMEGA)))
        if deviation > SYMPLECTIC_TOLERANCE:
            raise NotSymplectic(deviation)
        s.setflags(write=False)
        self.__s = s

    @property
    def s(self):
        return self.__s

    def is_local(self):
        return not (np.any(self.__s[:2, 2:]) or np.any(self.__s[2:, :2]))

    def compose(self, other):
        """``self`` applied after ``other``."""
        return SymplecticTransform(self.__s.dot(other.s))

    def __repr__(self):
        return 'SymplecticTransform({})'.format(np.array2string(self.__s, precision=6, separator=', '))


def _as_vm(v):
    return v if isinstance(v, VarianceMatrix) else VarianceMatrix(v)


def delta_invariant(v):
    """``Delta = det A + det B + 2 det C``."""
    v = _as_vm(v)
    return float(np.linalg.det(v.a) + np.linalg.det(v.b) + 2.0 * np.linalg.det(v.c))


def _margin(v, tolerance):
    """``tolerance`` scaled by the largest entry; rounding of ``det V`` grows with ``|V|^2``."""
    return tolerance * max(1.0, float(np.max(np.abs(v.m))))


def symplectic_eigenvalues(v):
    """Symplectic spectrum ``nu_(+/-) = sqrt((Delta +/- sqrt(Delta^2 - 4 det V)) / 2)``.

    ``nu_minus`` is evaluated as ``sqrt(2 det V / (Delta + sqrt(...)))`` to avoid cancellation,
    and a discriminant within rounding of zero is taken as exactly zero (pure states).

    Raises:
        `NonPhysicalVarianceMatrix`: When ``det V < 0`` or the discriminant is clearly negative.
    """
    v = _as_vm(v)
    delta = delta_invariant(v)
    det_v = v.det()
    if det_v < 0:
        raise NonPhysicalVarianceMatrix('det V = {!r} < 0'.format(det_v))
    discriminant = delta ** 2 - 4.0 * det_v
    clamp = DISCRIMINANT_CLAMP * max(1.0, float(np.max(np.abs(v.m)))) ** 2
    if abs(discriminant) <= clamp:
        discriminant = 0.0
    elif discriminant < 0:
        raise NonPhysicalVarianceMatrix('Delta^2 - 4 det V = {!r} < 0'.format(discriminant))
    root = math.sqrt(discriminant)
    nu_plus_sq = (delta + root) / 2.0
    nu_minus_sq = det_v / nu_plus_sq if nu_plus_sq > 0 else 0.0
    nu_minus = math.sqrt(nu_minus_sq)
    return SymplecticSpectrum(nu_plus=math.sqrt(max(nu_plus_sq, 0.0)),
                              nu_minus=nu_minus,
                              delta=delta,
                              det_v=det_v,
                              physical=nu_minus >= 1.0 - _margin(v, PHYSICALITY_TOLERANCE))


def symplectic_eigenvalues_numeric(v):
    """``(nu_plus, nu_minus)`` from a general eigensolver applied to ``i Omega V``."""
    v = _as_vm(v)
    moduli = np.sort(np.abs(np.linalg.eigvals(1j * OMEGA.dot(v.m))))
    # eigenvalues come in +/- pairs
    return float(moduli[3]), float(moduli[0])


def heisenberg_robertson_min_eigenvalue(v):
    """Smallest eigenvalue of the Hermitian matrix ``V + i Omega``."""
    v = _as_vm(v)
    return float(np.min(np.linalg.eigvalsh(v.m + 1j * OMEGA)))


def is_physical(v):
    return symplectic_eigenvalues(v).physical


def partial_transpose(v):
    """``(1 (+) sigma_z) V (1 (+) sigma_z)``: time reversal of mode b."""
    v = _as_vm(v)
    return VarianceMatrix(PARTIAL_TRANSPOSITION.dot(v.m).dot(PARTIAL_TRANSPOSITION))


def ppt_smallest_eigenvalue(v):
    """Smallest symplectic eigenvalue of the partially transposed VM; entangled iff below 1."""
    return symplectic_eigenvalues(partial_transpose(v)).nu_minus


def is_ppt_separable(v):
    v = _as_vm(v)
    return ppt_smallest_eigenvalue(v) >= 1.0 - _margin(v, PHYSICALITY_TOLERANCE)


def log_negativity(v):
    """``max(0, -ln nu')`` with ``nu'`` the partially transposed smallest symplectic eigenvalue."""
    return max(0.0, -math.log(ppt_smallest_eigenvalue(v)))


def purity(v):
    """``1 / sqrt(det V)``.

    Rounding of the entries limits the result to about ``eps max|V|^2``; for the TMSS at
    ``r = 5`` that is ``3e-8``.

    Raises:
        `NonPhysicalVarianceMatrix`: When ``det V <= 0``.
    """
    det_v = _as_vm(v).det()
    if det_v <= 0:
        raise NonPhysicalVarianceMatrix('det V = {!r} <= 0'.format(det_v))
    return 1.0 / math.sqrt(det_v)


def local_purity(v, which=Subsystem.A):
    det_block = float(np.linalg.det(_as_vm(v).block(which)))
    if det_block <= 0:
        raise NonPhysicalVarianceMatrix('det of local block = {!r} <= 0'.format(det_block))
    return 1.0 / math.sqrt(det_block)


def apply_symplectic(v, s):
    """Congruence ``S V S^T``.

    Raises:
        `NotSymplectic`: When ``s`` is a raw matrix failing ``S^T Omega S = Omega``.
    """
    v = _as_vm(v)
    if not isinstance(s, SymplecticTransform):
        s = SymplecticTransform(s)
    m = s.s.dot(v.m).dot(s.s.T)
    return VarianceMatrix((m + m.T) / 2.0)


def vm_tmss(r):
    """``A = B = cosh(2r) 1``, ``C = sinh(2r) sigma_z``."""
    _require_non_negative(r)
    return VarianceMatrix.from_blocks(a=math.cosh(2 * r) * np.eye(2),
                                      b=math.cosh(2 * r) * np.eye(2),
                                      c=math.sinh(2 * r) * np.diag([1.0, -1.0]))


def vm_beamsplitter_state(r):
    """Single-mode squeezed vacuum mixed with vacuum on a balanced beam splitter."""
    _require_non_negative(r)
    local = np.diag([math.exp(r) * math.cosh(r), math.exp(-r) * math.cosh(r)])
    correlations = np.diag([math.exp(r) * math.sinh(r), -math.exp(-r) * math.sinh(r)])
    return VarianceMatrix.from_blocks(a=local, b=local, c=correlations)


def single_mode_squeezer(r):
    """``exp(-r sigma_z) = diag(e^-r, e^r)`` on one mode."""
    return np.diag([math.exp(-r), math.exp(r)])


def phase_rotation(theta):
    return np.array([[math.cos(theta), math.sin(theta)],
                     [-math.sin(theta), math.cos(theta)]])


def local_symplectic(s_a, s_b):
    """Block-diagonal ``S_a (+) S_b`` from two single-mode symplectic (unit determinant) matrices."""
    return SymplecticTransform(block_diag(np.asarray(s_a, dtype=float), np.asarray(s_b, dtype=float)))


def local_antisqueeze(r):
    """``exp(-(r/2) sigma_z) (+) exp(-(r/2) sigma_z)``, mapping the beam-splitter VM of ``r`` to TMSS(r/2)."""
    squeezer = single_mode_squeezer(r / 2.0)
    return local_symplectic(squeezer, squeezer)


def _require_non_negative(r):
    if r < 0:
        raise InvalidParameter('r', r, 'r >= 0')
