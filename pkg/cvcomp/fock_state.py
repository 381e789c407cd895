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
"""Truncated Fock-space representation of bipartite pure states.

Everything here is computed from first principles (amplitude tables and operator
matrix elements) and serves as the oracle the closed forms in
:mod:`cvcomp.complementarity` are checked against.
"""
import math
from collections import namedtuple
from enum import Enum

import numpy as np

from cvcomp.exceptions import InvalidDensityMatrix, InvalidDimension, InvalidParameter, InvalidSubsystem, \
    NotNormalized

NORMALIZATION_TOLERANCE = 1e-12
HERMITICITY_TOLERANCE = 1e-12
EIGENVALUE_TOLERANCE = 1e-10

# Above this xi the normalization is summed term by term instead of taken from the quotient.
SERIES_THRESHOLD = 0.99

TrialityReport = namedtuple('TrialityReport', ['visibility_sq', 'predictability_sq', 'concurrence_sq', 'residual'])

_SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)
_SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class Subsystem(Enum):
    A = 'a'
    B = 'b'

    @classmethod
    def of(cls, which):
        if isinstance(which, cls):
            return which
        try:
            return cls(str(which).lower())
        except ValueError:
            raise InvalidSubsystem(which)


class BipartitePureState(object):
    """Pure state of two ``d``-level systems, ``amp[j, k]`` being the coefficient of ``|j, k>``.

    Args:
        amplitudes (:obj:`numpy.ndarray`): square ``d x d`` table of complex amplitudes.
        normalize (:obj:`bool`, optional, default is ``False``):
            Rescale the table to unit norm instead of rejecting it.

    Raises:
        `InvalidDimension`: When the table is not square.
        `NotNormalized`: When the squared amplitudes do not sum to one and ``normalize`` is ``False``.
    """

    def __init__(self, amplitudes, normalize=False):
        amp = np.array(amplitudes, dtype=complex)
        if amp.ndim != 2 or amp.shape[0] != amp.shape[1] or amp.shape[0] < 1:
            raise InvalidDimension(expected='square d x d table', actual=amp.shape)
        norm_sq = float(np.sum(np.abs(amp) ** 2))
        if normalize:
            if norm_sq == 0.0:
                raise NotNormalized(norm_sq)
            amp = amp / math.sqrt(norm_sq)
        elif abs(norm_sq - 1.0) > NORMALIZATION_TOLERANCE:
            raise NotNormalized(norm_sq)
        amp.setflags(write=False)
        self.__amp = amp

    @property
    def d(self):
        return self.__amp.shape[0]

    @property
    def amp(self):
        return self.__amp

    def vector(self):
        """Amplitudes flattened in the ``|j> (x) |k>`` product basis."""
        return self.__amp.reshape(-1)

    def expectation(self, operator):
        psi = self.vector()
        return complex(np.vdot(psi, np.asarray(operator).dot(psi)))

    def __repr__(self):
        return 'BipartitePureState(d={})'.format(self.d)

    def __eq__(self, other):
        return self.__class__ == other.__class__ and np.array_equal(self.amp, other.amp)

    def __ne__(self, other):
        return not self.__eq__(other)


class TruncatedTMSS(object):
    """Two-mode squeezed vacuum cut at Fock number ``t``: ``N(xi) sum_{n<=t} xi^n |n, n>``."""

    def __init__(self, r, t):
        if r < 0:
            raise InvalidParameter('r', r, 'r >= 0')
        if t < 0 or int(t) != t:
            raise InvalidParameter('t', t, 'a non-negative integer')
        self.__r = float(r)
        self.__t = int(t)

    @property
    def r(self):
        return self.__r

    @property
    def t(self):
        return self.__t

    @property
    def xi(self):
        return math.tanh(self.__r)

    @property
    def norm_sq(self):
        return truncated_norm_sq(self.xi, self.__t)

    @property
    def norm(self):
        return math.sqrt(self.norm_sq)

    def populations(self):
        """Schmidt weights ``N^2 xi^(2n)``, n = 0..t."""
        return self.norm_sq * self.xi ** (2 * np.arange(self.__t + 1))

    def to_state(self):
        return BipartitePureState(np.diag(np.sqrt(self.populations())).astype(complex))

    def __repr__(self):
        return 'TruncatedTMSS(r={}, t={})'.format(self.r, self.t)

    def __eq__(self, other):
        return self.__class__ == other.__class__ and (self.r, self.t) == (other.r, other.t)


class DensityMatrix(object):
    """Single-mode state on a ``d``-dimensional space.

    Raises:
        `InvalidDensityMatrix`: When the matrix is not square, Hermitian, unit-trace or positive.
    """

    def __init__(self, rho):
        rho = np.array(rho, dtype=complex)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise InvalidDensityMatrix('shape {} is not square'.format(rho.shape))
        asymmetry = float(np.max(np.abs(rho - rho.conj().T)))
        if asymmetry > HERMITICITY_TOLERANCE:
            raise InvalidDensityMatrix('not Hermitian (max deviation {!r})'.format(asymmetry))
        trace = complex(np.trace(rho))
        if abs(trace - 1.0) > NORMALIZATION_TOLERANCE:
            raise InvalidDensityMatrix('trace is {!r}'.format(trace))
        smallest = float(np.min(np.linalg.eigvalsh(rho)))
        if smallest < -EIGENVALUE_TOLERANCE:
            raise InvalidDensityMatrix('negative eigenvalue {!r}'.format(smallest))
        rho.setflags(write=False)
        self.__rho = rho

    @property
    def d(self):
        return self.__rho.shape[0]

    @property
    def rho(self):
        return self.__rho

    def purity(self):
        """``Tr rho^2``."""
        return float(np.real(np.sum(self.__rho * self.__rho.T)))

    def expectation(self, operator):
        return complex(np.trace(self.__rho.dot(operator)))

    def __repr__(self):
        return 'DensityMatrix(d={})'.format(self.d)


class HioeEberlyBasis(object):
    """Generalized Bloch operators ``u_jk``, ``v_jk`` (j < k) and ``w_l`` (l = 1..d-1).

    Indices are 0-based here: ``u_operators[(j, k)]`` couples levels ``j`` and ``k``,
    ``w_operators[l - 1]`` is ``w_l``.
    """

    def __init__(self, d):
        if d < 1:
            raise InvalidDimension(expected='d >= 1', actual=d)
        self.__d = d
        self.__u = {}
        self.__v = {}
        for j in range(d):
            for k in range(j + 1, d):
                ket_k_bra_j = _outer(d, k, j)
                ket_j_bra_k = _outer(d, j, k)
                self.__u[(j, k)] = ket_k_bra_j + ket_j_bra_k
                self.__v[(j, k)] = 1j * (ket_k_bra_j - ket_j_bra_k)
        self.__w = []
        for l in range(1, d):
            diagonal = np.zeros(d)
            diagonal[:l] = 1.0
            diagonal[l] = -float(l)
            self.__w.append(math.sqrt(2.0 / (l * (l + 1))) * np.diag(diagonal).astype(complex))

    @property
    def d(self):
        return self.__d

    @property
    def u_operators(self):
        return dict(self.__u)

    @property
    def v_operators(self):
        return dict(self.__v)

    @property
    def w_operators(self):
        return list(self.__w)

    def operators(self):
        pairs = sorted(self.__u)
        return [self.__u[p] for p in pairs] + [self.__v[p] for p in pairs] + list(self.__w)

    def coherence_components(self, rho):
        """Expectations of every ``u_jk`` and ``v_jk`` on ``rho``."""
        pairs = sorted(self.__u)
        return ([rho.expectation(self.__u[p]).real for p in pairs],
                [rho.expectation(self.__v[p]).real for p in pairs])

    def population_components(self, rho):
        """Expectations of every ``w_l`` on ``rho``."""
        return [rho.expectation(w).real for w in self.__w]

    def __len__(self):
        return len(self.__u) + len(self.__v) + len(self.__w)


def _outer(d, row, column):
    m = np.zeros((d, d), dtype=complex)
    m[row, column] = 1.0
    return m


def truncated_norm_sq(xi, t):
    """``N(xi)^2 = (1 - xi^2) / (1 - xi^(2t+2))``, equal to 1 at ``xi = 0``."""
    if xi > SERIES_THRESHOLD:
        return 1.0 / float(np.sum(xi ** (2 * np.arange(t + 1))))
    return (1.0 - xi ** 2) / (1.0 - xi ** (2 * t + 2))


def make_truncated_tmss(r, t):
    """Amplitude table of the truncated two-mode squeezed state, ``d = t + 1``.

    Raises:
        `InvalidParameter`: When ``r < 0`` or ``t < 0``.
    """
    return TruncatedTMSS(r, t).to_state()


def random_pure_state(d, rng):
    """Normalized table of i.i.d. standard complex Gaussian amplitudes drawn from ``rng``."""
    if d < 2:
        raise InvalidDimension(expected='d >= 2', actual=d)
    amp = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return BipartitePureState(amp, normalize=True)


def reduce(state, which=Subsystem.A):
    """Reduced state of subsystem ``which`` (``'a'`` or ``'b'``)."""
    amp = state.amp
    if Subsystem.of(which) is Subsystem.A:
        rho = amp.dot(amp.conj().T)
    else:
        rho = amp.T.dot(amp.conj())
    return DensityMatrix(rho)


def apply_local_unitary(state, unitary, which=Subsystem.A):
    unitary = np.asarray(unitary, dtype=complex)
    if unitary.shape != (state.d, state.d):
        raise InvalidDimension(expected=(state.d, state.d), actual=unitary.shape)
    if Subsystem.of(which) is Subsystem.A:
        amp = unitary.dot(state.amp)
    else:
        amp = state.amp.dot(unitary.T)
    return BipartitePureState(amp, normalize=True)


def visibility_sq(rho):
    """``V^2 = 2 sum_{j != k} |rho_jk|^2``."""
    m = rho.rho
    off_diagonal = np.abs(m) ** 2
    return float(2.0 * (np.sum(off_diagonal) - np.sum(np.diag(off_diagonal))))


def predictability_sq(rho):
    """``P^2 = 2 [sum_j rho_jj^2 - 1/d]``."""
    populations = np.real(np.diag(rho.rho))
    return float(2.0 * (np.sum(populations ** 2) - 1.0 / rho.d))


def visibility_sq_bloch(rho, basis=None):
    if basis is None:
        basis = HioeEberlyBasis(rho.d)
    u_values, v_values = basis.coherence_components(rho)
    return float(np.sum(np.square(u_values)) + np.sum(np.square(v_values)))


def predictability_sq_bloch(rho, basis=None):
    if basis is None:
        basis = HioeEberlyBasis(rho.d)
    return float(np.sum(np.square(basis.population_components(rho))))


def single_party_sq(rho):
    """``S^2 = V^2 + P^2 = 2 Tr rho^2 - 2/d``, invariant under local unitaries."""
    return visibility_sq(rho) + predictability_sq(rho)


def linear_entropy(rho):
    return 1.0 - rho.purity()


def iconcurrence_sq(rho):
    """``C_I^2 = 2 (1 - Tr rho^2)`` of the reduced state of a pure bipartite state."""
    return 2.0 * (1.0 - rho.purity())


def concurrence_2qubit(state):
    """``|<psi*| sigma_y (x) sigma_y |psi>| = 2 |a00 a11 - a01 a10|``.

    Raises:
        `InvalidDimension`: When the state is not a two-qubit state.
    """
    _require_qubits(state)
    a = state.amp
    return float(2.0 * abs(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]))


def triality_check(state, which=Subsystem.A):
    """Visibility, predictability and concurrence of a two-qubit state from full-state expectations.

    Returns:
        :obj:`TrialityReport` - ``(V^2, P^2, C^2, V^2 + P^2 + C^2 - 1)``.
    """
    _require_qubits(state)
    identity = np.eye(2, dtype=complex)
    if Subsystem.of(which) is Subsystem.A:
        sigma_plus, sigma_z = np.kron(_SIGMA_PLUS, identity), np.kron(_SIGMA_Z, identity)
    else:
        sigma_plus, sigma_z = np.kron(identity, _SIGMA_PLUS), np.kron(identity, _SIGMA_Z)
    visibility = 2.0 * abs(state.expectation(sigma_plus))
    predictability = abs(state.expectation(sigma_z))
    concurrence = concurrence_2qubit(state)
    v_sq, p_sq, c_sq = visibility ** 2, predictability ** 2, concurrence ** 2
    return TrialityReport(visibility_sq=v_sq,
                          predictability_sq=p_sq,
                          concurrence_sq=c_sq,
                          residual=v_sq + p_sq + c_sq - 1.0)


def _require_qubits(state):
    if state.d != 2:
        raise InvalidDimension(expected=2, actual=state.d)


def annihilation_operator(dimension):
    return np.diag(np.sqrt(np.arange(1, dimension, dtype=float)), k=1).astype(complex)


def quadrature_operators(dimension):
    """``x = (a + a^dag)/sqrt 2`` and ``p = (a - a^dag)/(i sqrt 2)``; the vacuum has unit VM."""
    a = annihilation_operator(dimension)
    a_dag = a.conj().T
    return (a + a_dag) / math.sqrt(2.0), (a - a_dag) / (1j * math.sqrt(2.0))


def quadrature_vm_oracle(state):
    """Variance matrix ``V_jk = <{q_j, q_k}> - 2 <q_j><q_k>`` from operator matrix elements.

    The state is embedded in dimension ``d + 1`` so that ``a^dag`` acting on the top
    occupied level is represented exactly.

    Returns:
        :class:`~cvcomp.gaussian_vm.VarianceMatrix`
    """
    # pylint:disable=import-outside-toplevel
    from cvcomp.gaussian_vm import VarianceMatrix

    dimension = state.d + 1
    psi = np.zeros((dimension, dimension), dtype=complex)
    psi[:state.d, :state.d] = state.amp
    x, p = quadrature_operators(dimension)
    # mode a acts on the row index, mode b on the column index
    images = [x.dot(psi), p.dot(psi), psi.dot(x.T), psi.dot(p.T)]
    means = [np.vdot(psi, image).real for image in images]
    v = np.empty((4, 4))
    for j in range(4):
        for k in range(j, 4):
            anticommutator = 2.0 * np.vdot(images[j], images[k]).real
            v[j, k] = v[k, j] = anticommutator - 2.0 * means[j] * means[k]
    return VarianceMatrix(v)


def tmss_fidelity_oracle(r, t, reference_cutoff=None):
    """``|<psi(t)|TMSS>|^2`` as an explicit overlap of amplitude tables.

    The TMSS amplitudes ``xi^n / cosh r`` are laid out up to ``reference_cutoff``;
    only levels ``n <= t`` contribute, so any cut-off ``>= t`` gives the exact value.
    """
    if reference_cutoff is None:
        reference_cutoff = t + 1
    if reference_cutoff < t:
        raise InvalidParameter('reference_cutoff', reference_cutoff, 'reference_cutoff >= t')
    truncated = make_truncated_tmss(r, t)
    dimension = reference_cutoff + 1
    psi = np.zeros((dimension, dimension), dtype=complex)
    psi[:truncated.d, :truncated.d] = truncated.amp
    xi = math.tanh(r)
    tmss = np.diag(xi ** np.arange(dimension) / math.cosh(r)).astype(complex)
    return float(abs(np.vdot(psi, tmss)) ** 2)
