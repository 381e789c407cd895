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
"""Simulated quadrature measurements on zero-mean Gaussian states and plug-in VM estimation.

With ``V_jk = <{q_j, q_k}>`` the quadrature covariance is ``V / 2``; phase-space points are
drawn from that Wigner distribution directly, one joint 4-vector per shot.
"""
import logging
import math
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.linalg import LinAlgError, cholesky

from cvcomp.complementarity import iconcurrence_from_vm
from cvcomp.exceptions import InvalidSeed, InvalidShots, NonPhysicalVarianceMatrix, NotPositiveDefinite
from cvcomp.gaussian_vm import VarianceMatrix, symplectic_eigenvalues
from cvcomp.utils import resolve_workers

_logger = logging.getLogger(__name__)

RNG_ALGORITHM = 'PCG64'
DEFAULT_CHUNK_SIZE = 250000

ComplementarityEstimate = namedtuple('ComplementarityEstimate',
                                     ['c_i_sq', 'p_context', 'ci_halfwidth', 'degenerate'])


class SampleBatch(object):
    """Measurement record: ``shots`` joint draws of ``(x_a, p_a, x_b, p_b)``."""

    def __init__(self, quadratures, seed, chunk_size=DEFAULT_CHUNK_SIZE, rng_algorithm=RNG_ALGORITHM):
        quadratures = np.asarray(quadratures, dtype=float)
        quadratures.setflags(write=False)
        self.__quadratures = quadratures
        self.__seed = seed
        self.__chunk_size = chunk_size
        self.__rng_algorithm = rng_algorithm

    @property
    def shots(self):
        return self.__quadratures.shape[0]

    @property
    def quadrature_pairs(self):
        return self.__quadratures

    @property
    def seed(self):
        return self.__seed

    @property
    def chunk_size(self):
        return self.__chunk_size

    @property
    def rng_algorithm(self):
        return self.__rng_algorithm

    def __repr__(self):
        return 'SampleBatch(shots={}, seed={}, rng={})'.format(self.shots, self.seed, self.rng_algorithm)


class VMEstimate(object):
    """Sample variance matrix with entrywise standard errors."""

    def __init__(self, v_hat, standard_errors, shots):
        v_hat = np.array(v_hat, dtype=float)
        standard_errors = np.array(standard_errors, dtype=float)
        v_hat.setflags(write=False)
        standard_errors.setflags(write=False)
        self.__v_hat = v_hat
        self.__standard_errors = standard_errors
        self.__shots = shots

    @classmethod
    def exact(cls, v, shots=0):
        """Noise-free estimate of ``v``."""
        m = v.m if isinstance(v, VarianceMatrix) else np.asarray(v, dtype=float)
        return cls(m, np.zeros_like(m), shots)

    @property
    def v_hat(self):
        return self.__v_hat

    @property
    def standard_errors(self):
        return self.__standard_errors

    @property
    def shots(self):
        return self.__shots

    def covers(self, v, sigmas=3.0):
        """Entrywise ``|v_hat - v| <= sigmas * SE``."""
        m = v.m if isinstance(v, VarianceMatrix) else np.asarray(v, dtype=float)
        return np.abs(self.__v_hat - m) <= sigmas * self.__standard_errors

    def __repr__(self):
        return 'VMEstimate(shots={})'.format(self.shots)


def _sample_chunk(factor, seed, chunk_index, size):
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, chunk_index])))
    return rng.standard_normal((size, 4)).dot(factor.T)


def sample(v, shots, seed, chunk_size=DEFAULT_CHUNK_SIZE, workers=None):
    """Draw ``shots`` zero-mean phase-space points with covariance ``V / 2``.

    Chunk ``i`` uses a generator seeded with ``(seed, i)``, so the batch depends on
    ``seed`` and ``chunk_size`` only, never on ``workers``.

    Raises:
        `InvalidShots`: When ``shots < 1``.
        `InvalidSeed`: When ``seed`` is negative or not an integer.
        `NonPhysicalVarianceMatrix`: When ``v`` violates the uncertainty principle.
        `NotPositiveDefinite`: When ``V / 2`` has no Cholesky factor.
    """
    if shots < 1:
        raise InvalidShots(shots, 1)
    if not isinstance(seed, (int, np.integer)) or seed < 0:
        raise InvalidSeed(seed)
    v = v if isinstance(v, VarianceMatrix) else VarianceMatrix(v)
    spectrum = symplectic_eigenvalues(v)
    if not spectrum.physical:
        raise NonPhysicalVarianceMatrix('smallest symplectic eigenvalue {!r} < 1'.format(spectrum.nu_minus))
    try:
        factor = cholesky(v.m / 2.0, lower=True)
    except LinAlgError:
        raise NotPositiveDefinite()

    sizes = [min(chunk_size, shots - start) for start in range(0, shots, chunk_size)]
    workers = resolve_workers(workers)
    if workers > len(sizes):
        _logger.debug('%d workers requested for %d chunks', workers, len(sizes))
    if workers == 1:
        chunks = [_sample_chunk(factor, seed, i, size) for i, size in enumerate(sizes)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            chunks = list(executor.map(lambda item: _sample_chunk(factor, seed, item[0], item[1]),
                                       enumerate(sizes)))
    return SampleBatch(np.vstack(chunks), seed=seed, chunk_size=chunk_size)


def estimate_vm(batch):
    """Plug-in estimate ``V_jk = 2 <q_j q_k> - 2 <q_j><q_k>`` with Gaussian standard errors.

    The standard error of ``V_jk`` is ``sqrt((V_jj V_kk + V_jk^2) / shots)``, which gives
    ``V_jj sqrt(2 / shots)`` on the diagonal.

    Raises:
        `InvalidShots`: When the batch holds fewer than two shots.
    """
    if batch.shots < 2:
        raise InvalidShots(batch.shots, 2)
    q = batch.quadrature_pairs
    shots = batch.shots
    means = q.mean(axis=0)
    second_moments = q.T.dot(q) / shots
    v_hat = 2.0 * (second_moments - np.outer(means, means))
    v_hat = (v_hat + v_hat.T) / 2.0
    diagonal = np.diag(v_hat)
    standard_errors = np.sqrt((np.outer(diagonal, diagonal) + v_hat ** 2) / shots)
    return VMEstimate(v_hat, standard_errors, shots)


def estimate_complementarity(estimate):
    """I-concurrence from the estimated ``V11`` with a first-order error bar.

    Returns:
        :obj:`ComplementarityEstimate` - ``c_i_sq = 2 (1 - 1/V11)``, ``p_context = 2 - c_i_sq``,
        ``ci_halfwidth = 2 SE(V11) / V11^2`` (one standard error) and a ``degenerate`` flag
        set when ``V11 < 1`` was clamped.
    """
    v11 = float(estimate.v_hat[0, 0])
    se11 = float(estimate.standard_errors[0, 0])
    degenerate = v11 < 1.0
    if degenerate:
        _logger.warning('Estimated V11 = %s is below the vacuum value; clamped to 1.', v11)
        v11 = 1.0
    c_i_sq = iconcurrence_from_vm(v11)
    return ComplementarityEstimate(c_i_sq=c_i_sq,
                                   p_context=2.0 - c_i_sq,
                                   ci_halfwidth=2.0 * se11 / v11 ** 2,
                                   degenerate=degenerate)


def sample_correlation(batch, j, k):
    """Pearson correlation of quadratures ``j`` and ``k`` and its standard error ``(1 - rho^2)/sqrt(n)``."""
    q = batch.quadrature_pairs
    rho = float(np.corrcoef(q[:, j], q[:, k])[0, 1])
    return rho, (1.0 - rho ** 2) / math.sqrt(batch.shots)
