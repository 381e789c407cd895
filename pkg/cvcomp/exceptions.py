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
from cvcomp import envs


class CvCompException(Exception):
    pass


class InvalidParameter(CvCompException):
    def __init__(self, name, value, constraint):
        super(InvalidParameter, self).__init__(
            "Invalid value of parameter '{}': {}. Expected {}.".format(name, value, constraint))


class NotNormalized(CvCompException):
    def __init__(self, norm_sq):
        super(NotNormalized, self).__init__(
            "State is not normalized: sum of squared amplitudes is {!r}. "
            "Pass normalize=True to rescale it.".format(norm_sq))


class InvalidDimension(CvCompException):
    def __init__(self, expected, actual):
        super(InvalidDimension, self).__init__(
            'Invalid local dimension. Expected: {expected}, actual: {actual}.'.format(
                expected=expected, actual=actual))


class InvalidSubsystem(CvCompException):
    def __init__(self, which):
        super(InvalidSubsystem, self).__init__(
            "Unknown subsystem '{}'. Use 'a' or 'b'.".format(which))


class InvalidDensityMatrix(CvCompException):
    def __init__(self, reason):
        super(InvalidDensityMatrix, self).__init__('Invalid density matrix: {}.'.format(reason))


class NotSymmetric(CvCompException):
    def __init__(self, max_asymmetry):
        super(NotSymmetric, self).__init__(
            'Variance matrix is not symmetric: max |m_jk - m_kj| = {!r}.'.format(max_asymmetry))


class NotSymplectic(CvCompException):
    def __init__(self, deviation):
        super(NotSymplectic, self).__init__(
            'Transform is not symplectic: max |S^T Omega S - Omega| = {!r}.'.format(deviation))


class NonPhysicalVarianceMatrix(CvCompException):
    def __init__(self, reason):
        super(NonPhysicalVarianceMatrix, self).__init__(
            'Variance matrix does not describe a physical state: {}.'.format(reason))


class NotPositiveDefinite(CvCompException):
    def __init__(self):
        super(NotPositiveDefinite, self).__init__(
            'Sampling covariance V/2 is not positive definite and cannot be factorized.')


class InvalidVarianceElement(CvCompException):
    def __init__(self, name, value, constraint):
        super(InvalidVarianceElement, self).__init__(
            "Variance matrix element {} = {!r} is out of range. Expected {}.".format(name, value, constraint))


class InvalidGrid(CvCompException):
    def __init__(self, reason):
        super(InvalidGrid, self).__init__('Invalid sweep grid: {}.'.format(reason))


class InvalidShots(CvCompException):
    def __init__(self, shots, minimum):
        super(InvalidShots, self).__init__(
            'Invalid number of shots: {}. At least {} required.'.format(shots, minimum))


class InvalidSeed(CvCompException):
    def __init__(self, seed):
        super(InvalidSeed, self).__init__(
            'Invalid seed: {!r}. Seeds must be non-negative integers.'.format(seed))


class UnknownQuantity(CvCompException):
    def __init__(self, quantity):
        super(UnknownQuantity, self).__init__(
            "Unknown sweep quantity '{}'.".format(quantity))


class InvalidWorkerCount(CvCompException):
    def __init__(self, value):
        super(InvalidWorkerCount, self).__init__(
            'Invalid worker count "{}". Set {} to a positive integer or pass it explicitly.'
            .format(value, envs.WORKERS_ENV_NAME))
