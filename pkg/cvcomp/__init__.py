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
"""Complementarity of single-party and bipartite properties of two-mode squeezed states.

The library is split by representation: :mod:`cvcomp.fock_state` works with amplitude
tables in truncated Fock space, :mod:`cvcomp.gaussian_vm` with 4x4 variance matrices,
:mod:`cvcomp.complementarity` holds the closed forms linking the two and
:mod:`cvcomp.homodyne` estimates variance matrices from simulated quadrature data.
"""
from cvcomp._version import __version__
from cvcomp.exceptions import CvCompException
