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
from collections import namedtuple

CheckResult = namedtuple('CheckResult', ['name', 'passed', 'max_residual', 'tolerance'])


class Check(object):
    def __init__(self, name, description, tolerance, evaluator):
        self.__name = name
        self.__description = description
        self.__tolerance = tolerance
        self.__evaluator = evaluator

    @property
    def name(self):
        return self.__name

    @property
    def description(self):
        return self.__description

    @property
    def tolerance(self):
        return self.__tolerance

    def evaluate(self):
        """
        :return: Largest residual observed (float, ``inf`` for a structural violation).
        """
        return float(self.__evaluator())

    def __repr__(self):
        return 'Check(name={}, description={}, tolerance={})'.format(self.name, self.description, self.tolerance)

    def __eq__(self, other):
        return self.__class__ == other.__class__ and repr(self) == repr(other)
