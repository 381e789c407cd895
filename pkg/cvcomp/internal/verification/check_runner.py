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
import logging

from cvcomp.internal.verification.check import CheckResult

_logger = logging.getLogger(__name__)


class CheckRunner(object):
    def __init__(self, checks):
        self.__checks = checks

    def run(self):
        """
        :return: list[CheckResult], in declaration order.
        """
        return [self.__result_for_check(check) for check in self.__checks]

    @staticmethod
    def __result_for_check(check):
        residual = check.evaluate()
        passed = residual <= check.tolerance
        if not passed:
            _logger.warning('Check %s failed: residual %r exceeds %r', check.name, residual, check.tolerance)
        return CheckResult(name=check.name, passed=passed, max_residual=residual, tolerance=check.tolerance)
