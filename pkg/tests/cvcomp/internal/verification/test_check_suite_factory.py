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
import unittest

from cvcomp.exceptions import InvalidGrid, InvalidSeed
from cvcomp.internal.verification.check_runner import CheckRunner
from cvcomp.internal.verification.check_suite_factory import CheckSuiteFactory

CHECK_NAMES = [
    u'budget_identity',
    u'xi_identity',
    u'vm_three_way_agreement',
    u'vm_asymptotics',
    u'schmidt_purity_approximation',
    u'iconcurrence_from_vm_limit',
    u'triality',
    u'd_level_bound',
    u'hioe_eberly_agreement',
    u'antisqueeze_reduction',
    u'pure_symplectic_spectrum',
    u'eigensolver_agreement',
    u'ppt_tmss',
]


class TestCheckSuiteFactory(unittest.TestCase):
    def setUp(self):
        self.grid = dict(r_values=[0.0, 0.5, 1.0, 2.0, 3.0], t_values=[1, 2, 10, 50], states=50)

    def test_create_checks(self):
        # when
        checks = CheckSuiteFactory(**self.grid).create_checks()

        # then
        self.assertEqual(CHECK_NAMES, [check.name for check in checks])

    def test_all_checks_pass(self):
        # given
        checks = CheckSuiteFactory(**self.grid).create_checks()

        # when
        results = CheckRunner(checks).run()

        # then
        for result in results:
            self.assertTrue(result.passed, '{} residual {!r}'.format(result.name, result.max_residual))

    def test_default_grid_passes(self):
        # when
        results = CheckRunner(CheckSuiteFactory(states=200).create_checks()).run()

        # then
        self.assertEqual([], [result.name for result in results if not result.passed])

    def test_fault_injection_fails_xi_identity_only(self):
        # given
        checks = CheckSuiteFactory(inject_fault=True, **self.grid).create_checks()

        # when
        with self.assertLogs('cvcomp.internal.verification.check_runner', level='WARNING'):
            results = CheckRunner(checks).run()

        # then
        self.assertEqual([u'xi_identity'], [result.name for result in results if not result.passed])

    def test_random_states_are_reproducible(self):
        # given
        first = CheckSuiteFactory(seed=5, **self.grid).create_checks()
        second = CheckSuiteFactory(seed=5, **self.grid).create_checks()

        # expect
        self.assertEqual(first[6].evaluate(), second[6].evaluate())

    def test_rejects_empty_grid(self):
        # expect
        with self.assertRaises(InvalidGrid):
            CheckSuiteFactory(r_values=[], t_values=[1])
        with self.assertRaises(InvalidGrid):
            CheckSuiteFactory(r_values=[0.5], t_values=[])
        with self.assertRaises(InvalidGrid):
            CheckSuiteFactory(states=0)

    def test_rejects_invalid_seed(self):
        for seed in (-1, 1.5):
            # expect
            with self.assertRaises(InvalidSeed):
                CheckSuiteFactory(seed=seed)


if __name__ == '__main__':
    unittest.main()
