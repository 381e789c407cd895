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

import mock

from cvcomp.git_info import GitInfo
from cvcomp.utils import get_git_info


class TestGitInfo(unittest.TestCase):

    @mock.patch('git.Repo', return_value=mock.MagicMock())
    def test_getting_git_info(self, repo_mock):
        # given
        repo = repo_mock.return_value
        repo.head.commit.hexsha = 'sha'

        # when
        git_info = get_git_info('.')

        # then
        self.assertEqual(GitInfo(commit_id='sha'), git_info)
        repo.is_dirty.assert_not_called()

    @mock.patch('git.Repo', side_effect=Exception('not a repository'))
    def test_missing_repository(self, _):
        # expect
        self.assertIsNone(get_git_info('/tmp'))

    def test_metadata(self):
        # expect
        self.assertEqual({'git_commit': 'abc123'}, GitInfo(commit_id='abc123').to_metadata())

    def test_commit_is_required(self):
        # expect
        with self.assertRaises(TypeError):
            GitInfo(commit_id=None)


if __name__ == '__main__':
    unittest.main()
