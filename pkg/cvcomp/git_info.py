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


class GitInfo(object):
    """Source revision recorded in the metadata block of generated data files.

    Args:
        commit_id (:obj:`str`): commit id sha.
    """
    def __init__(self, commit_id):
        if commit_id is None:
            raise TypeError("commit_id must not be None")

        self.__commit_id = commit_id

    @property
    def commit_id(self):
        return self.__commit_id

    def to_metadata(self):
        return {'git_commit': self.__commit_id}

    def __eq__(self, o):
        return isinstance(o, GitInfo) and self.commit_id == o.commit_id

    def __ne__(self, o):
        return not self.__eq__(o)

    def __repr__(self):
        return 'GitInfo({})'.format(self.commit_id)
