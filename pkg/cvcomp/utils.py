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
import math
import os

import numpy as np

from cvcomp import envs
from cvcomp.exceptions import InvalidGrid, InvalidWorkerCount
from cvcomp.git_info import GitInfo

_logger = logging.getLogger(__name__)

# Grid axes are rounded to this many decimals so that 0.1 * 3 lands on 0.3.
_GRID_DECIMALS = 12


def is_strictly_increasing(values):
    return all(left < right for left, right in zip(values, values[1:]))


def inclusive_range(start, stop, step):
    """Evenly spaced values from ``start`` to ``stop`` (inclusive when it lies on the grid).

    Raises:
        `InvalidGrid`: When ``step`` is not positive or the range is empty.
    """
    if step <= 0:
        raise InvalidGrid('step must be positive, got {}'.format(step))
    if stop < start:
        raise InvalidGrid('range [{}, {}] is empty'.format(start, stop))
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + step * i, _GRID_DECIMALS) for i in range(count)]


def max_abs_deviation(left, right):
    return float(np.max(np.abs(np.asarray(left) - np.asarray(right))))


def resolve_workers(workers=None):
    """Worker count from the argument, then ``CVCOMP_WORKERS``, then 1."""
    if workers is None:
        workers = os.getenv(envs.WORKERS_ENV_NAME)
    if workers is None:
        return 1
    try:
        workers = int(workers)
    except (TypeError, ValueError):
        raise InvalidWorkerCount(workers)
    if workers < 1:
        raise InvalidWorkerCount(workers)
    return workers


def resolve_output_path(path):
    """Joins relative ``path`` with ``CVCOMP_OUTPUT_DIR`` when that variable is set."""
    if path is None or os.path.isabs(path):
        return path
    output_dir = os.getenv(envs.OUTPUT_DIR_ENV_NAME)
    if output_dir:
        return os.path.join(output_dir, path)
    return path


def get_git_info(repo_path=None):
    """Retrieve the commit generated data comes from.

    If attempt fails, ``None`` will be returned.

    Args:
        repo_path (:obj:`str`, optional, default is ``None``):

            | Path to the repository from which extract information about git.
            | If ``None`` is passed, calling ``get_git_info`` is equivalent to calling
              ``git.Repo(search_parent_directories=True)``.

    Returns:
        :class:`~cvcomp.git_info.GitInfo` - The checked out commit.

    Examples:

        .. code:: python3

            # Get git info from the current directory
            git_info = get_git_info('.')

    """
    try:
        # pylint:disable=bad-option-value,import-outside-toplevel
        import git

        repo = git.Repo(repo_path, search_parent_directories=True)
        return GitInfo(commit_id=repo.head.commit.hexsha)
    except Exception:  # pylint: disable=broad-except
        _logger.debug('No git repository found at %s', repo_path)
        return None
