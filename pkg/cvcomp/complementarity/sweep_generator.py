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
from concurrent.futures import ThreadPoolExecutor

import pandas as pd

from cvcomp.complementarity.quantity_factory import QuantityFactory
from cvcomp.utils import resolve_workers

_logger = logging.getLogger(__name__)

INDEX_COLUMNS = ['r', 't', 'xi']


def generate_sweep(grid, workers=None, quantity_factory=None):
    """Evaluate ``grid.quantity`` on every ``(r, t)`` point.

    Rows are ordered row-major by the declared axes (``r`` outer, ``t`` inner) whatever
    the number of workers.

    Args:
        grid (:class:`~cvcomp.complementarity.SweepGrid`): axes and quantity.
        workers (:obj:`int`, optional, default is ``None``):
            Threads evaluating ``r`` rows. If ``None``, ``CVCOMP_WORKERS`` or 1 is used.

    Returns:
        :obj:`pandas.DataFrame` with columns ``r, t, xi, value`` (and ``value2`` for
        ``vm_discrepancy``).
    """
    quantity = (quantity_factory or QuantityFactory()).create(grid.quantity)
    t_values = grid.t_values

    def evaluate_row(r):
        xi = math.tanh(r)
        return [(r, t, xi) + tuple(quantity.values(r, t)) for t in t_values]

    workers = resolve_workers(workers)
    _logger.debug('Evaluating %s on %d grid points with %d workers', quantity.name(), grid.size, workers)
    if workers == 1:
        rows = [evaluate_row(r) for r in grid.r_values]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(evaluate_row, grid.r_values))

    table = pd.DataFrame([row for block in rows for row in block],
                         columns=INDEX_COLUMNS + list(quantity.columns()))
    table['t'] = table['t'].astype(int)
    return table
