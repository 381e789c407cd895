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
import io
import json
import logging
from collections import OrderedDict

from cvcomp._version import __version__
from cvcomp.utils import get_git_info

_logger = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = '%.17g'
CONVENTIONS = 'vacuum VM = identity; x = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2))'


class OutputFormat(object):
    CSV = u'csv'
    JSON = u'json'

    @classmethod
    def all(cls):
        return [cls.CSV, cls.JSON]


def build_metadata(entries, repo_path=None):
    """Metadata block shared by every data file: tool version, conventions and source revision.

    Nothing time-dependent goes in, so a fixed configuration always produces the same bytes.
    """
    metadata = OrderedDict()
    metadata['tool'] = 'cvcomp'
    metadata['version'] = __version__
    metadata['conventions'] = CONVENTIONS
    git_info = get_git_info(repo_path)
    if git_info is not None:
        metadata.update(git_info.to_metadata())
    for key in sorted(entries):
        metadata[key] = entries[key]
    return metadata


def render_sweep(table, metadata, output_format=OutputFormat.CSV):
    """Serialize a sweep table.

    CSV: ``# key: value`` comment lines, mandatory header row, 17 significant digits.
    JSON: an object with ``metadata`` and ``rows`` (one object per grid point).
    """
    if output_format == OutputFormat.CSV:
        stream = io.StringIO()
        for key, value in metadata.items():
            stream.write(u'# {}: {}\n'.format(key, _format_metadata_value(value)))
        table.to_csv(stream, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator='\n')
        return stream.getvalue()
    elif output_format == OutputFormat.JSON:
        rows = [
            OrderedDict((column, int(value) if column == 't' else float(value))
                        for column, value in zip(table.columns, record))
            for record in table.itertuples(index=False, name=None)
        ]
        return json.dumps(OrderedDict([('metadata', metadata), ('rows', rows)]), indent=2) + u'\n'
    else:
        raise ValueError(str(u'Invalid output format: {}'.format(output_format)))


def write_sweep(table, metadata, path, output_format=OutputFormat.CSV):
    content = render_sweep(table, metadata, output_format)
    with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(content)
    _logger.info('Wrote %d rows to %s', len(table), path)


def _format_metadata_value(value):
    if isinstance(value, (list, tuple)):
        return ','.join(str(v) for v in value)
    return str(value)
