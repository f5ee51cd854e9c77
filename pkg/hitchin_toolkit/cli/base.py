# Copyright 2026 The hitchin-toolkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.
import functools
import os
import sys

import jsonschema
import numpy as np
from oslo_log import log as logging
from oslo_serialization import jsonutils as json
import pbr.version
import prettytable

from hitchin_toolkit.common import models
from hitchin_toolkit import config
from hitchin_toolkit import exceptions
from hitchin_toolkit.schemas.v1 import report_schema

LOG = logging.getLogger(__name__)
CONF = config.CONF

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def tool_version():
    try:
        return pbr.version.VersionInfo('hitchin-toolkit').version_string()
    except Exception:
        # not installed, e.g. running from a source tree
        return '0.0.0'


def handle_errors(f):
    """A decorator that turns toolkit errors into process exit codes.

    Invalid input gives 2, a failed quantitative check gives 1 and a normal
    return gives 0 unless the command returned a code itself.
    """

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            result = f(*args, **kwargs)
        except exceptions.InvalidInput as e:
            LOG.error('Invalid input: %s', e)
            return EXIT_USAGE
        except (exceptions.QuantitativeFailure,
                exceptions.DivergenceError,
                exceptions.CalibrationFailure) as e:
            LOG.error('Check failed: %s', e)
            return EXIT_FAILURE
        return EXIT_OK if result is None else result

    return wrapper


def parse_range(text):
    """Values of a start:stop:step range, stop included within step/2.

    A single number is a range of one value.

    :raises InvalidParameter: on malformed or empty ranges
    """
    parts = str(text).split(':')
    try:
        numbers = [float(p) for p in parts]
    except ValueError:
        raise exceptions.InvalidParameter(name='range', value=text,
                                          reason='expected start:stop:step')
    if len(numbers) == 1:
        return numbers
    if len(numbers) != 3:
        raise exceptions.InvalidParameter(name='range', value=text,
                                          reason='expected start:stop:step')
    start, stop, step = numbers
    if not step > 0.0:
        raise exceptions.InvalidParameter(name='range', value=text,
                                          reason='step must be positive')
    if stop < start:
        raise exceptions.InvalidParameter(name='range', value=text,
                                          reason='range is empty')
    count = int(np.floor((stop - start) / step + 0.5)) + 1
    return [start + i * step for i in range(count)]


def parse_list(text):
    try:
        values = [float(v) for v in str(text).split(',') if v.strip()]
    except ValueError:
        raise exceptions.InvalidParameter(name='list', value=text,
                                          reason='expected numbers')
    if not values:
        raise exceptions.InvalidParameter(name='list', value=text,
                                          reason='list is empty')
    return values


def print_table(field_names, rows):
    table = prettytable.PrettyTable(field_names)
    table.align = 'l'
    for row in rows:
        table.add_row([_cell(v) for v in row])
    sys.stdout.write('%s\n' % table)


def _cell(value):
    if isinstance(value, float):
        return '%.10g' % value
    return value


def _plain(value):
    """Convert numpy scalars and arrays into JSON-friendly values."""
    if isinstance(value, dict):
        return dict((k, _plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


class Report(object):
    """Report of one command run: manifest, results and warnings.

    Nothing is written before ``write``; CSV files are staged with
    ``add_csv`` and written alongside the JSON report.
    """

    def __init__(self, command, parameters, output_dir=None):
        self.command = command
        self.output_dir = output_dir or CONF.output.directory
        self.manifest = models.RunManifest(command, _plain(parameters),
                                           tool_version())
        self.results = {}
        self.warnings = []
        self._tables = []

    def warn(self, message, *args):
        text = message % args if args else message
        LOG.warning(text)
        self.warnings.append(text)

    def add_csv(self, name, header, rows):
        """Stage a CSV file; header entries name each column with units."""
        self._tables.append((name, header, rows))

    def _path(self, name):
        return os.path.join(self.output_dir, name)

    def _write_csv(self, name, header, rows):
        digits = CONF.output.significant_digits
        data = np.asarray(rows, dtype=float)
        if data.ndim == 1:
            data = data.reshape(-1, len(header))
        np.savetxt(self._path(name), data, delimiter=',',
                   header=','.join(header), comments='',
                   fmt='%%.%dg' % digits)

    def document(self):
        return {
            'manifest': self.manifest.to_dict(),
            'results': _plain(self.results),
            'warnings': list(self.warnings),
        }

    def write(self):
        """Write staged CSV files and the JSON report.

        :return: path of the JSON report
        """
        if not os.path.isdir(self.output_dir):
            os.makedirs(self.output_dir)
        names = [name for name, _, _ in self._tables]
        json_name = '%s.json' % self.command
        self.manifest.outputs = names + [json_name]
        for name, header, rows in self._tables:
            self._write_csv(name, header, rows)
        document = self.document()
        jsonschema.Draft4Validator(report_schema.report).validate(document)
        path = self._path(json_name)
        with open(path, 'w') as f:
            f.write(json.dumps(document, indent=2, sort_keys=True))
            f.write('\n')
        LOG.info('Wrote %s', path)
        return path
