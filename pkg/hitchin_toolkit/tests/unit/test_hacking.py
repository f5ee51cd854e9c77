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
from hitchin_toolkit.hacking import checks
from hitchin_toolkit.tests import base

LIBRARY = './hitchin_toolkit/fields.py'


class HackingTest(base.BaseTestCase):

    def _codes(self, check, line, *args):
        return [message.split(':')[0]
                for _, message in check(line, *args)]

    def test_no_numpy_matrix(self):
        self.assertEqual(['HT001'], self._codes(checks.no_numpy_matrix,
                                                'm = np.matrix(a)'))
        self.assertEqual(['HT001'], self._codes(checks.no_numpy_matrix,
                                                'm = numpy.mat(a)'))
        self.assertEqual([], self._codes(checks.no_numpy_matrix,
                                         'm = np.matmul(a, b)'))

    def test_no_mutable_default_args(self):
        self.assertEqual(['HT002'], self._codes(
            checks.no_mutable_default_args, 'def f(a, b=[]):'))
        self.assertEqual(['HT002'], self._codes(
            checks.no_mutable_default_args, '    def f(self, b={}):'))
        self.assertEqual([], self._codes(checks.no_mutable_default_args,
                                         'def f(a, b=None):'))

    def test_no_print_in_library(self):
        self.assertEqual(['HT003'], self._codes(checks.no_print_in_library,
                                                'print(x)', LIBRARY))
        self.assertEqual([], self._codes(
            checks.no_print_in_library, 'print(x)',
            './hitchin_toolkit/cli/commands.py'))
        self.assertEqual([], self._codes(
            checks.no_print_in_library, 'print(x)',
            './hitchin_toolkit/tests/unit/test_cli.py'))
        self.assertEqual([], self._codes(checks.no_print_in_library,
                                         'LOG.info(x)', LIBRARY))

    def test_no_bare_except(self):
        self.assertEqual(['HT004'], self._codes(checks.no_bare_except,
                                                'except:'))
        self.assertEqual([], self._codes(checks.no_bare_except,
                                         'except ValueError:'))

    def test_factory(self):
        registered = []
        checks.factory(registered.append)
        self.assertEqual([checks.no_numpy_matrix,
                          checks.no_mutable_default_args,
                          checks.no_print_in_library,
                          checks.no_bare_except], registered)
