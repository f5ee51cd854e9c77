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
import fixtures
import numpy as np
from oslo_config import fixture as cfg_fixture
import testtools

from hitchin_toolkit import config
from hitchin_toolkit import data_utils
from hitchin_toolkit import exceptions


class BaseTestCase(testtools.TestCase):
    """Base class with a private configuration and numpy assertions."""

    # RK4 steps used by holonomy tests unless a test asks for more
    step_count = 1024

    def setUp(self):
        super(BaseTestCase, self).setUp()
        self.conf_fixture = self.useFixture(cfg_fixture.Config(config.CONF))
        self.conf = self.conf_fixture.conf
        self.useFixture(fixtures.EnvironmentVariable(
            config.EXCLUSION_RADIUS_ENV))
        self.config_override(step_count=self.step_count,
                             richardson_check=False, group='numerics')

    def config_override(self, group, **kwargs):
        self.conf_fixture.config(group=group, **kwargs)

    def rng(self, seed=0):
        return data_utils.make_rng(seed)

    def assertAllClose(self, expected, observed, atol=1e-12, rtol=0.0):
        expected = np.asarray(expected)
        observed = np.asarray(observed)
        self.assertEqual(expected.shape, observed.shape)
        if not np.allclose(observed, expected, rtol=rtol, atol=atol):
            difference = float(np.max(np.abs(observed - expected)))
            self.fail('arrays differ by %s (atol=%s, rtol=%s)\nexpected: %r'
                      '\nobserved: %r' % (difference, atol, rtol, expected,
                                          observed))

    def assertBelow(self, value, bound):
        self.assertTrue(value < bound, '%r is not below %r' % (value, bound))

    def assertRaisesInvalid(self, fn, *args, **kwargs):
        return self.assertRaises(exceptions.InvalidInput, fn, *args, **kwargs)
