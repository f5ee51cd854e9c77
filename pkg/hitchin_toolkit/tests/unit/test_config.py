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

from hitchin_toolkit import config
from hitchin_toolkit import exceptions
from hitchin_toolkit import numerics
from hitchin_toolkit import opts
from hitchin_toolkit.tests import base


class ConfigTest(base.BaseTestCase):

    def test_groups_registered(self):
        for group in ('numerics', 'fields', 'residual', 'action', 'holonomy',
                      'output'):
            self.assertIn(group, self.conf)
        self.assertEqual(1e-9, self.conf.fields.exclusion_radius)
        self.assertEqual(64, self.conf.action.angular_nodes)
        self.assertEqual(10.0, self.conf.action.additivity_separation)
        self.assertEqual(1e4, self.conf.holonomy.radius)

    def test_list_opts(self):
        names = [name for name, _ in opts.list_opts()]
        self.assertEqual(['numerics', 'fields', 'residual', 'action',
                          'holonomy', 'output'], names)
        for _, options in opts.list_opts():
            self.assertTrue(options)

    def test_quadrature_spec(self):
        self.config_override(group='numerics', rel_tol=1e-6,
                             max_subdivisions=10)
        spec = config.quadrature_spec(self.conf)
        self.assertIsInstance(spec, numerics.QuadratureSpec)
        self.assertEqual(1e-6, spec.rel_tol)
        self.assertEqual(10, spec.max_subdivisions)
        self.assertEqual(1e-3, config.quadrature_spec(self.conf,
                                                      rel_tol=1e-3).rel_tol)

    def test_ode_spec(self):
        spec = config.ode_spec(self.conf)
        self.assertEqual(self.step_count, spec.step_count)
        self.assertFalse(spec.richardson_check)
        self.assertEqual(64, config.ode_spec(self.conf, 64).step_count)

    def test_calibration_radii(self):
        self.assertEqual([0.5, 1.0, 2.0], config.calibration_radii(self.conf))
        self.config_override(group='residual', calibration_radii=['x'])
        self.assertRaises(exceptions.InvalidParameter,
                          config.calibration_radii, self.conf)

    def test_exclusion_radius_environment_wins(self):
        self.config_override(group='fields', exclusion_radius=1e-6)
        self.assertEqual(1e-6, config.exclusion_radius(self.conf))
        self.useFixture(fixtures.EnvironmentVariable(
            config.EXCLUSION_RADIUS_ENV, '1e-4'))
        self.assertEqual(1e-4, config.exclusion_radius(self.conf))

    def test_exclusion_radius_blank_environment(self):
        self.useFixture(fixtures.EnvironmentVariable(
            config.EXCLUSION_RADIUS_ENV, '  '))
        self.assertEqual(1e-9, config.exclusion_radius(self.conf))
