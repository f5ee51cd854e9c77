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
import math

import ddt
import numpy as np

from hitchin_toolkit import data_utils
from hitchin_toolkit import exceptions
from hitchin_toolkit import fields
from hitchin_toolkit import holonomy
from hitchin_toolkit import liealg
from hitchin_toolkit import numerics
from hitchin_toolkit.tests import base


@ddt.ddt
class CircleHolonomyTest(base.BaseTestCase):

    @ddt.data(0.5, 1.0, 2.5)
    def test_rk4_matches_abelian_form(self, c):
        config_ = fields.ExactConfig(c)
        for radius in (0.5, 1.0, 10.0, 1000.0):
            result = holonomy.circle_holonomy(config_, radius)
            self.assertBelow(result.oracle_deviation,
                             holonomy.ORACLE_TOLERANCE)
            self.assertAllClose(result.abelian_final, result.final,
                                atol=1e-8)

    def test_closed_form_on_a_circle(self):
        # the angular coefficient of the exact family is f(r)
        config_ = fields.ExactConfig(1.0)
        result = holonomy.circle_holonomy(config_, 2.0)
        f = config_.profile.f(2.0)
        self.assertAllClose(holonomy.integrated_limit(f, result.thetas),
                            result.samples, atol=1e-9)

    def test_zero_config_is_identity(self):
        result = holonomy.circle_holonomy(fields.ZeroConfig(), 3.0)
        self.assertAllClose(np.broadcast_to(liealg.IDENTITY,
                                            result.samples.shape),
                            result.samples)
        self.assertEqual(0, result.winding)
        self.assertEqual(0.0, result.total_phase)

    def test_smooth_member_at_large_radius(self):
        result = holonomy.circle_holonomy(fields.ExactConfig(1.0), 1e4)
        self.assertBelow(result.integrated_deviation, 1e-5)
        self.assertTrue(result.printed_deviation > 1.0)
        self.assertEqual(-1, result.winding)
        self.assertEqual(1, result.degree)
        self.assertAlmostEqual(-2.0 * math.pi, result.total_phase, places=6)
        self.assertAllClose(result.integrated_limit, result.final,
                            atol=1e-6)

    def test_result_document(self):
        result = holonomy.circle_holonomy(fields.ExactConfig(1.0), 10.0)
        data = result.to_dict()
        self.assertEqual(1025, data['samples'])
        self.assertEqual(-1, data['winding'])
        self.assertEqual(1, data['degree'])
        self.assertIn('abelian_final', data)
        self.assertIsNone(data['richardson_error'])

    def test_richardson_error(self):
        spec = numerics.OdeSpec(step_count=1024, richardson_check=True)
        result = holonomy.circle_holonomy(fields.ExactConfig(1.0), 10.0,
                                          spec=spec)
        self.assertBelow(result.richardson_error, 1e-8)

    def test_singular_branch_winds_the_other_way(self):
        result = holonomy.circle_holonomy(fields.SingularConfig(1.0), 1e4)
        self.assertEqual(1, result.winding)
        self.assertBelow(result.integrated_deviation, 1e-5)

    def test_singular_circle(self):
        self.assertRaises(exceptions.SingularPointError,
                          holonomy.circle_holonomy,
                          fields.SingularConfig(1.0), 1.0)

    def test_small_circle_around_meron(self):
        # f tends to 1 - c at the core, so small loops keep a phase
        config_ = fields.ExactConfig(0.5)
        result = holonomy.circle_holonomy(config_, 1e-3)
        self.assertEqual(0, result.winding)
        self.assertAlmostEqual(-math.pi * config_.profile.f(1e-3),
                               result.total_phase, places=6)

    @ddt.data(0.0, -1.0, 'one', float('nan'))
    def test_invalid_radius(self, radius):
        self.assertRaises(exceptions.InvalidParameter,
                          holonomy.circle_holonomy,
                          fields.ExactConfig(1.0), radius)

    def test_enclosure(self):
        config_ = fields.MultiConfig([(3.0, 0.0)])
        e = self.assertRaises(exceptions.EnclosureError,
                              holonomy.circle_holonomy, config_, 2.0)
        self.assertEqual(3.0, e.kwargs['farthest'])
        self.assertRaises(exceptions.EnclosureError,
                          holonomy.circle_holonomy, config_, 3.0)

    def test_determinant_drift(self):
        for config_ in (fields.ExactConfig(1.0),
                        fields.MultiConfig([(0.5, 0.5), (-1.0, 0.2)])):
            result = holonomy.circle_holonomy(config_, 10.0)
            self.assertBelow(holonomy.determinant_drift(result), 1e-9)

    def test_gauge_transformed_holonomy(self):
        base_config = fields.ExactConfig(1.0)
        element = liealg.group_element([0.0, 1.0, 0.0], 0.5)
        gauged = fields.GaugeTransformedConfig(base_config, element)
        plain = holonomy.circle_holonomy(base_config, 2.0)
        moved = holonomy.circle_holonomy(gauged, 2.0)
        self.assertIsNone(moved.oracle_deviation)
        self.assertAllClose(liealg.adjoint(element, plain.final),
                            moved.final, atol=1e-10)
        self.assertBelow(holonomy.determinant_drift(moved), 1e-9)


@ddt.ddt
class WindingTest(base.BaseTestCase):

    @ddt.data(1, 2, 3, 5)
    def test_multi_particle_degree(self, n):
        for seed in range(10):
            particles = data_utils.rand_particles(n, 5.0, self.rng(seed))
            config_ = fields.MultiConfig(particles)
            self.assertEqual(-n, holonomy.winding_number(config_, 1e4))
            self.assertEqual(n, holonomy.degree(config_, 1e4))

    def test_default_radius(self):
        self.config_override(group='holonomy', radius=500.0)
        self.assertEqual(-1, holonomy.winding_number(fields.ExactConfig(1.0)))

    def test_fractional_total_phase(self):
        particles = [(0.5, 0.2, 0.6), (-1.0, 0.3, 1.4), (0.1, -0.7, 2.0)]
        config_ = fields.FractionalConfig(particles)
        result = holonomy.circle_holonomy(config_, 1e4)
        self.assertAlmostEqual(7.0, config_.asymptotic_charge(), places=12)
        self.assertAlmostEqual(-7.0 * math.pi, result.total_phase, places=3)

    def test_single_exact_block(self):
        for c in (0.6, 1.0, 3.0):
            result = holonomy.circle_holonomy(fields.ExactConfig(c), 1e4)
            self.assertAlmostEqual(-math.pi * (1.0 + c), result.total_phase,
                                   places=3)


class ConvergenceTest(base.BaseTestCase):

    def _order(self, c, radii, spec=None):
        table = holonomy.holonomy_convergence_profile(
            fields.ExactConfig(c), radii, spec)
        self.assertEqual([float(r) for r in radii],
                         [row[0] for row in table])
        return holonomy.decay_order(table)

    def test_decay_order_smooth_member(self):
        self.assertAlmostEqual(2.0, self._order(1.0, [1e2, 1e3, 1e4]),
                               delta=0.2)

    def test_decay_order_c2(self):
        spec = numerics.OdeSpec(step_count=8192)
        self.assertAlmostEqual(4.0, self._order(2.0, [10.0, 100.0, 1000.0],
                                                spec), delta=0.2)

    def test_decay_order_c25(self):
        self.assertAlmostEqual(5.0, self._order(2.5, [5.0, 10.0, 20.0]),
                               delta=0.2)

    def test_decay_order_needs_two_rows(self):
        self.assertRaises(exceptions.InvalidParameter,
                          holonomy.decay_order, [(10.0, 1e-3)])
        self.assertRaises(exceptions.InvalidParameter,
                          holonomy.decay_order, [(10.0, 1e-3), (20.0, 0.0)])


class LimitTest(base.BaseTestCase):

    def test_limiting_holonomy_closes(self):
        self.assertAllClose(liealg.IDENTITY,
                            holonomy.limiting_holonomy(1.0, 2.0 * math.pi))
        self.assertAllClose(-liealg.IDENTITY,
                            holonomy.limiting_holonomy(0.0, 2.0 * math.pi))

    def test_limits_are_conjugate(self):
        thetas = np.linspace(0.0, 2.0 * math.pi, 9)
        printed = holonomy.limiting_holonomy(1.5, thetas)
        self.assertAllClose(holonomy.printed_limit(2.5, thetas), printed)
        self.assertAllClose(np.conj(holonomy.integrated_limit(2.5, thetas)),
                            printed)
        self.assertEqual((9, 2, 2), printed.shape)

    def test_integrated_limit_is_exponential(self):
        expected = liealg.group_element([1.0, 0.0, 0.0], -2.0 * 0.3)
        self.assertAllClose(expected, holonomy.integrated_limit(2.0, 0.3))
