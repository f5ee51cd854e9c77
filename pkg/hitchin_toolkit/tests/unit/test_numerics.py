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
from scipy import linalg

from hitchin_toolkit import exceptions
from hitchin_toolkit import liealg
from hitchin_toolkit import numerics
from hitchin_toolkit.tests import base


@ddt.ddt
class QuadratureTest(base.BaseTestCase):

    def test_interval(self):
        result = numerics.integrate_interval(math.sin, 0.0, math.pi)
        self.assertAlmostEqual(2.0, result.value, places=9)
        self.assertTrue(result.converged)
        self.assertBelow(result.error_estimate, 1e-9)

    def test_reversed_interval(self):
        value, _ = numerics.integrate_interval(math.sin, math.pi, 0.0)
        self.assertAlmostEqual(-2.0, value, places=9)

    def test_empty_interval(self):
        self.assertEqual(0.0, numerics.integrate_interval(math.exp, 1.0,
                                                          1.0).value)

    @ddt.unpack
    @ddt.data((lambda r: math.exp(-r), 1.0),
              (lambda r: 1.0 / (1.0 + r) ** 3, 0.5),
              (lambda r: r / (1.0 + r * r) ** 4, 1.0 / 6.0))
    def test_halfline(self, fn, expected):
        result = numerics.integrate_halfline(fn)
        self.assertTrue(result.converged)
        self.assertAlmostEqual(expected, result.value, places=9)
        self.assertBelow(result.error_estimate, 1e-9)

    def test_halfline_divergence(self):
        spec = numerics.QuadratureSpec(max_subdivisions=2000)
        e = self.assertRaises(exceptions.DivergenceError,
                              numerics.integrate_halfline,
                              lambda r: 1.0 / r if r else float('inf'), spec)
        self.assertTrue(e.partial_sum > 0.0)

    @ddt.data(lambda r: 1.0 / (1.0 + r),
              lambda r: 1.0,
              lambda r: (1.0 + r) ** -0.5)
    def test_halfline_tail_divergence(self, fn):
        # the mapped integrand is unbounded at u = 1
        spec = numerics.QuadratureSpec(max_subdivisions=2000)
        e = self.assertRaises(exceptions.DivergenceError,
                              numerics.integrate_halfline, fn, spec)
        self.assertTrue(math.isfinite(e.partial_sum))
        self.assertTrue(e.partial_sum > 0.0)

    def test_detector_sees_slow_core(self):
        divergent, core, _ = numerics.detect_divergence(
            lambda r: r ** -1.2 / (1.0 + r * r),
            numerics.QuadratureSpec(divergence_decades=6))
        self.assertTrue(divergent)
        self.assertTrue(core[-1] > core[0])

    def test_detector_passes_integrable_core(self):
        divergent, _, _ = numerics.detect_divergence(
            lambda r: r ** -0.5 * math.exp(-r),
            numerics.QuadratureSpec(divergence_decades=6))
        self.assertFalse(divergent)

    def test_non_finite_interior_value(self):
        self.assertRaises(exceptions.DivergenceError,
                          numerics.integrate_interval,
                          lambda r: float('nan'), 0.0, 1.0)

    @ddt.data(dict(rel_tol=0.0), dict(abs_tol=-1.0),
              dict(max_subdivisions=0))
    def test_bad_quadrature_spec(self, kwargs):
        self.assertRaises(exceptions.InvalidParameter,
                          numerics.QuadratureSpec, **kwargs)


class OdeTest(base.BaseTestCase):

    def test_constant_generator_matches_expm(self):
        a = 2.5 * liealg.tau(1) + 0.3 * liealg.tau(2)
        spec = numerics.OdeSpec(step_count=2048, richardson_check=True)
        result = numerics.rk4_matrix(lambda t: a, math.pi, spec=spec)
        self.assertAllClose(linalg.expm(-math.pi * a), result.final,
                            atol=1e-9)
        self.assertBelow(result.richardson_error, 1e-9)
        self.assertEqual(1025, len(result.thetas))
        self.assertAllClose(liealg.IDENTITY, result.path[0])

    def test_time_dependent_generator(self):
        # d(gamma)/d(theta) = -cos(theta) tau_1 gamma
        def rhs(thetas):
            return np.cos(thetas)[..., np.newaxis, np.newaxis] * \
                liealg.tau(1)

        result = numerics.rk4_matrix(rhs, 1.0)
        expected = linalg.expm(-math.sin(1.0) * liealg.tau(1))
        self.assertAllClose(expected, result.final, atol=1e-12)

    def test_zero_interval(self):
        result = numerics.rk4_matrix(lambda t: liealg.tau(1), 0.0)
        self.assertAllClose(liealg.IDENTITY, result.final)

    def test_initial_value(self):
        init = liealg.group_element([0.0, 1.0, 0.0])
        result = numerics.rk4_matrix(lambda t: liealg.ZERO, 1.0, init=init)
        self.assertAllClose(init, result.final)

    def test_too_few_steps(self):
        self.assertRaises(exceptions.InvalidParameter, numerics.OdeSpec, 8)

    def test_steps_scale_with_interval(self):
        spec = numerics.OdeSpec(step_count=100)
        self.assertEqual(1, spec.steps_for(1e-9))
        self.assertTrue(spec.steps_for(4.0 * math.pi) >= 200)


class DerivativeTest(base.BaseTestCase):

    def test_central_difference(self):
        self.assertAlmostEqual(math.cos(0.3),
                               float(numerics.central_diff(np.sin, 0.3,
                                                           1e-4)),
                               places=8)

    def test_richardson_is_more_accurate(self):
        h = 1e-2
        plain = abs(numerics.central_diff(np.exp, 1.0, h) - math.e)
        better = abs(numerics.richardson_derivative(np.exp, 1.0, h) - math.e)
        self.assertBelow(better, plain * 1e-3)

    def test_non_positive_step(self):
        self.assertRaises(exceptions.InvalidParameter, numerics.central_diff,
                          np.sin, 0.0, 0.0)

    def test_cumulative_simpson_is_exact_for_cubics(self):
        x = np.linspace(0.0, 1.0, 9)
        running = numerics.cumulative_simpson(x ** 3, 0.25)
        self.assertAllClose(np.linspace(0.0, 1.0, 5) ** 4 / 4.0, running,
                            atol=1e-15)


@ddt.ddt
class PhaseTest(base.BaseTestCase):

    @ddt.data(1, 3, -2)
    def test_winding(self, n):
        theta = np.linspace(0.0, 2.0 * math.pi, 401)
        total = numerics.unwrap_phase(np.exp(1j * n * theta),
                                      max_step=math.pi / 2.0)
        self.assertAlmostEqual(2.0 * math.pi * n, total, places=10)
        self.assertEqual(n, numerics.winding_from_phase(total))

    def test_undersampled_phase(self):
        samples = np.exp(2.0j * np.arange(10))
        e = self.assertRaises(exceptions.UndersamplingError,
                              numerics.unwrap_phase, samples,
                              max_step=math.pi / 2.0)
        self.assertEqual(e.kwargs['next'], e.kwargs['index'] + 1)

    def test_zero_sample(self):
        self.assertRaises(exceptions.InvalidParameter,
                          numerics.phase_increments, [1.0, 0.0, 1.0])
