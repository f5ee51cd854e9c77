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

from hitchin_toolkit.common import models
from hitchin_toolkit import data_utils
from hitchin_toolkit import exceptions
from hitchin_toolkit import fields
from hitchin_toolkit import residual
from hitchin_toolkit.tests import base


@ddt.ddt
class OdeResidualTest(base.BaseTestCase):

    def test_radius_grid(self):
        radii = residual.radius_grid(self.conf)
        self.assertEqual(200, len(radii))
        self.assertAlmostEqual(1e-3, radii[0])
        self.assertAlmostEqual(1e3, radii[-1])

    def test_report(self):
        report = residual.ode_report(fields.exact_profile(1.0), 2.0)
        self.assertIsInstance(report, models.ResidualReport)
        self.assertBelow(report.max_ode_residual, 1e-14)
        self.assertEqual(2.0, report.radius)

    def test_printed_profile_report(self):
        report = residual.ode_report(fields.printed_exact_profile(1.0), 1.0)
        # f'/r - g h = -1 - 1 at r = 1
        self.assertAlmostEqual(-2.0, report.r1, places=14)

    @ddt.data(0.0, -1.0)
    def test_non_positive_radius(self, r):
        self.assertRaises(exceptions.InvalidParameter, residual.ode_residual,
                          fields.exact_profile(1.0), r)

    def test_worst_radius_is_reported(self):
        radii = np.array([0.5, 1.0, 2.0])
        worst, radius = residual.max_ode_residual(
            fields.printed_exact_profile(1.0), radii)
        r1, r2, r3 = residual.ode_residual(fields.printed_exact_profile(1.0),
                                           radius)
        self.assertAlmostEqual(worst, max(abs(r1), abs(r2), abs(r3)),
                               places=12)
        self.assertIn(radius, radii)


class StepTest(base.BaseTestCase):

    def test_step_too_close_to_singularity(self):
        config_ = fields.ExactConfig(0.5)
        self.assertRaises(exceptions.InvalidStep, residual.check_step,
                          config_, 1e-3, 0.0, 1e-2)
        residual.check_step(config_, 1.0, 0.0, 1e-2)

    def test_non_positive_step(self):
        self.assertRaises(exceptions.InvalidParameter, residual.check_step,
                          fields.ExactConfig(1.0), 1.0, 0.0, 0.0)

    def test_curvature_refuses_stencil_over_meron(self):
        self.assertRaises(exceptions.InvalidStep, residual.curvature,
                          fields.ExactConfig(2.0), 0.0, 1e-5)


@ddt.ddt
class CurvatureTest(base.BaseTestCase):

    @ddt.data(0.6, 1.0, 2.0)
    def test_matches_analytic(self, c):
        config_ = fields.ExactConfig(c)
        x, y = data_utils.spiral_points(12, 0.3, 5.0)
        self.assertAllClose(residual.analytic_curvature(config_, x, y),
                            residual.curvature(config_, x, y, 1e-4,
                                               richardson=True),
                            atol=1e-8)

    def test_second_order(self):
        order, errors = residual.finite_difference_order(
            fields.ExactConfig(1.5), 0.7, 0.4, [1e-2, 5e-3, 2.5e-3])
        self.assertTrue(abs(order - 2.0) < 0.1, order)
        self.assertTrue(errors[0] > errors[-1])

    def test_analytic_curvature_needs_profile(self):
        multi = fields.MultiConfig([(0.0, 0.0), (1.0, 0.0)])
        self.assertRaises(exceptions.InvalidParameter,
                          residual.analytic_curvature, multi, 0.0, 1.0)


class CalibrationTest(base.BaseTestCase):

    def setUp(self):
        super(CalibrationTest, self).setUp()
        self.calibration = residual.calibrate_convention(
            fields.ExactConfig(1.0))

    def test_constants(self):
        self.assertIsInstance(self.calibration, models.ConventionCalibration)
        self.assertBelow(abs(self.calibration.kappa - 0.5j), 1e-8)
        self.assertBelow(abs(self.calibration.connection_scale - 1.0), 1e-8)
        self.assertBelow(self.calibration.residual, 1e-6)
        self.assertEqual([0.5, 1.0, 2.0], self.calibration.radii)

    def test_constants_do_not_depend_on_c(self):
        for c in (0.6, 1.5, 2.5):
            other = residual.calibrate_convention(fields.ExactConfig(c))
            self.assertBelow(abs(other.kappa - self.calibration.kappa), 1e-8)
            self.assertBelow(abs(other.connection_scale -
                                 self.calibration.connection_scale), 1e-8)

    def test_matrix_residual_of_exact_solution(self):
        x, y = data_utils.rand_points(50, 0.05, 20.0, self.rng(11))
        curv, holo = residual.matrix_residual(fields.ExactConfig(1.0), x, y,
                                              h=1e-4,
                                              calibration=self.calibration)
        self.assertEqual((50,), curv.shape)
        self.assertBelow(float(np.max(curv)), 1e-6)
        self.assertBelow(float(np.max(holo)), 1e-6)

    def test_default_calibration(self):
        curv, holo = residual.matrix_residual(fields.ExactConfig(1.0), 0.3,
                                              0.9)
        self.assertBelow(curv, 1e-6)
        self.assertBelow(holo, 1e-6)

    def test_calibration_needs_exact_family(self):
        self.assertRaises(exceptions.InvalidParameter,
                          residual.calibrate_convention,
                          fields.SingularConfig(2.0))

    def test_failure_is_reported(self):
        e = self.assertRaises(exceptions.CalibrationFailure,
                              residual.calibrate_convention,
                              fields.ExactConfig(1.0), threshold=1e-300)
        self.assertTrue(e.residual > 0.0)

    def test_round_trip_through_dict(self):
        data = self.calibration.to_dict()
        self.assertEqual(self.calibration,
                         models.ConventionCalibration.from_dict(data))

    def test_bad_calibration_radii(self):
        self.config_override(calibration_radii=['half'], group='residual')
        self.assertRaises(exceptions.InvalidParameter,
                          residual.calibrate_convention,
                          fields.ExactConfig(1.0))


class SeparationTest(base.BaseTestCase):

    def test_table(self):
        calibration = residual.calibrate_convention(fields.ExactConfig(1.0))
        rows = residual.residual_vs_separation([1e-3, 2.0, 8.0],
                                               calibration=calibration)
        self.assertEqual([1e-3, 2.0, 8.0], [row[0] for row in rows])
        for _, curv, holo in rows:
            self.assertTrue(math.isfinite(curv) and curv >= 0.0)
            self.assertTrue(math.isfinite(holo) and holo >= 0.0)
        # two coincident blocks double A but quadruple [Phi, Phi^dagger]
        self.assertTrue(rows[0][1] > 0.1)
