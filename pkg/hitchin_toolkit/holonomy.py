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
"""Parallel transport around circles centred at the origin.

gamma solves d(gamma)/d(theta) + A_theta gamma = 0 with gamma(0) = 1, where
A_theta = -r sin(theta) A_1 + r cos(theta) A_2. Angles increase
counter-clockwise.
"""
import math

import numpy as np
from oslo_log import log as logging

from hitchin_toolkit.common import models
from hitchin_toolkit import config
from hitchin_toolkit import exceptions
from hitchin_toolkit import numerics

LOG = logging.getLogger(__name__)
CONF = config.CONF

TWO_PI = 2.0 * math.pi

# largest wrapped phase increment accepted between RK4 nodes
PHASE_STEP_LIMIT = math.pi / 2.0

ORACLE_TOLERANCE = 1e-8


def _diagonal_phase(exponent):
    """diag(exp(i e / 2), exp(-i e / 2)) for an array of exponents."""
    exponent = np.asarray(exponent, dtype=float)
    result = np.zeros(exponent.shape + (2, 2), dtype=complex)
    result[..., 0, 0] = np.exp(0.5j * exponent)
    result[..., 1, 1] = np.exp(-0.5j * exponent)
    return result


def limiting_holonomy(c, theta):
    """The printed limit diag(exp(i(1+c)theta/2), exp(-i(1+c)theta/2))."""
    return _diagonal_phase((1.0 + c) * np.asarray(theta, dtype=float))


def printed_limit(charge, theta):
    """limiting_holonomy written for an asymptotic charge 1 + c."""
    return _diagonal_phase(charge * np.asarray(theta, dtype=float))


def integrated_limit(charge, theta):
    """exp(-charge theta tau_1), the limit reached by integration."""
    return _diagonal_phase(-charge * np.asarray(theta, dtype=float))


def check_enclosure(config_, radius):
    """The circle must enclose every particle by the exclusion radius.

    :raises EnclosureError: otherwise
    """
    farthest = config_.extent()
    if config_.particles and not radius > farthest + \
            config_.exclusion_radius:
        raise exceptions.EnclosureError(radius=radius, farthest=farthest)


def _check_radius(radius):
    try:
        radius = float(radius)
    except (TypeError, ValueError):
        raise exceptions.InvalidParameter(name='radius', value=radius,
                                          reason='not a number')
    if not (math.isfinite(radius) and radius > 0.0):
        raise exceptions.InvalidParameter(name='radius', value=radius,
                                          reason='must be positive')
    return radius


def _max_distance(path, limit):
    return float(np.max(np.abs(path - limit)))


def _abelian_path(config_, radius, steps):
    """exp(-tau_1 int_0^theta a) at the RK4 nodes by cumulative Simpson."""
    grid = np.linspace(0.0, TWO_PI, 2 * steps + 1)
    a = config_.angular_coefficient(radius, grid)
    integral = numerics.cumulative_simpson(a, TWO_PI / steps)
    return _diagonal_phase(-integral)


def circle_holonomy(config_, radius, spec=None):
    """Transport around the circle of ``radius``.

    RK4 is authoritative. For configs along tau_1 the abelian closed form is
    computed as well and its distance from the RK4 path recorded.

    :return: models.HolonomyResult
    :raises InvalidParameter: for a non-positive radius
    :raises EnclosureError: when particles lie outside the circle
    :raises SingularPointError: when the circle meets a singular point
    :raises UndersamplingError: when the (1,1) phase moves too far per step
    """
    radius = _check_radius(radius)
    spec = spec or config.ode_spec()
    check_enclosure(config_, radius)
    steps = spec.steps_for(TWO_PI)
    circle = np.linspace(0.0, TWO_PI, 2 * steps + 1)
    config_.check_points(radius * np.cos(circle), radius * np.sin(circle))

    solution = numerics.rk4_matrix(
        lambda thetas: config_.angular_connection(radius, thetas), TWO_PI,
        spec=spec)
    path = solution.path
    thetas = solution.thetas

    abelian_final = None
    oracle_deviation = None
    if config_.abelian:
        abelian = _abelian_path(config_, radius, steps)
        abelian_final = abelian[-1]
        oracle_deviation = _max_distance(path, abelian)
        if oracle_deviation > ORACLE_TOLERANCE:
            LOG.warning('RK4 and abelian holonomy differ by %s at r=%s',
                        oracle_deviation, radius)

    total_phase = numerics.unwrap_phase(path[:, 0, 0],
                                        max_step=PHASE_STEP_LIMIT)
    winding = numerics.winding_from_phase(total_phase)

    charge = config_.asymptotic_charge()
    printed = printed_limit(charge, thetas)
    integrated = integrated_limit(charge, thetas)
    printed_deviation = _max_distance(path, printed)
    integrated_deviation = _max_distance(path, integrated)
    if charge and printed_deviation > integrated_deviation:
        LOG.warning('Holonomy at r=%s follows exp(-%s theta tau_1), the '
                    'conjugate of the printed limit (deviation %s against '
                    '%s)', radius, charge, integrated_deviation,
                    printed_deviation)
    LOG.info('Holonomy of %r at r=%s: winding %d, total phase %s', config_,
             radius, winding, total_phase)
    return models.HolonomyResult(
        radius, thetas, path, printed[-1], integrated[-1], winding,
        total_phase, printed_deviation=printed_deviation,
        integrated_deviation=integrated_deviation,
        abelian_final=abelian_final, oracle_deviation=oracle_deviation,
        richardson_error=solution.richardson_error)


def winding_number(config_, radius=None, spec=None):
    """Signed degree of the (1,1) entry of gamma as a circle map."""
    radius = CONF.holonomy.radius if radius is None else radius
    return circle_holonomy(config_, radius, spec).winding


def degree(config_, radius=None, spec=None):
    return abs(winding_number(config_, radius, spec))


def determinant_drift(result):
    """Largest |det gamma - 1| along a holonomy path."""
    return float(np.max(np.abs(np.linalg.det(result.samples) - 1.0)))


def holonomy_convergence_profile(config_, radii, spec=None):
    """Distance of gamma_r from the integrated limit for each radius.

    :return: list of (radius, deviation)
    """
    table = []
    for r in radii:
        result = circle_holonomy(config_, r, spec)
        table.append((result.radius, result.integrated_deviation))
    return table


def decay_order(table):
    """Minus the least-squares slope of log(deviation) against log(r)."""
    radii = np.array([row[0] for row in table], dtype=float)
    deviations = np.array([row[1] for row in table], dtype=float)
    if len(table) < 2 or np.any(deviations <= 0.0):
        raise exceptions.InvalidParameter(
            name='table', value=table,
            reason='need two or more positive deviations')
    return float(-np.polyfit(np.log(radii), np.log(deviations), 1)[0])
