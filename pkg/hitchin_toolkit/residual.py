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
"""Residuals of the Hitchin equations.

The reduced scalar ODE system is authoritative. The matrix equations
F + kappa [Phi, Phi^dagger] = 0 and d-bar Phi + lambda [A^(0,1), Phi] = 0
are checked with finite differences once kappa and lambda have been fitted
on a known exact solution.
"""
import math

import numpy as np
from oslo_log import log as logging

from hitchin_toolkit.common import models
from hitchin_toolkit import config
from hitchin_toolkit import exceptions
from hitchin_toolkit import fields
from hitchin_toolkit import liealg
from hitchin_toolkit import numerics

LOG = logging.getLogger(__name__)
CONF = config.CONF

# derivative step for transformed pairs without analytic derivatives
TRANSFORMED_STEP = 1e-5

_CALIBRATION_ANGLES = (0.0, math.pi / 4.0)


def _out(value):
    value = np.asarray(value)
    return float(value) if value.ndim == 0 else value


def ode_residual(profile, r):
    """Residuals of the reduced system at radius ``r``.

    r1 = f'/r - g h, r2 = g' + f h / r, r3 = h' + f g / r

    :param profile: a fields.RadialProfile
    :param r: radius or array of radii, all > 0
    :return: (r1, r2, r3)
    :raises InvalidParameter: for r <= 0
    :raises SingularPointError: at a singular radius of the profile
    """
    r = np.asarray(r, dtype=float)
    if np.any(~(r > 0.0)):
        raise exceptions.InvalidParameter(name='r', value=r,
                                          reason='radius must be positive')
    f = np.asarray(profile.f(r))
    g = np.asarray(profile.g(r))
    h = np.asarray(profile.h(r))
    r1 = np.asarray(profile.df(r)) / r - g * h
    r2 = np.asarray(profile.dg(r)) + f * h / r
    r3 = np.asarray(profile.dh(r)) + f * g / r
    return _out(r1), _out(r2), _out(r3)


def ode_report(profile, r):
    return models.ResidualReport(r, *ode_residual(profile, r))


def radius_grid(conf=CONF):
    return np.logspace(math.log10(conf.residual.radius_grid_min),
                       math.log10(conf.residual.radius_grid_max),
                       conf.residual.radius_grid_points)


def max_ode_residual(profile, radii):
    """Largest |r_i| over ``radii`` and the radius where it occurs."""
    radii = np.asarray(radii, dtype=float)
    worst = np.max(np.abs(np.array(ode_residual(profile, radii))), axis=0)
    index = int(np.argmax(worst))
    return float(worst[index]), float(radii[index])


def transformed_residual(F, G, branch, t, dF=None, dG=None, step=None):
    """Residuals of the system in t = -log r.

    Exact branch: q1 = F' - G^2. Singular branch: q1 = F' + G^2. Both:
    q2 = G' + F G. Missing derivatives are taken by central differences.

    :raises SingularPointError: for the singular branch at t = 0
    """
    branch = fields.Branch.from_string(branch)
    t = np.asarray(t, dtype=float)
    if branch is fields.Branch.SINGULAR:
        exclusion = config.exclusion_radius()
        near = np.abs(t) < exclusion
        if np.any(near):
            raise exceptions.SingularPointError(
                point=t[near].flat[0] if t.ndim else float(t),
                radius=exclusion, singular='t = 0')
    step = step or TRANSFORMED_STEP
    f_prime = (np.asarray(dF(t)) if dF is not None
               else numerics.central_diff(F, t, step))
    g_prime = (np.asarray(dG(t)) if dG is not None
               else numerics.central_diff(G, t, step))
    f_value = np.asarray(F(t))
    g_value = np.asarray(G(t))
    sign = -1.0 if branch is fields.Branch.EXACT else 1.0
    return (_out(f_prime + sign * g_value * g_value),
            _out(g_prime + f_value * g_value))


def pair_residual(pair, t):
    return transformed_residual(pair.F, pair.G, pair.branch, t, pair.dF,
                                pair.dG)


def check_step(config_, x, y, h):
    if not h > 0.0:
        raise exceptions.InvalidParameter(name='h', value=h,
                                          reason='step must be positive')
    distance = np.min(config_.distance_to_singularity(x, y))
    if h >= distance - config_.exclusion_radius:
        raise exceptions.InvalidStep(step=h, distance=distance)


def partial_derivatives(config_, x, y, h, richardson):
    """Derivatives of (A_1, A_2, Phi) along x and y, stacked on axis 0."""
    diff = (numerics.richardson_derivative if richardson
            else numerics.central_diff)
    d_x = diff(lambda s: config_.evaluate(s, y), x, h)
    d_y = diff(lambda s: config_.evaluate(x, s), y, h)
    return d_x, d_y


def curvature(config_, x, y, h=None, richardson=False):
    """F = d_1 A_2 - d_2 A_1 + [A_1, A_2] by finite differences.

    :raises InvalidStep: when the stencil reaches a singular point
    """
    h = h or CONF.residual.fd_step
    check_step(config_, x, y, h)
    a1, a2, _ = config_.evaluate(x, y)
    d_x, d_y = partial_derivatives(config_, x, y, h, richardson)
    return d_x[1] - d_y[0] + liealg.bracket(a1, a2)


def _terms(config_, x, y, h, richardson=False):
    """The four matrices entering the two equations at (x, y).

    :return: (F, [Phi, Phi^dagger], d-bar Phi, [(A_1 + i A_2)/2, Phi])
    """
    h = h or CONF.residual.fd_step
    check_step(config_, x, y, h)
    a1, a2, phi = config_.evaluate(x, y)
    d_x, d_y = partial_derivatives(config_, x, y, h, richardson)
    field_strength = d_x[1] - d_y[0] + liealg.bracket(a1, a2)
    higgs_bracket = liealg.bracket(phi, liealg.conjugate_transpose(phi))
    d_bar = 0.5 * (d_x[2] + 1j * d_y[2])
    connection = liealg.bracket(0.5 * (a1 + 1j * a2), phi)
    return field_strength, higgs_bracket, d_bar, connection


def _norm(m):
    return np.linalg.norm(m, axis=(-2, -1))


def matrix_residual(config_, x, y, h=None, calibration=None):
    """Frobenius norms of both matrix equations after calibration.

    :param calibration: models.ConventionCalibration; fitted on exact(1)
                        when omitted
    :return: (curvature_residual, holomorphicity_residual)
    :raises InvalidStep: when the stencil reaches a singular point
    """
    if calibration is None:
        calibration = calibrate_convention(fields.ExactConfig(1.0))
    field_strength, higgs_bracket, d_bar, connection = _terms(
        config_, x, y, h)
    return (_out(_norm(field_strength + calibration.kappa * higgs_bracket)),
            _out(_norm(d_bar + calibration.connection_scale * connection)))


def _least_squares_scale(target, basis):
    """The complex s minimising |target + s basis|."""
    denominator = np.vdot(basis, basis)
    if abs(denominator) == 0.0:
        raise exceptions.CalibrationFailure(
            'calibration terms vanish', residual=float('nan'), threshold=0.0)
    return -np.vdot(basis, target) / denominator


def calibrate_convention(config_, radii=None, h=None, threshold=None):
    """Fit kappa and lambda on a configuration known to be exact.

    Richardson differences are used so that the constants are reproducible
    to well below 1e-8.

    :return: models.ConventionCalibration
    :raises CalibrationFailure: when the fitted residual exceeds
                                ``threshold``
    """
    if config_.variant != 'exact':
        raise exceptions.InvalidParameter(
            name='config', value=config_.variant,
            reason='calibration needs a member of the exact family')
    radii = list(radii or config.calibration_radii())
    threshold = threshold or CONF.residual.calibration_threshold
    h = h or 1e-3
    x = np.array([r * math.cos(a) for r in radii
                  for a in _CALIBRATION_ANGLES])
    y = np.array([r * math.sin(a) for r in radii
                  for a in _CALIBRATION_ANGLES])
    field_strength, higgs_bracket, d_bar, connection = _terms(
        config_, x, y, h, richardson=True)
    kappa = _least_squares_scale(field_strength, higgs_bracket)
    scale = _least_squares_scale(d_bar, connection)
    residual = float(max(
        np.max(_norm(field_strength + kappa * higgs_bracket)),
        np.max(_norm(d_bar + scale * connection))))
    if not residual < threshold:
        LOG.warning('Convention calibration on %r left residual %s',
                    config_, residual)
        raise exceptions.CalibrationFailure(residual=residual,
                                            threshold=threshold)
    LOG.info('Calibrated kappa=%s lambda=%s on %r (residual %s)', kappa,
             scale, config_, residual)
    return models.ConventionCalibration(kappa, scale, residual, radii,
                                        getattr(config_, 'c', 1.0))


def analytic_curvature(config_, x, y):
    """(f'/r) tau_1 for a radially symmetric configuration."""
    profile = config_.profile
    if profile is None:
        raise exceptions.InvalidParameter(
            name='config', value=config_.variant,
            reason='analytic curvature needs a radial profile')
    r = np.hypot(x, y)
    return (np.asarray(profile.df(r)) / r)[..., np.newaxis, np.newaxis] * \
        liealg.tau(1)


def finite_difference_order(config_, x, y, steps):
    """Observed order of the curvature difference on a halving ladder.

    :return: (order, errors)
    """
    exact = analytic_curvature(config_, x, y)
    errors = [float(np.max(_norm(curvature(config_, x, y, h) - exact)))
              for h in steps]
    order = np.polyfit(np.log(steps), np.log(errors), 1)[0]
    return float(order), errors


def residual_vs_separation(separations, h=None, calibration=None):
    """Matrix residuals of two smooth particles at +-d/2 on the x-axis.

    Residuals are taken at (0, 1), one unit off the midpoint.

    :return: list of (separation, curvature residual, holomorphicity
             residual)
    """
    rows = []
    for d in separations:
        multi = fields.MultiConfig([(-0.5 * d, 0.0), (0.5 * d, 0.0)])
        curv, holo = matrix_residual(multi, 0.0, 1.0, h, calibration)
        LOG.debug('Separation %s: curvature %s, holomorphicity %s', d, curv,
                  holo)
        rows.append((float(d), curv, holo))
    return rows
