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
"""Action of planar field configurations.

The density of the dimensionally reduced theory is

    |F_12|^2 + sum_i (|D_i phi_1|^2 + |D_i phi_2|^2) + |[phi_1, phi_2]|^2

with phi_1, phi_2 the real and imaginary parts of Phi in the tau basis and
|X|^2 = sgn <X, X>, sgn chosen so that tau_1 has positive norm.
"""
import collections
import math

import numpy as np
from oslo_log import log as logging

from hitchin_toolkit.common import models
from hitchin_toolkit import config
from hitchin_toolkit import exceptions
from hitchin_toolkit import fields
from hitchin_toolkit import liealg
from hitchin_toolkit import numerics
from hitchin_toolkit import residual

LOG = logging.getLogger(__name__)
CONF = config.CONF

TWO_PI = 2.0 * math.pi

COMPONENTS = ('F12', 'D1phi1', 'D2phi1', 'D1phi2', 'D2phi2', 'phi1_phi2')

# radii at which the angular profile of a radial config is checked
_SPREAD_RADII = (0.5, 1.0, 2.0)
SPREAD_TOLERANCE = 1e-9

# two well separated blocks carry twice the action of one to this accuracy
ADDITIVITY_TOLERANCE = 0.05


def _log(r):
    with np.errstate(divide='ignore'):
        return np.log(np.asarray(r, dtype=float))


def printed_integrand(c, r):
    """c^4 r^(4c-3) / (1 + r^2c)^4, without the 2 pi prefactor."""
    c = fields.check_parameter(c)
    log_r = _log(r)
    power = 4.0 * c - 3.0
    exponent = (power * log_r if power else np.zeros_like(log_r)) - \
        4.0 * np.logaddexp(0.0, 2.0 * c * log_r)
    with np.errstate(over='ignore'):
        return c ** 4 * np.exp(exponent)


def reduced_integrand(c, r):
    """(1/r^2) (f')^2 r for exact_profile(c), without the 2 pi prefactor."""
    profile = fields.exact_profile(c)
    r = np.asarray(r, dtype=float)
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        return np.asarray(profile.df(r)) ** 2 / r


def _halfline(fn, spec):
    """(value, error, convergent) with divergence folded into the flag."""
    try:
        result = numerics.integrate_halfline(fn, spec)
    except exceptions.DivergenceError as e:
        LOG.info('Radial integral diverges (partial sum %s)', e.partial_sum)
        return None, None, False
    return result.value, result.error_estimate, True


def reduced_action(c, spec=None):
    """2 pi int (1/r^2)(f')^2 r dr next to the printed 2 pi c^4 chain.

    Divergence is a report state: values and error are None and
    ``convergent`` is False.

    :return: models.ActionReport with full_value None
    """
    c = fields.check_parameter(c)
    spec = spec or config.quadrature_spec()
    reduced, error, convergent = _halfline(
        lambda r: float(reduced_integrand(c, r)), spec)
    printed, _, printed_convergent = _halfline(
        lambda r: float(printed_integrand(c, r)), spec)
    convergent = convergent and printed_convergent
    if not convergent:
        return models.ActionReport(c, None, None, None, None, False, None)
    return models.ActionReport(c, None, TWO_PI * reduced, TWO_PI * printed,
                               None, True, TWO_PI * error)


def action_ratio(c, spec=None):
    """reduced_value / printed_value; None when the integrals diverge."""
    return reduced_action(c, spec).ratio


def _split_higgs(phi):
    """phi_1, phi_2 from the real and imaginary tau coordinates of Phi."""
    coords = liealg.coordinates(phi)
    return (liealg.from_coordinates(coords.real),
            liealg.from_coordinates(coords.imag))


def _assemble(a1, a2, phi, d1_phi, d2_phi, f12):
    phi1, phi2 = _split_higgs(phi)
    d1_phi1, d1_phi2 = _split_higgs(d1_phi)
    d2_phi1, d2_phi2 = _split_higgs(d2_phi)
    return collections.OrderedDict([
        ('F12', f12),
        ('D1phi1', d1_phi1 + liealg.bracket(a1, phi1)),
        ('D2phi1', d2_phi1 + liealg.bracket(a2, phi1)),
        ('D1phi2', d1_phi2 + liealg.bracket(a1, phi2)),
        ('D2phi2', d2_phi2 + liealg.bracket(a2, phi2)),
        ('phi1_phi2', liealg.bracket(phi1, phi2)),
    ])


def _analytic_components(config_, x, y):
    """Components from the profile's analytic derivatives."""
    profile = config_.profile
    x, y = config_.check_points(x, y)
    a1, a2, phi = config_.evaluate(x, y)
    r = np.hypot(x, y)
    t1, t2, t3 = liealg.taus()
    with np.errstate(divide='ignore', invalid='ignore'):
        radial_x = np.where(r > 0, x / np.where(r > 0, r, 1.0), 0.0)
        radial_y = np.where(r > 0, y / np.where(r > 0, r, 1.0), 0.0)
    dg = np.asarray(profile.dg(r))
    dh = np.asarray(profile.dh(r))
    scale = config_.higgs_scale

    def d_phi(direction):
        return scale * (fields.along(dg * direction, t2) +
                        1j * fields.along(dh * direction, t3))

    with np.errstate(divide='ignore', invalid='ignore'):
        f12 = fields.along(np.asarray(profile.df_over_r(r)), t1)
    return _assemble(a1, a2, phi, d_phi(radial_x), d_phi(radial_y), f12)


def density_components(config_, x, y, h=None, analytic=False):
    """The six curvature components of the reduced field at (x, y).

    Derivatives are central differences with step ``h`` unless
    ``analytic`` is set and the config has a radial profile.

    :return: OrderedDict keyed by COMPONENTS
    """
    if analytic and config_.profile is not None and config_.abelian:
        return _analytic_components(config_, x, y)
    h = h or CONF.residual.fd_step
    residual.check_step(config_, x, y, h)
    a1, a2, phi = config_.evaluate(x, y)
    d_x, d_y = residual.partial_derivatives(config_, x, y, h, False)
    f12 = d_x[1] - d_y[0] + liealg.bracket(a1, a2)
    return _assemble(a1, a2, phi, d_x[2], d_y[2], f12)


def _density(components, pairing):
    sign = liealg.compact_orientation(pairing)
    total = 0.0
    for name in COMPONENTS:
        m = components[name]
        total = total + sign * np.real(liealg.pair(m, m, pairing))
    return total


def action_density(config_, x, y, pairing=None, h=None, analytic=False):
    """Action density at (x, y) under ``pairing``.

    :raises SingularPointError: near a singular point
    :raises InvalidStep: when the difference stencil reaches one
    """
    pairing = liealg.PairingKind.from_string(pairing or CONF.action.pairing)
    density = _density(density_components(config_, x, y, h, analytic),
                       pairing)
    return float(density) if np.ndim(density) == 0 else density


def core_contribution(density_fn, eps):
    """Integral over the disc of radius ``eps`` from the leading power.

    density_fn(r) is the angular mean of the density. Its power q is fitted
    at eps and 2 eps and the disc contributes 2 pi d(eps) eps^2 / (q + 2).

    :raises DivergenceError: when q <= -2
    """
    inner = float(density_fn(eps))
    outer = float(density_fn(2.0 * eps))
    if inner == 0.0:
        return 0.0
    if outer == 0.0 or (inner > 0) != (outer > 0):
        raise exceptions.DivergenceError(
            'density changes sign near the core', partial_sum=0.0)
    power = math.log(outer / inner, 2.0)
    if power <= -2.0:
        raise exceptions.DivergenceError(
            'density grows like r^%.3f at the core' % power,
            partial_sum=float('inf'))
    return TWO_PI * inner * eps * eps / (power + 2.0)


class _RadialDensity(object):
    """Angular mean of the density on circles, by the trapezoid rule."""

    def __init__(self, config_, pairing, nodes, analytic, h):
        self.config = config_
        self.pairing = pairing
        self.thetas = TWO_PI * np.arange(nodes) / nodes
        self.analytic = analytic
        self.h = h

    def samples(self, r):
        x = r * np.cos(self.thetas)
        y = r * np.sin(self.thetas)
        h = self.h
        if not self.analytic:
            distance = float(np.min(self.config.distance_to_singularity(x, y)))
            h = min(h, 0.25 * (distance - self.config.exclusion_radius))
        return action_density(self.config, x, y, self.pairing, h,
                              self.analytic)

    def __call__(self, r):
        return float(np.mean(self.samples(r)))


def full_action(config_, pairing=None, spec=None, angular_nodes=None):
    """Quadrature of the action density over the plane.

    The angular integral is a trapezoid rule, the radial one an adaptive
    Simpson rule on [eps, 1] and [1, inf). A singularity at the origin is
    cut out at the exclusion radius and its core estimated from the leading
    power of the density.

    :return: models.ActionReport with only full_value set
    :raises InvalidParameter: for singular points away from the origin
    """
    pairing = liealg.PairingKind.from_string(pairing or CONF.action.pairing)
    spec = spec or config.quadrature_spec(rel_tol=CONF.action.full_rel_tol)
    nodes = angular_nodes or CONF.action.angular_nodes
    if nodes < 64:
        raise exceptions.InvalidParameter(name='angular_nodes', value=nodes,
                                          reason='at least 64 are required')
    singular = config_.singular_points()
    analytic = config_.profile is not None and config_.abelian
    if any(p != (0.0, 0.0) for p in singular) or (singular and
                                                  not analytic):
        raise exceptions.InvalidParameter(
            name='config', value=config_,
            reason='only radial configs may be singular at the origin')
    eps = 4.0 * config_.exclusion_radius if singular else 0.0
    radial = _RadialDensity(config_, pairing, nodes, analytic,
                            CONF.residual.fd_step)
    c = getattr(config_, 'c', None)

    spread = None
    if config_.profile is not None:
        spread = max(float(np.ptp(radial.samples(r))) for r in _SPREAD_RADII)
        if spread > SPREAD_TOLERANCE:
            LOG.warning('Density of radial config %r varies by %s in theta',
                        config_, spread)

    def integrand(r):
        return TWO_PI * r * radial(r)

    try:
        core = core_contribution(radial, eps) if eps else 0.0
        inner = numerics.integrate_interval(integrand, eps, 1.0, spec)
        outer = numerics.integrate_halfline(lambda s: integrand(1.0 + s),
                                            spec)
    except exceptions.DivergenceError as e:
        LOG.info('Full action of %r diverges: %s', config_, e)
        return models.ActionReport(c, pairing.value, None, None, None, False,
                                   None, angular_spread=spread)
    value = core + inner.value + outer.value
    error = inner.error_estimate + outer.error_estimate
    LOG.debug('Full action of %r: core %s, inner %s, outer %s', config_,
              core, inner.value, outer.value)
    return models.ActionReport(c, pairing.value, None, None, value, True,
                               None, full_error_estimate=error,
                               angular_spread=spread)


def additivity(separation=None, pairing=None, spec=None):
    """Full action of two unit blocks against twice that of one block.

    The blocks sit at (+-separation/2, 0). ``ratio`` is the pair action over
    twice the single one and is None when either integral diverges.
    """
    separation = CONF.action.additivity_separation if separation is None \
        else float(separation)
    if not (math.isfinite(separation) and separation >= 0.0):
        raise exceptions.InvalidParameter(name='separation',
                                          value=separation,
                                          reason='must be finite and >= 0')
    half = 0.5 * separation
    pair = full_action(fields.MultiConfig([(-half, 0.0), (half, 0.0)]),
                       pairing, spec)
    single = full_action(fields.MultiConfig([(0.0, 0.0)]), pairing, spec)
    ratio = None
    if pair.convergent and single.convergent and single.full_value:
        ratio = pair.full_value / (2.0 * single.full_value)
    LOG.info('Two blocks at separation %s: action %s against %s for one',
             separation, pair.full_value, single.full_value)
    return {
        'separation': separation,
        'pair_value': pair.full_value,
        'single_value': single.full_value,
        'ratio': ratio,
        'within_tolerance': ratio is not None and
        abs(ratio - 1.0) <= ADDITIVITY_TOLERANCE,
    }


def action_report(c, pairing=None, spec=None, include_full=True):
    """Reduced, printed and full action of exact(c) in one report."""
    pairing = liealg.PairingKind.from_string(pairing or CONF.action.pairing)
    report = reduced_action(c, spec)
    report.pairing = pairing.value
    if include_full:
        full = full_action(fields.ExactConfig(c), pairing)
        report.full_value = full.full_value
        report.full_error_estimate = full.full_error_estimate
        report.angular_spread = full.angular_spread
        if not full.convergent:
            LOG.info('Full action of exact(%s) under %s diverges', c,
                     pairing.value)
    return report
