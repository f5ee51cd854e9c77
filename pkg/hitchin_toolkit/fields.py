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
"""Radial profiles and planar field configurations.

A configuration is A = A_1 dx + A_2 dy with both components along tau_1, and
a Higgs field Phi = g tau_2 + i h tau_3. Every configuration can therefore be
described by four real coefficient arrays, which is what
``FieldConfig.coefficients`` returns; ``evaluate`` assembles the matrices.
"""
import enum
import math

import jsonschema
import numpy as np
from oslo_log import log as logging
from oslo_serialization import jsonutils as json

from hitchin_toolkit.common import models
from hitchin_toolkit import config
from hitchin_toolkit import exceptions
from hitchin_toolkit import liealg
from hitchin_toolkit.schemas.v1 import particles_schema

LOG = logging.getLogger(__name__)


class Branch(enum.Enum):
    EXACT = 'exact'
    SINGULAR = 'singular'

    @classmethod
    def from_string(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise exceptions.InvalidParameter(
                name='branch', value=value,
                reason='expected exact or singular')


class Smoothness(enum.Enum):
    SMOOTH = 'smooth'
    MERON_SINGULAR = 'meron_singular'


def check_parameter(c, name='c'):
    try:
        value = float(c)
    except (TypeError, ValueError):
        raise exceptions.InvalidParameter(name=name, value=c,
                                          reason='not a number')
    if not (math.isfinite(value) and value > 0.0):
        raise exceptions.InvalidParameter(name=name, value=c,
                                          reason='must be positive')
    return value


def _radius(r):
    r = np.asarray(r, dtype=float)
    if np.any(~np.isfinite(r)) or np.any(r < 0.0):
        raise exceptions.InvalidParameter(name='r', value=r,
                                          reason='radii are finite and >= 0')
    return r


def _out(value):
    value = np.asarray(value)
    return float(value) if value.ndim == 0 else value


def _log(r):
    with np.errstate(divide='ignore'):
        return np.log(r)


def _scaled(log_r, k):
    # k * log r, with the r**0 == 1 convention at r == 0
    if k == 0:
        return np.zeros_like(log_r)
    return k * log_r


def _power(r, k):
    if k == 0:
        return np.ones_like(r)
    with np.errstate(divide='ignore', over='ignore'):
        return np.power(r, k)


class RadialProfile(object):
    """The radial functions f, g, h of the ansatz with analytic derivatives.

    All methods accept a scalar or an array of radii and return the same
    shape.
    """

    branch = None

    def __init__(self, c):
        self.c = check_parameter(c)

    def __repr__(self):
        return '%s(c=%r)' % (self.__class__.__name__, self.c)

    def f(self, r):
        raise NotImplementedError

    def df(self, r):
        raise NotImplementedError

    def g(self, r):
        raise NotImplementedError

    def dg(self, r):
        raise NotImplementedError

    def h(self, r):
        return self.g(r)

    def dh(self, r):
        return self.dg(r)

    def f_over_r2(self, r):
        r = _radius(r)
        with np.errstate(divide='ignore', invalid='ignore'):
            return _out(np.asarray(self.f(r)) / r ** 2)

    def df_over_r(self, r):
        r = _radius(r)
        with np.errstate(divide='ignore', invalid='ignore'):
            return _out(np.asarray(self.df(r)) / r)

    def singular_radii(self):
        return []


class ExactProfile(RadialProfile):
    """f = ((1-c) + (1+c) r^2c) / (1 + r^2c), g = h = 2c r^(c-1) / (1 + r^2c).

    Evaluated through log r and the logistic function so that neither large
    radii nor large c overflow; r = 0 gives the analytic limits.
    """

    branch = Branch.EXACT

    def _parts(self, r):
        r = _radius(r)
        log_r = _log(r)
        # log(1 + r^2c)
        log_1s = np.logaddexp(0.0, 2.0 * self.c * log_r)
        return r, log_r, log_1s

    def _q(self, log_r):
        with np.errstate(over='ignore'):
            return 1.0 / (1.0 + np.exp(2.0 * self.c * log_r))

    def f(self, r):
        _, log_r, _ = self._parts(r)
        return _out((1.0 + self.c) - 2.0 * self.c * self._q(log_r))

    def df(self, r):
        c = self.c
        _, log_r, log_1s = self._parts(r)
        with np.errstate(over='ignore'):
            return _out(4.0 * c * c *
                        np.exp(_scaled(log_r, 2.0 * c - 1.0) - 2.0 * log_1s))

    def df_over_r(self, r):
        """f'/r = 4c^2 r^(2c-2) / (1 + r^2c)^2, finite at r = 0 for c >= 1."""
        c = self.c
        _, log_r, log_1s = self._parts(r)
        with np.errstate(over='ignore'):
            return _out(4.0 * c * c *
                        np.exp(_scaled(log_r, 2.0 * c - 2.0) - 2.0 * log_1s))

    def g(self, r):
        c = self.c
        _, log_r, log_1s = self._parts(r)
        with np.errstate(over='ignore'):
            return _out(2.0 * c * np.exp(_scaled(log_r, c - 1.0) - log_1s))

    def dg(self, r):
        c = self.c
        _, log_r, log_1s = self._parts(r)
        with np.errstate(over='ignore', invalid='ignore'):
            second = -4.0 * c * c * np.exp(
                _scaled(log_r, 3.0 * c - 2.0) - 2.0 * log_1s)
            if c == 1.0:
                return _out(second)
            first = 2.0 * c * (c - 1.0) * np.exp(
                _scaled(log_r, c - 2.0) - log_1s)
            return _out(first + second)

    def f_over_r2(self, r):
        c = self.c
        _, log_r, log_1s = self._parts(r)
        with np.errstate(over='ignore', invalid='ignore'):
            outer = (1.0 + c) * np.exp(_scaled(log_r, 2.0 * c - 2.0) - log_1s)
            if c == 1.0:
                return _out(outer)
            inner = (1.0 - c) * np.exp(-2.0 * log_r - log_1s)
            return _out(inner + outer)


class PrintedExactProfile(ExactProfile):
    """f = ((1-c) - (1+c) r^2c) / (1 + r^2c) with g = h as in ExactProfile.

    This sign of f does not satisfy the reduced ODE system; the profile is
    kept so that its residual can be reported.
    """

    def f(self, r):
        _, log_r, _ = self._parts(r)
        return _out(2.0 * self._q(log_r) - (1.0 + self.c))

    def df(self, r):
        c = self.c
        _, log_r, log_1s = self._parts(r)
        with np.errstate(over='ignore'):
            return _out(-4.0 * c *
                        np.exp(_scaled(log_r, 2.0 * c - 1.0) - 2.0 * log_1s))

    def df_over_r(self, r):
        return RadialProfile.df_over_r(self, r)

    def f_over_r2(self, r):
        return RadialProfile.f_over_r2(self, r)


class SingularProfile(RadialProfile):
    """f = ((c-1) + (c+1) r^2c) / (1 - r^2c), g = -h = 2c r^(c-1) / (1 - r^2c).

    Undefined on the circle r = 1; radii closer to it than the exclusion
    radius raise SingularPointError.
    """

    branch = Branch.SINGULAR

    def __init__(self, c, exclusion_radius=None):
        super(SingularProfile, self).__init__(c)
        if exclusion_radius is None:
            exclusion_radius = config.exclusion_radius()
        self.exclusion_radius = float(exclusion_radius)

    def singular_radii(self):
        return [1.0]

    def _parts(self, r):
        r = _radius(r)
        near = np.abs(r - 1.0) < self.exclusion_radius
        if np.any(near):
            raise exceptions.SingularPointError(
                point=float(r[near].flat[0]) if r.ndim else float(r),
                radius=self.exclusion_radius, singular='r = 1')
        s = _power(r, 2.0 * self.c)
        return r, s, 1.0 / (1.0 - s)

    def f(self, r):
        c = self.c
        _, s, p = self._parts(r)
        return _out(((c - 1.0) + (c + 1.0) * s) * p)

    def df(self, r):
        c = self.c
        r, _, p = self._parts(r)
        return _out(4.0 * c * c * _power(r, 2.0 * c - 1.0) * p * p)

    def g(self, r):
        c = self.c
        r, _, p = self._parts(r)
        return _out(2.0 * c * _power(r, c - 1.0) * p)

    def dg(self, r):
        c = self.c
        r, _, p = self._parts(r)
        with np.errstate(invalid='ignore'):
            second = 4.0 * c * c * _power(r, 3.0 * c - 2.0) * p * p
            if c == 1.0:
                return _out(second)
            return _out(2.0 * c * (c - 1.0) * _power(r, c - 2.0) * p +
                        second)

    def h(self, r):
        return _out(-np.asarray(self.g(r)))

    def dh(self, r):
        return _out(-np.asarray(self.dg(r)))

    def f_over_r2(self, r):
        c = self.c
        r, _, p = self._parts(r)
        with np.errstate(divide='ignore', invalid='ignore'):
            outer = (c + 1.0) * _power(r, 2.0 * c - 2.0) * p
            if c == 1.0:
                return _out(outer)
            return _out((c - 1.0) * p / r ** 2 + outer)


def exact_profile(c):
    """The smooth-at-infinity one-parameter family solving the ODE system.

    :param c: shape parameter, c > 0
    :raises InvalidParameter: if c <= 0
    """
    return ExactProfile(c)


def printed_exact_profile(c):
    return PrintedExactProfile(c)


def singular_profile(c, exclusion_radius=None):
    return SingularProfile(c, exclusion_radius=exclusion_radius)


class TransformedPair(object):
    """Functions (F, G) of t = -log r with optional analytic derivatives."""

    def __init__(self, F, G, dF=None, dG=None, branch=Branch.EXACT):
        self.F = F
        self.G = G
        self.dF = dF
        self.dG = dG
        self.branch = Branch.from_string(branch)

    @property
    def analytic(self):
        return self.dF is not None and self.dG is not None


def transformed_pair(profile, branch=None):
    """Apply r = exp(-t) to a profile.

    Exact branch: F = 1 - f, G = r g. Singular branch: F = f + 1, G = r g.
    Derivatives follow from the chain rule dr/dt = -r.
    """
    branch = Branch.from_string(branch or profile.branch)
    sign = -1.0 if branch is Branch.EXACT else 1.0

    def radius(t):
        return np.exp(-np.asarray(t, dtype=float))

    def F(t):
        return _out(1.0 + sign * np.asarray(profile.f(radius(t))))

    def dF(t):
        r = radius(t)
        return _out(-sign * r * np.asarray(profile.df(r)))

    def G(t):
        r = radius(t)
        return _out(r * np.asarray(profile.g(r)))

    def dG(t):
        r = radius(t)
        return _out(-r * (np.asarray(profile.g(r)) +
                          r * np.asarray(profile.dg(r))))

    return TransformedPair(F, G, dF, dG, branch)


def tanh_pair(c):
    """(c tanh(ct), c sech(ct)), the exact-branch closed form."""
    c = check_parameter(c)

    def sech(t):
        return 1.0 / np.cosh(c * np.asarray(t, dtype=float))

    return TransformedPair(
        lambda t: _out(c * np.tanh(c * np.asarray(t, dtype=float))),
        lambda t: _out(c * sech(t)),
        lambda t: _out(c * c * sech(t) ** 2),
        lambda t: _out(-c * c * sech(t) * np.tanh(c * np.asarray(t))),
        Branch.EXACT)


def coth_pair(c):
    """(c coth(ct), c csch(ct)), the singular-branch closed form."""
    c = check_parameter(c)

    def coth(t):
        return 1.0 / np.tanh(c * np.asarray(t, dtype=float))

    def csch(t):
        return 1.0 / np.sinh(c * np.asarray(t, dtype=float))

    return TransformedPair(
        lambda t: _out(c * coth(t)),
        lambda t: _out(c * csch(t)),
        lambda t: _out(-c * c * csch(t) ** 2),
        lambda t: _out(-c * c * csch(t) * coth(t)),
        Branch.SINGULAR)


class PolarConnection(object):

    def __init__(self, a_r, a_theta, phi1, phi2):
        self.a_r = a_r
        self.a_theta = a_theta
        self.phi1 = phi1
        self.phi2 = phi2

    def cartesian(self, r, theta):
        """(A_1, A_2) through d(theta) = (-y dx + x dy) / r^2."""
        return (-np.sin(theta) / r * self.a_theta,
                np.cos(theta) / r * self.a_theta)


def polar_connection(profile, r, theta=0.0):
    """A = f tau_1 d(theta) + g tau_2 du + h tau_3 dv at one point.

    The connection has no radial part and does not depend on theta.
    """
    t1, t2, t3 = liealg.taus()
    return PolarConnection(liealg.ZERO.copy(), profile.f(r) * t1,
                           profile.g(r) * t2, profile.h(r) * t3)


def _xy(x, y):
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float),
                               np.asarray(y, dtype=float))
    return x, y


def along(coefficient, generator):
    return np.asarray(coefficient)[..., np.newaxis, np.newaxis] * generator


class FieldConfig(object):
    """A planar connection and Higgs field, evaluable anywhere on R^2.

    Instances are immutable. ``evaluate`` refuses points within
    ``exclusion_radius`` of a singular point.
    """

    variant = None

    # A along tau_1 and Phi = g tau_2 + i h tau_3 everywhere
    abelian = True

    def __init__(self, exclusion_radius=None, higgs_scale=1.0):
        if exclusion_radius is None:
            exclusion_radius = config.exclusion_radius()
        self.exclusion_radius = float(exclusion_radius)
        self.higgs_scale = float(higgs_scale)

    def __repr__(self):
        return '%s(%s)' % (self.__class__.__name__, self.describe())

    def describe(self):
        return {'variant': self.variant, 'higgs_scale': self.higgs_scale}

    @property
    def particles(self):
        return []

    @property
    def profile(self):
        """The radial profile for radially symmetric configs, else None."""
        return None

    def extent(self):
        """Largest distance of a particle from the origin."""
        return max([p.distance() for p in self.particles] or [0.0])

    def asymptotic_charge(self):
        """Limit of the angular coefficient a(theta) on large circles."""
        return 0.0

    def smoothness(self):
        return Smoothness.SMOOTH

    def singular_points(self):
        return []

    def distance_to_singularity(self, x, y):
        x, y = _xy(x, y)
        points = self.singular_points()
        if not points:
            return np.full(x.shape, np.inf)
        return np.min([np.hypot(x - px, y - py) for px, py in points],
                      axis=0)

    def _nearest_singularity(self, x, y):
        points = self.singular_points()
        return min(points, key=lambda p: math.hypot(x - p[0], y - p[1]))

    def check_points(self, x, y, margin=0.0):
        """Raise SingularPointError for points too close to a singularity.

        :param margin: extra distance required on top of the exclusion radius
        """
        x, y = _xy(x, y)
        bad = self.distance_to_singularity(x, y) < (self.exclusion_radius +
                                                     margin)
        if np.any(bad):
            index = tuple(np.argwhere(bad)[0])
            point = (float(x[index]), float(y[index]))
            raise exceptions.SingularPointError(
                point=point, radius=self.exclusion_radius + margin,
                singular=self._nearest_singularity(*point))
        return x, y

    def coefficients(self, x, y):
        """(a1, a2, g, h): A_i = a_i tau_1, Phi = scale (g tau_2 + i h tau_3).

        No singularity check is made; use ``evaluate`` for checked access.
        """
        raise NotImplementedError

    def evaluate(self, x, y):
        """(A_1, A_2, Phi), each of shape broadcast(x, y).shape + (2, 2).

        :raises SingularPointError: near a singular point
        """
        x, y = self.check_points(x, y)
        a1, a2, g, h = self.coefficients(x, y)
        t1, t2, t3 = liealg.taus()
        phi = self.higgs_scale * (along(g, t2) + 1j * along(h, t3))
        return along(a1, t1), along(a2, t1), phi

    def angular_coefficient(self, radius, thetas):
        """a(theta) with A_theta = a tau_1 on the circle of ``radius``."""
        thetas = np.asarray(thetas, dtype=float)
        x = radius * np.cos(thetas)
        y = radius * np.sin(thetas)
        self.check_points(x, y)
        a1, a2, _, _ = self.coefficients(x, y)
        return -y * a1 + x * a2

    def angular_connection(self, radius, thetas):
        """A_theta = -r sin(theta) A_1 + r cos(theta) A_2 as matrices."""
        thetas = np.asarray(thetas, dtype=float)
        x = radius * np.cos(thetas)
        y = radius * np.sin(thetas)
        a1, a2, _ = self.evaluate(x, y)
        return (-y[..., np.newaxis, np.newaxis] * a1 +
                x[..., np.newaxis, np.newaxis] * a2)


class ExactConfig(FieldConfig):

    variant = 'exact'

    def __init__(self, c, exclusion_radius=None, higgs_scale=1.0):
        super(ExactConfig, self).__init__(exclusion_radius, higgs_scale)
        self._profile = ExactProfile(c)
        self.c = self._profile.c

    def describe(self):
        data = super(ExactConfig, self).describe()
        data['c'] = self.c
        return data

    @property
    def profile(self):
        return self._profile

    def asymptotic_charge(self):
        return 1.0 + self.c

    def smoothness(self):
        if self.c == 1.0:
            return Smoothness.SMOOTH
        return Smoothness.MERON_SINGULAR

    def singular_points(self):
        return [] if self.c == 1.0 else [(0.0, 0.0)]

    def coefficients(self, x, y):
        x, y = _xy(x, y)
        r = np.hypot(x, y)
        w = np.asarray(self._profile.f_over_r2(r))
        return (-y * w, x * w, np.asarray(self._profile.g(r)),
                np.asarray(self._profile.h(r)))


class SingularConfig(FieldConfig):
    """The g = -h branch; singular on the unit circle and, for c != 1, at 0."""

    variant = 'singular'

    def __init__(self, c, exclusion_radius=None, higgs_scale=1.0):
        super(SingularConfig, self).__init__(exclusion_radius, higgs_scale)
        self._profile = SingularProfile(c, self.exclusion_radius)
        self.c = self._profile.c

    def describe(self):
        data = super(SingularConfig, self).describe()
        data['c'] = self.c
        return data

    @property
    def profile(self):
        return self._profile

    def asymptotic_charge(self):
        return -(1.0 + self.c)

    def smoothness(self):
        return Smoothness.MERON_SINGULAR

    def singular_points(self):
        return [] if self.c == 1.0 else [(0.0, 0.0)]

    def distance_to_singularity(self, x, y):
        x, y = _xy(x, y)
        circle = np.abs(np.hypot(x, y) - 1.0)
        return np.minimum(
            super(SingularConfig, self).distance_to_singularity(x, y),
            circle)

    def _nearest_singularity(self, x, y):
        r = math.hypot(x, y)
        if r > 0 and (self.c == 1.0 or abs(r - 1.0) < r):
            return (x / r, y / r)
        return (0.0, 0.0)

    def coefficients(self, x, y):
        x, y = _xy(x, y)
        r = np.hypot(x, y)
        w = np.asarray(self._profile.f_over_r2(r))
        return (-y * w, x * w, np.asarray(self._profile.g(r)),
                np.asarray(self._profile.h(r)))


class MultiConfig(FieldConfig):
    """Sum of smooth blocks 2/(1+rho_k^2) centred on each particle.

    Block k contributes 2/(1+rho_k^2) (-(y-y_k) dx + (x-x_k) dy) tau_1 to
    the connection and 2/(1+rho_k^2) (tau_2 + i tau_3) to Phi.
    """

    variant = 'multi'

    def __init__(self, particles, exclusion_radius=None, higgs_scale=1.0):
        super(MultiConfig, self).__init__(exclusion_radius, higgs_scale)
        self._particles = _particle_list(particles)
        for p in self._particles:
            if not p.smooth:
                raise exceptions.InvalidParameter(
                    name='particles', value=p,
                    reason='smooth superposition needs c = 1')

    def describe(self):
        data = super(MultiConfig, self).describe()
        data['particles'] = [p.to_dict() for p in self._particles]
        return data

    @property
    def particles(self):
        return list(self._particles)

    def asymptotic_charge(self):
        return 2.0 * len(self._particles)

    def coefficients(self, x, y):
        x, y = _xy(x, y)
        a1 = np.zeros(x.shape)
        a2 = np.zeros(x.shape)
        g = np.zeros(x.shape)
        for p in self._particles:
            dx = x - p.x
            dy = y - p.y
            w = 2.0 / (1.0 + dx * dx + dy * dy)
            a1 -= dy * w
            a2 += dx * w
            g += w
        return a1, a2, g, g.copy()


class FractionalConfig(FieldConfig):
    """Sum of exact(c_k) blocks, each recentred on its particle."""

    variant = 'fractional'

    def __init__(self, particles, exclusion_radius=None, higgs_scale=1.0):
        super(FractionalConfig, self).__init__(exclusion_radius, higgs_scale)
        self._particles = _particle_list(particles)
        self._profiles = [ExactProfile(p.c) for p in self._particles]

    def describe(self):
        data = super(FractionalConfig, self).describe()
        data['particles'] = [p.to_dict() for p in self._particles]
        return data

    @property
    def particles(self):
        return list(self._particles)

    def smoothness(self):
        if all(p.smooth for p in self._particles):
            return Smoothness.SMOOTH
        return Smoothness.MERON_SINGULAR

    def singular_points(self):
        return [(p.x, p.y) for p in self._particles if not p.smooth]

    def asymptotic_charge(self):
        """Sum of (1 + c_k) over the particles."""
        return math.fsum(1.0 + p.c for p in self._particles)

    def coefficients(self, x, y):
        x, y = _xy(x, y)
        a1 = np.zeros(x.shape)
        a2 = np.zeros(x.shape)
        g = np.zeros(x.shape)
        for p, profile in zip(self._particles, self._profiles):
            dx = x - p.x
            dy = y - p.y
            rho = np.hypot(dx, dy)
            w = np.asarray(profile.f_over_r2(rho))
            a1 -= dy * w
            a2 += dx * w
            g += np.asarray(profile.g(rho))
        return a1, a2, g, g.copy()


class ZeroConfig(FieldConfig):

    variant = 'zero'

    def coefficients(self, x, y):
        x, y = _xy(x, y)
        zero = np.zeros(x.shape)
        return zero, zero.copy(), zero.copy(), zero.copy()


class GaugeTransformedConfig(FieldConfig):
    """A constant gauge transform g A_i g^-1, g Phi g^-1 of another config."""

    variant = 'gauge'
    abelian = False

    def __init__(self, base, element):
        super(GaugeTransformedConfig, self).__init__(base.exclusion_radius,
                                                     base.higgs_scale)
        self.base = base
        self.element = np.asarray(element, dtype=complex)

    def describe(self):
        data = self.base.describe()
        data['gauge'] = models.complex_to_list(self.element)
        return data

    @property
    def particles(self):
        return self.base.particles

    def asymptotic_charge(self):
        return self.base.asymptotic_charge()

    def smoothness(self):
        return self.base.smoothness()

    def singular_points(self):
        return self.base.singular_points()

    def distance_to_singularity(self, x, y):
        return self.base.distance_to_singularity(x, y)

    def _nearest_singularity(self, x, y):
        return self.base._nearest_singularity(x, y)

    def coefficients(self, x, y):
        raise exceptions.InvalidParameter(
            name='config', value=self.variant,
            reason='a gauge transformed field has no tau_1 coefficients')

    def evaluate(self, x, y):
        return tuple(liealg.adjoint(self.element, m)
                     for m in self.base.evaluate(x, y))


def _particle_list(particles):
    result = []
    for p in particles:
        if isinstance(p, models.Particle):
            particle = p
        elif isinstance(p, dict):
            particle = models.Particle.from_dict(p)
        else:
            particle = models.Particle(*p)
        check_parameter(particle.c, name='c_k')
        if not (math.isfinite(particle.x) and math.isfinite(particle.y)):
            raise exceptions.InvalidParameter(
                name='particle', value=particle,
                reason='coordinates must be finite')
        result.append(particle)
    if not result:
        raise exceptions.InvalidParameter(
            name='particles', value=particles,
            reason='at least one particle is required')
    return result


def make_config(variant, c=None, particles=None, exclusion_radius=None,
                higgs_scale=1.0):
    """Build a FieldConfig.

    :param variant: exact, singular, multi, fractional or zero
    :param c: shape parameter of the exact and singular variants
    :param particles: Particle objects, dicts or (x, y[, c]) tuples
    :raises InvalidParameter: on an unknown variant or bad parameters
    """
    kwargs = {'exclusion_radius': exclusion_radius,
              'higgs_scale': higgs_scale}
    if variant == 'exact':
        return ExactConfig(c, **kwargs)
    if variant == 'singular':
        return SingularConfig(c, **kwargs)
    if variant == 'multi':
        return MultiConfig(particles or [], **kwargs)
    if variant == 'fractional':
        return FractionalConfig(particles or [], **kwargs)
    if variant == 'zero':
        return ZeroConfig(**kwargs)
    raise exceptions.InvalidParameter(
        name='variant', value=variant,
        reason='expected exact, singular, multi, fractional or zero')


def smoothness_class(config):
    return config.smoothness()


def particles_from_document(document, exclusion_radius=None):
    """Build a multi or fractional config from a particles document.

    A missing ``c`` means 1; any other value selects the fractional family.
    """
    try:
        jsonschema.Draft4Validator(
            particles_schema.particles_document).validate(document)
    except jsonschema.ValidationError as e:
        raise exceptions.InvalidConfigDocument(reason=e.message)
    particles = [models.Particle.from_dict(p)
                 for p in document['particles']]
    for p in particles:
        if not all(math.isfinite(v) for v in (p.x, p.y, p.c)):
            raise exceptions.InvalidConfigDocument(
                reason='non-finite value in %s' % p)
    variant = 'multi' if all(p.smooth for p in particles) else 'fractional'
    LOG.debug('Loaded %d particles as a %s configuration', len(particles),
              variant)
    return make_config(variant, particles=particles,
                       exclusion_radius=exclusion_radius)


def load_particles(path, exclusion_radius=None):
    try:
        with open(path) as f:
            document = json.loads(f.read())
    except (IOError, OSError) as e:
        raise exceptions.InvalidConfigDocument(reason=str(e))
    except ValueError as e:
        raise exceptions.InvalidConfigDocument(reason='not JSON: %s' % e)
    return particles_from_document(document, exclusion_radius)
