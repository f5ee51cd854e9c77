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
"""Numerical kernels shared by the field, action and holonomy modules."""
import heapq
import math

import numpy as np
from oslo_log import log as logging

from hitchin_toolkit import exceptions

LOG = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


class QuadratureSpec(object):

    def __init__(self, rel_tol=1e-10, abs_tol=1e-12, max_subdivisions=100000,
                 divergence_decades=12):
        if not (rel_tol > 0 and abs_tol > 0):
            raise exceptions.InvalidParameter(
                name='tolerance', value=(rel_tol, abs_tol),
                reason='tolerances must be positive')
        if max_subdivisions < 1:
            raise exceptions.InvalidParameter(
                name='max_subdivisions', value=max_subdivisions,
                reason='at least one subdivision is required')
        self.rel_tol = float(rel_tol)
        self.abs_tol = float(abs_tol)
        self.max_subdivisions = int(max_subdivisions)
        self.divergence_decades = int(divergence_decades)

    def tolerance(self, value):
        return max(self.abs_tol, self.rel_tol * abs(value))

    def to_dict(self):
        return dict(self.__dict__)

    def __repr__(self):
        return 'QuadratureSpec(%s)' % self.to_dict()


class OdeSpec(object):

    def __init__(self, step_count=4096, richardson_check=False):
        if step_count < 16:
            raise exceptions.InvalidParameter(
                name='step_count', value=step_count,
                reason='at least 16 steps per revolution are required')
        self.step_count = int(step_count)
        self.richardson_check = bool(richardson_check)

    def steps_for(self, theta_end):
        return max(1, int(math.ceil(self.step_count * abs(theta_end) /
                                    TWO_PI)))

    def to_dict(self):
        return dict(self.__dict__)

    def __repr__(self):
        return 'OdeSpec(%s)' % self.to_dict()


class QuadratureResult(object):

    def __init__(self, value, error_estimate, subdivisions, converged=True):
        self.value = value
        self.error_estimate = error_estimate
        self.subdivisions = subdivisions
        self.converged = converged

    def __iter__(self):
        return iter((self.value, self.error_estimate))

    def __repr__(self):
        return ('QuadratureResult(value=%r, error_estimate=%r, '
                'subdivisions=%r, converged=%r)' %
                (self.value, self.error_estimate, self.subdivisions,
                 self.converged))


class MatrixOdeResult(object):

    def __init__(self, final, thetas, path, richardson_error=None):
        self.final = final
        self.thetas = thetas
        self.path = path
        self.richardson_error = richardson_error


def _panel(f, a, b, fa, fm, fb):
    """Simpson panel on [a, b] refined once; returns (value, error, data)."""
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    h = b - a
    whole = h / 6.0 * (fa + 4.0 * fm + fb)
    left = h / 12.0 * (fa + 4.0 * flm + fm)
    right = h / 12.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    return (left + right + delta / 15.0, abs(delta) / 15.0,
            (a, lm, m, rm, b, fa, flm, fm, frm, fb))


def _splittable(data):
    a, lm, m, rm, b = data[:5]
    return a < lm < m < rm < b


def _adaptive_simpson(f, a, b, fa, fb, spec):
    """Globally adaptive Simpson rule.

    The panel with the largest error estimate is bisected until the summed
    estimate of the live panels meets the tolerance. Panels too narrow to
    bisect are frozen and their error still counts.

    :return: (value, error, subdivisions, converged)
    """
    fm = f(0.5 * (a + b))
    value, error, data = _panel(f, a, b, fa, fm, fb)
    heap = [(-error, 0, value, data)]
    frozen = []
    live_value, live_error = value, error
    counter = 1
    subdivisions = 0

    while heap:
        total_value = live_value + math.fsum(p[2] for p in frozen)
        if live_error <= spec.tolerance(total_value):
            break
        if subdivisions >= spec.max_subdivisions:
            break
        neg_error, _, value, data = heapq.heappop(heap)
        live_value -= value
        live_error += neg_error
        if not _splittable(data):
            frozen.append((-neg_error, counter, value, data))
            continue
        pa, plm, pm, prm, pb, pfa, pflm, pfm, pfrm, pfb = data
        for child in (_panel(f, pa, pm, pfa, pflm, pfm),
                      _panel(f, pm, pb, pfm, pfrm, pfb)):
            heapq.heappush(heap, (-child[1], counter, child[0], child[2]))
            counter += 1
            live_value += child[0]
            live_error += child[1]
        subdivisions += 1

    panels = [(p[2], -p[0]) for p in heap] + [(p[2], p[0]) for p in frozen]
    value = math.fsum(v for v, _ in panels)
    error = math.fsum(e for _, e in panels)
    converged = error <= spec.tolerance(value)
    return value, error, subdivisions, converged


def _finite_or_zero(fn, x):
    try:
        value = float(fn(x))
    except (ZeroDivisionError, OverflowError, FloatingPointError,
            exceptions.SingularPointError):
        return 0.0
    return value if math.isfinite(value) else 0.0


def _checked(fn):
    def wrapper(x):
        value = float(fn(x))
        if not math.isfinite(value):
            raise exceptions.DivergenceError(
                'integrand is not finite at %r' % x, partial_sum=float('nan'))
        return value
    return wrapper


def integrate_interval(fn, a, b, spec=None):
    """Adaptive Simpson integral of ``fn`` over a finite interval.

    Non-finite values at the two ends are replaced by zero; the panels next
    to them are then refined until the tolerance is met.
    """
    spec = spec or QuadratureSpec()
    if a == b:
        return QuadratureResult(0.0, 0.0, 0)
    if a > b:
        result = integrate_interval(fn, b, a, spec)
        result.value = -result.value
        return result
    value, error, subdivisions, converged = _adaptive_simpson(
        _checked(fn), a, b, _finite_or_zero(fn, a), _finite_or_zero(fn, b),
        spec)
    return QuadratureResult(value, error, subdivisions, converged)


def _decade_shells(fn, spec):
    shell_spec = QuadratureSpec(rel_tol=spec.rel_tol, abs_tol=spec.abs_tol,
                                max_subdivisions=2000)
    core = []
    tail = []
    for k in range(spec.divergence_decades):
        core.append(integrate_interval(fn, 10.0 ** (-k - 1), 10.0 ** (-k),
                                       shell_spec).value)
        tail.append(integrate_interval(fn, 10.0 ** k, 10.0 ** (k + 1),
                                       shell_spec).value)
    return core, tail


def _shells_diverge(shells, abs_tol, ratio=0.9):
    last = [abs(s) for s in shells[-4:]]
    if last[-1] <= abs_tol:
        return False
    return all(last[i + 1] >= ratio * last[i] for i in range(len(last) - 1))


def detect_divergence(fn, spec=None):
    """Decade-shell test for divergence of the integral of fn over [0, inf).

    :return: (divergent, core shells, tail shells)
    """
    spec = spec or QuadratureSpec()
    core, tail = _decade_shells(fn, spec)
    divergent = (_shells_diverge(core, spec.abs_tol) or
                 _shells_diverge(tail, spec.abs_tol))
    return divergent, core, tail


def integrate_halfline(fn, spec=None):
    """Integral of ``fn`` over [0, inf) with an error estimate.

    Uses r = u / (1 - u) to map onto [0, 1). When the estimate cannot be
    brought under tolerance the decade-shell detector decides between a
    DivergenceError and an unconverged result.

    :param fn: scalar function of r >= 0
    :param spec: QuadratureSpec
    :return: QuadratureResult
    :raises DivergenceError: if the integral diverges
    """
    spec = spec or QuadratureSpec()
    tail_hits = []

    def compact(u):
        # samples at u >= 1 or past float range stand for r = inf and,
        # like the right end, count as zero
        one_minus = 1.0 - u
        if one_minus > 0.0:
            value = float(fn(u / one_minus))
            if not math.isfinite(value):
                return value
            scaled = value / (one_minus * one_minus)
            if math.isfinite(scaled):
                return scaled
        tail_hits.append(u)
        return 0.0

    value, error, subdivisions, converged = _adaptive_simpson(
        _checked(compact), 0.0, 1.0, _finite_or_zero(fn, 0.0), 0.0, spec)
    if tail_hits:
        LOG.debug('Half-line quadrature reached the point at infinity %d '
                  'times', len(tail_hits))
    if converged:
        LOG.debug('Half-line quadrature converged to %s (+/- %s) after %d '
                  'subdivisions', value, error, subdivisions)
        return QuadratureResult(value, error, subdivisions)

    divergent, core, tail = detect_divergence(fn, spec)
    if divergent:
        raise exceptions.DivergenceError(partial_sum=value)
    LOG.warning('Half-line quadrature stopped at %s (+/- %s) without meeting '
                'tolerance; decade shells decay so the value is kept',
                value, error)
    return QuadratureResult(value, error, subdivisions, converged=False)


def _evaluate_rhs(rhs, thetas):
    values = np.asarray(rhs(thetas), dtype=complex)
    if values.shape == thetas.shape + (2, 2):
        return values
    if values.shape == (2, 2):
        return np.broadcast_to(values, thetas.shape + (2, 2))
    return np.array([np.asarray(rhs(t), dtype=complex) for t in thetas])


def _rk4_path(rhs, theta_end, init, steps):
    h = theta_end / steps
    grid = np.linspace(0.0, theta_end, 2 * steps + 1)
    coeff = _evaluate_rhs(rhs, grid)
    m0 = coeff[0:-1:2]
    mh = coeff[1::2]
    m1 = coeff[2::2]
    eye = np.eye(2, dtype=complex)
    k1 = -m0
    k2 = -np.matmul(mh, eye + 0.5 * h * k1)
    k3 = -np.matmul(mh, eye + 0.5 * h * k2)
    k4 = -np.matmul(m1, eye + h * k3)
    steps_propagator = eye + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    path = np.empty((steps + 1, 2, 2), dtype=complex)
    path[0] = init
    for n in range(steps):
        path[n + 1] = np.dot(steps_propagator[n], path[n])
    return grid[::2], path


def rk4_matrix(rhs, theta_end, init=None, spec=None):
    """Classical RK4 for d(gamma)/d(theta) = -rhs(theta) * gamma.

    :param rhs: callable mapping an array of angles to an array of 2x2
                coefficients (a constant 2x2 result is broadcast)
    :param theta_end: end of the integration interval, radians
    :param init: initial matrix, identity by default
    :param spec: OdeSpec
    :return: MatrixOdeResult
    """
    spec = spec or OdeSpec()
    init = np.eye(2, dtype=complex) if init is None else np.asarray(
        init, dtype=complex)
    if theta_end == 0:
        return MatrixOdeResult(init.copy(), np.zeros(1), init[np.newaxis],
                               0.0 if spec.richardson_check else None)
    steps = spec.steps_for(theta_end)
    thetas, path = _rk4_path(rhs, theta_end, init, steps)
    richardson_error = None
    if spec.richardson_check:
        _, fine = _rk4_path(rhs, theta_end, init, 2 * steps)
        richardson_error = float(np.max(np.abs(fine[-1] - path[-1])))
    return MatrixOdeResult(path[-1].copy(), thetas, path, richardson_error)


def central_diff(fn, x, h):
    """(fn(x + h) - fn(x - h)) / 2h for scalar or array valued ``fn``."""
    if not h > 0:
        raise exceptions.InvalidParameter(name='h', value=h,
                                          reason='step must be positive')
    return (np.asarray(fn(x + h)) - np.asarray(fn(x - h))) / (2.0 * h)


def richardson_derivative(fn, x, h):
    """Fourth order combination of two central differences."""
    coarse = central_diff(fn, x, h)
    fine = central_diff(fn, x, 0.5 * h)
    return (4.0 * fine - coarse) / 3.0


def cumulative_simpson(values, h):
    """Running integral at whole nodes from values on a half-step grid.

    :param values: samples at 0, h/2, h, ..., n*h (2n + 1 of them)
    :param h: whole step
    :return: n + 1 running integrals starting at 0
    """
    values = np.asarray(values)
    pieces = h / 6.0 * (values[0:-1:2] + 4.0 * values[1::2] + values[2::2])
    return np.concatenate([[0.0], np.cumsum(pieces)])


def phase_increments(samples):
    samples = np.asarray(samples, dtype=complex)
    if np.any(np.abs(samples) < 1e-300):
        raise exceptions.InvalidParameter(
            name='samples', value='zero magnitude',
            reason='phase is undefined at zero')
    return np.diff(np.unwrap(np.angle(samples)))


def unwrap_phase(samples, max_step=None):
    """Accumulated argument along a sequence of unit complex numbers.

    :param samples: complex samples, consecutive phases within pi
    :param max_step: largest accepted wrapped increment; exceeding it raises
                     UndersamplingError
    :return: total phase change in radians
    """
    increments = phase_increments(samples)
    if max_step is not None and increments.size:
        index = int(np.argmax(np.abs(increments)))
        if abs(increments[index]) > max_step:
            raise exceptions.UndersamplingError(step=increments[index],
                                                index=index, next=index + 1)
    return float(math.fsum(increments))


def winding_from_phase(total):
    return int(round(total / TWO_PI))
