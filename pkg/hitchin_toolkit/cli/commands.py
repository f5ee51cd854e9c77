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
"""Sub-commands of the ``hitchin-toolkit`` console script.

Every command builds one Report, writes it once at the end and returns an
exit code through ``base.handle_errors``.
"""
import math

import numpy as np
from oslo_log import log as logging

from hitchin_toolkit import action
from hitchin_toolkit.cli import base
from hitchin_toolkit import config
from hitchin_toolkit import data_utils
from hitchin_toolkit import exceptions
from hitchin_toolkit import fields
from hitchin_toolkit import holonomy
from hitchin_toolkit import liealg
from hitchin_toolkit import numerics
from hitchin_toolkit import residual

LOG = logging.getLogger(__name__)
CONF = config.CONF

DEFAULT_SEPARATIONS = '0.5,1,2,4,8'

# verify samples matrix residuals on this radial band
_SAMPLE_BAND = (0.1, 10.0)


def _unitless(*names):
    return ['%s (dimensionless)' % name for name in names]


PROFILE_HEADER = _unitless('r') + ['r1 [1/r^2]', 'r2 [1/r]', 'r3 [1/r]']
SEPARATION_HEADER = _unitless('separation', 'curvature_residual',
                              'holomorphicity_residual')
HOLONOMY_HEADER = ['theta [rad]'] + _unitless(
    're_g11', 'im_g11', 're_g12', 'im_g12',
    're_g21', 'im_g21', 're_g22', 'im_g22')
SWEEP_HEADER = _unitless('r', 'deviation')
SCAN_HEADERS = {
    'action': _unitless('c', 'reduced_action', 'error_estimate',
                        'printed_action', 'convergent'),
    'winding': (_unitless('c', 'winding', 'degree') + ['total_phase [rad]'] +
                _unitless('deviation')),
    'smoothness': _unitless('c', 'smooth'),
}


def _selected_config(args, variant='exact'):
    """The config chosen by --shape or --particles, exactly one of them."""
    if (args.c is None) == (args.config is None):
        raise exceptions.InvalidParameter(
            name='shape/particles', value=(args.c, args.config),
            reason='give exactly one of --shape and --particles')
    if args.config is not None:
        return fields.load_particles(args.config)
    return fields.make_config(variant, c=fields.check_parameter(args.c))


def _sample_points(n, r_min, r_max, seed):
    if seed is None:
        return data_utils.spiral_points(n, r_min, r_max)
    return data_utils.rand_points(n, r_min, r_max,
                                  data_utils.make_rng(seed))


def _calibrate(report):
    try:
        return residual.calibrate_convention(fields.ExactConfig(1.0))
    except exceptions.CalibrationFailure as e:
        report.warn('Convention calibration failed: %s', e)
        return None


def _verify_profile(args, report):
    c = fields.check_parameter(args.c)
    threshold = CONF.residual.residual_threshold
    radii = residual.radius_grid()
    profile = fields.exact_profile(c)
    r1, r2, r3 = residual.ode_residual(profile, radii)
    worst, worst_radius = residual.max_ode_residual(profile, radii)
    report.add_csv('verify.csv', PROFILE_HEADER,
                   np.column_stack([radii, r1, r2, r3]))
    report.results['ode'] = {
        'max_residual': worst,
        'radius': worst_radius,
        'threshold': threshold,
        'grid': [float(radii[0]), float(radii[-1]), len(radii)],
    }

    printed, printed_radius = residual.max_ode_residual(
        fields.printed_exact_profile(c), radii)
    report.results['printed_profile_residual'] = printed
    if printed > threshold:
        report.warn('Printed profile f = 2q - (1 + c) leaves ODE residual '
                    '%.3e at r = %.3e; the corrected f = (1 + c) - 2cq is '
                    'used', printed, printed_radius)

    calibration = _calibrate(report)
    if calibration is not None:
        x, y = _sample_points(args.points, _SAMPLE_BAND[0], _SAMPLE_BAND[1],
                              args.seed)
        curv, holo = residual.matrix_residual(fields.ExactConfig(c), x, y,
                                              calibration=calibration)
        matrix = {
            'calibration': calibration.to_dict(),
            'max_curvature_residual': float(np.max(curv)),
            'max_holomorphicity_residual': float(np.max(holo)),
            'points': len(x),
        }
        report.results['matrix'] = matrix
        limit = CONF.residual.calibration_threshold
        if max(matrix['max_curvature_residual'],
               matrix['max_holomorphicity_residual']) > limit:
            report.warn('Matrix residuals of exact(%s) exceed %s', c, limit)

    base.print_table(['quantity', 'value'], [
        ('c', c),
        ('max ODE residual', worst),
        ('at radius', worst_radius),
        ('printed profile residual', printed),
    ])
    return worst, threshold


def _verify_document(args, report):
    config_ = fields.load_particles(args.config)
    calibration = _calibrate(report)
    if calibration is None:
        return
    separations = base.parse_list(args.separations)
    rows = residual.residual_vs_separation(separations,
                                           calibration=calibration)
    report.add_csv('verify.csv', SEPARATION_HEADER, rows)
    extent = config_.extent() + 1.0
    x, y = _sample_points(args.points, extent, 10.0 * extent, args.seed)
    curv, holo = residual.matrix_residual(config_, x, y,
                                          calibration=calibration)
    report.results['separation_table'] = rows
    report.results['document'] = {
        'config': config_.describe(),
        'max_curvature_residual': float(np.max(curv)),
        'max_holomorphicity_residual': float(np.max(holo)),
        'points': len(x),
    }
    base.print_table(['separation', 'curvature', 'holomorphicity'], rows)


@base.handle_errors
def verify(args):
    """Residuals of the exact family, or of a particles document."""
    if (args.c is None) == (args.config is None):
        raise exceptions.InvalidParameter(
            name='shape/particles', value=(args.c, args.config),
            reason='give exactly one of --shape and --particles')
    report = base.Report('verify', _parameters(args), args.output_dir)
    if args.config is not None:
        _verify_document(args, report)
        report.write()
        return
    worst, threshold = _verify_profile(args, report)
    report.write()
    if not worst < threshold:
        raise exceptions.ResidualFailure(value=worst, threshold=threshold,
                                         what='ODE')


@base.handle_errors
def action_cmd(args):
    """Reduced, printed and full action of exact(c)."""
    c = fields.check_parameter(args.c)
    pairing = liealg.PairingKind.from_string(args.pairing or
                                             CONF.action.pairing)
    spec = numerics.QuadratureSpec(
        rel_tol=args.rel_tol or CONF.numerics.rel_tol,
        abs_tol=args.abs_tol or CONF.numerics.abs_tol,
        max_subdivisions=CONF.numerics.max_subdivisions,
        divergence_decades=CONF.numerics.divergence_decades)
    report = base.Report('action', _parameters(args), args.output_dir)
    result = action.action_report(c, pairing, spec,
                                  include_full=not args.no_full)
    report.results['action'] = result.to_dict()
    report.results['quadrature'] = spec.to_dict()
    if result.convergent:
        report.results['ratio'] = result.ratio
        report.warn('Reduced action %.12g is %.6g times the printed chain '
                    '%.12g', result.reduced_value, result.ratio,
                    result.printed_value)
    else:
        report.warn('Radial action integral of exact(%s) diverges', c)
    if args.additivity:
        entry = action.additivity(pairing=pairing)
        report.results['additivity'] = entry
        if not entry['within_tolerance']:
            report.warn('Two blocks at separation %s carry %s times twice '
                        'the action of one', entry['separation'],
                        entry['ratio'])
    if result.angular_spread is not None and \
            result.angular_spread > action.SPREAD_TOLERANCE:
        report.warn('Action density varies by %.3e around circles',
                    result.angular_spread)
    report.write()
    base.print_table(['quantity', 'value'], [
        ('c', c),
        ('pairing', pairing.value),
        ('convergent', result.convergent),
        ('reduced', result.reduced_value),
        ('printed', result.printed_value),
        ('full', result.full_value),
        ('error', result.error_estimate),
    ])


def _holonomy_rows(result, stride):
    samples = result.samples[::stride]
    flat = samples.reshape(len(samples), 4)
    rows = np.empty((len(samples), 9))
    rows[:, 0] = result.thetas[::stride]
    rows[:, 1::2] = flat.real
    rows[:, 2::2] = flat.imag
    return rows


@base.handle_errors
def holonomy_cmd(args):
    """Circle holonomy, winding and distance from the limit."""
    config_ = _selected_config(args, args.variant)
    spec = config.ode_spec(step_count=args.steps)
    radius = CONF.holonomy.radius if args.radius is None else args.radius
    report = base.Report('holonomy', _parameters(args), args.output_dir)

    result = holonomy.circle_holonomy(config_, radius, spec)
    report.add_csv('holonomy.csv', HOLONOMY_HEADER,
                   _holonomy_rows(result, CONF.holonomy.sample_stride))
    report.results['degree'] = result.degree
    report.results['holonomy'] = result.to_dict()
    report.results['config'] = config_.describe()
    report.results['asymptotic_charge'] = config_.asymptotic_charge()
    report.results['determinant_drift'] = holonomy.determinant_drift(result)
    if config_.asymptotic_charge() and \
            result.printed_deviation > result.integrated_deviation:
        report.warn('Holonomy follows exp(-Q theta tau_1), the conjugate of '
                    'the printed limit: deviation %.3e against %.3e',
                    result.integrated_deviation, result.printed_deviation)

    rows = [('radius', result.radius), ('degree', result.degree),
            ('winding', result.winding),
            ('total phase', result.total_phase),
            ('printed deviation', result.printed_deviation),
            ('integrated deviation', result.integrated_deviation)]
    if args.sweep:
        table = holonomy.holonomy_convergence_profile(
            config_, base.parse_list(args.sweep), spec)
        report.add_csv('holonomy_sweep.csv', SWEEP_HEADER, table)
        report.results['sweep'] = table
        try:
            order = holonomy.decay_order(table)
        except exceptions.InvalidParameter as e:
            report.warn('No decay order: %s', e)
            order = None
        report.results['decay_order'] = order
        rows.append(('decay order', order))
    report.write()
    base.print_table(['quantity', 'value'], rows)


def _scan_action(c, spec):
    result = action.reduced_action(c, spec)
    if not result.convergent:
        return [c, float('nan'), float('nan'), float('nan'), 0.0]
    return [c, result.reduced_value, result.error_estimate,
            result.printed_value, 1.0]


def _scan_winding(c, radius, spec):
    result = holonomy.circle_holonomy(fields.ExactConfig(c), radius, spec)
    return [c, float(result.winding), float(result.degree),
            result.total_phase, result.integrated_deviation]


def _scan_smoothness(c):
    smooth = fields.smoothness_class(fields.ExactConfig(c))
    return [c, 1.0 if smooth is fields.Smoothness.SMOOTH else 0.0]


@base.handle_errors
def scan(args):
    """One row per c of the requested quantity."""
    if args.quantity not in SCAN_HEADERS:
        raise exceptions.InvalidParameter(
            name='quantity', value=args.quantity,
            reason='expected one of %s' % ', '.join(sorted(SCAN_HEADERS)))
    values = [fields.check_parameter(c) for c in base.parse_range(args.c)]
    report = base.Report('scan', _parameters(args), args.output_dir)
    if args.quantity == 'action':
        spec = config.quadrature_spec()
        rows = [_scan_action(c, spec) for c in values]
    elif args.quantity == 'winding':
        spec = config.ode_spec()
        radius = CONF.holonomy.radius if args.radius is None else \
            args.radius
        rows = [_scan_winding(c, radius, spec) for c in values]
    else:
        rows = [_scan_smoothness(c) for c in values]
    header = SCAN_HEADERS[args.quantity]
    report.add_csv('scan.csv', header, rows)
    report.results['quantity'] = args.quantity
    report.results['rows'] = [[None if math.isnan(v) else v for v in row]
                              for row in rows]
    report.write()
    base.print_table(header, rows)


def _parameters(args):
    """The manifest parameters: every parsed argument except callbacks."""
    names = ('c', 'config', 'variant', 'pairing', 'rel_tol', 'abs_tol',
             'no_full', 'additivity', 'radius', 'sweep', 'steps', 'quantity',
             'points', 'separations', 'seed')
    parameters = {}
    for name in names:
        value = getattr(args, name, None)
        if value is not None:
            parameters[name] = value
    parameters['exclusion_radius'] = config.exclusion_radius()
    return parameters


def _common(parser):
    parser.add_argument('--output-dir', dest='output_dir', default=None,
                        help='Directory receiving the report files.')
    parser.add_argument('--seed', type=int, default=None,
                        help='Seed for random sample points; deterministic '
                             'points are used when omitted.')


def _source(parser):
    parser.add_argument('--shape', dest='c', type=float, default=None,
                        help='Shape parameter of the exact family.')
    parser.add_argument('--particles', dest='config', default=None,
                        help='Path of a particles JSON document.')


def add_command_parsers(subparsers):
    parser = subparsers.add_parser(
        'verify', help='Check the exact family against the field equations.')
    _source(parser)
    _common(parser)
    parser.add_argument('--points', type=int, default=50,
                        help='Number of matrix residual sample points.')
    parser.add_argument('--separations', default=DEFAULT_SEPARATIONS,
                        help='Comma separated two-particle separations.')
    parser.set_defaults(func=verify)

    parser = subparsers.add_parser(
        'action', help='Action of exact(c) under a pairing.')
    parser.add_argument('--shape', dest='c', type=float, required=True,
                        help='Shape parameter of the exact family.')
    parser.add_argument('--pairing', default=None,
                        help='killing or conjugate.')
    parser.add_argument('--rel-tol', dest='rel_tol', type=float,
                        default=None, help='Relative quadrature tolerance.')
    parser.add_argument('--abs-tol', dest='abs_tol', type=float,
                        default=None, help='Absolute quadrature tolerance.')
    parser.add_argument('--no-full', dest='no_full', action='store_true',
                        help='Skip the quadrature of the full density.')
    parser.add_argument('--additivity', action='store_true',
                        help='Compare two separated unit blocks with twice '
                             'one block.')
    _common(parser)
    parser.set_defaults(func=action_cmd)

    parser = subparsers.add_parser(
        'holonomy', help='Circle holonomy and winding number.')
    _source(parser)
    parser.add_argument('--variant', default='exact',
                        choices=['exact', 'singular'],
                        help='Branch used with --shape.')
    parser.add_argument('--radius', type=float, default=None,
                        help='Circle radius.')
    parser.add_argument('--sweep', default=None,
                        help='Comma separated radii for the decay table.')
    parser.add_argument('--steps', type=int, default=None,
                        help='RK4 steps per 2*pi.')
    _common(parser)
    parser.set_defaults(func=holonomy_cmd)

    parser = subparsers.add_parser(
        'scan', help='Tabulate a quantity over a range of c.')
    parser.add_argument('--shape', dest='c', required=True,
                        help='Range written start:stop:step.')
    parser.add_argument('--quantity', default='action',
                        help='action, winding or smoothness.')
    parser.add_argument('--radius', type=float, default=None,
                        help='Circle radius for the winding scan.')
    _common(parser)
    parser.set_defaults(func=scan)
