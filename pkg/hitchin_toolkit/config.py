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
import os

from oslo_config import cfg

from hitchin_toolkit import exceptions
from hitchin_toolkit import numerics

CONF = cfg.CONF

EXCLUSION_RADIUS_ENV = 'HITCHIN_EXCLUSION_RADIUS'

numerics_group = cfg.OptGroup(name='numerics',
                              title='Quadrature and ODE integration options')

NumericsGroup = [
    cfg.FloatOpt('rel_tol',
                 default=1e-10,
                 min=0.0,
                 help="Relative tolerance of the half-line quadrature."),
    cfg.FloatOpt('abs_tol',
                 default=1e-12,
                 min=0.0,
                 help="Absolute tolerance of the half-line quadrature."),
    cfg.IntOpt('max_subdivisions',
               default=100000,
               min=1,
               help="Bisection budget of the half-line quadrature before the "
                    "divergence detector is consulted."),
    cfg.IntOpt('divergence_decades',
               default=12,
               min=4,
               help="Number of decade shells examined at each end of the "
                    "half-line when deciding divergence."),
    cfg.IntOpt('step_count',
               default=4096,
               min=16,
               help="RK4 steps per 2*pi of arc for holonomy integration."),
    cfg.BoolOpt('richardson_check',
                default=True,
                help="Re-solve every holonomy at double resolution and report "
                     "the difference."),
]

fields_group = cfg.OptGroup(name='fields',
                            title='Field configuration options')

FieldsGroup = [
    cfg.FloatOpt('exclusion_radius',
                 default=1e-9,
                 help="Radius around singular points inside which evaluation "
                      "is refused. The %s environment variable overrides "
                      "it." % EXCLUSION_RADIUS_ENV),
]

residual_group = cfg.OptGroup(name='residual',
                              title='Residual verification options')

ResidualGroup = [
    cfg.FloatOpt('fd_step',
                 default=1e-4,
                 help="Central finite-difference step for curvature "
                      "components."),
    cfg.ListOpt('calibration_radii',
                default=['0.5', '1', '2'],
                help="Radii at which the matrix-level convention constant is "
                     "fitted."),
    cfg.FloatOpt('calibration_threshold',
                 default=1e-6,
                 help="Largest post-calibration residual accepted."),
    cfg.FloatOpt('residual_threshold',
                 default=1e-10,
                 help="Largest scalar ODE residual accepted by verify."),
    cfg.IntOpt('radius_grid_points',
               default=200,
               help="Number of log-spaced radii used by verify."),
    cfg.FloatOpt('radius_grid_min',
                 default=1e-3,
                 help="Smallest radius of the verify grid."),
    cfg.FloatOpt('radius_grid_max',
                 default=1e3,
                 help="Largest radius of the verify grid."),
]

action_group = cfg.OptGroup(name='action',
                            title='Action quadrature options')

ActionGroup = [
    cfg.IntOpt('angular_nodes',
               default=64,
               min=64,
               help="Trapezoid nodes of the angular quadrature."),
    cfg.FloatOpt('full_rel_tol',
                 default=1e-7,
                 help="Relative tolerance of the radial quadrature of the "
                      "finite-difference action density."),
    cfg.StrOpt('pairing',
               default='killing',
               choices=['killing', 'conjugate'],
               help="Pairing used when none is given on the command line."),
    cfg.FloatOpt('additivity_separation',
                 default=10.0,
                 min=0.0,
                 help="Separation of the two unit blocks whose full action "
                      "is compared with twice that of one block."),
]

holonomy_group = cfg.OptGroup(name='holonomy',
                              title='Holonomy options')

HolonomyGroup = [
    cfg.FloatOpt('radius',
                 default=1e4,
                 help="Default circle radius for holonomy and winding."),
    cfg.IntOpt('sample_stride',
               default=16,
               min=1,
               help="Write every n-th RK4 node to the holonomy CSV."),
]

output_group = cfg.OptGroup(name='output',
                            title='Report output options')

OutputGroup = [
    cfg.StrOpt('directory',
               default='.',
               help="Directory receiving report and CSV files."),
    cfg.IntOpt('significant_digits',
               default=17,
               min=1,
               max=17,
               help="Significant digits used when writing numbers to CSV."),
]

_GROUPS = [
    (numerics_group, NumericsGroup),
    (fields_group, FieldsGroup),
    (residual_group, ResidualGroup),
    (action_group, ActionGroup),
    (holonomy_group, HolonomyGroup),
    (output_group, OutputGroup),
]


def register_opt_group(conf, opt_group, options):
    conf.register_group(opt_group)
    for opt in options:
        conf.register_opt(opt, group=opt_group.name)


def register_opts(conf=CONF):
    """Register every toolkit option group on ``conf``."""
    for group, options in _GROUPS:
        register_opt_group(conf, group, options)


def get_opt_lists():
    """Get a list of options for sample config generation

    :return: A list of tuples with the group name and options in that group.
    :rtype: list
    """
    return [(group.name, options) for group, options in _GROUPS]


def exclusion_radius(conf=CONF):
    """The singular-point exclusion radius in effect.

    The ``HITCHIN_EXCLUSION_RADIUS`` environment variable wins over the
    ``[fields] exclusion_radius`` option.
    """
    raw = os.environ.get(EXCLUSION_RADIUS_ENV)
    if raw is None or not raw.strip():
        return conf.fields.exclusion_radius
    try:
        value = float(raw)
    except ValueError:
        raise exceptions.InvalidParameter(name=EXCLUSION_RADIUS_ENV,
                                          value=raw,
                                          reason='not a number')
    if not value > 0.0:
        raise exceptions.InvalidParameter(name=EXCLUSION_RADIUS_ENV,
                                          value=raw,
                                          reason='must be positive')
    return value


def calibration_radii(conf=CONF):
    try:
        return [float(r) for r in conf.residual.calibration_radii]
    except ValueError as e:
        raise exceptions.InvalidParameter(
            name='calibration_radii',
            value=conf.residual.calibration_radii, reason=str(e))


def quadrature_spec(conf=CONF, rel_tol=None):
    return numerics.QuadratureSpec(
        rel_tol=rel_tol or conf.numerics.rel_tol,
        abs_tol=conf.numerics.abs_tol,
        max_subdivisions=conf.numerics.max_subdivisions,
        divergence_decades=conf.numerics.divergence_decades)


def ode_spec(conf=CONF, step_count=None):
    return numerics.OdeSpec(
        step_count=step_count or conf.numerics.step_count,
        richardson_check=conf.numerics.richardson_check)


register_opts(CONF)
