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

import numpy as np
from oslo_log import log as logging

from hitchin_toolkit.common import models
from hitchin_toolkit import exceptions

LOG = logging.getLogger(__name__)

# golden angle, used to spread deterministic sample points
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


def make_rng(seed=None):
    """A numpy Generator; the same seed always gives the same draws."""
    return np.random.default_rng(seed)


def rand_parameter(low, high, rng=None):
    """Generate a random shape parameter in [low, high)

    :return: a float
    """
    if not 0.0 < low < high:
        raise exceptions.InvalidParameter(name='range', value=(low, high),
                                          reason='need 0 < low < high')
    rng = rng or make_rng()
    return float(rng.uniform(low, high))


def rand_particles(n, radius=5.0, rng=None, c=None):
    """Generate n particles uniformly distributed in a disc

    :param n: number of particles
    :param radius: radius of the disc centred at the origin
    :param c: shape parameter of every particle, or a (low, high) range
    :return: a list of models.Particle
    """
    if n < 1:
        raise exceptions.InvalidParameter(name='n', value=n,
                                          reason='at least one particle')
    rng = rng or make_rng()
    distance = radius * np.sqrt(rng.uniform(0.0, 1.0, n))
    angle = rng.uniform(0.0, 2.0 * math.pi, n)
    if c is None:
        charges = [1.0] * n
    elif isinstance(c, tuple):
        charges = [rand_parameter(c[0], c[1], rng) for _ in range(n)]
    else:
        charges = [float(c)] * n
    return [models.Particle(d * math.cos(a), d * math.sin(a), k)
            for d, a, k in zip(distance, angle, charges)]


def rand_points(n, r_min, r_max, rng=None):
    """Generate n points with log-uniform radius in [r_min, r_max]

    :return: (x, y) arrays
    """
    if not 0.0 < r_min < r_max:
        raise exceptions.InvalidParameter(name='radii', value=(r_min, r_max),
                                          reason='need 0 < r_min < r_max')
    rng = rng or make_rng()
    r = np.exp(rng.uniform(math.log(r_min), math.log(r_max), n))
    theta = rng.uniform(0.0, 2.0 * math.pi, n)
    return r * np.cos(theta), r * np.sin(theta)


def spiral_points(n, r_min, r_max):
    """n deterministic points, log-spaced in radius, golden-angle spaced."""
    r = np.logspace(math.log10(r_min), math.log10(r_max), n)
    theta = GOLDEN_ANGLE * np.arange(n)
    return r * np.cos(theta), r * np.sin(theta)
