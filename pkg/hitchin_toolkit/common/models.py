# Copyright 2026 The hitchin-toolkit Authors.
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.
import numpy as np


def complex_to_list(value):
    """[re, im] pairs, nested like ``value``, for JSON reports."""
    value = np.asarray(value, dtype=complex)
    return np.stack([value.real, value.imag], axis=-1).tolist()


def complex_from_list(data):
    data = np.asarray(data, dtype=float)
    return data[..., 0] + 1j * data[..., 1]


class Model(object):

    def to_dict(self):
        return dict(self.__dict__)

    def __str__(self):
        return str(self.to_dict())

    def __repr__(self):
        return '%s(%s)' % (self.__class__.__name__, self)

    def __eq__(self, other):
        return (type(self) is type(other) and
                self.to_dict() == other.to_dict())

    def __ne__(self, other):
        return not self.__eq__(other)

    @classmethod
    def from_dict(cls, data):
        return cls(**data)


class Particle(Model):

    def __init__(self, x, y, c=1.0):
        self.x = float(x)
        self.y = float(y)
        self.c = float(c)

    def __hash__(self):
        return hash((self.x, self.y, self.c))

    @property
    def smooth(self):
        return self.c == 1.0

    def distance(self, x=0.0, y=0.0):
        return float(np.hypot(self.x - x, self.y - y))

    def translated(self, dx, dy):
        return Particle(self.x + dx, self.y + dy, self.c)

    @classmethod
    def from_dict(cls, data):
        return cls(data['x'], data['y'], data.get('c', 1.0))


class RunManifest(Model):

    def __init__(self, command, parameters, tool_version, outputs=None):
        self.command = command
        self.parameters = dict(parameters)
        self.tool_version = tool_version
        self.outputs = list(outputs or [])


class ResidualReport(Model):
    """Scalar ODE residuals at one radius, with optional matrix norms."""

    def __init__(self, radius, r1, r2, r3, matrix_curvature_residual=None,
                 matrix_holomorphicity_residual=None):
        self.radius = float(radius)
        self.r1 = float(r1)
        self.r2 = float(r2)
        self.r3 = float(r3)
        self.matrix_curvature_residual = matrix_curvature_residual
        self.matrix_holomorphicity_residual = matrix_holomorphicity_residual

    @property
    def max_ode_residual(self):
        return max(abs(self.r1), abs(self.r2), abs(self.r3))


class ConventionCalibration(Model):
    """Constants tying the matrix equations to the scalar ODE system.

    ``kappa`` multiplies [Phi, Phi^dagger] in the curvature equation and
    ``connection_scale`` multiplies the (0,1) part of the connection in the
    holomorphicity equation.
    """

    def __init__(self, kappa, connection_scale, residual, radii, c):
        self.kappa = complex(kappa)
        self.connection_scale = complex(connection_scale)
        self.residual = float(residual)
        self.radii = [float(r) for r in radii]
        self.c = float(c)

    def to_dict(self):
        data = dict(self.__dict__)
        data['kappa'] = complex_to_list(self.kappa)
        data['connection_scale'] = complex_to_list(self.connection_scale)
        return data

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        data['kappa'] = complex(complex_from_list(data['kappa']))
        data['connection_scale'] = complex(
            complex_from_list(data['connection_scale']))
        return cls(**data)


class ActionReport(Model):

    def __init__(self, c, pairing, reduced_value, printed_value, full_value,
                 convergent, error_estimate, full_error_estimate=None,
                 angular_spread=None):
        self.c = c
        self.pairing = pairing
        self.reduced_value = reduced_value
        self.printed_value = printed_value
        self.full_value = full_value
        self.convergent = bool(convergent)
        self.error_estimate = error_estimate
        self.full_error_estimate = full_error_estimate
        self.angular_spread = angular_spread

    @property
    def ratio(self):
        """reduced_value / printed_value, None when either is missing."""
        if not self.convergent or not self.printed_value:
            return None
        return self.reduced_value / self.printed_value


class HolonomyResult(Model):
    """Transport around the circle of ``radius`` centred at the origin.

    ``samples`` holds gamma at every angle of ``thetas``. ``limit_prediction``
    is the printed closed-form limit at 2*pi and ``integrated_limit`` the one
    obtained by integrating the asymptotic angular connection. The two
    deviations are the largest entrywise distances of the path from either
    limit over the whole circle.
    """

    def __init__(self, radius, thetas, samples, limit_prediction,
                 integrated_limit, winding, total_phase,
                 printed_deviation=None, integrated_deviation=None,
                 abelian_final=None, oracle_deviation=None,
                 richardson_error=None):
        self.radius = float(radius)
        self.thetas = thetas
        self.samples = samples
        self.limit_prediction = limit_prediction
        self.integrated_limit = integrated_limit
        self.winding = winding
        self.total_phase = total_phase
        self.printed_deviation = printed_deviation
        self.integrated_deviation = integrated_deviation
        self.abelian_final = abelian_final
        self.oracle_deviation = oracle_deviation
        self.richardson_error = richardson_error

    @property
    def final(self):
        return self.samples[-1]

    @property
    def degree(self):
        return abs(self.winding)

    def to_dict(self):
        data = {
            'radius': self.radius,
            'final': complex_to_list(self.final),
            'limit_prediction': complex_to_list(self.limit_prediction),
            'integrated_limit': complex_to_list(self.integrated_limit),
            'winding': self.winding,
            'degree': self.degree,
            'total_phase': self.total_phase,
            'printed_deviation': self.printed_deviation,
            'integrated_deviation': self.integrated_deviation,
            'oracle_deviation': self.oracle_deviation,
            'richardson_error': self.richardson_error,
            'samples': len(self.thetas),
        }
        if self.abelian_final is not None:
            data['abelian_final'] = complex_to_list(self.abelian_final)
        return data
