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
"""sl(2,C) arithmetic in the so(2,1) basis.

An algebra element is a complex numpy array whose last two axes are 2x2.
Every function broadcasts over leading axes, so a grid of field values is
handled in one call. Module level generators are read-only arrays.
"""
import enum

import numpy as np
from scipy import linalg

from hitchin_toolkit import exceptions

TOLERANCE = 1e-12

IDENTITY = np.eye(2, dtype=complex)
ZERO = np.zeros((2, 2), dtype=complex)


def _frozen(m):
    m = np.array(m, dtype=complex)
    m.setflags(write=False)
    return m


_SIGMA = (
    _frozen([[0.5j, 0.0], [0.0, -0.5j]]),
    _frozen([[0.0, 0.5], [-0.5, 0.0]]),
    _frozen([[0.0, 0.5j], [0.5j, 0.0]]),
)

_TAU = (
    _SIGMA[0],
    _frozen(1j * _SIGMA[1]),
    _frozen(1j * _SIGMA[2]),
)

# Pairing table of the tau basis, taken as the definition of the Killing
# pairing.
KILLING_TABLE = _frozen(0.5 * np.diag([1.0, 1.0, -1.0]))

# Tr(tau_i tau_j) is diag(-1/2, 1/2, 1/2); used to read off coordinates.
_TRACE_NORMS = np.array([-0.5, 0.5, 0.5])


class PairingKind(enum.Enum):
    KILLING = 'killing'
    CONJUGATE = 'conjugate'

    @classmethod
    def from_string(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise exceptions.InvalidParameter(
                name='pairing', value=value,
                reason='expected one of %s' % ', '.join(
                    k.value for k in cls))


def _check_index(i):
    if i not in (1, 2, 3):
        raise exceptions.InvalidIndex(index=i)


def sigma(i):
    """The i-th generator with the global factor 1/2 included."""
    _check_index(i)
    return _SIGMA[i - 1]


def tau(i):
    """so(2,1) generators: tau_1 = sigma_1, tau_{2,3} = i * sigma_{2,3}."""
    _check_index(i)
    return _TAU[i - 1]


def taus():
    return _TAU


def bracket(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return np.matmul(a, b) - np.matmul(b, a)


def conjugate_transpose(a):
    return np.conj(np.swapaxes(np.asarray(a), -1, -2))


def su2_conjugate(a):
    """Conjugation of sl(2,C) fixing su(2): X -> -X^dagger."""
    return -conjugate_transpose(a)


def trace(a):
    return np.trace(np.asarray(a), axis1=-2, axis2=-1)


def is_traceless(a, tol=TOLERANCE):
    return bool(np.all(np.abs(trace(a)) <= tol))


def is_close(a, b, tol=TOLERANCE):
    return bool(np.all(np.abs(np.asarray(a) - np.asarray(b)) <= tol))


def coordinates(a, tol=TOLERANCE):
    """Complex coordinates (a_1, a_2, a_3) of ``a`` in the tau basis.

    :param a: array of shape (..., 2, 2)
    :return: array of shape (..., 3)
    :raises InvalidParameter: if ``a`` is not traceless
    """
    a = np.asarray(a, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(a))) if a.size else 1.0)
    if not is_traceless(a, tol * scale):
        raise exceptions.InvalidParameter(
            name='element', value=trace(a),
            reason='sl(2,C) elements are traceless')
    products = np.stack([trace(np.matmul(a, t)) for t in _TAU], axis=-1)
    return products / _TRACE_NORMS


def from_coordinates(v):
    """sum_i v_i tau_i for ``v`` of shape (..., 3)."""
    v = np.asarray(v, dtype=complex)
    return np.einsum('...i,ijk->...jk', v, np.array(_TAU))


def invariant_form(a, b):
    """Tr(ab), the ad-invariant trace form (Killing form / 4)."""
    return trace(np.matmul(a, b))


def pair(a, b, kind=PairingKind.KILLING):
    """Bilinear pairing used by the action.

    ``killing`` applies the table 1/2 diag(+, +, -) to the tau coordinates
    of both arguments. ``conjugate`` is Tr(a * sigma(b)) with sigma the
    conjugation fixing su(2); it gives -1/2 delta_ij on the generators and
    is negative definite.
    """
    kind = PairingKind.from_string(kind)
    if kind is PairingKind.KILLING:
        ca = coordinates(a)
        cb = coordinates(b)
        return np.einsum('...i,ij,...j->...', ca, KILLING_TABLE, cb)
    return trace(np.matmul(a, su2_conjugate(b)))


def pairing_table(kind):
    """3x3 table of pair(tau_i, tau_j, kind)."""
    return np.array([[pair(ti, tj, kind) for tj in _TAU] for ti in _TAU])


def entrywise_conjugate_table():
    """Tr(tau_i * conj(tau_j)) with entrywise conjugation.

    Kept as a diagnostic: on the printed generators it is 1/2 diag(+, -, +)
    rather than -1/2 delta_ij.
    """
    return np.array([[trace(np.matmul(ti, np.conj(tj))) for tj in _TAU]
                     for ti in _TAU])


def compact_orientation(kind):
    """Sign of pair(tau_1, tau_1, kind), the compact generator's norm."""
    return float(np.sign(np.real(pair(_TAU[0], _TAU[0], kind))))


def group_element(v, s=1.0):
    """exp(s * sum_i v_i tau_i)."""
    return linalg.expm(s * from_coordinates(v))


def adjoint(g, a):
    """g a g^-1 for a constant group element ``g``."""
    return np.matmul(np.matmul(g, a), np.linalg.inv(g))
