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


class HitchinException(Exception):
    """Base exception.

    Subclasses set ``message`` to a %-style template which is filled from the
    keyword arguments given at raise time. A positional argument is appended
    as details.
    """
    message = "An unknown exception occurred"

    def __init__(self, *args, **kwargs):
        super(HitchinException, self).__init__()
        self.kwargs = kwargs
        try:
            self._error_string = self.message % kwargs
        except Exception:
            # at least get the core message out if something happened
            self._error_string = self.message
        if args:
            self._error_string = self._error_string + "\nDetails: %s" % args[0]

    def __str__(self):
        return self._error_string

    def __repr__(self):
        return '%s(%r)' % (self.__class__.__name__, self._error_string)


class InvalidInput(HitchinException):
    message = "Invalid input"


class InvalidIndex(InvalidInput):
    message = "Generator index %(index)s is outside 1..3"


class InvalidParameter(InvalidInput):
    message = "Invalid value %(value)r for %(name)s: %(reason)s"


class InvalidStep(InvalidInput):
    message = ("Finite-difference step %(step)s is too large at distance "
               "%(distance)s from the nearest singular point")


class EnclosureError(InvalidInput):
    message = ("Circle of radius %(radius)s does not enclose every particle "
               "(farthest at %(farthest)s)")


class InvalidConfigDocument(InvalidInput):
    message = "Invalid particle document: %(reason)s"


class SingularPointError(InvalidInput):
    message = ("Evaluation at %(point)s lies within %(radius)s of the "
               "singular point %(singular)s")


class QuantitativeFailure(HitchinException):
    message = "A quantitative check failed"


class ResidualFailure(QuantitativeFailure):
    message = ("Residual %(value)s exceeds threshold %(threshold)s "
               "(%(what)s)")


class UndersamplingError(QuantitativeFailure):
    message = ("Phase jumped by %(step)s rad between samples %(index)s and "
               "%(next)s; increase the sampling density")


class DivergenceError(HitchinException):
    message = "Integral does not converge (partial sum %(partial_sum)s)"

    def __init__(self, *args, **kwargs):
        super(DivergenceError, self).__init__(*args, **kwargs)
        self.partial_sum = kwargs.get('partial_sum')


class CalibrationFailure(HitchinException):
    message = ("Convention calibration left residual %(residual)s above "
               "%(threshold)s")

    def __init__(self, *args, **kwargs):
        super(CalibrationFailure, self).__init__(*args, **kwargs)
        self.residual = kwargs.get('residual')
