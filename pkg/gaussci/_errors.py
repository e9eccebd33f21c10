#!/usr/bin/env python
# (C) Copyright 2026 The gaussci developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Exceptions raised by gaussci

Every domain error derives from CIError and from the builtin that a caller
would otherwise expect, so ``except ValueError`` keeps working.
"""

__license__ = 'GPL V3'


class CIError(Exception):
    """Base class for all gaussci domain errors"""


class DimensionError(CIError, ValueError):
    pass


class SingularConditioningError(CIError, ValueError):
    """Sigma_{C,C} is singular, so Sigma is not positive definite on C"""


class BoundsError(CIError, IndexError):
    pass


class UnsupportedSizeError(CIError, ValueError):
    pass


class BinomialScopeError(CIError, ValueError):
    """A statement does not give a single binomial (needs singleton A, B, C)"""


class NotABasisError(CIError, ValueError):
    pass


class SaturationError(CIError, ValueError):
    pass


class SearchTooLargeError(CIError, RuntimeError):
    pass


class InconsistencyError(CIError, RuntimeError):
    """An internal verification failed; this indicates a bug"""


class ParameterError(CIError, ValueError):
    pass


class NotPositiveDefiniteError(CIError, ValueError):
    pass


class DisjointnessError(CIError, ValueError):
    pass


class DocumentError(CIError, ValueError):
    pass


class StatementParseError(CIError, ValueError):

    def __init__(self, message, text='', position=0):
        super(StatementParseError, self).__init__('%s at position %d in [%s]' % (message, position, text))
        self.text = text
        self.position = position
