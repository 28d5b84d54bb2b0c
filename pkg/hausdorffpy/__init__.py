# Copyright 2026 The hausdorffpy developers
#
# This file is part of hausdorffpy.
#
# hausdorffpy is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# hausdorffpy is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with hausdorffpy.  If not, see <https://www.gnu.org/licenses/>.
"""
Exceptions, the version number, and other things that don't need their
own modules.
"""

from typing import NamedTuple


class Version(NamedTuple):
    major: int
    minor: int
    patch: int

VERSION = Version(1, 0, 0)
try: VERSION.__class__.__name__ = 'hausdorffpy.version'
except: pass


class HausdorffError(Exception):
    """
    Base class for every error raised by hausdorffpy.
    """


class ValidationError(HausdorffError, ValueError):
    """
    Some input value doesn't satisfy the invariants of the object or
    operation it was given to.
    """


class IncompatibilityError(HausdorffError, TypeError):
    """
    Two objects that were supposed to work together belong to
    different groups, families or dimensions.
    """


class GroupMismatchError(IncompatibilityError):
    """
    Two characters, spectra or operators live on different dual groups.
    """


class FamilyMismatchError(IncompatibilityError):
    """
    An automorphism family can't act on the kind of group it was
    applied to.
    """


class DimMismatchError(IncompatibilityError):
    """
    A matrix doesn't match the dimension of the grid it acts on.
    """


class NotUnimodularError(ValidationError):
    """
    An integer matrix doesn't have determinant +1 or -1.
    """


class UnsupportedGroupError(ValidationError):
    """
    The operation is only defined for some kinds of dual group.
    """


class EmptySetError(ValidationError):
    """
    A set that must have at least one element was empty.
    """


class AliasingError(ValidationError):
    """
    A spectrum has frequencies too large for the requested grid size.
    """


class InvalidPError(ValidationError):
    """
    An L^p exponent below 1 was requested.
    """


class NotRealError(ValidationError):
    """
    A spectrum that should describe a real-valued polynomial isn't
    conjugate-symmetric.
    """


class NotAnalyticError(ValidationError):
    """
    A spectrum that should be supported in the positive cone isn't.
    """


class NotClosedError(ValidationError):
    """
    A family of automorphisms isn't closed under inversion.
    """


class OutOfRangeError(ValidationError):
    """
    An integer is outside the range the Dirichlet tools can factorize.
    """


class ConfigError(ValidationError):
    """
    A configuration or data file couldn't be parsed.
    """
