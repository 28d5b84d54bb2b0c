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
Unit tests for hausdorffpy.__init__.
"""


import hausdorffpy
import pytest


def test_VERSION():
    """
    Test the hausdorffpy.VERSION namedtuple
    """
    assert hausdorffpy.VERSION.major == hausdorffpy.VERSION[0] >= 0
    assert hausdorffpy.VERSION.minor == hausdorffpy.VERSION[1] >= 0
    assert hausdorffpy.VERSION.patch == hausdorffpy.VERSION[2] >= 0
    assert type(hausdorffpy.VERSION).__name__ == 'hausdorffpy.version'


@pytest.mark.parametrize('error', [
    hausdorffpy.NotUnimodularError,
    hausdorffpy.UnsupportedGroupError,
    hausdorffpy.EmptySetError,
    hausdorffpy.AliasingError,
    hausdorffpy.InvalidPError,
    hausdorffpy.NotRealError,
    hausdorffpy.NotAnalyticError,
    hausdorffpy.NotClosedError,
    hausdorffpy.OutOfRangeError,
    hausdorffpy.ConfigError,
])
def test_validationErrors(error):
    """
    Test that input errors are ValidationErrors and ValueErrors
    """
    assert issubclass(error, hausdorffpy.ValidationError)
    assert issubclass(error, ValueError)
    assert issubclass(error, hausdorffpy.HausdorffError)
    assert not issubclass(error, hausdorffpy.IncompatibilityError)


@pytest.mark.parametrize('error', [
    hausdorffpy.GroupMismatchError,
    hausdorffpy.FamilyMismatchError,
    hausdorffpy.DimMismatchError,
])
def test_incompatibilityErrors(error):
    """
    Test that mismatch errors are IncompatibilityErrors and TypeErrors
    """
    assert issubclass(error, hausdorffpy.IncompatibilityError)
    assert issubclass(error, TypeError)
    assert issubclass(error, hausdorffpy.HausdorffError)
    assert not issubclass(error, hausdorffpy.ValidationError)
