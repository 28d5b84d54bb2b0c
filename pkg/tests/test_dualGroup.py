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
Unit tests for hausdorffpy.dualGroup.
"""


from fractions import Fraction

from hypothesis import given
import pytest

import hausdorffpy
import hausdorffpy.dualGroup
from hausdorffpy.dualGroup import Character, DualGroupDescriptor, Ordering

import _meta


Z1 = DualGroupDescriptor.zLex(1)
Z2 = DualGroupDescriptor.zLex(2)
ZINF = DualGroupDescriptor.zInfLex()
Q = DualGroupDescriptor.rationals()


def test_combine():
    """
    Test hausdorffpy.dualGroup.combine() in each kind of group
    """
    combine = hausdorffpy.dualGroup.combine

    assert combine(Character.fromVector((1, 2)), Character.fromVector((3, -4))) \
        == Character.fromVector((4, -2))
    assert combine(Character.fromSparse({1: 2}), Character.fromSparse({1: -2, 3: 1})) \
        == Character.fromSparse({3: 1})
    assert combine(Character.fromRational(1, 2), Character.fromRational(1, 3)) \
        == Character.fromRational(5, 6)

    # Operators
    assert Character.fromVector((1, 2)) + Character.fromVector((3, -4)) \
        == Character.fromVector((4, -2))
    assert Character.fromVector((1, 2)) - Character.fromVector((1, 2)) \
        == hausdorffpy.dualGroup.identity(Z2)


def test_combine_mismatch():
    """
    Test that combining characters of different groups fails
    """
    with pytest.raises(hausdorffpy.GroupMismatchError):
        hausdorffpy.dualGroup.combine(Character.fromVector((1,)), Character.fromVector((1, 2)))
    with pytest.raises(hausdorffpy.GroupMismatchError):
        hausdorffpy.dualGroup.compare(Character.fromVector((1,)), Character.fromRational(1))
    with pytest.raises(TypeError):
        Character.fromSparse({1: 1}) + Character.fromRational(1)


def test_negate():
    """
    Test hausdorffpy.dualGroup.negate()
    """
    negate = hausdorffpy.dualGroup.negate

    assert negate(Character.fromVector((0, 0, 0))) == Character.fromVector((0, 0, 0))
    assert negate(Character.fromSparse({2: 5})) == Character.fromSparse({2: -5})
    assert negate(Character.fromRational(-7, 3)) == Character.fromRational(7, 3)
    assert -Character.fromVector((1, -1)) == Character.fromVector((-1, 1))


def test_multiply():
    """
    Test hausdorffpy.dualGroup.multiply()
    """
    multiply = hausdorffpy.dualGroup.multiply

    assert multiply(Character.fromVector((1, -2)), 3) == Character.fromVector((3, -6))
    assert multiply(Character.fromSparse({1: 4}), 0) == Character.fromSparse({})
    assert multiply(Character.fromRational(1, 6), 3) == Character.fromRational(1, 2)


def test_sgnPlus():
    """
    Test hausdorffpy.dualGroup.sgnPlus()
    """
    sgnPlus = hausdorffpy.dualGroup.sgnPlus

    assert sgnPlus(Character.fromVector((0, 0))) == 0
    assert sgnPlus(Character.fromVector((0, 2))) == 1
    assert sgnPlus(Character.fromVector((-1, 7))) == -1
    assert sgnPlus(Character.fromSparse({})) == 0
    assert sgnPlus(Character.fromSparse({2: -1, 5: 9})) == -1
    assert sgnPlus(Character.fromSparse({4: 1})) == 1
    assert sgnPlus(Character.fromRational(0)) == 0
    assert sgnPlus(Character.fromRational(-1, 9)) == -1


def test_compare():
    """
    Test hausdorffpy.dualGroup.compare()
    """
    compare = hausdorffpy.dualGroup.compare

    assert compare(Character.fromVector((1, -5)), Character.fromVector((0, 0))) \
        is Ordering.GREATER
    assert compare(Character.fromVector((0, -1)), Character.fromVector((0, 0))) \
        is Ordering.LESS
    assert compare(Character.fromRational(-3, 2), Character.fromRational(-6, 4)) \
        is Ordering.EQUAL
    assert compare(Character.fromSparse({3: 1}), Character.fromSparse({1: 1})) \
        is Ordering.LESS

    assert Character.fromVector((0, -1)) < Character.fromVector((0, 0))
    assert sorted([Character.fromRational(1), Character.fromRational(-2), Character.fromRational(1, 2)]) \
        == [Character.fromRational(-2), Character.fromRational(1, 2), Character.fromRational(1)]


def test_canonicalForm():
    """
    Test that characters are stored in canonical form
    """
    assert Character.fromSparse({5: 0, 3: 2, 1: -1}).payload == ((1, -1), (3, 2))
    assert Character.fromSparse([(2, 0)]) == Character.fromSparse({})
    assert Character.fromRational(2, 4).payload == Fraction(1, 2)
    assert Character.fromRational(3, -6) == Character.fromRational(-1, 2)

    with pytest.raises(hausdorffpy.ValidationError):
        Character.fromSparse([(1, 1), (1, 2)])
    with pytest.raises(hausdorffpy.ValidationError):
        Character.fromSparse({0: 1})
    with pytest.raises(hausdorffpy.ValidationError):
        Character(Z2, (1, 2, 3))
    with pytest.raises(hausdorffpy.ValidationError):
        Character.fromRational(1, 0)
    with pytest.raises(hausdorffpy.ValidationError, match='integers'):
        Character.fromVector((1.5, 2))
    with pytest.raises(hausdorffpy.ValidationError):
        Character.fromSparse({2: 0.5})
    with pytest.raises(hausdorffpy.ValidationError):
        Character.fromRational(1.5, 2)


def test_entries():
    """
    Test Character.entry(), .entries() and .maxAbsEntry()
    """
    chi = Character.fromSparse({2: -3, 7: 1})
    assert chi.entry(2) == -3
    assert chi.entry(3) == 0
    assert chi.entry(100) == 0
    assert list(chi.entries()) == [(2, -3), (7, 1)]
    assert chi.maxAbsEntry() == 3

    v = Character.fromVector((0, 4, -5))
    assert v.entry(1) == 0
    assert list(v.entries()) == [(2, 4), (3, -5)]
    assert v.maxAbsEntry() == 5
    assert hausdorffpy.dualGroup.identity(ZINF).maxAbsEntry() == 0

    with pytest.raises(hausdorffpy.UnsupportedGroupError):
        Character.fromRational(1).entry(1)


def test_orthant():
    """
    Test the positive cone and orthant predicates
    """
    dg = hausdorffpy.dualGroup
    assert dg.isInPositiveCone(dg.identity(Z2))
    assert dg.isInPositiveCone(Character.fromVector((1, -3)))
    assert not dg.isInOrthant(Character.fromVector((1, -3)))
    assert dg.isOutsideOrthant(Character.fromSparse({4: -1}))
    assert dg.isInOrthant(Character.fromSparse({1: 2, 9: 1}))
    assert dg.isInOrthant(Character.fromRational(0))
    assert not dg.isInOrthant(Character.fromRational(-1, 3))

    E = dg.memberOf([Character.fromVector((1,)), Character.fromVector((2,))])
    assert E(Character.fromVector((2,)))
    assert not E(Character.fromVector((3,)))


def test_lacunarityConstant():
    """
    Test hausdorffpy.dualGroup.lacunarityConstant()
    """
    lacunarityConstant = hausdorffpy.dualGroup.lacunarityConstant

    assert lacunarityConstant({1, 2, 4, 8, 16}) == 2
    assert lacunarityConstant({1}) == 1
    assert lacunarityConstant({5, 6, 7}) == 3
    assert lacunarityConstant({0}) == 1
    assert lacunarityConstant([Character.fromVector((n,)) for n in (1, 3, 9, 27)]) == 1
    assert lacunarityConstant({3, 4, 6, 3 * 10 ** 6}) == 3
    assert lacunarityConstant({10 ** 12, 2 * 10 ** 12, 2 * 10 ** 12 + 1}) == 2

    with pytest.raises(hausdorffpy.EmptySetError):
        lacunarityConstant(set())
    with pytest.raises(hausdorffpy.UnsupportedGroupError):
        lacunarityConstant([Character.fromVector((1, 2))])
    with pytest.raises(hausdorffpy.ValidationError):
        lacunarityConstant({-1, 2})


def test_payload():
    """
    Test reading and writing the JSON form of characters
    """
    for group, data in [(Z2, [3, -1]), (ZINF, [[1, 2], [4, -1]]), (Q, [-3, 4])]:
        chi = Character.fromPayload(group, data)
        assert chi.toPayload() == data
        assert Character.fromPayload(group, chi.toPayload()) == chi

    for group, data in [
            (Z2, [True, 1]),
            (Z2, [1, 2, 3]),
            (Z2, {'x': 1}),
            (ZINF, [[1, 2, 3]]),
            (ZINF, [[1, 1], [1, 2]]),
            (Q, [1, 0]),
            (Q, [1.5, 2])]:
        with pytest.raises(hausdorffpy.ConfigError):
            Character.fromPayload(group, data)


def test_DualGroupDescriptor():
    """
    Test DualGroupDescriptor construction, JSON and string forms
    """
    assert DualGroupDescriptor.fromJsonData({'kind': 'z_lex', 'dim': 2}) == Z2
    assert DualGroupDescriptor.fromJsonData({'kind': 'z_inf_lex'}) == ZINF
    assert DualGroupDescriptor.fromJsonData(Q.toJsonData()) == Q

    for bad in [{'kind': 'z_lex'}, {'kind': 'z_lex', 'dim': 0}, {'kind': 'torus'}, {}, []]:
        with pytest.raises(hausdorffpy.ConfigError):
            DualGroupDescriptor.fromJsonData(bad)

    with pytest.raises(hausdorffpy.ValidationError):
        DualGroupDescriptor.zLex(0)

    assert str(Z2) == 'Z^2_lex'
    assert repr(ZINF) == 'DualGroupDescriptor.zInfLex()'
    assert str(Character.fromVector((1, -1))) == '(1,-1)'
    assert str(Character.fromSparse({3: 1})) == '{3:1}'
    assert repr(Character.fromRational(1, 2)) == 'Character.fromRational(1, 2)'


@given(_meta.characterTuples(3))
def test_totalOrder(chars):
    """
    Test that compare() is a translation-invariant total order
    """
    compare = hausdorffpy.dualGroup.compare
    a, b, c = chars

    # Trichotomy and antisymmetry
    assert compare(a, b) == -compare(b, a)
    assert (compare(a, b) is Ordering.EQUAL) == (a == b)

    # Transitivity
    if compare(a, b) <= 0 and compare(b, c) <= 0:
        assert compare(a, c) <= 0

    # Translation invariance
    assert compare(a + c, b + c) is compare(a, b)


@given(_meta.characterTuples(1))
def test_coneDichotomy(chars):
    """
    Test that every character lies in exactly one of X_+ \\ {0}, {0}, -X_+ \\ {0}
    """
    dg = hausdorffpy.dualGroup
    a, = chars

    sign = dg.sgnPlus(a)
    assert sign == -dg.sgnPlus(-a)
    assert (sign == 0) == a.isIdentity()
    assert dg.isInPositiveCone(a) or dg.isInPositiveCone(-a)
    assert a - a == dg.identity(a.group)


@given(_meta.characterTuples(1))
def test_canonicalIdempotent(chars):
    """
    Test that rebuilding a character from its own payload is a no-op
    """
    a, = chars
    assert Character(a.group, a.payload) == a
    assert Character.fromPayload(a.group, a.toPayload()) == a
    assert hash(Character(a.group, a.payload)) == hash(a)
