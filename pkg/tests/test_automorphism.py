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
Unit tests for hausdorffpy.automorphism.
"""


from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

import hausdorffpy
import hausdorffpy.automorphism
import hausdorffpy.dualGroup
from hausdorffpy.automorphism import Automorphism, CoordinateFlip, LowerUnitriangular, \
    RationalScale, SetSpec, SigmaU, TwoDiagonal, UnimodularMatrix, VerdictKind
from hausdorffpy.dualGroup import Character

import _meta


def v(*values):
    return Character.fromVector(values)

def sp(entries):
    return Character.fromSparse(entries)


# One automorphism of each family
EXAMPLES = [
    UnimodularMatrix([[2, 1], [1, 1]]),
    LowerUnitriangular(3, {(2, 1): 1, (3, 1): -2, (3, 2): 4}),
    CoordinateFlip((1, -1, -1)),
    TwoDiagonal({2: 2, 4: -1}),
    TwoDiagonal({3: 5}, inverse=True),
    SigmaU((1, 0, 2)),
    SigmaU((3,), inverse=True),
    RationalScale(Fraction(2, 3)),
]


def test_apply():
    """
    Test hausdorffpy.automorphism.apply() for each family
    """
    apply = hausdorffpy.automorphism.apply

    assert apply(LowerUnitriangular(2, {(2, 1): 3}), v(1, 0)) == v(1, 3)
    assert apply(UnimodularMatrix([[2, 1], [1, 1]]), v(1, -1)) == v(1, 0)
    assert apply(CoordinateFlip((1, -1)), v(4, 5)) == v(4, -5)
    assert apply(TwoDiagonal({2: 2}), sp({1: 1})) == sp({1: 1, 2: 2})
    assert apply(SigmaU((1,)), sp({1: 1, 2: 1})) == sp({1: 1})
    assert apply(SigmaU((2,)), sp({3: 4})) == sp({3: 4})
    assert apply(RationalScale(Fraction(1, 2)), Character.fromRational(3)) \
        == Character.fromRational(3, 2)


def test_apply_farIndex():
    """
    Test the Z^inf families on characters with very large indices
    """
    far = 10 ** 7
    chi = sp({far: 1})

    assert TwoDiagonal({2: 1}).apply(chi) == chi
    assert SigmaU((1,)).apply(chi) == chi
    assert SigmaU((1,), inverse=True).apply(chi) == chi

    assert TwoDiagonal({far + 1: 2}).apply(chi) == sp({far: 1, far + 1: 2})
    assert TwoDiagonal({far + 1: 2}, inverse=True).apply(chi) == sp({far: 1, far + 1: -2})
    assert SigmaU((1, 1, 1), inverse=True).apply(sp({1: 1, far: 5})) \
        == sp({1: 1, 2: 1, 3: 1, 4: 1, far: 5})


def test_apply_mismatch():
    """
    Test that applying an automorphism to the wrong group fails
    """
    with pytest.raises(hausdorffpy.FamilyMismatchError):
        TwoDiagonal({2: 1}).apply(v(1, 2))
    with pytest.raises(hausdorffpy.FamilyMismatchError):
        CoordinateFlip((1, -1)).apply(v(1, 2, 3))
    with pytest.raises(hausdorffpy.FamilyMismatchError):
        RationalScale(2).apply(sp({1: 1}))
    with pytest.raises(TypeError):
        SigmaU((1,)).apply(Character.fromRational(1))


def test_invert():
    """
    Test hausdorffpy.automorphism.invert()
    """
    invert = hausdorffpy.automorphism.invert

    assert invert(LowerUnitriangular(2, {(2, 1): 3})) == LowerUnitriangular(2, {(2, 1): -3})
    assert invert(UnimodularMatrix([[2, 1], [1, 1]])) == UnimodularMatrix([[1, -1], [-1, 2]])
    assert invert(UnimodularMatrix([[-1]])) == UnimodularMatrix([[-1]])
    assert invert(CoordinateFlip((-1, 1))) == CoordinateFlip((-1, 1))
    assert invert(SigmaU((1,))).apply(sp({1: 1})) == sp({1: 1, 2: 1})
    assert invert(RationalScale(3)) == RationalScale(Fraction(1, 3))

    L = LowerUnitriangular(3, {(2, 1): 1, (3, 2): 1})
    assert invert(L) == LowerUnitriangular(3, {(2, 1): -1, (3, 1): 1, (3, 2): -1})


@pytest.mark.parametrize('A', EXAMPLES, ids=str)
def test_invert_roundTrip(A):
    """
    Test that A^-1 undoes A on a handful of characters
    """
    group = A.group
    Ainv = A.invert()
    for chi in [hausdorffpy.dualGroup.identity(group), *hausdorffpy.automorphism._basis(group, 6)]:
        chi = chi + chi + chi
        assert Ainv.apply(A.apply(chi)) == chi
        assert A.apply(Ainv.apply(chi)) == chi

    assert hausdorffpy.automorphism.actsLike(Ainv.invert(), A)


def test_UnimodularMatrix_invalid():
    """
    Test that non-unimodular matrices are rejected, naming the matrix
    """
    with pytest.raises(hausdorffpy.NotUnimodularError, match=r'\[\[2, 0\], \[0, 1\]\]'):
        UnimodularMatrix([[2, 0], [0, 1]])
    with pytest.raises(hausdorffpy.NotUnimodularError):
        UnimodularMatrix([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(hausdorffpy.NotUnimodularError):
        UnimodularMatrix([])


def test_invalid_parameters():
    """
    Test validation of the other families' parameters
    """
    with pytest.raises(hausdorffpy.ValidationError):
        LowerUnitriangular(2, {(1, 2): 1})
    with pytest.raises(hausdorffpy.ValidationError):
        LowerUnitriangular.fromMatrix(((1, 0), (0, 2)))
    with pytest.raises(hausdorffpy.ValidationError):
        CoordinateFlip((1, 2))
    with pytest.raises(hausdorffpy.ValidationError):
        TwoDiagonal({1: 1})
    with pytest.raises(hausdorffpy.ValidationError):
        SigmaU((1, -1))
    with pytest.raises(hausdorffpy.ValidationError):
        RationalScale(-2)
    with pytest.raises(hausdorffpy.ValidationError):
        SetSpec.lexCone(radius=0)


def test_integerDeterminant():
    """
    Test hausdorffpy.automorphism.integerDeterminant()
    """
    det = hausdorffpy.automorphism.integerDeterminant
    assert det([[5]]) == 5
    assert det([[2, 1], [1, 1]]) == 1
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3
    assert det([[1, 2], [2, 4]]) == 0


def test_compose():
    """
    Test hausdorffpy.automorphism.compose(), transpose() and toMatrix()
    """
    am = hausdorffpy.automorphism
    A = UnimodularMatrix([[2, 1], [1, 1]])
    B = LowerUnitriangular(2, {(2, 1): -4})
    AB = am.compose(A, B)
    for chi in [v(1, 0), v(0, 1), v(3, -7)]:
        assert AB.apply(chi) == A.apply(B.apply(chi))

    assert am.toMatrix(B) == ((1, 0), (-4, 1))
    assert am.transpose(B).toMatrix() == ((1, -4), (0, 1))
    assert am.toMatrix(CoordinateFlip((1, -1))) == ((1, 0), (0, -1))

    with pytest.raises(hausdorffpy.DimMismatchError):
        am.compose(A, CoordinateFlip((1, 1, 1)))
    with pytest.raises(hausdorffpy.FamilyMismatchError):
        am.compose(A, SigmaU((1,)))
    with pytest.raises(hausdorffpy.FamilyMismatchError):
        am.toMatrix(RationalScale(2))


def test_actsLike():
    """
    Test hausdorffpy.automorphism.actsLike()
    """
    actsLike = hausdorffpy.automorphism.actsLike

    assert actsLike(TwoDiagonal({2: -1}), SigmaU((1,)))
    assert actsLike(SigmaU((1, 0, 0)), SigmaU((1,)))
    assert actsLike(UnimodularMatrix([[1, 0], [3, 1]]), LowerUnitriangular(2, {(2, 1): 3}))
    assert not actsLike(SigmaU((1,)), SigmaU((2,)))
    assert not actsLike(SigmaU((1,)), RationalScale(1))


def test_preserves_analytic():
    """
    Test the analytic verdicts of hausdorffpy.automorphism.preserves()
    """
    preserves = hausdorffpy.automorphism.preserves

    cone = SetSpec.lexCone()
    for A in [LowerUnitriangular(3, {(3, 1): -9}), TwoDiagonal({2: -5}), SigmaU((4,)),
              RationalScale(Fraction(7, 2)), UnimodularMatrix([[1, 0], [-2, 1]]),
              CoordinateFlip((1, 1))]:
        verdict = preserves(A, cone)
        assert verdict.kind is VerdictKind.ANALYTIC_TRUE
        assert verdict

    verdict = preserves(CoordinateFlip((1, -1)), cone)
    assert verdict.kind is VerdictKind.ANALYTIC_FALSE
    assert not verdict
    assert verdict.witness == v(0, 1)

    verdict = preserves(SigmaU((2, 1)), SetSpec.orthantComplement())
    assert verdict.kind is VerdictKind.ANALYTIC_TRUE


def test_preserves_sampled():
    """
    Test the sampled verdicts of hausdorffpy.automorphism.preserves()
    """
    preserves = hausdorffpy.automorphism.preserves
    dg = hausdorffpy.dualGroup

    # The coordinate swap breaks the lexicographic order
    swap = UnimodularMatrix([[0, 1], [1, 0]])
    verdict = preserves(swap, SetSpec.lexCone(radius=2))
    assert verdict.kind is VerdictKind.FALSE_WITNESS
    assert verdict.witness == v(1, -1)
    assert not dg.isInPositiveCone(swap.apply(verdict.witness))

    # The whole 5x5 box fits in the budget
    verdict = preserves(CoordinateFlip((1, 1)), SetSpec.orthantComplement(radius=2))
    assert verdict.kind is VerdictKind.SAMPLED_TRUE
    assert verdict.budget == 25

    # ...but here it doesn't, so only the budget is tested
    verdict = preserves(CoordinateFlip((1, 1, 1)), SetSpec.orthantComplement(radius=5, budget=10))
    assert verdict.kind is VerdictKind.SAMPLED_TRUE
    assert verdict.budget == 10

    # sigma_u^-1 can push a negative entry back into the orthant
    inverse = SigmaU((1,), inverse=True)
    verdict = preserves(inverse, SetSpec.orthantComplement())
    assert verdict.kind is VerdictKind.FALSE_WITNESS
    assert dg.isOutsideOrthant(verdict.witness)
    assert dg.isInOrthant(inverse.apply(verdict.witness))

    # A positive rational scale preserves the rational orthant complement
    assert preserves(RationalScale(3), SetSpec.orthantComplement()).kind \
        is VerdictKind.SAMPLED_TRUE


def test_preserves_deterministic():
    """
    Test that sampling with the same seed gives the same verdict
    """
    preserves = hausdorffpy.automorphism.preserves
    A = UnimodularMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    S = SetSpec.lexCone(radius=6, budget=500)
    assert preserves(A, S, seed=3) == preserves(A, S, seed=3)
    assert preserves(A, S, seed=3).kind is VerdictKind.FALSE_WITNESS


def test_shellPoints():
    """
    Test hausdorffpy.automorphism.shellPoints()
    """
    points = list(hausdorffpy.automorphism.shellPoints(2, 2))
    assert len(points) == len(set(points)) == 25
    assert points[0] == (0, 0)
    norms = [max(abs(x) for x in p) for p in points]
    assert norms == sorted(norms)


@pytest.mark.parametrize('A', EXAMPLES, ids=str)
def test_json(A):
    """
    Test saving and loading automorphisms
    """
    assert Automorphism.fromJsonData(A.toJsonData()) == A
    assert A.toJsonData()['family'] == A.family.value


@pytest.mark.parametrize('d', [
    {},
    {'family': 'rotation'},
    {'family': 'unimod_matrix'},
    {'family': 'unimod_matrix', 'matrix': [[2, 0], [0, 1]]},
    {'family': 'unimod_matrix', 'matrix': [[1.0, 0], [0, 1]]},
    {'family': 'lower_unitriangular', 'dim': 2, 'entries': [[1, 2, 1]]},
    {'family': 'lower_unitriangular', 'dim': 2, 'entries': [[2, 1]]},
    {'family': 'two_diagonal', 'entries': [[1, 1]]},
    {'family': 'sigma_u', 'u': [1, -1]},
    {'family': 'sigma_u', 'u': 3},
    {'family': 'rational_scale', 'q': [1, 0]},
    {'family': 'rational_scale', 'q': -1},
    {'family': 'coordinate_flip', 'signs': [1, 0]},
])
def test_json_invalid(d):
    """
    Test that malformed automorphism objects raise ConfigError
    """
    with pytest.raises(hausdorffpy.ConfigError):
        Automorphism.fromJsonData(d)


def test_json_namesMatrix():
    """
    Test that a non-unimodular matrix in a config is named in the error
    """
    with pytest.raises(hausdorffpy.ConfigError, match=r'\[\[1, 1\], \[1, -1\]\]'):
        Automorphism.fromJsonData({'family': 'unimod_matrix', 'matrix': [[1, 1], [1, -1]]})


def test_str():
    """
    Test the string forms of automorphisms and verdicts
    """
    assert str(UnimodularMatrix([[0, 1], [1, 0]])) == '<unimod-matrix [[0,1],[1,0]]>'
    assert str(SigmaU((1, 2), inverse=True)) == '<sigma-u (1,2)^-1>'
    assert str(CoordinateFlip((1, -1))) == '<coordinate-flip +->'
    assert repr(RationalScale(Fraction(1, 2))) == 'RationalScale(Fraction(1, 2))'
    assert str(hausdorffpy.automorphism.Verdict(VerdictKind.SAMPLED_TRUE, budget=9)) \
        == '<verdict sampled-true budget=9>'


@given(_meta.groups.flatmap(
    lambda group: st.tuples(_meta.automorphisms(group), _meta.characters(group), _meta.characters(group))))
def test_homomorphism(args):
    """
    Test that automorphisms are additive bijections
    """
    A, a, b = args
    assert A.apply(a + b) == A.apply(a) + A.apply(b)
    assert A.apply(-a) == -A.apply(a)
    assert A.apply(hausdorffpy.dualGroup.identity(a.group)).isIdentity()
    assert A.invert().apply(A.apply(a)) == a
    assert Automorphism.fromJsonData(A.toJsonData()) == A


@given(st.lists(st.integers(0, 4), max_size=4),
       st.dictionaries(st.integers(1, 6), st.integers(-5, 5), min_size=1))
def test_sigmaU_orthantComplement(u, entries):
    """
    Test that sigma_u keeps the first negative entry of a character negative
    """
    chi = sp(entries)
    if hausdorffpy.dualGroup.isInOrthant(chi):
        return
    k = min(i for i, value in chi.entries() if value < 0)
    image = SigmaU(u).apply(chi)
    assert image.entry(k) <= chi.entry(k) < 0
