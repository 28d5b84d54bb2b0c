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
Closed-form automorphism families of the dual group, with exact
application and inversion, and order/set preservation checks.
"""

from __future__ import annotations

import enum
import itertools
import logging
from fractions import Fraction
from typing import Any, Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from . import ConfigError, DimMismatchError, FamilyMismatchError, \
    NotUnimodularError, ValidationError
from . import _common
from .dualGroup import Character, DualGroupDescriptor, GroupKind, \
    isInPositiveCone, isOutsideOrthant


_logger = logging.getLogger(__name__)


DEFAULT_SAMPLE_RADIUS = 2
DEFAULT_SAMPLE_BUDGET = 4096


Matrix = tuple[tuple[int, ...], ...]


class Family(enum.Enum):
    """
    The automorphism families hausdorffpy can represent.
    """
    UNIMOD_MATRIX = 'unimod_matrix'
    LOWER_UNITRIANGULAR = 'lower_unitriangular'
    TWO_DIAGONAL = 'two_diagonal'
    SIGMA_U = 'sigma_u'
    RATIONAL_SCALE = 'rational_scale'
    COORDINATE_FLIP = 'coordinate_flip'


def integerDeterminant(M: Sequence[Sequence[int]]) -> int:
    """
    Exact determinant of a square integer matrix (fraction-free
    Bareiss elimination).
    """
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _minor(M: Matrix, row: int, col: int) -> list[list[int]]:
    return [[x for j, x in enumerate(r) if j != col] for i, r in enumerate(M) if i != row]


def _matMul(A: Matrix, B: Matrix) -> Matrix:
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0])))
        for i in range(len(A)))


def _transpose(M: Matrix) -> Matrix:
    return tuple(zip(*M))


def _matVec(M: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(m * x for m, x in zip(row, v)) for row in M)


def _isLowerUnitriangular(M: Matrix) -> bool:
    n = len(M)
    return all(M[i][i] == 1 for i in range(n)) \
        and all(M[i][j] == 0 for i in range(n) for j in range(i + 1, n))


class Automorphism:
    """
    Base class for automorphisms of a dual group. Instances are
    immutable; use the module-level functions (or the methods) to
    apply and invert them.
    """
    family: Family

    @property
    def group(self) -> DualGroupDescriptor:
        """
        The dual group this automorphism acts on.
        """
        raise NotImplementedError


    def checkCompatible(self, group: DualGroupDescriptor) -> None:
        if group != self.group:
            raise FamilyMismatchError(f'{self.family.name} automorphisms of {self.group}'
                                      f' cannot act on {group}')


    def apply(self, chi: Character) -> Character:
        self.checkCompatible(chi.group)
        return self._apply(chi)


    def _apply(self, chi: Character) -> Character:
        raise NotImplementedError


    def invert(self) -> Automorphism:
        raise NotImplementedError


    def _key(self) -> tuple:
        raise NotImplementedError


    def _jsonFields(self) -> dict:
        raise NotImplementedError


    def toJsonData(self) -> dict:
        return {'family': self.family.value, **self._jsonFields()}


    @classmethod
    def fromJsonData(cls, d: Any, context: str = 'automorphism') -> Automorphism:
        """
        Read a tagged automorphism object, such as
        {"family": "lower_unitriangular", "dim": 2, "entries": [[2, 1, 3]]}.
        """
        familyName = _common.requireField(d, 'family', context)
        try:
            family = Family(familyName)
        except ValueError:
            known = ', '.join(f.value for f in Family)
            raise ConfigError(f'{context}.family: unknown family {familyName!r}'
                              f' (expected one of {known})')
        try:
            return _FROM_JSON[family](d, context)
        except ConfigError:
            raise
        except ValidationError as e:
            raise ConfigError(f'{context}: {e}') from e
        except (TypeError, ValueError) as e:
            raise ConfigError(f'{context}: malformed {family.value} entries ({e})') from e


    def __eq__(self, other):
        if not isinstance(other, Automorphism): return NotImplemented
        return type(self) is type(other) and self._key() == other._key()


    def __hash__(self):
        return hash((type(self), self._key()))


class _MatrixAutomorphism(Automorphism):
    """
    Shared behaviour of the families acting on Z^d by integer matrices
    (n -> M n, with n a column vector).
    """
    dim: int

    @property
    def group(self) -> DualGroupDescriptor:
        return DualGroupDescriptor.zLex(self.dim)


    def toMatrix(self) -> Matrix:
        raise NotImplementedError


    def _apply(self, chi: Character) -> Character:
        return Character(chi.group, _matVec(self.toMatrix(), chi.payload))


    def _key(self) -> tuple:
        return self.toMatrix()


class UnimodularMatrix(_MatrixAutomorphism):
    """
    An integer matrix with determinant +1 or -1, acting on Z^d.
    """
    family = Family.UNIMOD_MATRIX
    matrix: Matrix

    def __init__(self, matrix: Iterable[Iterable[int]]):
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        if not matrix or any(len(row) != len(matrix) for row in matrix):
            raise NotUnimodularError(f'matrix {[list(r) for r in matrix]} is not square')
        det = integerDeterminant(matrix)
        if abs(det) != 1:
            raise NotUnimodularError(f'matrix {[list(r) for r in matrix]} has determinant'
                                     f' {det}, not +1 or -1')
        self.matrix = matrix
        self.dim = len(matrix)
        self.det = det


    def toMatrix(self) -> Matrix:
        return self.matrix


    def invert(self) -> UnimodularMatrix:
        """
        Exact inverse: the adjugate divided by the determinant, which
        for det = +-1 is the adjugate times the determinant.
        """
        n = self.dim
        if n == 1:
            return UnimodularMatrix([[self.det * 1]])
        adj = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                cofactor = (-1) ** (i + j) * integerDeterminant(_minor(self.matrix, i, j))
                adj[j][i] = cofactor * self.det
        return UnimodularMatrix(adj)


    def _jsonFields(self) -> dict:
        return {'matrix': [list(r) for r in self.matrix]}


    def __str__(self):
        rows = ','.join('[' + ','.join(str(x) for x in r) + ']' for r in self.matrix)
        return f'<unimod-matrix [{rows}]>'


    def __repr__(self):
        return f'{type(self).__name__}({[list(r) for r in self.matrix]!r})'


class LowerUnitriangular(_MatrixAutomorphism):
    """
    A lower unitriangular integer matrix, given by its entries below the
    diagonal as {(i, j): u_ij} with i > j (indices start at 1).
    """
    family = Family.LOWER_UNITRIANGULAR
    entries: dict[tuple[int, int], int]

    def __init__(self, dim: int, entries: dict[tuple[int, int], int] | None = None):
        if dim < 1:
            raise ValidationError(f'dimension must be positive (found {dim})')
        self.dim = dim
        self.entries = {}
        for (i, j), u in sorted((entries or {}).items()):
            if not (1 <= j < i <= dim):
                raise ValidationError(f'entry ({i},{j}) is not below the diagonal of a'
                                      f' {dim}x{dim} matrix')
            if u:
                self.entries[(i, j)] = int(u)


    @classmethod
    def fromMatrix(cls, matrix: Matrix) -> LowerUnitriangular:
        if not _isLowerUnitriangular(matrix):
            raise ValidationError('matrix is not lower unitriangular')
        n = len(matrix)
        return cls(n, {(i + 1, j + 1): matrix[i][j] for i in range(n) for j in range(i)})


    def toMatrix(self) -> Matrix:
        M = [[int(i == j) for j in range(self.dim)] for i in range(self.dim)]
        for (i, j), u in self.entries.items():
            M[i - 1][j - 1] = u
        return tuple(tuple(r) for r in M)


    def invert(self) -> LowerUnitriangular:
        """
        The inverse is again lower unitriangular; it's found by forward
        substitution.
        """
        L = self.toMatrix()
        n = self.dim
        X = [[int(i == j) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i):
                X[i][j] = -sum(L[i][k] * X[k][j] for k in range(j, i))
        return LowerUnitriangular.fromMatrix(tuple(tuple(r) for r in X))


    def _jsonFields(self) -> dict:
        return {'dim': self.dim, 'entries': [[i, j, u] for (i, j), u in self.entries.items()]}


    def __str__(self):
        entries = ''.join(f' u{i}{j}={u}' for (i, j), u in self.entries.items())
        return f'<lower-unitriangular d={self.dim}{entries}>'


    def __repr__(self):
        return f'{type(self).__name__}({self.dim}, {self.entries!r})'


class CoordinateFlip(_MatrixAutomorphism):
    """
    n -> (s_1 n_1, ..., s_d n_d) with every s_i = +1 or -1.
    """
    family = Family.COORDINATE_FLIP
    signs: tuple[int, ...]

    def __init__(self, signs: Iterable[int]):
        signs = tuple(int(s) for s in signs)
        if not signs or any(s not in (1, -1) for s in signs):
            raise ValidationError(f'coordinate flip signs must all be +1 or -1 (found {signs})')
        self.signs = signs
        self.dim = len(signs)


    def toMatrix(self) -> Matrix:
        return tuple(tuple(s if i == j else 0 for j in range(self.dim))
                     for i, s in enumerate(self.signs))


    def _apply(self, chi: Character) -> Character:
        return Character(chi.group, tuple(s * x for s, x in zip(self.signs, chi.payload)))


    def invert(self) -> CoordinateFlip:
        return self


    def _jsonFields(self) -> dict:
        return {'signs': list(self.signs)}


    def __str__(self):
        signs = ''.join('+' if s > 0 else '-' for s in self.signs)
        return f'<coordinate-flip {signs}>'


    def __repr__(self):
        return f'{type(self).__name__}({self.signs!r})'


def _twoDiagonalApply(coeffs: dict[int, int], chi: Character, inverse: bool) -> Character:
    """
    beta_k = alpha_k + c_k alpha_(k-1) (forward), or the recurrence
    alpha_k = beta_k - c_k alpha_(k-1) (inverse).

    Only indices in supp(chi) or with c_k != 0 can be nonzero in the
    result, and only those are visited.
    """
    source = dict(chi.payload)
    result = {}
    for k in sorted(source.keys() | coeffs.keys()):
        c = coeffs.get(k, 0)
        if inverse:
            value = source.get(k, 0) - c * result.get(k - 1, 0)
        else:
            value = source.get(k, 0) + c * source.get(k - 1, 0)
        if value:
            result[k] = value
    return Character(chi.group, result)


class TwoDiagonal(Automorphism):
    """
    An infinite lower two-diagonal matrix with unit diagonal, acting on
    Z^inf: alpha -> (alpha_1, u_21 alpha_1 + alpha_2, u_32 alpha_2 +
    alpha_3, ...). entries maps k (>= 2) to u_(k,k-1).

    With inverse=True this represents the inverse map instead, which is
    given by a recurrence rather than a two-diagonal matrix.
    """
    family = Family.TWO_DIAGONAL
    entries: dict[int, int]
    inverse: bool

    def __init__(self, entries: dict[int, int] | None = None, inverse: bool = False):
        self.entries = {}
        for k, u in sorted((entries or {}).items()):
            if k < 2:
                raise ValidationError(f'two-diagonal entries start at k = 2 (found {k})')
            if u:
                self.entries[int(k)] = int(u)
        self.inverse = bool(inverse)


    @property
    def group(self) -> DualGroupDescriptor:
        return DualGroupDescriptor.zInfLex()


    def _apply(self, chi: Character) -> Character:
        return _twoDiagonalApply(self.entries, chi, self.inverse)


    def invert(self) -> TwoDiagonal:
        return TwoDiagonal(self.entries, not self.inverse)


    def _key(self) -> tuple:
        return tuple(self.entries.items()), self.inverse


    def _jsonFields(self) -> dict:
        return {'entries': [[k, u] for k, u in self.entries.items()], 'inverse': self.inverse}


    def __str__(self):
        entries = ''.join(f' u{k},{k-1}={u}' for k, u in self.entries.items())
        inv = ' inverse' if self.inverse else ''
        return f'<two-diagonal{entries}{inv}>'


    def __repr__(self):
        inv = ', inverse=True' if self.inverse else ''
        return f'{type(self).__name__}({self.entries!r}{inv})'


class SigmaU(Automorphism):
    """
    sigma_u(alpha) = (alpha_1, alpha_2 - u_1 alpha_1, ...,
    alpha_k - u_(k-1) alpha_(k-1), ...) for a finitely supported
    nonnegative sequence u = (u_1, u_2, ...).

    With inverse=True this is sigma_u^-1, computed by the recurrence
    alpha_1 = beta_1, alpha_k = beta_k + u_(k-1) alpha_(k-1).
    """
    family = Family.SIGMA_U
    u: tuple[int, ...]
    inverse: bool

    def __init__(self, u: Iterable[int] = (), inverse: bool = False):
        u = [int(x) for x in u]
        if any(x < 0 for x in u):
            raise ValidationError(f'sigma_u needs a nonnegative sequence u (found {u})')
        while u and u[-1] == 0:
            u.pop()
        self.u = tuple(u)
        self.inverse = bool(inverse)
        # sigma_u is the two-diagonal matrix with u_(k,k-1) = -u_(k-1)
        self._coeffs = {k + 2: -x for k, x in enumerate(self.u) if x}


    @property
    def group(self) -> DualGroupDescriptor:
        return DualGroupDescriptor.zInfLex()


    def _apply(self, chi: Character) -> Character:
        return _twoDiagonalApply(self._coeffs, chi, self.inverse)


    def invert(self) -> SigmaU:
        return SigmaU(self.u, not self.inverse)


    def _key(self) -> tuple:
        return self.u, self.inverse


    def _jsonFields(self) -> dict:
        return {'u': list(self.u), 'inverse': self.inverse}


    def __str__(self):
        u = ','.join(str(x) for x in self.u)
        inv = '^-1' if self.inverse else ''
        return f'<sigma-u ({u}){inv}>'


    def __repr__(self):
        inv = ', inverse=True' if self.inverse else ''
        return f'{type(self).__name__}({self.u!r}{inv})'


class RationalScale(Automorphism):
    """
    gamma -> q gamma on the rationals, for a positive rational q.
    """
    family = Family.RATIONAL_SCALE
    q: Fraction

    def __init__(self, q: Fraction | int | tuple[int, int]):
        if isinstance(q, tuple):
            q = Fraction(*q)
        q = Fraction(q)
        if q <= 0:
            raise ValidationError(f'rational scaling needs a positive factor (found {q})')
        self.q = q


    @property
    def group(self) -> DualGroupDescriptor:
        return DualGroupDescriptor.rationals()


    def _apply(self, chi: Character) -> Character:
        return Character(chi.group, chi.payload * self.q)


    def invert(self) -> RationalScale:
        return RationalScale(1 / self.q)


    def _key(self) -> tuple:
        return (self.q,)


    def _jsonFields(self) -> dict:
        return {'q': [self.q.numerator, self.q.denominator]}


    def __str__(self):
        return f'<rational-scale {self.q}>'


    def __repr__(self):
        return f'{type(self).__name__}(Fraction({self.q.numerator}, {self.q.denominator}))'


def _unimodFromJson(d, context):
    matrix = _common.requireField(d, 'matrix', context)
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise ConfigError(f'{context}.matrix must be an array of integer rows')
    for i, row in enumerate(matrix):
        for j, x in enumerate(row):
            _common.requireInt(x, f'{context}.matrix[{i}][{j}]')
    return UnimodularMatrix(matrix)


def _lowerFromJson(d, context):
    dim = _common.requireInt(_common.requireField(d, 'dim', context), f'{context}.dim')
    entries = {}
    for n, triple in enumerate(d.get('entries', [])):
        if not isinstance(triple, list) or len(triple) != 3:
            raise ConfigError(f'{context}.entries[{n}] must be an [i, j, u] triple')
        i, j, u = (_common.requireInt(x, f'{context}.entries[{n}]') for x in triple)
        entries[(i, j)] = u
    return LowerUnitriangular(dim, entries)


def _twoDiagonalFromJson(d, context):
    entries = {}
    for n, pair in enumerate(d.get('entries', [])):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ConfigError(f'{context}.entries[{n}] must be a [k, u] pair')
        k, u = (_common.requireInt(x, f'{context}.entries[{n}]') for x in pair)
        entries[k] = u
    return TwoDiagonal(entries, bool(d.get('inverse', False)))


def _sigmaFromJson(d, context):
    u = _common.requireField(d, 'u', context)
    if not isinstance(u, list):
        raise ConfigError(f'{context}.u must be an array of integers')
    return SigmaU([_common.requireInt(x, f'{context}.u') for x in u], bool(d.get('inverse', False)))


def _rationalFromJson(d, context):
    q = _common.requireField(d, 'q', context)
    if isinstance(q, list) and len(q) == 2:
        numerator = _common.requireInt(q[0], f'{context}.q[0]')
        denominator = _common.requireInt(q[1], f'{context}.q[1]')
        if denominator == 0:
            raise ConfigError(f'{context}.q has a zero denominator')
        return RationalScale(Fraction(numerator, denominator))
    return RationalScale(_common.requireInt(q, f'{context}.q'))


def _flipFromJson(d, context):
    signs = _common.requireField(d, 'signs', context)
    if not isinstance(signs, list):
        raise ConfigError(f'{context}.signs must be an array')
    return CoordinateFlip([_common.requireInt(s, f'{context}.signs') for s in signs])


_FROM_JSON = {
    Family.UNIMOD_MATRIX: _unimodFromJson,
    Family.LOWER_UNITRIANGULAR: _lowerFromJson,
    Family.TWO_DIAGONAL: _twoDiagonalFromJson,
    Family.SIGMA_U: _sigmaFromJson,
    Family.RATIONAL_SCALE: _rationalFromJson,
    Family.COORDINATE_FLIP: _flipFromJson,
}


def apply(A: Automorphism, chi: Character) -> Character:
    """
    The image of chi under A, in canonical form.
    """
    return A.apply(chi)


def invert(A: Automorphism) -> Automorphism:
    return A.invert()


def _requireMatrix(A: Automorphism) -> _MatrixAutomorphism:
    if not isinstance(A, _MatrixAutomorphism):
        raise FamilyMismatchError(f'{A.family.name} automorphisms have no matrix form')
    return A


def compose(A: Automorphism, B: Automorphism) -> UnimodularMatrix:
    """
    The matrix product A B: apply(compose(A, B), chi) equals
    apply(A, apply(B, chi)). Only matrix families can be composed.
    """
    A, B = _requireMatrix(A), _requireMatrix(B)
    if A.dim != B.dim:
        raise DimMismatchError(f'cannot compose a {A.dim}x{A.dim} matrix with a'
                               f' {B.dim}x{B.dim} matrix')
    return UnimodularMatrix(_matMul(A.toMatrix(), B.toMatrix()))


def transpose(A: Automorphism) -> UnimodularMatrix:
    return UnimodularMatrix(_transpose(_requireMatrix(A).toMatrix()))


def toMatrix(A: Automorphism) -> Matrix:
    return _requireMatrix(A).toMatrix()


def _basis(group: DualGroupDescriptor, size: int) -> list[Character]:
    if group.kind is GroupKind.Z_LEX:
        return [Character(group, tuple(int(i == j) for j in range(group.dim)))
                for i in range(group.dim)]
    elif group.kind is GroupKind.Z_INF_LEX:
        return [Character(group, {k: 1}) for k in range(1, size + 1)]
    return [Character(group, 1)]


def _relevantSize(A: Automorphism) -> int:
    """
    Past this index an automorphism of Z^inf acts as the identity.
    """
    if isinstance(A, TwoDiagonal):
        return max(A.entries, default=1)
    elif isinstance(A, SigmaU):
        return len(A.u) + 1
    return 1


def actsLike(A: Automorphism, B: Automorphism) -> bool:
    """
    Whether A and B act identically. Both maps are additive, so it's
    enough to compare them on a basis.
    """
    if A.group != B.group:
        return False
    size = max(_relevantSize(A), _relevantSize(B)) + 1
    return all(A.apply(e) == B.apply(e) for e in _basis(A.group, size))


class TargetSet(enum.Enum):
    """
    Sets whose preservation preserves() can decide.
    """
    LEX_CONE = 'lex_cone'
    ORTHANT_COMPLEMENT = 'orthant_complement'


class SetSpec(NamedTuple):
    """
    A target set together with the box radius and sample budget used
    when no analytic verdict is known.
    """
    target: TargetSet
    radius: int = DEFAULT_SAMPLE_RADIUS
    budget: int = DEFAULT_SAMPLE_BUDGET

    @classmethod
    def lexCone(cls, radius: int = DEFAULT_SAMPLE_RADIUS, budget: int = DEFAULT_SAMPLE_BUDGET) -> SetSpec:
        return cls.validated(TargetSet.LEX_CONE, radius, budget)

    @classmethod
    def orthantComplement(cls, radius: int = DEFAULT_SAMPLE_RADIUS, budget: int = DEFAULT_SAMPLE_BUDGET) -> SetSpec:
        return cls.validated(TargetSet.ORTHANT_COMPLEMENT, radius, budget)

    @classmethod
    def validated(cls, target: TargetSet, radius: int, budget: int) -> SetSpec:
        if radius < 1 or budget < 1:
            raise ValidationError(f'sampling needs radius >= 1 and budget >= 1'
                                  f' (found {radius}, {budget})')
        return cls(target, radius, budget)

    def contains(self, chi: Character) -> bool:
        if self.target is TargetSet.LEX_CONE:
            return isInPositiveCone(chi)
        return isOutsideOrthant(chi)


class VerdictKind(enum.Enum):
    ANALYTIC_TRUE = 'analytic_true'
    ANALYTIC_FALSE = 'analytic_false'
    SAMPLED_TRUE = 'sampled_true'
    FALSE_WITNESS = 'false_witness'


class Verdict(NamedTuple):
    """
    Result of preserves(). budget is the number of characters tested
    for SAMPLED_TRUE; witness is a member of the set whose image
    leaves it (always present for the two negative kinds).
    """
    kind: VerdictKind
    budget: int | None = None
    witness: Character | None = None

    def __bool__(self):
        return self.kind in (VerdictKind.ANALYTIC_TRUE, VerdictKind.SAMPLED_TRUE)

    def __str__(self):
        if self.kind is VerdictKind.SAMPLED_TRUE:
            return f'<verdict sampled-true budget={self.budget}>'
        elif self.witness is not None:
            return f'<verdict {self.kind.value.replace("_", "-")} witness={self.witness}>'
        return f'<verdict {self.kind.value.replace("_", "-")}>'


def _analyticVerdict(A: Automorphism, S: SetSpec) -> Verdict | None:
    """
    Verdicts that follow from the first-nonzero-entry argument (or from
    q > 0), without sampling.
    """
    TRUE = Verdict(VerdictKind.ANALYTIC_TRUE)
    if S.target is TargetSet.LEX_CONE:
        if isinstance(A, (LowerUnitriangular, TwoDiagonal, SigmaU, RationalScale)):
            return TRUE
        if isinstance(A, UnimodularMatrix) and _isLowerUnitriangular(A.matrix):
            return TRUE
        if isinstance(A, CoordinateFlip):
            for i, s in enumerate(A.signs):
                if s < 0:
                    e = Character(A.group, tuple(int(i == j) for j in range(A.dim)))
                    return Verdict(VerdictKind.ANALYTIC_FALSE, witness=e)
            return TRUE
    elif S.target is TargetSet.ORTHANT_COMPLEMENT:
        # The first negative entry of alpha survives sigma_u (but not
        # necessarily its inverse)
        if isinstance(A, SigmaU) and not A.inverse:
            return TRUE
    return None


def shellPoints(dim: int, radius: int) -> Iterator[tuple[int, ...]]:
    """
    All points of [-radius, radius]^dim, by increasing max-norm.
    """
    yield (0,) * dim
    for r in range(1, radius + 1):
        for p in itertools.product(range(-r, r + 1), repeat=dim):
            if max(abs(x) for x in p) == r:
                yield p


def _candidates(A: Automorphism, S: SetSpec, seed: int) -> tuple[Iterator[Character], int]:
    group = A.group
    R = S.radius
    if group.kind is GroupKind.RATIONALS:
        pairs = [(n, d) for d in range(1, R + 1) for n in range(-R, R + 1)]
        if len(pairs) <= S.budget:
            return (Character(group, p) for p in pairs), len(pairs)
        rng = np.random.default_rng(seed)
        nums = rng.integers(-R, R + 1, size=S.budget)
        dens = rng.integers(1, R + 1, size=S.budget)
        return (Character(group, (int(n), int(d))) for n, d in zip(nums, dens)), S.budget

    if group.kind is GroupKind.Z_LEX:
        dim = group.dim
        wrap = lambda p: Character(group, p)
    else:
        dim = _relevantSize(A) + 1
        wrap = lambda p: Character(group, {i + 1: v for i, v in enumerate(p)})

    boxSize = (2 * R + 1) ** dim
    if boxSize <= S.budget:
        return (wrap(p) for p in shellPoints(dim, R)), boxSize
    rng = np.random.default_rng(seed)
    points = rng.integers(-R, R + 1, size=(S.budget, dim))
    return (wrap(tuple(int(x) for x in p)) for p in points), S.budget


def preserves(A: Automorphism, S: SetSpec, seed: int = 0) -> Verdict:
    """
    Decide whether A maps the set S into itself: analytically for the
    pairs where that's known, otherwise by testing characters in the
    box [-R, R]^support (exhaustively if the box fits in the budget).
    """
    analytic = _analyticVerdict(A, S)
    if analytic is not None:
        return analytic

    candidates, count = _candidates(A, S, seed)
    _logger.debug('No analytic verdict for %s on %s; testing %d characters',
                  A, S.target.name, count)
    for chi in candidates:
        if S.contains(chi) and not S.contains(A.apply(chi)):
            return Verdict(VerdictKind.FALSE_WITNESS, witness=chi)
    return Verdict(VerdictKind.SAMPLED_TRUE, budget=count)
