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
Discrete, totally ordered abelian groups of characters, written
additively.
"""

from __future__ import annotations

import bisect
import dataclasses
import enum
import functools
import operator
from fractions import Fraction
from typing import Any, Callable, Collection, Iterable

from . import ConfigError, EmptySetError, GroupMismatchError, \
    UnsupportedGroupError, ValidationError
from . import _common


class GroupKind(enum.Enum):
    """
    The kinds of dual group hausdorffpy knows how to order.
    """
    Z_LEX = 'z_lex'
    Z_INF_LEX = 'z_inf_lex'
    RATIONALS = 'rationals'


class Ordering(enum.IntEnum):
    """
    Result of compare(). The values are the signs of a - b.
    """
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclasses.dataclass(frozen=True, repr=False)
class DualGroupDescriptor:
    """
    Identifies a dual group X: lexicographic Z^d, lexicographic Z^inf
    (finitely supported integer sequences), or the rationals with their
    usual order.
    """
    kind: GroupKind
    dim: int | None = None

    def __post_init__(self):
        if self.kind is GroupKind.Z_LEX:
            if not isinstance(self.dim, int) or isinstance(self.dim, bool) or self.dim < 1:
                raise ValidationError(f'Z_LEX needs a positive dimension (found {self.dim!r})')
        elif self.dim is not None:
            raise ValidationError(f'{self.kind.name} groups have no dimension')


    @classmethod
    def zLex(cls, dim: int) -> DualGroupDescriptor:
        return cls(GroupKind.Z_LEX, dim)


    @classmethod
    def zInfLex(cls) -> DualGroupDescriptor:
        return cls(GroupKind.Z_INF_LEX)


    @classmethod
    def rationals(cls) -> DualGroupDescriptor:
        return cls(GroupKind.RATIONALS)


    @classmethod
    def fromJsonData(cls, d: Any, context: str = 'group') -> DualGroupDescriptor:
        """
        Read a group descriptor object, e.g. {"kind": "z_lex", "dim": 2}.
        """
        kindName = _common.requireField(d, 'kind', context)
        try:
            kind = GroupKind(kindName)
        except ValueError:
            known = ', '.join(k.value for k in GroupKind)
            raise ConfigError(f'{context}: unknown kind {kindName!r} (expected one of {known})')
        if kind is GroupKind.Z_LEX:
            dim = _common.requireInt(_common.requireField(d, 'dim', context), f'{context}.dim')
            try:
                return cls(kind, dim)
            except ValidationError as e:
                raise ConfigError(f'{context}.dim: {e}') from e
        return cls(kind)


    def toJsonData(self) -> dict:
        if self.kind is GroupKind.Z_LEX:
            return {'kind': self.kind.value, 'dim': self.dim}
        return {'kind': self.kind.value}


    def __str__(self):
        if self.kind is GroupKind.Z_LEX:
            return f'Z^{self.dim}_lex'
        elif self.kind is GroupKind.Z_INF_LEX:
            return 'Z^inf_lex'
        return 'Q'


    def __repr__(self):
        if self.kind is GroupKind.Z_LEX:
            return f'{type(self).__name__}.zLex({self.dim})'
        elif self.kind is GroupKind.Z_INF_LEX:
            return f'{type(self).__name__}.zInfLex()'
        return f'{type(self).__name__}.rationals()'


def _exactInt(value: Any, what: str) -> int:
    try:
        return operator.index(value)
    except TypeError:
        raise ValidationError(f'{what} must be integers (found {value!r})') from None


def _canonicalSparse(entries: Any) -> tuple[tuple[int, int], ...]:
    """
    Put a sparse Z^inf payload into canonical form: indices strictly
    increasing, no zero values.
    """
    if isinstance(entries, dict):
        entries = entries.items()
    seen = set()
    pairs = []
    for index, value in entries:
        index, value = _exactInt(index, 'Z^inf indices'), _exactInt(value, 'Z^inf values')
        if index < 1:
            raise ValidationError(f'Z^inf indices start at 1 (found {index})')
        if index in seen:
            raise ValidationError(f'Z^inf index {index} appears twice')
        seen.add(index)
        if value:
            pairs.append((index, value))
    pairs.sort()
    return tuple(pairs)


@functools.total_ordering
@dataclasses.dataclass(frozen=True, repr=False)
class Character:
    """
    An element of a dual group, in canonical form.

    The payload is a tuple of ints for Z^d, a tuple of (index, value)
    pairs for Z^inf, and a Fraction for the rationals.
    """
    group: DualGroupDescriptor
    payload: Any

    def __post_init__(self):
        kind = self.group.kind
        if kind is GroupKind.Z_LEX:
            payload = tuple(_exactInt(x, 'Z^d coordinates') for x in self.payload)
            if len(payload) != self.group.dim:
                raise ValidationError(f'{self.group} needs {self.group.dim} coordinates'
                                      f' (found {len(payload)})')
        elif kind is GroupKind.Z_INF_LEX:
            payload = _canonicalSparse(self.payload)
        else:
            if isinstance(self.payload, tuple):
                numerator, denominator = self.payload
                if denominator == 0:
                    raise ValidationError('Rational characters need a nonzero denominator')
                payload = Fraction(_exactInt(numerator, 'Rational parts'),
                                   _exactInt(denominator, 'Rational parts'))
            else:
                payload = Fraction(self.payload)
        object.__setattr__(self, 'payload', payload)


    @classmethod
    def fromVector(cls, values: Iterable[int]) -> Character:
        """
        Create a character of lexicographic Z^d from its coordinates.
        """
        values = tuple(values)
        return cls(DualGroupDescriptor.zLex(len(values)), values)


    @classmethod
    def fromSparse(cls, entries: dict[int, int] | Iterable[tuple[int, int]]) -> Character:
        """
        Create a character of lexicographic Z^inf from {index: value}
        entries (indices start at 1).
        """
        return cls(DualGroupDescriptor.zInfLex(), entries)


    @classmethod
    def fromRational(cls, numerator: int, denominator: int = 1) -> Character:
        return cls(DualGroupDescriptor.rationals(), (numerator, denominator))


    @classmethod
    def fromPayload(cls, group: DualGroupDescriptor, data: Any, context: str = 'character') -> Character:
        """
        Read the JSON form of a character: an integer array for Z^d, an
        array of [index, value] pairs for Z^inf, [numerator, denominator]
        for the rationals.
        """
        if not isinstance(data, list):
            raise ConfigError(f'{context} must be a JSON array (found {data!r})')
        try:
            if group.kind is GroupKind.Z_LEX:
                for i, x in enumerate(data):
                    _common.requireInt(x, f'{context}[{i}]')
                return cls(group, data)
            elif group.kind is GroupKind.Z_INF_LEX:
                pairs = []
                for i, pair in enumerate(data):
                    if not isinstance(pair, list) or len(pair) != 2:
                        raise ConfigError(f'{context}[{i}] must be an [index, value] pair')
                    pairs.append((_common.requireInt(pair[0], f'{context}[{i}][0]'),
                                  _common.requireInt(pair[1], f'{context}[{i}][1]')))
                return cls(group, pairs)
            else:
                if len(data) != 2:
                    raise ConfigError(f'{context} must be [numerator, denominator]')
                numerator = _common.requireInt(data[0], f'{context}[0]')
                denominator = _common.requireInt(data[1], f'{context}[1]')
                if denominator <= 0:
                    raise ConfigError(f'{context}: denominator must be positive')
                return cls(group, (numerator, denominator))
        except ConfigError:
            raise
        except ValidationError as e:
            raise ConfigError(f'{context}: {e}') from e


    def toPayload(self) -> list:
        """
        The inverse of fromPayload().
        """
        kind = self.group.kind
        if kind is GroupKind.Z_LEX:
            return list(self.payload)
        elif kind is GroupKind.Z_INF_LEX:
            return [[i, v] for i, v in self.payload]
        return [self.payload.numerator, self.payload.denominator]


    def entry(self, index: int) -> int:
        """
        Coordinate number index (starting at 1) of a Z^d or Z^inf
        character. Z^inf characters are zero past their support.
        """
        kind = self.group.kind
        if kind is GroupKind.Z_LEX:
            return self.payload[index - 1]
        elif kind is GroupKind.Z_INF_LEX:
            for i, v in self.payload:
                if i == index:
                    return v
            return 0
        raise UnsupportedGroupError('Rational characters have no coordinates')


    def entries(self) -> Iterable[tuple[int, int]]:
        """
        (index, value) pairs of all nonzero coordinates, in index order.
        """
        kind = self.group.kind
        if kind is GroupKind.Z_LEX:
            return ((i + 1, v) for i, v in enumerate(self.payload) if v)
        elif kind is GroupKind.Z_INF_LEX:
            return iter(self.payload)
        raise UnsupportedGroupError('Rational characters have no coordinates')


    def maxAbsEntry(self) -> int:
        """
        The largest absolute value among the coordinates (0 for the
        identity).
        """
        return max((abs(v) for _, v in self.entries()), default=0)


    def isIdentity(self) -> bool:
        kind = self.group.kind
        if kind is GroupKind.Z_LEX:
            return not any(self.payload)
        elif kind is GroupKind.Z_INF_LEX:
            return not self.payload
        return self.payload == 0


    def __add__(self, other):
        if not isinstance(other, Character): return NotImplemented
        return combine(self, other)

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        if not isinstance(other, Character): return NotImplemented
        return combine(self, negate(other))

    def __lt__(self, other):
        if not isinstance(other, Character): return NotImplemented
        return compare(self, other) is Ordering.LESS


    def __str__(self):
        kind = self.group.kind
        if kind is GroupKind.Z_LEX:
            if len(self.payload) == 1:
                return str(self.payload[0])
            return '(' + ','.join(str(x) for x in self.payload) + ')'
        elif kind is GroupKind.Z_INF_LEX:
            return '{' + ', '.join(f'{i}:{v}' for i, v in self.payload) + '}'
        return str(self.payload)


    def __repr__(self):
        kind = self.group.kind
        if kind is GroupKind.Z_LEX:
            return f'{type(self).__name__}.fromVector({self.payload!r})'
        elif kind is GroupKind.Z_INF_LEX:
            return f'{type(self).__name__}.fromSparse({dict(self.payload)!r})'
        return (f'{type(self).__name__}.fromRational('
                f'{self.payload.numerator}, {self.payload.denominator})')


def identity(group: DualGroupDescriptor) -> Character:
    """
    The zero element of the group (the unit character).
    """
    if group.kind is GroupKind.Z_LEX:
        return Character(group, (0,) * group.dim)
    elif group.kind is GroupKind.Z_INF_LEX:
        return Character(group, ())
    return Character(group, 0)


def checkSameGroup(a: DualGroupDescriptor, b: DualGroupDescriptor) -> None:
    if a != b:
        raise GroupMismatchError(f'Group mismatch: {a} vs {b}')


def combine(a: Character, b: Character) -> Character:
    """
    The group operation, a + b.
    """
    checkSameGroup(a.group, b.group)
    kind = a.group.kind
    if kind is GroupKind.Z_LEX:
        return Character(a.group, tuple(x + y for x, y in zip(a.payload, b.payload)))
    elif kind is GroupKind.Z_INF_LEX:
        total = dict(a.payload)
        for i, v in b.payload:
            total[i] = total.get(i, 0) + v
        return Character(a.group, total)
    return Character(a.group, a.payload + b.payload)


def negate(a: Character) -> Character:
    kind = a.group.kind
    if kind is GroupKind.Z_LEX:
        return Character(a.group, tuple(-x for x in a.payload))
    elif kind is GroupKind.Z_INF_LEX:
        return Character(a.group, tuple((i, -v) for i, v in a.payload))
    return Character(a.group, -a.payload)


def multiply(a: Character, k: int) -> Character:
    """
    k * a, i.e. a combined with itself k times.
    """
    kind = a.group.kind
    if kind is GroupKind.Z_LEX:
        return Character(a.group, tuple(k * x for x in a.payload))
    elif kind is GroupKind.Z_INF_LEX:
        return Character(a.group, tuple((i, k * v) for i, v in a.payload))
    return Character(a.group, k * a.payload)


def sgnPlus(a: Character) -> int:
    """
    0 for the identity, +1 on the rest of the positive cone, -1 on the
    negative part X_-.
    """
    kind = a.group.kind
    if kind is GroupKind.Z_LEX:
        for x in a.payload:
            if x:
                return 1 if x > 0 else -1
        return 0
    elif kind is GroupKind.Z_INF_LEX:
        # Canonical form: the first stored entry is the first nonzero one
        if not a.payload:
            return 0
        return 1 if a.payload[0][1] > 0 else -1
    if a.payload == 0:
        return 0
    return 1 if a.payload > 0 else -1


def compare(a: Character, b: Character) -> Ordering:
    """
    Compare two characters in the group's order (lexicographic for Z^d
    and Z^inf, usual for the rationals).
    """
    checkSameGroup(a.group, b.group)
    return Ordering(sgnPlus(combine(a, negate(b))))


def isInPositiveCone(a: Character) -> bool:
    """
    Membership in X_+, which includes the identity.
    """
    return sgnPlus(a) >= 0


def isInOrthant(a: Character) -> bool:
    """
    Membership in the nonnegative orthant: no negative coordinate (for
    the rationals, a >= 0).
    """
    if a.group.kind is GroupKind.RATIONALS:
        return a.payload >= 0
    return all(v >= 0 for _, v in a.entries())


def isOutsideOrthant(a: Character) -> bool:
    return not isInOrthant(a)


def memberOf(collection: Collection[Character]) -> Callable[[Character], bool]:
    """
    Turn a finite collection of characters into a membership predicate.
    """
    members = frozenset(collection)
    return lambda a: a in members


def lacunarityConstant(E: Iterable[Character | int]) -> int:
    """
    The smallest K_E such that every interval [x, 2x] (x >= 0) contains
    at most K_E elements of E. Only defined for X = Z. Moving x up to the
    next element of E never loses a member of [x, 2x], so only x in E are
    searched.
    """
    values = []
    for element in E:
        if isinstance(element, Character):
            if element.group != DualGroupDescriptor.zLex(1):
                raise UnsupportedGroupError('lacunarityConstant() is only supported for'
                                            f' X = Z (found a character of {element.group})')
            element = element.payload[0]
        if element < 0:
            raise ValidationError(f'Lacunary sets lie in the positive cone (found {element})')
        values.append(element)
    if not values:
        raise EmptySetError('lacunarityConstant() needs a nonempty set')
    values = sorted(set(values))

    best = 0
    for i, x in enumerate(values):
        count = bisect.bisect_right(values, 2 * x) - i
        best = max(best, count)
    return best
