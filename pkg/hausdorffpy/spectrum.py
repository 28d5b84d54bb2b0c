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
Support for spectra: finitely supported Fourier coefficient functions,
i.e. the coefficients of trigonometric polynomials on a compact group.
"""

from __future__ import annotations

import enum
import math
import os
import types
from typing import Any, Callable, Iterable, Iterator, Mapping, NamedTuple

from . import ConfigError
from . import _common
from .dualGroup import Character, DualGroupDescriptor, GroupKind, \
    checkSameGroup, isInPositiveCone, negate, sgnPlus


class Part(enum.Enum):
    """
    Which Riesz projection to take: PLUS keeps the positive cone
    (including the identity), MINUS keeps the rest.
    """
    PLUS = 'plus'
    MINUS = 'minus'


class SupportCheck(NamedTuple):
    """
    Result of isSupportedIn(). Truthy iff the spectrum is supported in
    the set; otherwise witness is a key outside it.
    """
    supported: bool
    witness: Character | None = None

    def __bool__(self):
        return self.supported


def _sortKey(group: DualGroupDescriptor) -> Callable[[Character], Any] | None:
    # Tuple and Fraction comparison already agree with the group order
    if group.kind is GroupKind.Z_INF_LEX:
        return None
    return lambda chi: chi.payload


class Spectrum:
    """
    A finitely supported map from characters of one dual group to
    complex coefficients.

    Keys are kept in the group's order, which is also the order every
    summation over terms uses. Coefficients that are exactly zero are
    dropped; tiny nonzero ones are kept.
    """
    group: DualGroupDescriptor

    def __init__(self, group: DualGroupDescriptor,
            terms: Mapping[Character, complex] | Iterable[tuple[Character, complex]] = ()):
        self.group = group

        if isinstance(terms, Mapping):
            terms = terms.items()
        collected = {}
        for chi, value in terms:
            checkSameGroup(group, chi.group)
            collected[chi] = collected.get(chi, 0j) + complex(value)

        keys = sorted((chi for chi, value in collected.items() if value != 0),
                      key=_sortKey(group))
        self._terms = {chi: collected[chi] for chi in keys}


    @classmethod
    def fromJsonData(cls, d: Any, context: str = 'spectrum') -> Spectrum:
        """
        Read a spectrum document:
        {"group": {...}, "terms": [{"character": [...], "re": x, "im": y}, ...]}
        """
        group = DualGroupDescriptor.fromJsonData(_common.requireField(d, 'group', context),
                                                 f'{context}.group')
        records = _common.requireField(d, 'terms', context)
        if not isinstance(records, list):
            raise ConfigError(f'{context}.terms must be an array')

        terms = {}
        for i, record in enumerate(records):
            where = f'{context}.terms[{i}]'
            chi = Character.fromPayload(group,
                _common.requireField(record, 'character', where), f'{where}.character')
            if chi in terms:
                raise ConfigError(f'{where}: character {chi} appears more than once')
            terms[chi] = _common.complexFromJson(record, where)
        return cls(group, terms)


    @classmethod
    def fromFile(cls, filePath: str | os.PathLike) -> Spectrum:
        """
        Load a spectrum from a JSON file.
        """
        return cls.fromJsonData(_common.loadJsonFile(filePath), str(filePath))


    def toJsonData(self) -> dict:
        return {
            'group': self.group.toJsonData(),
            'terms': [{'character': chi.toPayload(), **_common.complexToJson(value)}
                      for chi, value in self._terms.items()],
        }


    def save(self) -> str:
        """
        Generate the JSON text representing this spectrum.
        """
        return _common.dumpJson(self.toJsonData())


    def saveToFile(self, filePath: str | os.PathLike) -> None:
        _common.saveTextToFile(self.save(), filePath)


    @property
    def terms(self) -> Mapping[Character, complex]:
        return types.MappingProxyType(self._terms)


    def support(self) -> list[Character]:
        return list(self._terms)


    def items(self) -> Iterable[tuple[Character, complex]]:
        return self._terms.items()


    def __getitem__(self, chi: Character) -> complex:
        return self._terms.get(chi, 0j)


    def __contains__(self, chi: Character) -> bool:
        return chi in self._terms


    def __iter__(self) -> Iterator[Character]:
        return iter(self._terms)


    def __len__(self) -> int:
        return len(self._terms)


    def __bool__(self) -> bool:
        return bool(self._terms)


    def __eq__(self, other):
        if not isinstance(other, Spectrum): return NotImplemented
        return self.group == other.group and self._terms == other._terms


    def __add__(self, other):
        if not isinstance(other, Spectrum): return NotImplemented
        checkSameGroup(self.group, other.group)
        return Spectrum(self.group, [*self._terms.items(), *other._terms.items()])


    def __neg__(self):
        return Spectrum(self.group, {chi: -v for chi, v in self._terms.items()})


    def __sub__(self, other):
        if not isinstance(other, Spectrum): return NotImplemented
        return self + (-other)


    def __mul__(self, scalar):
        if not isinstance(scalar, (int, float, complex)): return NotImplemented
        return Spectrum(self.group, {chi: scalar * v for chi, v in self._terms.items()})

    __rmul__ = __mul__


    def __str__(self) -> str:
        shown = [f'{chi}: {_common.formatComplex(v)}' for chi, v in list(self._terms.items())[:4]]
        if len(self._terms) > 4:
            shown.append('...')
        return f'<spectrum {self.group} {{{", ".join(shown)}}}>'


    def __repr__(self) -> str:
        return f'{type(self).__name__}({self.group!r}, {self._terms!r})'


def delta(chi: Character, coefficient: complex = 1) -> Spectrum:
    """
    The spectrum of the single character chi (times coefficient).
    """
    return Spectrum(chi.group, {chi: coefficient})


def project(s: Spectrum, part: Part) -> Spectrum:
    """
    P+ or P-: keep the terms in the positive cone (identity included),
    or the ones outside it.
    """
    keepPlus = part is Part.PLUS
    return Spectrum(s.group, {chi: v for chi, v in s.items()
                              if isInPositiveCone(chi) == keepPlus})


def hilbert(s: Spectrum) -> Spectrum:
    """
    The Hilbert transform, as the Fourier multiplier -i sgn+(chi). The
    identity term disappears.
    """
    terms = {}
    for chi, v in s.items():
        sign = sgnPlus(chi)
        if sign > 0:
            terms[chi] = v * -1j
        elif sign < 0:
            terms[chi] = v * 1j
    return Spectrum(s.group, terms)


def pairing(a: Spectrum, b: Spectrum) -> complex:
    """
    The L^2 inner product <a, b> = sum a(chi) conj(b(chi)), by Parseval.
    """
    checkSameGroup(a.group, b.group)
    total = 0j
    for chi, v in a.items():
        if chi in b:
            total += v * b[chi].conjugate()
    return total


def l2Norm(s: Spectrum) -> float:
    return math.sqrt(sum(abs(v) ** 2 for v in s.terms.values()))


def l1Coeff(s: Spectrum) -> float:
    """
    Sum of the absolute values of the coefficients: an upper bound for
    the sup norm of the polynomial.
    """
    return sum(abs(v) for v in s.terms.values())


def isSupportedIn(s: Spectrum, E: Callable[[Character], bool]) -> SupportCheck:
    """
    Check whether every key of s satisfies the predicate E. On failure,
    the first key (in the group's order) outside E is the witness.
    """
    for chi in s:
        if not E(chi):
            return SupportCheck(False, chi)
    return SupportCheck(True)


def maxDeviation(a: Spectrum, b: Spectrum) -> float:
    """
    max |a(chi) - b(chi)| over the union of the supports.
    """
    checkSameGroup(a.group, b.group)
    keys = set(a) | set(b)
    return max((abs(a[chi] - b[chi]) for chi in keys), default=0.0)


def conjugateReflection(s: Spectrum) -> Spectrum:
    """
    The spectrum of the complex conjugate of the polynomial:
    chi -> conj(s(-chi)). Real polynomials are fixed by this.
    """
    return Spectrum(s.group, {negate(chi): v.conjugate() for chi, v in s.items()})
