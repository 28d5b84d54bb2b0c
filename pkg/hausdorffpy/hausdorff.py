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
Support for discrete Hausdorff operators acting on spectra.

A Hausdorff operator is stored by its dual-side maps: the term (w, B)
sends a spectrum s to chi -> w s(B chi). For the torus action
z -> z^M the dual-side map is B = (M^T)^-1, which is what
HausdorffOperator.fromSpatialMatrices() builds.
"""

from __future__ import annotations

import cmath
import enum
import os
from typing import Any, Iterable, NamedTuple, Sequence

from . import ConfigError, DimMismatchError, EmptySetError, \
    FamilyMismatchError, NotClosedError
from . import _common
from . import automorphism
from .automorphism import Automorphism, LowerUnitriangular, RationalScale, \
    SetSpec, SigmaU, UnimodularMatrix, VerdictKind
from .dualGroup import DualGroupDescriptor, GroupKind, checkSameGroup
from .spectrum import Spectrum
from .torusOracle import TorusPoint


# The modular function of every automorphism of a compact group is 1, so
# no term carries a (mod A)^(-1/p) factor.
MODULUS = 1


class Provenance(enum.Enum):
    """
    Whether a term's dual-side map was given directly, or derived from
    a spatial matrix.
    """
    DUAL_GIVEN = 'dual'
    FROM_SPATIAL = 'spatial_matrix'


class HausdorffTerm(NamedTuple):
    weight: complex
    map: Automorphism
    provenance: Provenance = Provenance.DUAL_GIVEN

    def spatialMatrix(self) -> UnimodularMatrix:
        """
        The spatial matrix M whose dual-side map is this term's map
        (only for matrix families).
        """
        return automorphism.transpose(automorphism.invert(self.map))

    def __str__(self) -> str:
        return f'{_common.formatComplex(self.weight)} * {self.map}'


def _spatialToDual(M: Automorphism | Iterable[Iterable[int]]) -> UnimodularMatrix:
    if not isinstance(M, Automorphism):
        M = UnimodularMatrix(M)
    return automorphism.invert(automorphism.transpose(M))


def _identityMap(group: DualGroupDescriptor) -> Automorphism:
    if group.kind is GroupKind.Z_LEX:
        return LowerUnitriangular(group.dim)
    elif group.kind is GroupKind.Z_INF_LEX:
        return SigmaU(())
    return RationalScale(1)


class HausdorffOperator:
    """
    A finite weighted sum of dual-side automorphisms acting on spectra
    of one dual group.
    """
    group: DualGroupDescriptor
    terms: list[HausdorffTerm]

    def __init__(self, group: DualGroupDescriptor, terms: Iterable[HausdorffTerm]):
        self.group = group
        self.terms = []
        for term in terms:
            if not isinstance(term, HausdorffTerm):
                term = HausdorffTerm(*term)
            term.map.checkCompatible(group)
            self.terms.append(HausdorffTerm(complex(term.weight), term.map, term.provenance))
        if not self.terms:
            raise EmptySetError('A Hausdorff operator needs at least one term'
                                ' (use HausdorffOperator.empty() for the zero operator)')


    @classmethod
    def empty(cls, group: DualGroupDescriptor) -> HausdorffOperator:
        """
        The zero operator, which has no terms.
        """
        obj = cls.__new__(cls)
        obj.group = group
        obj.terms = []
        return obj


    @classmethod
    def identity(cls, group: DualGroupDescriptor, weight: complex = 1) -> HausdorffOperator:
        return cls(group, [HausdorffTerm(weight, _identityMap(group))])


    @classmethod
    def fromDualMaps(cls, group: DualGroupDescriptor,
            terms: Iterable[tuple[complex, Automorphism]]) -> HausdorffOperator:
        return cls(group, [HausdorffTerm(w, B, Provenance.DUAL_GIVEN) for w, B in terms])


    @classmethod
    def fromSpatialMatrices(cls,
            terms: Iterable[tuple[complex, Automorphism | Iterable[Iterable[int]]]]) -> HausdorffOperator:
        """
        Build the operator f -> sum w f(z^M) from (weight, M) pairs. Each
        dual-side map is B = (M^T)^-1, since chi_n(z^M) = chi_(M^T n)(z).
        """
        converted = [HausdorffTerm(w, _spatialToDual(M), Provenance.FROM_SPATIAL)
                     for w, M in terms]
        if not converted:
            raise EmptySetError('fromSpatialMatrices() needs at least one term')
        return cls(converted[0].map.group, converted)


    @classmethod
    def fromJsonData(cls, d: Any, context: str = 'operator') -> HausdorffOperator:
        """
        Read an operator config:
        {"group": {...}, "terms": [{"re": x, "im": y, "automorphism": {...},
        "side": "dual" | "spatial_matrix"}, ...]}
        """
        group = DualGroupDescriptor.fromJsonData(_common.requireField(d, 'group', context),
                                                 f'{context}.group')
        records = _common.requireField(d, 'terms', context)
        if not isinstance(records, list):
            raise ConfigError(f'{context}.terms must be an array')
        if not records:
            return cls.empty(group)

        terms = []
        for i, record in enumerate(records):
            where = f'{context}.terms[{i}]'
            weight = _common.complexFromJson(record, where)
            A = Automorphism.fromJsonData(_common.requireField(record, 'automorphism', where),
                                          f'{where}.automorphism')
            side = record.get('side', Provenance.DUAL_GIVEN.value)
            try:
                provenance = Provenance(side)
            except ValueError:
                raise ConfigError(f'{where}.side must be "dual" or "spatial_matrix"'
                                  f' (found {side!r})')
            if provenance is Provenance.FROM_SPATIAL:
                if A.family not in (automorphism.Family.UNIMOD_MATRIX,
                                    automorphism.Family.LOWER_UNITRIANGULAR,
                                    automorphism.Family.COORDINATE_FLIP):
                    raise ConfigError(f'{where}: spatial-side terms need a matrix'
                                      f' family (found {A.family.value})')
                A = _spatialToDual(A)
            terms.append(HausdorffTerm(weight, A, provenance))
        return cls(group, terms)


    @classmethod
    def fromFile(cls, filePath: str | os.PathLike) -> HausdorffOperator:
        return cls.fromJsonData(_common.loadJsonFile(filePath), str(filePath))


    def toJsonData(self) -> dict:
        records = []
        for term in self.terms:
            if term.provenance is Provenance.FROM_SPATIAL:
                A = term.spatialMatrix()
            else:
                A = term.map
            records.append({**_common.complexToJson(term.weight),
                            'automorphism': A.toJsonData(),
                            'side': term.provenance.value})
        return {'group': self.group.toJsonData(), 'terms': records}


    def save(self) -> str:
        return _common.dumpJson(self.toJsonData())


    def saveToFile(self, filePath: str | os.PathLike) -> None:
        _common.saveTextToFile(self.save(), filePath)


    def isEmpty(self) -> bool:
        return not self.terms


    def __eq__(self, other):
        if not isinstance(other, HausdorffOperator): return NotImplemented
        return self.group == other.group and self.terms == other.terms


    def __str__(self) -> str:
        return f'<hausdorff-operator {self.group} ({len(self.terms)} terms)>'


    def __repr__(self) -> str:
        if not self.terms:
            return f'{type(self).__name__}.empty({self.group!r})'
        return f'{type(self).__name__}({self.group!r}, {self.terms!r})'


def apply(H: HausdorffOperator, s: Spectrum) -> Spectrum:
    """
    (H s)(chi) = sum over terms of w s(B chi), computed on the candidate
    support: the union of the preimages B^-1(supp s). Terms are summed
    in list order.
    """
    checkSameGroup(H.group, s.group)
    if H.isEmpty() or not s:
        return Spectrum(H.group)

    candidates = set()
    for term in H.terms:
        inverse = automorphism.invert(term.map)
        candidates.update(inverse.apply(chi) for chi in s)

    result = {}
    for chi in candidates:
        total = 0j
        for term in H.terms:
            total += term.weight * s[term.map.apply(chi)]
        result[chi] = total
    return Spectrum(H.group, result)


def phiL1(H: HausdorffOperator) -> float:
    """
    Sum of |w| over the terms: the L^1 norm of the kernel, which bounds
    the operator on every space considered here.
    """
    return sum(abs(term.weight) for term in H.terms)


def adjoint(H: HausdorffOperator) -> HausdorffOperator:
    """
    The adjoint with respect to pairing(): (w, B) -> (conj(w), B^-1).
    """
    if H.isEmpty():
        return HausdorffOperator.empty(H.group)
    return HausdorffOperator(H.group, [
        HausdorffTerm(term.weight.conjugate(), automorphism.invert(term.map), term.provenance)
        for term in H.terms])


def isOrderPreserving(H: HausdorffOperator) -> bool:
    """
    Whether every dual-side map of H provably maps the positive cone
    into itself.
    """
    return all(automorphism.preserves(term.map, SetSpec.lexCone()).kind
               is VerdictKind.ANALYTIC_TRUE for term in H.terms)


def checkClosedUnderInverse(family: Sequence[Automorphism]) -> None:
    for A in family:
        inverse = automorphism.invert(A)
        if not any(automorphism.actsLike(inverse, B) for B in family):
            raise NotClosedError(f'The inverse of {A} is not in the family')


def modulate(s: Spectrum, h: TorusPoint) -> Spectrum:
    """
    The spectrum of x -> f(x + h): the coefficient at n picks up a
    factor exp(2 pi i n.h).
    """
    if s.group.kind is not GroupKind.Z_LEX:
        raise FamilyMismatchError(f'Translations act on spectra of Z^d, not {s.group}')
    if h.dim != s.group.dim:
        raise DimMismatchError(f'{h} has dimension {h.dim}; the spectrum has {s.group.dim}')
    terms = {}
    for chi, v in s.items():
        phase = sum(n * a for n, a in zip(chi.payload, h.angles))
        terms[chi] = v * cmath.exp(2j * cmath.pi * phase)
    return Spectrum(s.group, terms)


def delsarteShift(family: Sequence[Automorphism], h: TorusPoint, s: Spectrum) -> Spectrum:
    """
    Delsarte's generalized shift T^h f(x) = mean over A in family of
    f(h + A x), for a finite family of spatial matrix automorphisms of
    the torus that's closed under inversion.
    """
    if not family:
        raise EmptySetError('delsarteShift() needs a nonempty family')
    for A in family:
        checkSameGroup(s.group, A.group)
    checkClosedUnderInverse(family)

    weight = 1 / len(family)
    H = HausdorffOperator.fromSpatialMatrices([(weight, A) for A in family])
    return apply(H, modulate(s, h))
