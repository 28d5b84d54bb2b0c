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
Seeded random instances: characters, spectra, automorphisms, operators
and Dirichlet polynomials. Every function takes a numpy Generator, so
the same seed always produces the same instance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

import numpy as np

from .automorphism import Automorphism, CoordinateFlip, LowerUnitriangular, \
    RationalScale, SigmaU, TwoDiagonal, UnimodularMatrix
from .dirichlet import DirichletPolynomial
from .dualGroup import Character, DualGroupDescriptor, GroupKind, negate, sgnPlus
from .hausdorff import HausdorffOperator
from .spectrum import Spectrum
from .torusOracle import TorusPoint


def _int(rng: np.random.Generator, low: int, high: int) -> int:
    # inclusive on both ends
    return int(rng.integers(low, high + 1))


def randomGroup(rng: np.random.Generator, dims: tuple[int, ...] = (1, 2, 3),
        kinds: tuple[GroupKind, ...] = tuple(GroupKind)) -> DualGroupDescriptor:
    kind = kinds[_int(rng, 0, len(kinds) - 1)]
    if kind is GroupKind.Z_LEX:
        return DualGroupDescriptor.zLex(dims[_int(rng, 0, len(dims) - 1)])
    return DualGroupDescriptor(kind)


def randomCharacter(rng: np.random.Generator, group: DualGroupDescriptor,
        radius: int = 8, length: int = 4) -> Character:
    """
    A character from the centered box of the given radius. Z^inf
    characters use the first `length` coordinates; rationals have
    |numerator| and denominator at most radius.
    """
    if group.kind is GroupKind.Z_LEX:
        return Character(group, tuple(int(x) for x in rng.integers(-radius, radius + 1, group.dim)))
    elif group.kind is GroupKind.Z_INF_LEX:
        values = rng.integers(-radius, radius + 1, length)
        return Character(group, {i + 1: int(v) for i, v in enumerate(values)})
    return Character(group, (_int(rng, -radius, radius), _int(rng, 1, radius)))


def _coefficients(rng: np.random.Generator, count: int) -> np.ndarray:
    return rng.standard_normal(count) + 1j * rng.standard_normal(count)


def randomSpectrum(rng: np.random.Generator, group: DualGroupDescriptor,
        maxTerms: int = 20, radius: int = 8, length: int = 4,
        draw: Callable[[Character], Character] = lambda chi: chi) -> Spectrum:
    """
    Between 1 and maxTerms keys drawn from the centered box, with
    complex Gaussian coefficients. draw post-processes each key.
    """
    count = _int(rng, 1, maxTerms)
    keys = [draw(randomCharacter(rng, group, radius, length)) for _ in range(count)]
    coeffs = _coefficients(rng, count)
    terms = {}
    for chi, c in zip(keys, coeffs):
        terms[chi] = complex(c)
    return Spectrum(group, terms)


def _intoCone(chi: Character) -> Character:
    return negate(chi) if sgnPlus(chi) < 0 else chi


def randomAnalyticSpectrum(rng: np.random.Generator, group: DualGroupDescriptor,
        maxTerms: int = 20, radius: int = 8, length: int = 4) -> Spectrum:
    """
    Like randomSpectrum(), but supported in the positive cone.
    """
    return randomSpectrum(rng, group, maxTerms, radius, length, _intoCone)


def randomOrthantSpectrum(rng: np.random.Generator, maxTerms: int = 8,
        length: int = 4, radius: int = 3) -> Spectrum:
    """
    A Z^inf spectrum supported in the nonnegative orthant.
    """
    group = DualGroupDescriptor.zInfLex()
    count = _int(rng, 1, maxTerms)
    terms = {}
    for c in _coefficients(rng, count):
        values = rng.integers(0, radius + 1, length)
        terms[Character(group, {i + 1: int(v) for i, v in enumerate(values)})] = complex(c)
    return Spectrum(group, terms)


def randomRealPolynomial(rng: np.random.Generator, dim: int = 1,
        degree: int = 32, maxTerms: int = 10) -> Spectrum:
    """
    A conjugate-symmetric spectrum (the coefficients of a real
    trigonometric polynomial) with frequencies |n_i| <= degree.
    """
    group = DualGroupDescriptor.zLex(dim)
    pairs = []
    for c in _coefficients(rng, _int(rng, 1, maxTerms)):
        chi = randomCharacter(rng, group, degree)
        pairs.append((chi, complex(c)))
        pairs.append((negate(chi), complex(c).conjugate()))
    return Spectrum(group, pairs)


def randomWeights(rng: np.random.Generator, count: int, kind: str = 'complex') -> list[complex]:
    """
    kind is 'complex', 'real' or 'nonnegative'.
    """
    if kind == 'complex':
        return [complex(w) for w in _coefficients(rng, count)]
    elif kind == 'real':
        return [complex(w) for w in rng.standard_normal(count)]
    elif kind == 'nonnegative':
        return [complex(w) for w in rng.random(count)]
    raise ValueError(f'Unknown weight kind: {kind!r}')


def randomLowerUnitriangular(rng: np.random.Generator, dim: int,
        entryRadius: int = 1) -> LowerUnitriangular:
    entries = {(i, j): _int(rng, -entryRadius, entryRadius)
               for i in range(1, dim + 1) for j in range(1, i)}
    return LowerUnitriangular(dim, entries)


def randomSignedPermutation(rng: np.random.Generator, dim: int) -> UnimodularMatrix:
    perm = rng.permutation(dim)
    signs = rng.choice([-1, 1], dim)
    return UnimodularMatrix([[int(signs[i]) if j == perm[i] else 0 for j in range(dim)]
                             for i in range(dim)])


def randomUnimodular(rng: np.random.Generator, dim: int) -> UnimodularMatrix:
    """
    A unitriangular matrix with entries in {-1, 0, 1} times a signed
    permutation.
    """
    L = randomLowerUnitriangular(rng, dim).toMatrix()
    P = randomSignedPermutation(rng, dim).toMatrix()
    product = [[sum(L[i][k] * P[k][j] for k in range(dim)) for j in range(dim)]
               for i in range(dim)]
    return UnimodularMatrix(product)


def randomConePreservingMap(rng: np.random.Generator, group: DualGroupDescriptor) -> Automorphism:
    """
    An automorphism that provably maps the positive cone into itself.
    """
    if group.kind is GroupKind.Z_LEX:
        return randomLowerUnitriangular(rng, group.dim)
    elif group.kind is GroupKind.Z_INF_LEX:
        if rng.random() < 0.5:
            return SigmaU([_int(rng, 0, 2) for _ in range(3)], bool(rng.random() < 0.5))
        entries = {k: _int(rng, -2, 2) for k in range(2, 5)}
        return TwoDiagonal(entries, bool(rng.random() < 0.5))
    return RationalScale(Fraction(_int(rng, 1, 4), _int(rng, 1, 4)))


def randomDualMap(rng: np.random.Generator, group: DualGroupDescriptor) -> Automorphism:
    """
    Any automorphism compatible with the group, cone-preserving or not.
    """
    if group.kind is GroupKind.Z_LEX:
        choice = _int(rng, 0, 2)
        if choice == 0:
            return randomUnimodular(rng, group.dim)
        elif choice == 1:
            return CoordinateFlip(int(s) for s in rng.choice([-1, 1], group.dim))
    return randomConePreservingMap(rng, group)


def randomOperator(rng: np.random.Generator, group: DualGroupDescriptor,
        maxTerms: int = 5, weights: str = 'complex',
        conePreserving: bool = False) -> HausdorffOperator:
    count = _int(rng, 1, maxTerms)
    pick = randomConePreservingMap if conePreserving else randomDualMap
    maps = [pick(rng, group) for _ in range(count)]
    return HausdorffOperator.fromDualMaps(group, zip(randomWeights(rng, count, weights), maps))


def randomSpatialTerms(rng: np.random.Generator, dim: int, maxTerms: int = 5,
        weights: str = 'complex') -> list[tuple[complex, UnimodularMatrix]]:
    """
    (weight, M) pairs for spatial Hausdorff operators on the torus.
    """
    count = _int(rng, 1, maxTerms)
    return list(zip(randomWeights(rng, count, weights),
                    (randomUnimodular(rng, dim) for _ in range(count))))


def randomSigmaWeights(rng: np.random.Generator, maxTerms: int = 3,
        length: int = 3, maxEntry: int = 2, weights: str = 'complex') -> dict[tuple[int, ...], complex]:
    """
    Weights {u: Phi(u)} for dirichlet.sigmaOperator().
    """
    result = {}
    count = _int(rng, 1, maxTerms)
    for w in randomWeights(rng, count, weights):
        u = SigmaU(int(x) for x in rng.integers(0, maxEntry + 1, length)).u
        result[u] = w
    return result


def randomDirichlet(rng: np.random.Generator, maxTerms: int = 8, maxKey: int = 10**4,
        accept: Callable[[int], bool] = lambda n: True, attempts: int = 1000) -> DirichletPolynomial:
    """
    A Dirichlet polynomial with keys in [1, maxKey]. Keys failing
    accept() are redrawn (up to `attempts` draws in total).
    """
    count = _int(rng, 1, maxTerms)
    keys = []
    for _ in range(attempts):
        if len(keys) == count:
            break
        n = _int(rng, 1, maxKey)
        if accept(n):
            keys.append(n)
    return DirichletPolynomial(zip(keys, _coefficients(rng, len(keys))))


def randomTorusPoint(rng: np.random.Generator, dim: int) -> TorusPoint:
    return TorusPoint(tuple(float(a) for a in rng.random(dim)))
