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
Support for ordinary Dirichlet polynomials D(s) = sum a(n) n^-s, their
Bohr lift to spectra on Z^inf, and the Hausdorff operators that act on
them.

The lift sends n = p_1^alpha_1 ... p_k^alpha_k (p_j the j-th prime) to
the exponent sequence alpha.
"""

from __future__ import annotations

import cmath
import functools
import math
import os
import types
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from . import ConfigError, OutOfRangeError, ValidationError
from . import _common
from .automorphism import SigmaU
from .dualGroup import Character, DualGroupDescriptor, \
    checkSameGroup, isInOrthant
from .hausdorff import HausdorffOperator, HausdorffTerm
from .spectrum import Spectrum


N_MAX = 10**6
DEFAULT_T_SAMPLES = 10**5
DEFAULT_T_RANGE = 1e3

_T_CHUNK = 4096


@functools.lru_cache(maxsize=None)
def _primes(limit: int) -> np.ndarray:
    """
    All primes <= limit, by the sieve of Eratosthenes. Cached per limit.
    """
    isPrime = np.ones(limit + 1, dtype=bool)
    isPrime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if isPrime[p]:
            isPrime[p * p::p] = False
    return np.flatnonzero(isPrime)


def _checkRange(n: int, nMax: int) -> None:
    if n < 1:
        raise ValidationError(f'Dirichlet indices start at 1 (found {n})')
    if n > nMax:
        raise OutOfRangeError(f'{n} is larger than n_max = {nMax}')


def isPrime(n: int, nMax: int = N_MAX) -> bool:
    _checkRange(n, nMax)
    primes = _primes(nMax)
    i = int(np.searchsorted(primes, n))
    return i < len(primes) and primes[i] == n


def factorize(n: int, nMax: int = N_MAX) -> Character:
    """
    The exponent sequence of n's prime factorization, as a character of
    Z^inf whose index j refers to the j-th prime.
    """
    _checkRange(n, nMax)
    primes = _primes(nMax)
    exponents = {}
    remaining = n
    for j, p in enumerate(primes, 1):
        p = int(p)
        if p * p > remaining:
            break
        while remaining % p == 0:
            remaining //= p
            exponents[j] = exponents.get(j, 0) + 1
    if remaining > 1:
        j = int(np.searchsorted(primes, remaining)) + 1
        exponents[j] = exponents.get(j, 0) + 1
    return Character(DualGroupDescriptor.zInfLex(), exponents)


def fromMultiIndex(alpha: Character, nMax: int = N_MAX) -> int:
    """
    The inverse of factorize(): the product of p_j^alpha_j.
    """
    checkSameGroup(alpha.group, DualGroupDescriptor.zInfLex())
    if not isInOrthant(alpha):
        raise ValidationError(f'{alpha} has a negative exponent')
    primes = _primes(nMax)
    n = 1
    for j, exponent in alpha.entries():
        if j > len(primes):
            raise OutOfRangeError(f'p^{alpha} is larger than n_max = {nMax}')
        n *= int(primes[j - 1]) ** exponent
        if n > nMax:
            raise OutOfRangeError(f'p^{alpha} is larger than n_max = {nMax}')
    return n


def integerRoot(n: int, q: int) -> int | None:
    """
    The integer r with r^q = n, or None if n isn't an exact q-th power.
    """
    if q == 1 or n in (0, 1):
        return n
    guess = round(n ** (1 / q))
    for r in (guess - 1, guess, guess + 1):
        if r >= 0 and r ** q == n:
            return r
    return None


class DirichletPolynomial:
    """
    A finite ordinary Dirichlet polynomial, stored as its coefficients
    {n: a(n)} with 1 <= n <= nMax.
    """
    nMax: int

    def __init__(self, coeffs: Mapping[int, complex] | Iterable[tuple[int, complex]] = (),
            nMax: int = N_MAX):
        self.nMax = nMax
        if isinstance(coeffs, Mapping):
            coeffs = coeffs.items()
        collected = {}
        for n, a in coeffs:
            n = int(n)
            _checkRange(n, nMax)
            collected[n] = collected.get(n, 0j) + complex(a)
        self._coeffs = {n: collected[n] for n in sorted(collected) if collected[n] != 0}


    @classmethod
    def fromJsonData(cls, d: Any, context: str = 'coefficients',
            nMax: int = N_MAX) -> DirichletPolynomial:
        """
        Read a coefficient list: [{"n": 2, "re": 1.0, "im": 0.0}, ...]
        """
        if not isinstance(d, list):
            raise ConfigError(f'{context} must be an array of {{n, re, im}} records')
        coeffs = {}
        for i, record in enumerate(d):
            where = f'{context}[{i}]'
            n = _common.requireInt(_common.requireField(record, 'n', where), f'{where}.n')
            if n in coeffs:
                raise ConfigError(f'{where}: n = {n} appears more than once')
            if n < 1:
                raise ConfigError(f'{where}.n must be positive (found {n})')
            coeffs[n] = _common.complexFromJson(record, where)
        return cls(coeffs, nMax)


    @classmethod
    def fromFile(cls, filePath: str | os.PathLike, nMax: int = N_MAX) -> DirichletPolynomial:
        return cls.fromJsonData(_common.loadJsonFile(filePath), str(filePath), nMax)


    def toJsonData(self) -> list:
        return [{'n': n, **_common.complexToJson(a)} for n, a in self._coeffs.items()]


    def save(self) -> str:
        return _common.dumpJson(self.toJsonData())


    def saveToFile(self, filePath: str | os.PathLike) -> None:
        _common.saveTextToFile(self.save(), filePath)


    @property
    def coeffs(self) -> Mapping[int, complex]:
        return types.MappingProxyType(self._coeffs)


    def items(self) -> Iterable[tuple[int, complex]]:
        return self._coeffs.items()


    def __getitem__(self, n: int) -> complex:
        return self._coeffs.get(n, 0j)


    def __len__(self) -> int:
        return len(self._coeffs)


    def __eq__(self, other):
        if not isinstance(other, DirichletPolynomial): return NotImplemented
        return self._coeffs == other._coeffs


    def __str__(self) -> str:
        shown = [f'{_common.formatComplex(a)}/{n}^s' for n, a in list(self._coeffs.items())[:4]]
        if len(self._coeffs) > 4:
            shown.append('...')
        return f'<dirichlet-polynomial {" + ".join(shown) or "0"}>'


    def __repr__(self) -> str:
        if self.nMax != N_MAX:
            return f'{type(self).__name__}({self._coeffs!r}, nMax={self.nMax})'
        return f'{type(self).__name__}({self._coeffs!r})'


def bohrLift(D: DirichletPolynomial) -> Spectrum:
    """
    The spectrum alpha -> a(p^alpha) on Z^inf.
    """
    return Spectrum(DualGroupDescriptor.zInfLex(),
                    {factorize(n, D.nMax): a for n, a in D.items()})


def bohrUnlift(s: Spectrum, nMax: int = N_MAX) -> DirichletPolynomial:
    """
    The inverse of bohrLift(). The spectrum must be supported in the
    nonnegative orthant.
    """
    checkSameGroup(s.group, DualGroupDescriptor.zInfLex())
    return DirichletPolynomial({fromMultiIndex(alpha, nMax): v for alpha, v in s.items()}, nMax)


def _sigmaTerms(weights: Mapping[Sequence[int] | SigmaU, complex]) -> list[tuple[complex, SigmaU]]:
    terms = []
    for u, w in weights.items():
        if not isinstance(u, SigmaU):
            u = SigmaU(u)
        terms.append((complex(w), u))
    return terms


def sigmaHausdorffOperator(weights: Mapping[Sequence[int] | SigmaU, complex]) -> HausdorffOperator:
    """
    The operator on Z^inf spectra with terms (Phi(u), sigma_u), in the
    order of weights.
    """
    group = DualGroupDescriptor.zInfLex()
    terms = _sigmaTerms(weights)
    if not terms:
        return HausdorffOperator.empty(group)
    return HausdorffOperator(group, [HausdorffTerm(w, sigma) for w, sigma in terms])


def sigmaOperator(weights: Mapping[Sequence[int] | SigmaU, complex], D: DirichletPolynomial) -> DirichletPolynomial:
    """
    b(p^alpha) = sum over u with sigma_u(alpha) >= 0 of
    Phi(u) a(p^sigma_u(alpha)).

    The output support is found by running the sigma_u^-1 recurrence on
    the exponents of supp(a); weights are summed in the order given.
    """
    terms = _sigmaTerms(weights)
    lifted = {factorize(n, D.nMax): a for n, a in D.items()}

    candidates = set()
    for _, sigma in terms:
        inverse = sigma.invert()
        candidates.update(inverse.apply(alpha) for alpha in lifted)

    result = {}
    for alpha in candidates:
        total = 0j
        for w, sigma in terms:
            image = sigma.apply(alpha)
            value = lifted.get(image, 0j) if isInOrthant(image) else 0j
            total += w * value
        if total != 0:
            result[fromMultiIndex(alpha, D.nMax)] = total
    return DirichletPolynomial(result, D.nMax)


def rootRescaleOperator(weights: Mapping[int, complex], D: DirichletPolynomial) -> DirichletPolynomial:
    """
    b(n) = sum over q such that n is an exact q-th power of
    Phi(1/q) a(n^(1/q)): the rescaling gamma -> gamma / q of the
    frequencies log n.
    """
    terms = []
    for q, w in weights.items():
        if isinstance(q, bool) or not isinstance(q, int) or q < 1:
            raise ValidationError(f'Root-rescaling exponents must be positive integers'
                                  f' (found {q!r})')
        terms.append((q, complex(w)))

    candidates = set()
    for q, _ in terms:
        for m, _ in D.items():
            n = m ** q
            if n > D.nMax:
                raise OutOfRangeError(f'{m}^{q} = {n} is larger than n_max = {D.nMax}')
            candidates.add(n)

    result = {}
    for n in candidates:
        total = 0j
        for q, w in terms:
            root = integerRoot(n, q)
            if root is not None:
                total += w * D[root]
        result[n] = total
    return DirichletPolynomial(result, D.nMax)


def evaluate(D: DirichletPolynomial, s: complex) -> complex:
    """
    sum a(n) n^-s.
    """
    total = 0j
    for n, a in D.items():
        total += a * cmath.exp(-s * math.log(n))
    return total


def l1Coeff(D: DirichletPolynomial) -> float:
    return sum(abs(a) for _, a in D.items())


def supEstimate(D: DirichletPolynomial, tSamples: int = DEFAULT_T_SAMPLES,
        tRange: float = DEFAULT_T_RANGE) -> float:
    """
    max |D(it)| over tSamples equally spaced t in [-tRange, tRange]. By
    almost periodicity this approaches the sup norm on Re s > 0 from
    below, and it never exceeds the l^1 norm of the coefficients.
    """
    if tSamples < 1:
        raise ValidationError(f'supEstimate() needs at least one sample (found {tSamples})')
    if not len(D):
        return 0.0

    logs = np.log(np.array([n for n, _ in D.items()], dtype=float))
    coeffs = np.array([a for _, a in D.items()], dtype=complex)
    t = np.linspace(-tRange, tRange, tSamples)

    best = 0.0
    for start in range(0, tSamples, _T_CHUNK):
        chunk = t[start:start + _T_CHUNK]
        values = np.exp(-1j * np.outer(chunk, logs)) @ coeffs
        best = max(best, float(np.abs(values).max()))

    # |exp(it)| can round to slightly above 1
    return min(best, l1Coeff(D))


def supBounds(D: DirichletPolynomial, tSamples: int = DEFAULT_T_SAMPLES,
        tRange: float = DEFAULT_T_RANGE) -> tuple[float, float]:
    """
    (lower, upper) bounds for the sup norm of D on the right half-plane.
    """
    return supEstimate(D, tSamples, tRange), l1Coeff(D)


def bohrPrimeSum(D: DirichletPolynomial) -> float:
    """
    sum of |a(p)| over the primes p: the Bohr-type sum over exponent
    sequences with a single 1.
    """
    return sum(abs(a) for n, a in D.items() if isPrime(n, D.nMax))


def sigmaWeightsFromJsonData(d: Any, context: str = 'config') -> dict[tuple[int, ...], complex]:
    """
    Read a sigma operator config: {"terms": [{"u": [1, 0], "re": 1.0}, ...]}
    """
    records = _common.requireField(d, 'terms', context)
    if not isinstance(records, list):
        raise ConfigError(f'{context}.terms must be an array')
    weights = {}
    for i, record in enumerate(records):
        where = f'{context}.terms[{i}]'
        u = _common.requireField(record, 'u', where)
        if not isinstance(u, list):
            raise ConfigError(f'{where}.u must be an array of integers')
        u = [_common.requireInt(x, f'{where}.u') for x in u]
        if any(x < 0 for x in u):
            raise ConfigError(f'{where}.u must be nonnegative (found {u})')
        key = SigmaU(u).u
        if key in weights:
            raise ConfigError(f'{where}: u = {list(key)} appears more than once')
        weights[key] = _common.complexFromJson(record, where)
    return weights


def rootScaleWeightsFromJsonData(d: Any, context: str = 'config') -> dict[int, complex]:
    """
    Read a root-rescaling config: {"terms": [{"q": 2, "re": 0.5}, ...]}
    """
    records = _common.requireField(d, 'terms', context)
    if not isinstance(records, list):
        raise ConfigError(f'{context}.terms must be an array')
    weights = {}
    for i, record in enumerate(records):
        where = f'{context}.terms[{i}]'
        q = _common.requireInt(_common.requireField(record, 'q', where), f'{where}.q')
        if q < 1:
            raise ConfigError(f'{where}.q must be a positive integer (found {q})')
        if q in weights:
            raise ConfigError(f'{where}: q = {q} appears more than once')
        weights[q] = _common.complexFromJson(record, where)
    return weights


def weightsToJsonData(weights: Mapping[Any, complex], key: str) -> dict:
    """
    The inverse of sigmaWeightsFromJsonData() (key='u') and
    rootScaleWeightsFromJsonData() (key='q').
    """
    records = []
    for k, w in weights.items():
        if isinstance(k, SigmaU):
            k = k.u
        records.append({key: list(k) if key == 'u' else k, **_common.complexToJson(w)})
    return {'terms': records}
