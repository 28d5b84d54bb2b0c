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
Spatial-side engine on the d-dimensional torus: grid synthesis and
analysis, quadrature norms, and spatial Hausdorff operators. Every
Fourier-side computation in hausdorffpy can be cross-checked here.

Grids carry the normalized Haar measure: each of the N^d nodes has
mass N^-d.
"""

from __future__ import annotations

import cmath
import dataclasses
import logging
import math
from typing import Iterable, Sequence

import numpy as np

from . import AliasingError, DimMismatchError, GroupMismatchError, \
    InvalidPError, NotAnalyticError, NotRealError, ValidationError
from .automorphism import Automorphism, UnimodularMatrix
from .dualGroup import Character, DualGroupDescriptor, GroupKind, isInPositiveCone
from .spectrum import Part, Spectrum, conjugateReflection, isSupportedIn, \
    maxDeviation, pairing, project


_logger = logging.getLogger(__name__)


DEFAULT_GRID_SIZE = 64
DEFAULT_L1_GRID_SIZE = 4096
REALNESS_TOLERANCE = 1e-12
DEFAULT_BMOA_TRIALS = 32

# analyze() drops coefficients below this fraction of the largest one
ANALYZE_CUTOFF = 1e-13


@dataclasses.dataclass(frozen=True, repr=False)
class TorusPoint:
    """
    A point of the torus, as angles in [0, 1) (fractions of a turn).
    """
    angles: tuple[float, ...]

    def __post_init__(self):
        angles = tuple(float(a) for a in self.angles)
        for a in angles:
            if not 0 <= a < 1:
                raise ValidationError(f'Torus angles must lie in [0, 1) (found {a})')
        object.__setattr__(self, 'angles', angles)

    @property
    def dim(self) -> int:
        return len(self.angles)

    def __str__(self) -> str:
        return f'<torus-point ({", ".join(f"{a:g}" for a in self.angles)})>'

    def __repr__(self) -> str:
        return f'{type(self).__name__}({self.angles!r})'


def _checkGridSize(N: int) -> None:
    if N < 2 or N & (N - 1):
        raise ValidationError(f'Grid size must be a power of two >= 2 (found {N})')


class GridFunction:
    """
    Complex samples of a function on the uniform grid (Z/N)^d.
    """
    values: np.ndarray

    def __init__(self, values: np.ndarray):
        values = np.asarray(values, dtype=complex)
        if values.ndim < 1 or len(set(values.shape)) != 1:
            raise ValidationError(f'Grid values must be an N x ... x N array'
                                  f' (found shape {values.shape})')
        _checkGridSize(values.shape[0])
        self.values = values

    @property
    def dim(self) -> int:
        return self.values.ndim

    @property
    def N(self) -> int:
        return self.values.shape[0]

    def __str__(self) -> str:
        return f'<grid-function d={self.dim} N={self.N}>'

    def __repr__(self) -> str:
        return f'{type(self).__name__}(<{self.N}^{self.dim} array>)'


def _checkTorusSpectrum(s: Spectrum) -> int:
    if s.group.kind is not GroupKind.Z_LEX:
        raise GroupMismatchError(f'Only spectra on Z^d live on a torus (found {s.group})')
    return s.group.dim


def synthesize(s: Spectrum, N: int = DEFAULT_GRID_SIZE) -> GridFunction:
    """
    Sample the trigonometric polynomial with spectrum s on the grid:
    values(k) = sum s(n) exp(2 pi i n.k / N).
    """
    d = _checkTorusSpectrum(s)
    _checkGridSize(N)

    C = np.zeros((N,) * d, dtype=complex)
    for chi, v in s.items():
        if chi.maxAbsEntry() >= N / 2:
            raise AliasingError(f'Frequency {chi} aliases on a grid of size {N}'
                                f' (needs |n_i| < {N // 2})')
        C[tuple(n % N for n in chi.payload)] += v
    return GridFunction(np.fft.ifftn(C) * N ** d)


def analyze(g: GridFunction, cutoff: float = ANALYZE_CUTOFF) -> Spectrum:
    """
    Fourier coefficients of a grid function on the centered box
    (-N/2, N/2)^d. Coefficients below cutoff times the largest one are
    treated as rounding noise and dropped (pass cutoff=0 to keep them).
    """
    N, d = g.N, g.dim
    C = np.fft.fftn(g.values) / N ** d
    magnitudes = np.abs(C)
    largest = magnitudes.max()
    group = DualGroupDescriptor.zLex(d)
    if largest == 0:
        return Spectrum(group)

    mask = magnitudes > cutoff * largest
    terms = {}
    for index in np.argwhere(mask):
        index = tuple(int(j) for j in index)
        if N // 2 in index:
            continue
        n = tuple(j if j < N // 2 else j - N for j in index)
        terms[Character(group, n)] = complex(C[index])
    return Spectrum(group, terms)


def lpNorm(g: GridFunction, p: float) -> float:
    """
    (N^-d sum |g|^p)^(1/p), or max |g| for p = inf.
    """
    if math.isnan(p) or p < 1:
        raise InvalidPError(f'L^p norms need p >= 1 (found {p})')
    magnitudes = np.abs(g.values)
    if math.isinf(p):
        return float(magnitudes.max())
    return float(np.mean(magnitudes ** p) ** (1 / p))


def _matrixOf(M: Automorphism | Iterable[Iterable[int]]) -> np.ndarray:
    if not isinstance(M, Automorphism):
        M = UnimodularMatrix(M)
    return np.array(M.toMatrix(), dtype=np.int64)


def spatialHausdorff(terms: Sequence[tuple[complex, Automorphism | Iterable[Iterable[int]]]],
        g: GridFunction) -> GridFunction:
    """
    result(k) = sum w g(M k mod N). Integer matrices map the grid onto
    itself, so this is exact.
    """
    N, d = g.N, g.dim
    nodes = np.indices((N,) * d).reshape(d, -1)
    result = np.zeros(N ** d, dtype=complex)
    for weight, M in terms:
        M = _matrixOf(M)
        if M.shape != (d, d):
            raise DimMismatchError(f'A {M.shape[0]}x{M.shape[1]} matrix cannot act on'
                                   f' a {d}-dimensional grid')
        images = (M @ nodes) % N
        result += weight * g.values[tuple(images)]
    return GridFunction(result.reshape((N,) * d))


def evaluate(s: Spectrum, point: TorusPoint) -> complex:
    """
    The value of the trigonometric polynomial at one point of the torus.
    """
    d = _checkTorusSpectrum(s)
    if point.dim != d:
        raise DimMismatchError(f'{point} has dimension {point.dim}; the spectrum has {d}')
    total = 0j
    for chi, v in s.items():
        phase = sum(n * a for n, a in zip(chi.payload, point.angles))
        total += v * cmath.exp(2j * cmath.pi * phase)
    return total


def checkReal(s: Spectrum, tolerance: float = REALNESS_TOLERANCE) -> None:
    """
    Raise NotRealError unless s(-chi) = conj(s(chi)) up to tolerance
    (relative to the largest coefficient, or absolute below 1).
    """
    scale = max([1.0, *(abs(v) for v in s.terms.values())])
    deviation = maxDeviation(s, conjugateReflection(s))
    if deviation > tolerance * scale:
        raise NotRealError(f'Spectrum is not conjugate-symmetric'
                           f' (deviation {deviation:.3g})')


def h1rNorm(s: Spectrum, N: int | None = None,
        tolerance: float = REALNESS_TOLERANCE) -> float:
    """
    The real Hardy space norm ||P- q||_1 + ||P+ q||_1 of a real
    trigonometric polynomial, by quadrature on the grid.

    N defaults to DEFAULT_L1_GRID_SIZE on the circle and to
    DEFAULT_GRID_SIZE in higher dimensions.
    """
    d = _checkTorusSpectrum(s)
    checkReal(s, tolerance)
    if N is None:
        N = DEFAULT_L1_GRID_SIZE if d == 1 else DEFAULT_GRID_SIZE
    if N < DEFAULT_L1_GRID_SIZE and d == 1:
        _logger.warning('L^1 quadrature on a %d-point grid; the H^1_R norm is'
                        ' approximate', N)
    return (lpNorm(synthesize(project(s, Part.MINUS), N), 1)
            + lpNorm(synthesize(project(s, Part.PLUS), N), 1))


def bmoUpper(f: Spectrum, g: Spectrum, N: int = DEFAULT_GRID_SIZE) -> float:
    """
    ||f||_inf + ||g||_inf on the grid: the certificate value of the
    decomposition f + (Hilbert transform of g).

    Grid sups underestimate true sups, so this is the certificate as
    computed on grid N rather than a guaranteed upper bound.
    """
    return lpNorm(synthesize(f, N), math.inf) + lpNorm(synthesize(g, N), math.inf)


def _h1Style(f: Spectrum, N: int) -> float:
    return (lpNorm(synthesize(project(f, Part.MINUS), N), 1)
            + lpNorm(synthesize(project(f, Part.PLUS), N), 1))


def bmoaLower(phi: Spectrum, N: int = DEFAULT_GRID_SIZE,
        trials: int = DEFAULT_BMOA_TRIALS, seed: int = 0) -> float:
    """
    A lower estimate of the dual norm of an analytic phi: the largest
    |<f, phi>| / (||P- f||_1 + ||P+ f||_1) over the single characters of
    supp(phi) and over `trials` seeded random test polynomials supported
    there. Adding trials never lowers the result.
    """
    check = isSupportedIn(phi, isInPositiveCone)
    if not check:
        raise NotAnalyticError(f'bmoaLower() needs a spectrum in the positive cone'
                               f' ({check.witness} is outside it)')
    if not phi:
        return 0.0

    support = phi.support()
    best = 0.0
    for chi in support:
        f = Spectrum(phi.group, {chi: 1})
        best = max(best, abs(pairing(f, phi)) / _h1Style(f, N))

    rng = np.random.default_rng(seed)
    for _ in range(trials):
        size = int(rng.integers(1, len(support) + 1))
        chosen = rng.choice(len(support), size=size, replace=False)
        coeffs = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        f = Spectrum(phi.group, {support[int(i)]: complex(c) for i, c in zip(chosen, coeffs)})
        norm = _h1Style(f, N)
        if norm > 0:
            best = max(best, abs(pairing(f, phi)) / norm)

    _logger.debug('bmoaLower: %d candidates + %d trials -> %g', len(support), trials, best)
    return best
