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
The verification suites run by ``hausdorffpy verify``: seeded property
and oracle checks of the identities and norm inequalities satisfied by
Hausdorff operators.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
import math
import os
import time
import zlib
from typing import Any, Callable

import numpy as np

from . import ConfigError, OutOfRangeError, ValidationError
from . import _common
from . import automorphism
from . import dirichlet
from . import hausdorff
from . import randomInstances as rand
from . import torusOracle
from .automorphism import CoordinateFlip, LowerUnitriangular, SetSpec, \
    UnimodularMatrix, VerdictKind
from .dualGroup import Character, DualGroupDescriptor, identity, \
    isInOrthant, isInPositiveCone, lacunarityConstant
from .hausdorff import HausdorffOperator
from .spectrum import Part, Spectrum, delta, hilbert, isSupportedIn, l1Coeff, \
    l2Norm, maxDeviation, pairing, project
from .torusOracle import TorusPoint


_logger = logging.getLogger(__name__)


TOLERANCES = {
    'fourier-commuting': 1e-9,
    'hilbert-commuting': 1e-12,
    'riesz-projection-commuting': 1e-12,
    'hardy-invariance': 0.0,
    'l2-bound': 1e-12,
    'riesz-inequality': 1e-12,
    'order-automorphism-closure': 0.0,
    'constant-eigenvalue': 1e-12,
    'real-hardy-bound': 1e-3,
    'bmo-certificate-transport': 1e-6,
    'cone-leak-witness': 0.0,
    'lacunary-dual-bound': 0.0,
    'adjoint-pairing': 1e-12,
    'lift-naturality': 1e-12,
    'root-rescale-table': 0.0,
    'bohr-prime-sum': 1e-12,
    'sup-estimate-bound': 0.0,
    'lp-bound-p1': 1e-3,
    'lp-bound-p2': 1e-6,
    'lp-bound-pinf': 1e-3,
    'delsarte-constant': 0.0,
    'delsarte-l2-bound': 1e-12,
    'delsarte-spatial': 1e-9,
}


@dataclasses.dataclass
class CheckRecord:
    """
    The outcome of one check. kind is 'bound' (an inequality, with
    maxDeviation the largest excess over the bound), 'invariance' (an
    exact property; a witness means it failed) or 'witness' (a search
    that passes by finding one).
    """
    checkId: str
    anchor: str
    instances: int
    maxDeviation: float
    tolerance: float
    passed: bool
    witness: Any = None
    kind: str = 'bound'

    @classmethod
    def fromJsonData(cls, d: Any, context: str = 'check') -> CheckRecord:
        try:
            return cls(**{field.name: d[field.name] for field in dataclasses.fields(cls)})
        except (KeyError, TypeError) as e:
            raise ConfigError(f'{context} is not a check record ({e})') from e

    def toJsonData(self) -> dict:
        return dataclasses.asdict(self)

    def __str__(self) -> str:
        status = 'pass' if self.passed else 'FAIL'
        return (f'<check {self.checkId} {status} ({self.instances} instances,'
                f' max deviation {self.maxDeviation:.3g} / {self.tolerance:g})>')


@dataclasses.dataclass
class VerificationReport:
    suite: str
    seed: int
    checks: list[CheckRecord]
    wallTime: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @classmethod
    def fromJsonData(cls, d: Any, context: str = 'report') -> VerificationReport:
        checks = _common.requireField(d, 'checks', context)
        if not isinstance(checks, list):
            raise ConfigError(f'{context}.checks must be an array')
        return cls(_common.requireField(d, 'suite', context),
                   _common.requireInt(_common.requireField(d, 'seed', context), f'{context}.seed'),
                   [CheckRecord.fromJsonData(c, f'{context}.checks[{i}]') for i, c in enumerate(checks)],
                   _common.requireField(d, 'wallTime', context))

    @classmethod
    def fromFile(cls, filePath: str | os.PathLike) -> VerificationReport:
        return cls.fromJsonData(_common.loadJsonFile(filePath), str(filePath))

    def toJsonData(self) -> dict:
        return {
            'suite': self.suite,
            'seed': self.seed,
            'passed': self.passed,
            'wallTime': self.wallTime,
            'checks': [check.toJsonData() for check in self.checks],
        }

    def save(self) -> str:
        return _common.dumpJson(self.toJsonData())

    def saveToFile(self, filePath: str | os.PathLike) -> None:
        _common.saveTextToFile(self.save(), filePath)

    def __str__(self) -> str:
        failed = sum(not c.passed for c in self.checks)
        return (f'<verification-report {self.suite} seed={self.seed}'
                f' ({len(self.checks)} checks, {failed} failed)>')


def _record(checkId: str, anchor: str, instances: int, deviation: float,
        witness: Any = None, kind: str = 'bound') -> CheckRecord:
    tolerance = TOLERANCES[checkId]
    if math.isnan(deviation):
        deviation = math.inf
    passed = deviation <= tolerance
    if kind == 'invariance' and witness is not None:
        passed = False
    # JSON has no infinity
    deviation = min(deviation, 1e308)
    return CheckRecord(checkId, anchor, instances, float(deviation), tolerance,
                       bool(passed), witness, kind)


def _characterJson(chi: Character) -> dict:
    return {'group': chi.group.toJsonData(), 'character': chi.toPayload()}


def _excess(value: float, bound: float) -> float:
    return max(0.0, value - bound)


def _relative(deviation: float, scale: float) -> float:
    return deviation / scale if scale > 0 else deviation


########################################################################
# Commuting relations


def checkFourierCommuting(rng: np.random.Generator, instances: int = 200) -> CheckRecord:
    """
    Spatial operators on grid samples agree with their Fourier-side
    form (H s)(n) = sum w s((M^T)^-1 n).
    """
    worst = 0.0
    for _ in range(instances):
        d = int(rng.integers(1, 4))
        group = DualGroupDescriptor.zLex(d)
        terms = rand.randomSpatialTerms(rng, d, maxTerms=5)
        s = rand.randomSpectrum(rng, group, maxTerms=20, radius=8)

        expected = hausdorff.apply(HausdorffOperator.fromSpatialMatrices(terms), s)
        grid = torusOracle.synthesize(s, torusOracle.DEFAULT_GRID_SIZE)
        actual = torusOracle.analyze(torusOracle.spatialHausdorff(terms, grid))
        worst = max(worst, _relative(maxDeviation(actual, expected), l2Norm(s)))
    return _record('fourier-commuting', 'Theorem 1(i): spatial operator vs. Fourier-side action',
                   instances, worst)


def checkHilbertCommuting(rng: np.random.Generator, instances: int = 200) -> CheckRecord:
    """
    Operators built from order automorphisms commute with the Hilbert
    transform.
    """
    worst = 0.0
    for _ in range(instances):
        group = rand.randomGroup(rng)
        H = rand.randomOperator(rng, group, conePreserving=True)
        s = rand.randomSpectrum(rng, group)
        worst = max(worst, maxDeviation(hausdorff.apply(H, hilbert(s)),
                                        hilbert(hausdorff.apply(H, s))))
    return _record('hilbert-commuting', 'Theorem 1(ii): H commutes with the Hilbert transform',
                   instances, worst)


def checkRieszProjectionCommuting(rng: np.random.Generator, instances: int = 200) -> CheckRecord:
    """
    The same operators leave the ranges of P+ and P- invariant.
    """
    worst = 0.0
    for _ in range(instances):
        group = rand.randomGroup(rng)
        H = rand.randomOperator(rng, group, conePreserving=True)
        s = rand.randomSpectrum(rng, group)
        for part in Part:
            worst = max(worst, maxDeviation(hausdorff.apply(H, project(s, part)),
                                            project(hausdorff.apply(H, s), part)))
    return _record('riesz-projection-commuting', 'Theorem 1(ii): H commutes with P+ and P-',
                   instances, worst)


########################################################################
# Hardy spaces and l^2 bounds


def checkHardyInvariance(rng: np.random.Generator, instances: int = 500) -> CheckRecord:
    """
    Spectra supported in E stay in E, for E the lexicographic cone
    (unitriangular maps) and for E the nonnegative orthant (sigma_u).
    """
    leaks = 0
    witness = None
    for i in range(instances):
        if i % 2 == 0:
            group = DualGroupDescriptor.zLex(int(rng.integers(1, 4)))
            H = rand.randomOperator(rng, group, conePreserving=True)
            s = rand.randomAnalyticSpectrum(rng, group)
            E = isInPositiveCone
        else:
            weights = rand.randomSigmaWeights(rng)
            H = dirichlet.sigmaHausdorffOperator(weights)
            s = rand.randomOrthantSpectrum(rng)
            E = isInOrthant
        check = isSupportedIn(hausdorff.apply(H, s), E)
        if not check:
            leaks += 1
            if witness is None:
                witness = _characterJson(check.witness)
    return _record('hardy-invariance',
                   'Theorem 2: H maps H_E into itself when B maps E^c into E^c',
                   instances, leaks, witness, 'invariance')


def checkL2Bound(rng: np.random.Generator, instances: int = 1000) -> CheckRecord:
    worst = 0.0
    for _ in range(instances):
        group = rand.randomGroup(rng)
        H = rand.randomOperator(rng, group)
        s = rand.randomSpectrum(rng, group)
        worst = max(worst, _excess(l2Norm(hausdorff.apply(H, s)),
                                   hausdorff.phiL1(H) * l2Norm(s)))
    return _record('l2-bound', 'Theorem 2, Eq. (1) at p = 2: ||H s||_2 <= ||Phi||_1 ||s||_2',
                   instances, worst)


def checkRieszInequality(rng: np.random.Generator, instances: int = 500) -> CheckRecord:
    """
    ||Hilbert s||_2 <= ||s||_2, with equality when s has no constant
    term.
    """
    worst = 0.0
    for _ in range(instances):
        group = rand.randomGroup(rng)
        s = rand.randomSpectrum(rng, group)
        before, after = l2Norm(s), l2Norm(hilbert(s))
        if identity(group) in s:
            worst = max(worst, _excess(after, before))
        else:
            worst = max(worst, abs(after - before))
    return _record('riesz-inequality', 'Section 2, Riesz inequality: ||Hilbert s||_2 <= ||s||_2',
                   instances, worst)


def checkOrderAutomorphismClosure(rng: np.random.Generator, instances: int = 100) -> CheckRecord:
    """
    Unitriangular order automorphisms form a group: inverses stay in
    the family and keep the cone, products keep the cone.
    """
    failures = 0
    witness = None
    for _ in range(instances):
        d = int(rng.integers(2, 5))
        group = DualGroupDescriptor.zLex(d)
        A = rand.randomLowerUnitriangular(rng, d, entryRadius=3)
        B = rand.randomLowerUnitriangular(rng, d, entryRadius=3)
        inverse = automorphism.invert(A)
        chi = rand.randomCharacter(rng, group)

        ok = (isinstance(inverse, LowerUnitriangular)
              and automorphism.preserves(inverse, SetSpec.lexCone()).kind is VerdictKind.ANALYTIC_TRUE
              and inverse.apply(A.apply(chi)) == chi
              and automorphism.actsLike(automorphism.invert(inverse), A))
        product = automorphism.compose(A, B)
        verdict = automorphism.preserves(product, SetSpec.lexCone(radius=2))
        ok = ok and verdict.kind in (VerdictKind.ANALYTIC_TRUE, VerdictKind.SAMPLED_TRUE)
        if not ok:
            failures += 1
            if witness is None:
                witness = {'matrix': [list(r) for r in A.toMatrix()]}
    return _record('order-automorphism-closure', 'Lemma 1: order automorphisms form a group',
                   instances, failures, witness, 'invariance')


def checkConstantEigenvalue(rng: np.random.Generator, instances: int = 100) -> CheckRecord:
    """
    With nonnegative weights, H maps the constant 1 to ||Phi||_1 times
    itself.
    """
    worst = 0.0
    for _ in range(instances):
        group = rand.randomGroup(rng)
        H = rand.randomOperator(rng, group, weights='nonnegative')
        one = delta(identity(group))
        image = hausdorff.apply(H, one)
        worst = max(worst, maxDeviation(image, hausdorff.phiL1(H) * one),
                    abs(l2Norm(image) - hausdorff.phiL1(H)))
    return _record('constant-eigenvalue', 'Remark 1: H 1 = ||Phi||_1 1', instances, worst)


########################################################################
# Real Hardy space and BMO


def _realConeOperator(rng: np.random.Generator, group: DualGroupDescriptor) -> HausdorffOperator:
    return rand.randomOperator(rng, group, weights='real', conePreserving=True)


def checkRealHardyBound(rng: np.random.Generator, instances: int = 100) -> CheckRecord:
    """
    ||H q||_{H^1_R} <= ||Phi||_1 ||q||_{H^1_R} for real polynomials q.
    """
    worst = 0.0
    group = DualGroupDescriptor.zLex(1)
    N = torusOracle.DEFAULT_L1_GRID_SIZE
    for _ in range(instances):
        q = rand.randomRealPolynomial(rng, 1, degree=32)
        H = _realConeOperator(rng, group)
        bound = hausdorff.phiL1(H) * torusOracle.h1rNorm(q, N)
        value = torusOracle.h1rNorm(hausdorff.apply(H, q), N)
        worst = max(worst, _relative(_excess(value, bound), bound))
    return _record('real-hardy-bound', 'Theorem 5: ||H q||_{H^1_R} <= ||Phi||_1 ||q||_{H^1_R}',
                   instances, worst)


def checkBmoCertificateTransport(rng: np.random.Generator, instances: int = 100) -> CheckRecord:
    """
    A decomposition phi = f + (Hilbert g) is carried by H to the
    decomposition H phi = H f + (Hilbert H g), whose certificate value
    is at most ||Phi||_1 times the original one.
    """
    worst = 0.0
    for _ in range(instances):
        group = DualGroupDescriptor.zLex(int(rng.integers(1, 3)))
        H = rand.randomOperator(rng, group, conePreserving=True)
        f = rand.randomSpectrum(rng, group, maxTerms=10)
        g = rand.randomSpectrum(rng, group, maxTerms=10)

        phi = f + hilbert(g)
        transported = hausdorff.apply(H, f) + hilbert(hausdorff.apply(H, g))
        worst = max(worst, maxDeviation(transported, hausdorff.apply(H, phi)) / l2Norm(phi)
                    if phi else 0.0)

        bound = hausdorff.phiL1(H) * torusOracle.bmoUpper(f, g)
        value = torusOracle.bmoUpper(hausdorff.apply(H, f), hausdorff.apply(H, g))
        worst = max(worst, _relative(_excess(value, bound), bound))
    return _record('bmo-certificate-transport', 'Theorem 4: BMO certificates are carried by H',
                   instances, worst)


########################################################################
# Cone leaks, lacunary sets, adjoints


SWAP = UnimodularMatrix([[0, 1], [1, 0]])


def findConeLeak(H: HausdorffOperator, radius: int = 2) -> tuple[Character, Character] | None:
    """
    Search the characters chi of the positive cone, smallest first, for
    one with H delta_chi not supported in the cone. Returns (chi, the
    leaked character), or None.
    """
    group = H.group
    for point in automorphism.shellPoints(group.dim, radius):
        chi = Character(group, point)
        if not isInPositiveCone(chi):
            continue
        check = isSupportedIn(hausdorff.apply(H, delta(chi)), isInPositiveCone)
        if not check:
            return chi, check.witness
    return None


def checkConeLeakWitness(rng: np.random.Generator) -> CheckRecord:
    """
    An operator with a non-order-preserving term (the coordinate swap)
    must leak some analytic delta out of the cone; find the leak.
    """
    group = DualGroupDescriptor.zLex(2)
    w = float(rng.uniform(0.1, 1))
    H = HausdorffOperator.fromDualMaps(group, [(w, LowerUnitriangular(2)), (1 - w, SWAP)])
    leak = findConeLeak(H)
    witness = None
    if leak is not None:
        witness = {'input': _characterJson(leak[0]), 'leak': _characterJson(leak[1])}
    return _record('cone-leak-witness', 'Proposition 1: non-order-preserving terms leak out of H^p',
                   1, 0.0 if leak else 1.0, witness, 'witness')


LACUNARY_SET = [2 ** k for k in range(11)]


def checkLacunaryDualBound(rng: np.random.Generator, instances: int = 50) -> CheckRecord:
    """
    For the lacunary set E = {1, 2, 4, ..., 1024} (K_E = 2), the dual
    norm estimate of H phi stays below 3 sqrt(K_E) ||Phi||_1 ||phi||_2.
    """
    group = DualGroupDescriptor.zLex(1)
    K = lacunarityConstant(LACUNARY_SET)
    worst = 0.0 if K == 2 else float(abs(K - 2))
    N = torusOracle.DEFAULT_L1_GRID_SIZE
    for _ in range(instances):
        size = int(rng.integers(1, len(LACUNARY_SET) + 1))
        keys = rng.choice(LACUNARY_SET, size=size, replace=False)
        phi = Spectrum(group, {Character(group, (int(n),)): complex(c) for n, c in
                               zip(keys, rng.standard_normal(size) + 1j * rng.standard_normal(size))})
        H = _realConeOperator(rng, group)
        lower = torusOracle.bmoaLower(hausdorff.apply(H, phi), N,
                                      seed=int(rng.integers(2 ** 31)))
        bound = 3 * math.sqrt(K) * hausdorff.phiL1(H) * l2Norm(phi)
        worst = max(worst, _excess(lower, bound))
    return _record('lacunary-dual-bound',
                   'Corollary 3: H: H^2_E -> BMOA with norm <= 3 sqrt(K_E) ||Phi||_1',
                   instances, worst)


def checkAdjointPairing(rng: np.random.Generator, instances: int = 200) -> CheckRecord:
    """
    <adjoint(H) f, phi> = <f, H phi> for real weights.
    """
    worst = 0.0
    for _ in range(instances):
        group = rand.randomGroup(rng)
        H = rand.randomOperator(rng, group, weights='real')
        f = rand.randomSpectrum(rng, group)
        phi = rand.randomSpectrum(rng, group)
        left = pairing(hausdorff.apply(hausdorff.adjoint(H), f), phi)
        right = pairing(f, hausdorff.apply(H, phi))
        scale = max(1.0, hausdorff.phiL1(H) * l2Norm(f) * l2Norm(phi))
        worst = max(worst, abs(left - right) / scale)
    return _record('adjoint-pairing', 'Theorem 3: <H* f, phi> = <f, H phi>', instances, worst)


########################################################################
# Dirichlet series


def _liftable(weights: dict, nMax: int) -> Callable[[int], bool]:
    """
    Accept keys whose sigma_u^-1 images stay within nMax.
    """
    inverses = [automorphism.SigmaU(u, inverse=True) for u in weights]
    def accept(n: int) -> bool:
        alpha = dirichlet.factorize(n, nMax)
        try:
            for inverse in inverses:
                dirichlet.fromMultiIndex(inverse.apply(alpha), nMax)
        except OutOfRangeError:
            return False
        return True
    return accept


def checkLiftNaturality(rng: np.random.Generator, instances: int = 100) -> CheckRecord:
    """
    Lifting the Dirichlet-side sigma operator gives the Hausdorff
    operator with terms (Phi(u), sigma_u) on Z^inf.
    """
    worst = 0.0
    for _ in range(instances):
        weights = rand.randomSigmaWeights(rng)
        D = rand.randomDirichlet(rng, accept=_liftable(weights, dirichlet.N_MAX))
        left = dirichlet.bohrLift(dirichlet.sigmaOperator(weights, D))
        right = hausdorff.apply(dirichlet.sigmaHausdorffOperator(weights), dirichlet.bohrLift(D))
        worst = max(worst, maxDeviation(left, right))
    return _record('lift-naturality',
                   'Theorem 6, Corollary 6: Bohr lift intertwines the sigma operators',
                   instances, worst)


def checkRootRescaleTable(rng: np.random.Generator) -> CheckRecord:
    weights = {1: 0.5, 2: 0.5}
    b = dirichlet.rootRescaleOperator(weights, dirichlet.DirichletPolynomial({2: 1, 4: 1}))
    one = dirichlet.rootRescaleOperator(weights, dirichlet.DirichletPolynomial({1: 1}))
    expected = [(b[2], 0.5), (b[4], 1.0), (one[1], 1.0)]
    worst = max(abs(value - target) for value, target in expected)
    return _record('root-rescale-table', 'Corollary 7: b(n) = sum Phi(1/q) a(n^(1/q))',
                   len(expected), worst)


def checkBohrPrimeSum(rng: np.random.Generator, instances: int = 200) -> CheckRecord:
    worst = 0.0
    for _ in range(instances):
        weights = rand.randomSigmaWeights(rng)
        D = rand.randomDirichlet(rng, accept=_liftable(weights, dirichlet.N_MAX))
        value = dirichlet.bohrPrimeSum(dirichlet.sigmaOperator(weights, D))
        bound = sum(abs(w) for w in weights.values()) * l1Coeff(dirichlet.bohrLift(D))
        worst = max(worst, _excess(value, bound))
    return _record('bohr-prime-sum', 'Corollary 5: sum over primes |b(p)| <= ||Phi||_1 ||D||',
                   instances, worst)


def checkSupEstimateBound(rng: np.random.Generator, instances: int = 20) -> CheckRecord:
    worst = 0.0
    for _ in range(instances):
        D = rand.randomDirichlet(rng)
        lower, upper = dirichlet.supBounds(D, tSamples=2000)
        worst = max(worst, _excess(lower, upper))
    return _record('sup-estimate-bound', 'Corollary 5: sampled sup <= l^1 norm of the coefficients',
                   instances, worst)


########################################################################
# L^p bounds on the torus


FLIPS_3D = [CoordinateFlip(signs) for signs in itertools.product((1, -1), repeat=3)]


def checkLpBounds(rng: np.random.Generator, instances: int = 30) -> list[CheckRecord]:
    """
    ||H f||_p <= ||Phi||_1 ||f||_p for coordinate-flip operators on the
    3-torus, p = 1, 2, inf.
    """
    group = DualGroupDescriptor.zLex(3)
    exponents = {'lp-bound-p1': 1, 'lp-bound-p2': 2, 'lp-bound-pinf': math.inf}
    worst = dict.fromkeys(exponents, 0.0)
    for _ in range(instances):
        count = int(rng.integers(1, 5))
        terms = [(w, FLIPS_3D[int(rng.integers(len(FLIPS_3D)))])
                 for w in rand.randomWeights(rng, count)]
        phi = sum(abs(w) for w, _ in terms)
        grid = torusOracle.synthesize(rand.randomSpectrum(rng, group, radius=8))
        image = torusOracle.spatialHausdorff(terms, grid)
        for checkId, p in exponents.items():
            bound = phi * torusOracle.lpNorm(grid, p)
            worst[checkId] = max(worst[checkId],
                _relative(_excess(torusOracle.lpNorm(image, p), bound), bound))
    return [_record(checkId, f'Eq. (1): ||H f||_{p} <= ||Phi||_1 ||f||_{p}',
                    instances, worst[checkId])
            for checkId, p in exponents.items()]


########################################################################
# Delsarte shifts


def checkDelsarte(rng: np.random.Generator, instances: int = 50) -> list[CheckRecord]:
    group = DualGroupDescriptor.zLex(1)
    family = [LowerUnitriangular(1), CoordinateFlip([-1])]
    one = delta(identity(group))
    constant = 0.0
    l2 = 0.0
    for _ in range(instances):
        h = rand.randomTorusPoint(rng, 1)
        s = rand.randomSpectrum(rng, group)
        constant = max(constant, maxDeviation(hausdorff.delsarteShift(family, h, one), one))
        l2 = max(l2, _excess(l2Norm(hausdorff.delsarteShift(family, h, s)), l2Norm(s)))
    return [
        _record('delsarte-constant', 'Example 7, Remark 1: T^h 1 = 1', instances, constant),
        _record('delsarte-l2-bound', 'Example 7: ||T^h s||_2 <= ||s||_2', instances, l2),
    ]


DELSARTE_FAMILIES = {
    1: [LowerUnitriangular(1), CoordinateFlip([-1])],
    2: [LowerUnitriangular(2), CoordinateFlip([-1, -1]), UnimodularMatrix([[0, 1], [1, 0]]),
        UnimodularMatrix([[0, -1], [-1, 0]])],
}


def checkDelsarteSpatial(rng: np.random.Generator, instances: int = 50) -> CheckRecord:
    """
    The Fourier-side shift matches T^h f(x) = mean f(h + A x) evaluated
    pointwise.
    """
    worst = 0.0
    for _ in range(instances):
        d = int(rng.integers(1, 3))
        family = DELSARTE_FAMILIES[d]
        group = DualGroupDescriptor.zLex(d)
        s = rand.randomSpectrum(rng, group)
        h = rand.randomTorusPoint(rng, d)
        x = rand.randomTorusPoint(rng, d)
        shifted = torusOracle.evaluate(hausdorff.delsarteShift(family, h, s), x)
        direct = 0j
        for A in family:
            M = A.toMatrix()
            moved = [(sum(m * a for m, a in zip(row, x.angles)) + b) % 1.0
                     for row, b in zip(M, h.angles)]
            direct += torusOracle.evaluate(s, TorusPoint(tuple(moved)))
        direct /= len(family)
        worst = max(worst, abs(shifted - direct) / max(1.0, l1Coeff(s)))
    return _record('delsarte-spatial', 'Example 7: T^h f(x) = mean over A of f(h + A x)',
                   instances, worst)


########################################################################
# Suites


_CHECKS: dict[str, Callable[[np.random.Generator], CheckRecord | list[CheckRecord]]] = {
    'fourier-commuting': checkFourierCommuting,
    'hilbert-commuting': checkHilbertCommuting,
    'riesz-projection-commuting': checkRieszProjectionCommuting,
    'hardy-invariance': checkHardyInvariance,
    'l2-bound': checkL2Bound,
    'riesz-inequality': checkRieszInequality,
    'order-automorphism-closure': checkOrderAutomorphismClosure,
    'constant-eigenvalue': checkConstantEigenvalue,
    'real-hardy-bound': checkRealHardyBound,
    'bmo-certificate-transport': checkBmoCertificateTransport,
    'cone-leak-witness': checkConeLeakWitness,
    'lacunary-dual-bound': checkLacunaryDualBound,
    'adjoint-pairing': checkAdjointPairing,
    'lift-naturality': checkLiftNaturality,
    'root-rescale-table': checkRootRescaleTable,
    'bohr-prime-sum': checkBohrPrimeSum,
    'sup-estimate-bound': checkSupEstimateBound,
    'lp-bound': checkLpBounds,
    'delsarte': checkDelsarte,
    'delsarte-spatial': checkDelsarteSpatial,
}


SUITES = {
    'theorem1': ['fourier-commuting', 'hilbert-commuting', 'riesz-projection-commuting'],
    'theorem2': ['hardy-invariance', 'l2-bound', 'riesz-inequality', 'order-automorphism-closure'],
    'theorem5': ['real-hardy-bound', 'bmo-certificate-transport'],
    'remark1': ['constant-eigenvalue'],
    'corollary3': ['lacunary-dual-bound', 'adjoint-pairing'],
    'proposition1': ['cone-leak-witness'],
    'dirichlet': ['lift-naturality', 'root-rescale-table', 'bohr-prime-sum', 'sup-estimate-bound'],
    'delsarte': ['delsarte', 'delsarte-spatial'],
    'eq1': ['lp-bound'],
}
SUITES['all'] = [name for names in SUITES.values() for name in names]


def checkRng(seed: int, name: str) -> np.random.Generator:
    """
    The generator for one check: it depends only on the seed and the
    check's name, not on which suite runs it.
    """
    return np.random.default_rng([seed, zlib.crc32(name.encode('ascii'))])


def runSuite(suite: str, seed: int = 0) -> VerificationReport:
    """
    Run every check of a suite, returning the report (checks in order
    of check ID).
    """
    if suite not in SUITES:
        raise ValidationError(f'Unknown suite {suite!r} (expected one of {", ".join(SUITES)})')
    if seed < 0:
        raise ValidationError(f'Seeds must be nonnegative (found {seed})')

    start = time.perf_counter()
    records = []
    for name in SUITES[suite]:
        _logger.debug('Running %s (seed %d)', name, seed)
        result = _CHECKS[name](checkRng(seed, name))
        records.extend(result if isinstance(result, list) else [result])
    records.sort(key=lambda r: r.checkId)
    return VerificationReport(suite, seed, records, time.perf_counter() - start)
