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
Utilities for writing the tests themselves.
"""

import numpy as np
from hypothesis import strategies as st

from hausdorffpy import randomInstances
from hausdorffpy.dualGroup import Character, DualGroupDescriptor, GroupKind
from hausdorffpy.spectrum import Spectrum, maxDeviation


GROUPS = [
    DualGroupDescriptor.zLex(1),
    DualGroupDescriptor.zLex(2),
    DualGroupDescriptor.zLex(3),
    DualGroupDescriptor.zInfLex(),
    DualGroupDescriptor.rationals(),
]

groups = st.sampled_from(GROUPS)

coefficients = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def characters(draw, group, radius=8, length=4):
    """
    Characters of the given group from the centered box.
    """
    if group.kind is GroupKind.Z_LEX:
        values = draw(st.lists(st.integers(-radius, radius),
                               min_size=group.dim, max_size=group.dim))
        return Character(group, values)
    elif group.kind is GroupKind.Z_INF_LEX:
        entries = draw(st.dictionaries(st.integers(1, length), st.integers(-radius, radius),
                                       max_size=length))
        return Character(group, entries)
    numerator = draw(st.integers(-radius, radius))
    denominator = draw(st.integers(1, radius))
    return Character(group, (numerator, denominator))


@st.composite
def characterTuples(draw, count):
    """
    count characters of one (randomly chosen) group.
    """
    group = draw(groups)
    return tuple(draw(characters(group)) for _ in range(count))


@st.composite
def spectra(draw, group, maxTerms=8, radius=8):
    keys = draw(st.lists(characters(group, radius), max_size=maxTerms))
    values = draw(st.lists(coefficients, min_size=len(keys), max_size=len(keys)))
    return Spectrum(group, dict(zip(keys, values)))


@st.composite
def automorphisms(draw, group):
    """
    Automorphisms of any family compatible with the group. Drawn through
    a seeded generator, so failures shrink to a seed.
    """
    rng = np.random.default_rng(draw(seeds))
    return randomInstances.randomDualMap(rng, group)


def assertSpectraClose(a, b, tolerance=1e-12):
    """
    Assert that two spectra agree termwise to within tolerance.
    """
    deviation = maxDeviation(a, b)
    assert deviation <= tolerance, f'{a} and {b} differ by {deviation}'
