import random
from fractions import Fraction

import pytest
from hypothesis import strategies as hst

from stalg import ComplexScalar, EXACT, Multivector
from stalg.multivector import BLADE_COUNT, blade_grade


def make_rng(seed=7):
    return random.Random(seed)


def random_scalar(rng, mode=EXACT):
    re = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    im = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    if mode == EXACT:
        return ComplexScalar.exact(re, im)
    return ComplexScalar.floating(float(re), float(im))


def random_multivector(rng, mode=EXACT, even=False, density=0.6):
    coeffs = {}
    for bits in range(BLADE_COUNT):
        if even and blade_grade(bits) % 2:
            continue
        if rng.random() < density:
            coeffs[bits] = random_scalar(rng, mode)
    return Multivector(mode, coeffs)


@pytest.fixture
def rng():
    return make_rng()


small_fractions = hst.fractions(min_value=-9, max_value=9, max_denominator=9)

exact_scalars = hst.builds(ComplexScalar.exact, small_fractions, small_fractions)

exact_multivectors = hst.builds(
    lambda coeffs: Multivector(EXACT, coeffs),
    hst.dictionaries(hst.integers(min_value=0, max_value=15), exact_scalars, max_size=10),
)

even_blade = hst.sampled_from(
    [bits for bits in range(BLADE_COUNT) if blade_grade(bits) % 2 == 0]
)

exact_even_multivectors = hst.builds(
    lambda coeffs: Multivector(EXACT, coeffs),
    hst.dictionaries(even_blade, exact_scalars, max_size=8),
)
