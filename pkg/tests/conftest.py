import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from faclab.algebra import GaussianRational, MultiPoly


def rand_fraction(rng: random.Random, span: int = 6, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def rand_scalar(rng: random.Random, complex_prob: float = 0.3) -> GaussianRational:
    if rng.random() < complex_prob:
        return GaussianRational(rand_fraction(rng), rand_fraction(rng))
    return GaussianRational(rand_fraction(rng))


def rand_nonzero_scalar(rng: random.Random, complex_prob: float = 0.3) -> GaussianRational:
    while True:
        value = rand_scalar(rng, complex_prob)
        if value:
            return value


def rand_poly(
    rng: random.Random, num_vars: int, max_terms: int = 4, max_exp: int = 3
) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(num_vars))
        terms[exps] = rand_scalar(rng)
    return MultiPoly(num_vars, terms)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240)


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)

scalars = st.builds(GaussianRational, small_fractions, small_fractions)


@st.composite
def multipolys(draw, num_vars: int | None = None, max_terms: int = 4, max_exp: int = 3):
    if num_vars is None:
        num_vars = draw(st.integers(min_value=1, max_value=3))
    n_terms = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(
            draw(st.integers(min_value=0, max_value=max_exp)) for _ in range(num_vars)
        )
        terms[exps] = draw(scalars)
    return MultiPoly(num_vars, terms)
