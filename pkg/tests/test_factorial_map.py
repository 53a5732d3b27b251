import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from faclab.algebra import GaussianRational, MultiPoly, factorial
from faclab.factorial_map import (
    factorial_value,
    factorial_value_power,
    strong_scan,
    window_membership,
)

from conftest import multipolys, rand_poly, rand_scalar, scalars


def x_minus_y() -> MultiPoly:
    return MultiPoly(2, {(1, 0): 1, (0, 1): -1})


class TestFactorialValue:
    def test_single_monomial(self):
        assert factorial_value(MultiPoly(2, {(2, 1): 1})) == 2

    def test_alternating_difference(self):
        # L((X1-X2)^n) alternates between 0 (odd n) and n! (even n)
        f = x_minus_y()
        assert factorial_value_power(f, 2) == 2
        assert factorial_value_power(f, 3) == 0
        assert factorial_value_power(f, 4) == 24

    def test_two_term_expansion(self):
        f = MultiPoly(2, {(2, 1): 1, (1, 2): 1})  # X1*X2*(X1+X2)
        assert factorial_value_power(f, 1) == 4

    def test_scaled_monomial_powers_never_vanish(self, rng):
        for _ in range(20):
            exps = tuple(rng.randint(0, 3) for _ in range(2))
            c = rand_scalar(rng)
            if not c:
                continue
            f = MultiPoly(2, {exps: c})
            for k in range(1, 5):
                expected = c**k * factorial_value(MultiPoly(2, {tuple(k * e for e in exps): 1}))
                got = factorial_value_power(f, k)
                assert got == expected
                assert got

    @given(multipolys(num_vars=2), multipolys(num_vars=2), scalars)
    @settings(max_examples=50)
    def test_linearity(self, f, g, c):
        assert factorial_value(f + g) == factorial_value(f) + factorial_value(g)
        assert factorial_value(f * c) == factorial_value(f) * c

    @given(multipolys(num_vars=3), st.permutations([1, 2, 3]))
    @settings(max_examples=50)
    def test_permutation_invariance(self, f, sigma):
        assert factorial_value(f.permute(tuple(sigma))) == factorial_value(f)

    def test_disjoint_variable_multiplicativity(self, rng):
        # multiplicative exactly when the factors use disjoint variables
        for _ in range(25):
            f_part = rand_poly(rng, 2, max_terms=3)
            g_part = rand_poly(rng, 2, max_terms=3)
            f = MultiPoly(4, {e + (0, 0): c for e, c in f_part.terms.items()})
            g = MultiPoly(4, {(0, 0) + e: c for e, c in g_part.terms.items()})
            assert factorial_value(f * g) == factorial_value(f) * factorial_value(g)

    def test_power_matches_direct_expansion(self, rng):
        for _ in range(10):
            f = rand_poly(rng, 2, max_terms=3, max_exp=2)
            power = MultiPoly.constant(2, 1)
            for k in range(1, 7):
                power = power * f
                assert factorial_value_power(f, k) == factorial_value(power)

    def test_positive_coefficients_stay_positive(self, rng):
        for _ in range(10):
            terms = {
                tuple(rng.randint(0, 3) for _ in range(2)): Fraction(
                    rng.randint(1, 5), rng.randint(1, 3)
                )
                for _ in range(rng.randint(1, 4))
            }
            f = MultiPoly(2, terms)
            for k in range(1, 9):
                value = factorial_value_power(f, k)
                assert value.is_real and value.re > 0


class TestWindowMembership:
    def test_zero_polynomial_is_member(self):
        for n in (1, 3, 10):
            verdict = window_membership(MultiPoly.zero(2), n)
            assert verdict.member
            assert verdict.witness_k is None
            assert verdict.window == (n, 0)
            assert verdict.values == ()

    def test_alternating_difference_window(self):
        verdict = window_membership(x_minus_y(), 3)
        assert verdict.member
        assert verdict.witness_k == 4
        assert verdict.window == (3, 2)
        assert verdict.values == (GaussianRational(0), GaussianRational(24))

    def test_window_length_is_term_count(self, rng):
        for _ in range(10):
            f = rand_poly(rng, 2)
            verdict = window_membership(f, 2)
            assert verdict.window == (2, f.term_count)
            assert len(verdict.values) == f.term_count

    def test_positive_coefficients_witness_at_start(self):
        f = MultiPoly(2, {(1, 0): 1, (0, 1): Fraction(1, 2), (1, 1): 3})
        for n in (1, 2, 5):
            verdict = window_membership(f, n)
            assert verdict.member and verdict.witness_k == n

    def test_witness_certifies_nonzero_value(self, rng):
        # the witness index always points at a nonzero L(f^k), so membership
        # in a window certifies membership in the unwindowed factorial set
        for _ in range(15):
            f = rand_poly(rng, 2, max_terms=3, max_exp=2)
            verdict = window_membership(f, rng.randint(1, 3))
            if verdict.witness_k is not None:
                offset = verdict.witness_k - verdict.window[0]
                assert verdict.values[offset]
                assert factorial_value_power(f, verdict.witness_k) == verdict.values[offset]

    def test_rejects_bad_window_start(self):
        with pytest.raises(ValueError):
            window_membership(x_minus_y(), 0)


class TestStrongScan:
    def test_alternating_difference_all_member(self):
        verdicts = strong_scan(x_minus_y(), 5)
        assert len(verdicts) == 5
        assert all(v.member for v in verdicts)

    def test_monomial_all_member(self):
        verdicts = strong_scan(MultiPoly(2, {(2, 1): 1}), 10)
        assert all(v.member and v.witness_k == n for n, v in enumerate(verdicts, 1))

    def test_zero_polynomial(self):
        assert all(v.member for v in strong_scan(MultiPoly.zero(1), 4))

    def test_matches_individual_windows(self, rng):
        for _ in range(8):
            f = rand_poly(rng, 2, max_terms=3, max_exp=2)
            verdicts = strong_scan(f, 4)
            for n, verdict in enumerate(verdicts, 1):
                assert verdict == window_membership(f, n)
