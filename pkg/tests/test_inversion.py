import random
from fractions import Fraction

import pytest

from faclab.algebra import GR_ONE, GR_ZERO, GaussianRational, binomial, factorial
from faclab.bridge import p_poly
from faclab.inversion import (
    InverseCoefficients,
    RigidityFinding,
    UniSeries,
    aif_u,
    congruence_preserved,
    find_zero_windows,
    inverse_u_values,
    lagrange_u,
    mif_u,
    rigidity_point,
    rigidity_scan,
    series_compose,
    series_inverse,
)

from conftest import rand_fraction, rand_scalar


def catalan_numbers(count: int) -> list[int]:
    # independent oracle: c_0 = 1, c_{k+1} = sum_{i+j=k} c_i c_j
    values = [1]
    while len(values) < count:
        k = len(values) - 1
        values.append(sum(values[i] * values[k - i] for i in range(k + 1)))
    return values


CATALAN = catalan_numbers(16)


def random_normalized_series(rng: random.Random, order: int) -> UniSeries:
    coeffs = [0, 1] + [rand_scalar(rng) for _ in range(order - 1)]
    return UniSeries(coeffs)


class TestUniSeries:
    def test_from_additive(self):
        a = UniSeries.from_additive([1, -2], 5)
        assert [str(c) for c in a.coeffs] == ["0", "1", "-1", "2", "0", "0"]
        assert a.is_normalized

    def test_from_multiplicative(self):
        # X(1-X)(1-2X) = X - 3X^2 + 2X^3
        a = UniSeries.from_multiplicative([1, 2], 4)
        assert [str(c) for c in a.coeffs] == ["0", "1", "-3", "2", "0"]

    def test_coefficient_beyond_order_rejected(self):
        with pytest.raises(ValueError):
            UniSeries.identity(3).coefficient(4)

    def test_pad_and_truncate(self):
        a = UniSeries([0, 1, -1])
        assert a.pad(5).order == 5
        assert a.pad(5).truncate(2) == a


class TestCompose:
    def test_identity_left(self):
        b = UniSeries([0, 1, 3, -2, 5])
        assert series_compose(UniSeries.identity(4), b, 4) == b

    def test_catalan_inverse_composes_to_x(self):
        a = UniSeries([0, 1, -1]).pad(4)
        b = UniSeries([0, 1, 1, 2, 5])
        assert series_compose(a, b, 4) == UniSeries.identity(4)

    def test_monomial_composition(self):
        a = UniSeries([0, 0, 1]).pad(3)  # X^2
        b = UniSeries([0, 2]).pad(3)  # 2X
        result = series_compose(a, b, 3)
        assert [str(c) for c in result.coeffs] == ["0", "0", "4", "0"]

    def test_rejects_nonzero_constant(self):
        with pytest.raises(ValueError):
            series_compose(UniSeries.identity(3), UniSeries([1, 1, 0, 0]), 3)

    def test_rejects_insufficient_order(self):
        with pytest.raises(ValueError):
            series_compose(UniSeries([0, 1]), UniSeries([0, 1, 2]), 2)


class TestSeriesInverse:
    def test_identity_self_inverse(self):
        assert series_inverse(UniSeries.identity(6), 6) == UniSeries.identity(6)

    def test_catalan_coefficients(self):
        inv = series_inverse(UniSeries.from_additive([1], 16), 16)
        for k in range(16):
            assert inv.coefficient(k + 1) == CATALAN[k]

    def test_catalan_closed_form(self):
        # c_k = binom(2k, k)/(k+1)
        for k in range(16):
            assert CATALAN[k] == Fraction(binomial(2 * k, k), k + 1)

    def test_lambda_scaling(self):
        for lam in (GaussianRational(2), GaussianRational(Fraction(-1, 2)), GaussianRational(0, 1)):
            inv = series_inverse(UniSeries.from_additive([lam], 10), 10)
            for k in range(10):
                assert inv.coefficient(k + 1) == CATALAN[k] * lam**k

    def test_rejects_non_normalized(self):
        with pytest.raises(ValueError):
            series_inverse(UniSeries([0, 2, 1]), 2)

    def test_round_trip(self, rng):
        for _ in range(12):
            a = random_normalized_series(rng, 16)
            b = series_inverse(a, 16)
            assert series_compose(a, b, 16) == UniSeries.identity(16)


class TestInverseCoefficients:
    def test_relation_to_series(self):
        inv = series_inverse(UniSeries.from_additive([1], 8), 8)
        u = InverseCoefficients.from_series(inv)
        assert u.u_n(1) == 2
        assert u.inverse_series() == inv.truncate(u.inverse_series().order)

    def test_out_of_range(self):
        u = InverseCoefficients((GaussianRational(2),))
        with pytest.raises(ValueError):
            u.u_n(2)


class TestLagrange:
    def test_identity_series(self):
        a = UniSeries.identity(10)
        assert lagrange_u(a, 0) == 1
        for n in range(1, 9):
            assert lagrange_u(a, n) == 0

    def test_simple_quadratic(self):
        a = UniSeries.from_additive([1], 8)
        assert lagrange_u(a, 1) == 2

    def test_double_root_factor(self):
        a = UniSeries.from_multiplicative([1, 1], 8)
        assert lagrange_u(a, 1) == 4

    def test_rejects_short_series(self):
        with pytest.raises(ValueError):
            lagrange_u(UniSeries.from_additive([1], 3), 3)


class TestClosedForms:
    def test_aif_zero(self):
        assert aif_u([0, 0], 5) == 0
        assert aif_u([], 3) == 0

    def test_aif_single_alpha(self):
        assert aif_u([1], 2) == 6
        assert aif_u([1], 2) == 3 * CATALAN[2]

    def test_aif_even_odd_tail(self):
        # with the linear coefficient 0, odd u vanish and even ones are
        # binom(3k/2, k) * alpha2^{k/2}
        alpha2 = GaussianRational(Fraction(3, 2))
        for k in range(1, 13):
            value = aif_u([0, alpha2], k)
            if k % 2:
                assert value == 0
            else:
                assert value == binomial(3 * k // 2, k) * alpha2 ** (k // 2)

    def test_mif_zero(self):
        assert mif_u([0, 0, 0], 4) == 0

    def test_mif_two_ones(self):
        assert mif_u([1, 1], 1) == 4

    def test_mif_single_factor_central_binomial(self):
        mu = GaussianRational(Fraction(2, 3))
        for n in range(11):
            expected = Fraction(factorial(2 * n), factorial(n) ** 2) * mu**n
            assert mif_u([mu], n) == expected
            assert mif_u([mu], n) == (n + 1) * CATALAN[n] * mu**n

    def test_n_zero_is_one(self):
        assert aif_u([3, -1], 0) == 1
        assert mif_u([5], 0) == 1


class TestThreeWayAgreement:
    def test_additive_specs(self, rng):
        for _ in range(15):
            m = rng.randint(1, 3)
            alpha = [rand_scalar(rng) for _ in range(m)]
            a = UniSeries.from_additive(alpha, 14)
            inv = series_inverse(a, 13)
            for n in range(1, 13):
                u = aif_u(alpha, n)
                assert u == lagrange_u(a, n)
                assert u == (n + 1) * inv.coefficient(n + 1)

    def test_multiplicative_specs_all_four(self, rng):
        for _ in range(15):
            m = rng.randint(1, 3)
            mu = [rand_scalar(rng) for _ in range(m)]
            a = UniSeries.from_multiplicative(mu, 14)
            alpha = [-a.coefficient(k) for k in range(2, m + 2)]
            inv = series_inverse(a, 13)
            for n in range(1, 13):
                u = mif_u(mu, n)
                assert u == aif_u(alpha, n)
                assert u == lagrange_u(a, n)
                assert u == (n + 1) * inv.coefficient(n + 1)

    def test_two_alpha_normalized_form(self, rng):
        # n! u_n = alpha1^n P_n(alpha2/alpha1^2) when alpha1 != 0
        for _ in range(10):
            alpha1 = rand_scalar(rng)
            if not alpha1:
                alpha1 = GaussianRational(1)
            alpha2 = rand_scalar(rng)
            x = alpha2 / alpha1**2
            for n in range(1, 9):
                lhs = factorial(n) * aif_u([alpha1, alpha2], n)
                assert lhs == alpha1**n * p_poly(n).eval(x)


class TestCongruence:
    def test_equal_series(self):
        a = UniSeries.from_additive([1], 6)
        assert congruence_preserved(a, a, 5)

    def test_high_degree_perturbation(self):
        a = UniSeries.from_additive([1], 6)
        b = UniSeries([0, 1, -1, 0, 0, 1, 0])
        assert congruence_preserved(a, b, 5)

    def test_degree_one_agreement_only(self):
        a = UniSeries.from_additive([1], 4)
        b = UniSeries.from_additive([-1], 4)
        assert congruence_preserved(a, b, 2)

    def test_randomized_hypothesis_pairs(self, rng):
        for _ in range(200):
            order = rng.randint(3, 9)
            n = rng.randint(2, order)
            base = [GR_ZERO, GR_ONE] + [rand_scalar(rng) for _ in range(order - 1)]
            other = list(base)
            for k in range(n, order + 1):
                other[k] = rand_scalar(rng)
            assert congruence_preserved(UniSeries(base), UniSeries(other), n)


class TestRigidityScan:
    def test_zero_window_detector(self):
        u = [GaussianRational(1), GR_ZERO, GR_ZERO, GaussianRational(2), GR_ZERO]
        assert find_zero_windows(u, 2, 3) == [2]
        assert find_zero_windows(u, 1, 5) == [2, 3, 5]
        with pytest.raises(ValueError):
            find_zero_windows(u, 2, 5)

    def test_point_with_one_vanishing_u(self):
        # u_2 = 6 a1^2 + 3 a2 vanishes at (1, -2), but u_1 = 2 and u_3 != 0,
        # so no length-2 window appears
        u, windows = rigidity_point([1, -2], 2, 2)
        assert u[1] == 0 and u[0] == 2 and u[2]
        assert windows == []

    def test_single_alpha_grid_clean(self):
        assert rigidity_scan(1, [GaussianRational(v) for v in range(-2, 3)], 12) == []

    def test_two_alpha_grid_clean(self):
        grid = [GaussianRational(v) for v in range(-2, 3)]
        assert rigidity_scan(2, grid, 6) == []

    def test_all_zero_point_excluded(self):
        assert rigidity_scan(1, [GaussianRational(0)], 5) == []

    def test_finding_reported_for_synthetic_window(self):
        # sanity of the reporting path: feed the detector through the scan on
        # a series whose u_2 vanishes, checking windows of length 1 directly
        u, windows = rigidity_point([1, -2], 1, 3)
        assert windows == [2]
        findings = [RigidityFinding((GaussianRational(1), GaussianRational(-2)), n) for n in windows]
        assert findings[0].window_start == 2
