"""The corner family X1...Xm(mu_1 X1 + ... + mu_m Xm) and the exact identity
(n!)^{m+1} u_n = L(f^n) linking its factorial values to the multiplicative
inverse coefficients, plus the degree-3 additive machinery: the polynomial
family P_n with P_n(X) = sum_{k <= n/2} (2n-k)!/((n-2k)! k!) X^k, its exact
three-term recurrence, the five-term certificate identity behind that
recurrence, the three-term recurrence in n for two-factor multiplicative
coefficients, and the hypergeometric closed form of P_n.

Everything here is an exact check: each verifier expands both sides in
rational arithmetic and compares, so a True return is a proof for the tested
range and a False return pinpoints a counterexample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import GaussianRational, MultiPoly, ScalarLike, UniPoly, factorial
from .factorial_map import factorial_value, factorial_value_power
from .inversion import mif_u


@dataclass(frozen=True)
class EFamilyElement:
    """Coefficient vector mu defining f = X1...Xm (mu_1 X1 + ... + mu_m Xm)."""

    mu: tuple[GaussianRational, ...]

    def __init__(self, mu: Sequence[ScalarLike]):
        object.__setattr__(
            self, "mu", tuple(GaussianRational.coerce(v) for v in mu)
        )

    @property
    def m(self) -> int:
        return len(self.mu)

    @property
    def term_count(self) -> int:
        return sum(1 for v in self.mu if v)

    def expand(self) -> MultiPoly:
        """The polynomial itself, with one monomial per nonzero mu_i."""
        if self.m < 1:
            raise ValueError("the family needs at least one variable")
        terms = {}
        for i, coeff in enumerate(self.mu):
            exps = tuple(2 if j == i else 1 for j in range(self.m))
            terms[exps] = coeff
        return MultiPoly(self.m, terms)


@dataclass(frozen=True)
class ReducedElement:
    """The same element with zero coefficient slots removed.

    index_map sends new position i (1-based) to the original position of the
    i-th nonzero coefficient; it is the unique strictly increasing such map.
    """

    mu: tuple[GaussianRational, ...]
    index_map: tuple[int, ...]

    @property
    def m_reduced(self) -> int:
        return len(self.mu)

    def to_element(self) -> EFamilyElement:
        return EFamilyElement(self.mu)


def reduce_element(el: EFamilyElement) -> ReducedElement:
    """Strip zero slots and relabel variables; fails on the zero element.

    The reduction satisfies L(f^k) = (k!)^{m-m'} L(g^k) where g is the reduced
    polynomial on m' variables, so window membership is preserved.
    """
    positions = tuple(i + 1 for i, v in enumerate(el.mu) if v)
    if not positions:
        raise ValueError("cannot reduce the zero element")
    return ReducedElement(tuple(el.mu[i - 1] for i in positions), positions)


def check_bridge_identity(el: EFamilyElement, n: int) -> bool:
    """Exact check of (n!)^{m+1} u_n = L(f^n) for one element and power."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = mif_u(el.mu, n) * factorial(n) ** (el.m + 1)
    rhs = factorial_value_power(el.expand(), n)
    return lhs == rhs


def p_poly(n: int) -> UniPoly:
    """P_n(X) = sum_{k <= n/2} (2n-k)!/((n-2k)! k!) X^k, exact integers."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = []
    for k in range(n // 2 + 1):
        coeffs.append(factorial(2 * n - k) // (factorial(n - 2 * k) * factorial(k)))
    return UniPoly(coeffs)


def verify_p_recurrence(n_max: int) -> bool:
    """-3(3n+4)(3n+2)X^2 P_n - (2n+3)(9X+2) P_{n+1} + (4X+1) P_{n+2} = 0
    as an exact polynomial identity for n = 0..n_max."""
    nine_x_plus_2 = UniPoly((2, 9))
    four_x_plus_1 = UniPoly((1, 4))
    x_squared = UniPoly.monomial(2)
    p_prev, p_cur = p_poly(0), p_poly(1)
    for n in range(n_max + 1):
        p_next = p_poly(n + 2)
        combo = (
            x_squared * p_prev * (-3 * (3 * n + 4) * (3 * n + 2))
            + nine_x_plus_2 * p_cur * (-(2 * n + 3))
            + four_x_plus_1 * p_next
        )
        if combo:
            return False
        p_prev, p_cur = p_cur, p_next
    return True


def verify_recurrence_certificate() -> bool:
    """Expand the five-term certificate behind the P_n recurrence as a
    polynomial in two formal variables and test that it is identically zero.

    Full expansion is a stronger check than sampling: the expression is a
    polynomial, so vanishing of every coefficient is conclusive.
    """
    return not certificate_combination()


def certificate_combination() -> MultiPoly:
    """The five-term certificate expression as a polynomial in (n, k)."""
    n = MultiPoly.variable(2, 1)
    k = MultiPoly.variable(2, 2)

    def const(c: int) -> MultiPoly:
        return MultiPoly.constant(2, c)

    t1 = (n * 3 + const(1)) * (n * 3 - const(1)) * k * (k - const(1)) * (-3)
    t2 = (n * 2 + const(1)) * (n * 2 - k + const(1)) * (n - k * 2 + const(3)) * k * (-9)
    t3 = (
        (n * 2 + const(1))
        * (n - k * 2 + const(3))
        * (n - k * 2 + const(2))
        * (n - k * 2 + const(1))
        * (-2)
    )
    t4 = (
        (n * 2 - k + const(3))
        * (n * 2 - k + const(2))
        * (n * 2 - k + const(1))
        * k
        * 4
    )
    t5 = (
        (n * 2 - k + const(1))
        * (n - k * 2 + const(3))
        * (n - k * 2 + const(2))
        * (n * 2 - k + const(2))
    )
    return t1 + t2 + t3 + t4 + t5


def verify_mu_recurrence(mu1: ScalarLike, mu2: ScalarLike, n_max: int) -> bool:
    """Three-term recurrence for the two-factor multiplicative coefficients:

    n(n-1)(mu1-mu2)^2 u_n
      + (n-1)(2n-1)(mu1+mu2)(mu1-2 mu2)(mu2-2 mu1) u_{n-1}
      - 3(3n-4)(3n-2) mu1^2 mu2^2 u_{n-2} = 0   for n = 2..n_max

    with u_0 = 1 (the closed formula's empty-composition value).
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    mu1 = GaussianRational.coerce(mu1)
    mu2 = GaussianRational.coerce(mu2)
    u = [mif_u((mu1, mu2), j) for j in range(n_max + 1)]
    diff = mu1 - mu2
    mixed = (mu1 + mu2) * (mu1 - 2 * mu2) * (mu2 - 2 * mu1)
    square = mu1 * mu1 * mu2 * mu2
    for n in range(2, n_max + 1):
        combo = (
            u[n] * diff * diff * (n * (n - 1))
            + u[n - 1] * mixed * ((n - 1) * (2 * n - 1))
            - u[n - 2] * square * (3 * (3 * n - 4) * (3 * n - 2))
        )
        if combo:
            return False
    return True


def _pochhammer(q: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= q + i
    return out


def hypergeometric_series(n: int) -> UniPoly:
    """The terminating 2F1((1-n)/2, -n/2; -2n; -4X) series as a polynomial.

    One upper shifted factorial vanishes past k = n/2 and the lower one stays
    nonzero up to there (since n/2 < 2n), so summing k = 0..floor(n/2) avoids
    any division by zero without special-casing.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    upper1 = Fraction(1 - n, 2)
    upper2 = Fraction(-n, 2)
    lower = Fraction(-2 * n)
    coeffs = []
    for k in range(n // 2 + 1):
        num = _pochhammer(upper1, k) * _pochhammer(upper2, k)
        den = _pochhammer(lower, k) * factorial(k)
        coeffs.append(num / den * Fraction(-4) ** k)
    return UniPoly(coeffs)


def verify_hypergeometric_form(n_max: int) -> bool:
    """P_n(X) = P_n(0) * 2F1((1-n)/2, -n/2; -2n; -4X), coefficientwise."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    for n in range(1, n_max + 1):
        p = p_poly(n)
        if p != hypergeometric_series(n) * p.coefficient(0):
            return False
    return True


@dataclass(frozen=True)
class BridgeViolation:
    mu: tuple[GaussianRational, ...]
    u_window: tuple[GaussianRational, ...]
    value_window: tuple[GaussianRational, ...]


@dataclass(frozen=True)
class BridgeProbeReport:
    m: int
    n: int
    points_scanned: int
    violations: tuple[BridgeViolation, ...]

    @property
    def clean(self) -> bool:
        return not self.violations


def probe_bridge_windows(m: int, grid: Sequence[ScalarLike], n: int) -> BridgeProbeReport:
    """Grid probe of the window equivalence: for each mu in grid^m, the window
    (u_n..u_{n+m-1}) must vanish exactly when (L(f^n)..L(f^{n+m-1})) does, and
    neither may vanish unless mu = 0.

    A violation of the first kind would contradict the exact bridge identity;
    one of the second kind would be a rigidity counterexample. No grid scan
    constitutes a proof; an empty violation list only supports the property
    on the scanned grid.
    """
    if not 1 <= m <= 4:
        raise ValueError("m must be in 1..4 (desk scale)")
    if n < 1:
        raise ValueError("n must be >= 1")
    values = [GaussianRational.coerce(g) for g in grid]
    violations = []
    points = 0
    for mu in itertools.product(values, repeat=m):
        points += 1
        u_window = tuple(mif_u(mu, j) for j in range(n, n + m))
        f = EFamilyElement(mu).expand()
        power = f**n
        value_window = []
        for j in range(n, n + m):
            value_window.append(factorial_value(power))
            if j + 1 < n + m:
                power = power * f
        value_window = tuple(value_window)
        u_zero = not any(u_window)
        value_zero = not any(value_window)
        if u_zero != value_zero or (u_zero and any(mu)):
            violations.append(BridgeViolation(mu, u_window, value_window))
    return BridgeProbeReport(m, n, points, tuple(violations))
