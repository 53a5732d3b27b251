"""Truncated univariate power series and compositional inversion.

A series a(X) with a(X) = X mod X^2 ("normalized") has a unique compositional
inverse b with a(b(X)) = X. This module computes inverse coefficients four
ways, all exact:

  * direct degree-by-degree solving of the triangular equations,
  * the Lagrange formula u_n = [X^n] (X^{-1} a(X))^{-(n+1)},
  * the additive closed form for a(X) = X(1 - (alpha_1 X + ... + alpha_m X^m)):
        u_n = (1/n!) * sum_{j1 + 2 j2 + ... + m jm = n}
              (n + j1 + ... + jm)! / (j1! ... jm!) * alpha^j,
  * the multiplicative closed form for a(X) = X (1 - mu_1 X) ... (1 - mu_m X):
        u_n = (1/(n!)^m) * sum_{j1 + ... + jm = n}
              (n + j1)! ... (n + jm)! / (j1! ... jm!) * mu^j.

Throughout, u_n are the scaled inverse coefficients defined by
a^{-1}(X) = X (1 + sum_{n >= 1} u_n/(n+1) X^n); the per-term division by n+1
is the reading that makes the Lagrange formula and the Catalan special case
a = X - X^2 mutually consistent (enforced by tests).

The rigidity scan looks for m consecutive zero u's for series built from a
coefficient grid: finding one for a nonzero coefficient vector would be a
counterexample to the rigidity property of the degree-(m+1) family.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .algebra import GR_ONE, GR_ZERO, GaussianRational, ScalarLike, factorial

_Coeffs = list[GaussianRational]


class UniSeries:
    """Power series known through degree `order` (dense coefficient list)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike]):
        self.coeffs = tuple(GaussianRational.coerce(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @classmethod
    def from_additive(cls, alpha: Sequence[ScalarLike], order: int) -> "UniSeries":
        """X * (1 - alpha_1 X - ... - alpha_m X^m), truncated at `order`."""
        coeffs = [GR_ZERO, GR_ONE] + [-GaussianRational.coerce(a) for a in alpha]
        return cls(_resized(coeffs, order))

    @classmethod
    def from_multiplicative(cls, mu: Sequence[ScalarLike], order: int) -> "UniSeries":
        """X * (1 - mu_1 X) * ... * (1 - mu_m X), truncated at `order`."""
        poly = [GR_ONE]
        for m in mu:
            m = GaussianRational.coerce(m)
            nxt = [GR_ZERO] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i] = nxt[i] + c
                nxt[i + 1] = nxt[i + 1] - c * m
            poly = nxt
        return cls(_resized([GR_ZERO] + poly, order))

    @classmethod
    def identity(cls, order: int) -> "UniSeries":
        return cls(_resized([GR_ZERO, GR_ONE], order))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> GaussianRational:
        if k > self.order:
            raise ValueError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    @property
    def is_normalized(self) -> bool:
        return self.order >= 1 and not self.coeffs[0] and self.coeffs[1] == GR_ONE

    def pad(self, order: int) -> "UniSeries":
        """Extend with exact zero coefficients (for polynomial inputs)."""
        if order <= self.order:
            return self
        return UniSeries(_resized(list(self.coeffs), order))

    def truncate(self, order: int) -> "UniSeries":
        if order > self.order:
            raise ValueError(f"cannot truncate order-{self.order} series at {order}")
        return UniSeries(self.coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"UniSeries({[str(c) for c in self.coeffs]})"


def _resized(coeffs: list, order: int) -> list:
    coeffs = [GaussianRational.coerce(c) for c in coeffs]
    if len(coeffs) < order + 1:
        coeffs += [GR_ZERO] * (order + 1 - len(coeffs))
    return coeffs[: order + 1]


def _mul(a: _Coeffs, b: _Coeffs, order: int) -> _Coeffs:
    out = [GR_ZERO] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def _reciprocal(g: _Coeffs, order: int) -> _Coeffs:
    g0 = g[0]
    if not g0:
        raise ZeroDivisionError("series reciprocal needs a nonzero constant term")
    out = [GR_ONE / g0]
    for k in range(1, order + 1):
        acc = GR_ZERO
        for i in range(1, k + 1):
            gi = g[i] if i < len(g) else GR_ZERO
            if gi:
                acc = acc + gi * out[k - i]
        out.append(-acc / g0)
    return out


def _pow(base: _Coeffs, k: int, order: int) -> _Coeffs:
    result = _resized([GR_ONE], order)
    acc = _resized(list(base), order)
    while k:
        if k & 1:
            result = _mul(result, acc, order)
        k >>= 1
        if k:
            acc = _mul(acc, acc, order)
    return result


def series_compose(a: UniSeries, b: UniSeries, order: int) -> UniSeries:
    """a(b(X)) truncated at `order`; requires b(0) = 0."""
    if b.coeffs[0]:
        raise ValueError("composition needs a series with zero constant term")
    if a.order < order or b.order < order:
        raise ValueError(
            f"composition at order {order} needs both inputs to order >= {order}"
        )
    bc = list(b.coeffs[: order + 1])
    acc = _resized([a.coeffs[min(order, a.order)]], order)
    for i in range(min(order, a.order) - 1, -1, -1):
        acc = _mul(acc, bc, order)
        acc[0] = acc[0] + a.coeffs[i]
    return UniSeries(acc)


def series_inverse(a: UniSeries, order: int) -> UniSeries:
    """The unique b with a(b(X)) = X mod X^{order+1}, solved degree by degree.

    Each new coefficient b_k is pinned by one triangular linear equation, so
    the result is exact; no iteration control is needed.
    """
    if not a.is_normalized:
        raise ValueError("inversion needs a normalized series (a = X mod X^2)")
    if a.order < order:
        raise ValueError(f"inversion at order {order} needs input order >= {order}")
    b = [GR_ZERO, GR_ONE]
    for k in range(2, order + 1):
        comp = series_compose(a.truncate(k), UniSeries(_resized(b, k)), k)
        b.append(-comp.coefficient(k))
    return UniSeries(_resized(b, order))


@dataclass(frozen=True)
class InverseCoefficients:
    """Scaled inverse coefficients u_1..u_N of a normalized series.

    Related to the inverse by a^{-1}(X) = X (1 + sum u_n/(n+1) X^n).
    """

    u: tuple[GaussianRational, ...]

    @classmethod
    def from_series(cls, inverse: UniSeries) -> "InverseCoefficients":
        return cls(
            tuple(
                (n + 1) * inverse.coefficient(n + 1) for n in range(1, inverse.order)
            )
        )

    def u_n(self, n: int) -> GaussianRational:
        if not 1 <= n <= len(self.u):
            raise ValueError(f"u_{n} not available (have 1..{len(self.u)})")
        return self.u[n - 1]

    def inverse_series(self) -> UniSeries:
        coeffs = [GR_ZERO, GR_ONE] + [
            un / (n + 1) for n, un in enumerate(self.u, start=1)
        ]
        return UniSeries(coeffs)


def lagrange_u(a: UniSeries, n: int) -> GaussianRational:
    """u_n = [X^n] (X^{-1} a(X))^{-(n+1)} for a normalized series."""
    if n < 0:
        raise ValueError("coefficient index must be >= 0")
    if not a.is_normalized:
        raise ValueError("Lagrange extraction needs a normalized series")
    if a.order < n + 1:
        raise ValueError(f"u_{n} needs the series known to order >= {n + 1}")
    g = list(a.coeffs[1:])
    return _pow(_reciprocal(g, n), n + 1, n)[n]


def _weighted_tuples(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All (j1..jm) of naturals with j1 + 2 j2 + ... + m jm = n, jm outermost."""
    if m == 0:
        if n == 0:
            yield ()
        return
    for jm in range(n // m + 1):
        for rest in _weighted_tuples(n - m * jm, m - 1):
            yield rest + (jm,)


def _compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All (j1..jm) of naturals with j1 + ... + jm = n, jm outermost."""
    if m == 0:
        if n == 0:
            yield ()
        return
    for jm in range(n + 1):
        for rest in _compositions(n - jm, m - 1):
            yield rest + (jm,)


def aif_u(alpha: Sequence[ScalarLike], n: int) -> GaussianRational:
    """Closed-form u_n for a(X) = X(1 - alpha_1 X - ... - alpha_m X^m)."""
    if n < 0:
        raise ValueError("coefficient index must be >= 0")
    values = [GaussianRational.coerce(a) for a in alpha]
    total = GR_ZERO
    for js in _weighted_tuples(n, len(values)):
        weight = factorial(n + sum(js))
        for j in js:
            weight //= factorial(j)
        term = GaussianRational(weight)
        for a, j in zip(values, js):
            if j:
                term = term * a**j
        total = total + term
    return total * Fraction(1, factorial(n))


def mif_u(mu: Sequence[ScalarLike], n: int) -> GaussianRational:
    """Closed-form u_n for a(X) = X (1 - mu_1 X) ... (1 - mu_m X)."""
    if n < 0:
        raise ValueError("coefficient index must be >= 0")
    values = [GaussianRational.coerce(v) for v in mu]
    total = GR_ZERO
    for js in _compositions(n, len(values)):
        weight = 1
        for j in js:
            weight *= factorial(n + j) // factorial(j)
        term = GaussianRational(weight)
        for v, j in zip(values, js):
            if j:
                term = term * v**j
        total = total + term
    return total * Fraction(1, factorial(n) ** len(values))


def congruence_preserved(a: UniSeries, b: UniSeries, n: int) -> bool:
    """Whether the inverses of a and b agree mod X^n.

    Expected to hold whenever a = b mod X^n (and both are normalized): the
    triangular equations for the first n-1 inverse coefficients only consume
    coefficients of degree < n.
    """
    if n < 2:
        raise ValueError("congruence modulus exponent must be >= 2")
    ia = series_inverse(a, n - 1)
    ib = series_inverse(b, n - 1)
    return ia.coeffs == ib.coeffs


@dataclass(frozen=True)
class RigidityFinding:
    """A window of m consecutive vanishing u's for a nonzero coefficient grid
    point; any instance would be a counterexample worth publishing."""

    alpha: tuple[GaussianRational, ...]
    window_start: int


def inverse_u_values(alpha: Sequence[ScalarLike], count: int) -> list[GaussianRational]:
    """u_1..u_count for a = X(1 - sum alpha_k X^k), by direct inversion."""
    a = UniSeries.from_additive(alpha, count + 1)
    inv = series_inverse(a, count + 1)
    return [(n + 1) * inv.coefficient(n + 1) for n in range(1, count + 1)]


def find_zero_windows(u: Sequence[GaussianRational], m: int, n_max: int) -> list[int]:
    """Window starts n in 1..n_max with u_n = ... = u_{n+m-1} = 0.

    u is read as (u_1, u_2, ...) and must cover u_{n_max + m - 1}.
    """
    if len(u) < n_max + m - 1:
        raise ValueError("u list too short for the requested windows")
    return [
        n for n in range(1, n_max + 1) if all(not u[n - 1 + t] for t in range(m))
    ]


def rigidity_point(
    alpha: Sequence[ScalarLike], m: int, n_max: int
) -> tuple[list[GaussianRational], list[int]]:
    """u_1..u_{n_max+m-1} and the zero-window starts for one grid point."""
    u = inverse_u_values(alpha, n_max + m - 1)
    return u, find_zero_windows(u, m, n_max)


def rigidity_scan(
    m: int, grid: Sequence[ScalarLike], n_max: int
) -> list[RigidityFinding]:
    """Scan all nonzero alpha in grid^m for m consecutive vanishing u's among
    u_1..u_{n_max+m-1}; an empty report supports the rigidity property on the
    scanned grid."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    values = [GaussianRational.coerce(g) for g in grid]
    findings = []
    for alpha in itertools.product(values, repeat=m):
        if not any(alpha):
            continue
        _, windows = rigidity_point(alpha, m, n_max)
        findings.extend(RigidityFinding(alpha, n) for n in windows)
    return findings
