"""Two-monomial families in two variables.

For distinct exponent vectors a, b in N^2 the family polynomial

    P_{a,b,n}(X) = sum_{k=0}^n (b1 n + c1 k)! (b2 n + c2 k)! / (k! (n-k)!) X^k,
    c = a - b,

encodes the factorial values of f = mu1 X1^a1 X2^a2 + mu2 X1^b1 X2^b2 through
L(f^n) = n! mu2^n P_{a,b,n}(mu1/mu2). Consecutive P's sharing a complex root
is therefore equivalent to a window-membership counterexample, and gcd degree
over the exact coefficient field decides common roots with no numerics.

Recurrence support is ansatz-based: discover_recurrence solves exactly for
bivariate polynomial coefficients C_t(n, X) with sum_t C_t(n, X) P_{n+t} = 0
at sampled n, then re-verifies any candidate on fresh n. A returned recurrence
is verified for the tested range, never proved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Callable, Sequence

from .algebra import (
    GR_ZERO,
    GaussianRational,
    MultiPoly,
    ScalarLike,
    UniPoly,
    factorial,
    uni_gcd,
)
from .factorial_map import factorial_value_power


@dataclass(frozen=True)
class ExponentPair:
    """Two distinct exponent vectors a, b in N^2 indexing a family."""

    a: tuple[int, int]
    b: tuple[int, int]

    def __post_init__(self):
        for vec in (self.a, self.b):
            if len(vec) != 2 or any(not isinstance(e, int) or e < 0 for e in vec):
                raise ValueError(f"{vec} is not a pair of naturals")
        if self.a == self.b:
            raise ValueError("exponent vectors must be distinct")

    @property
    def c(self) -> tuple[int, int]:
        return (self.a[0] - self.b[0], self.a[1] - self.b[1])

    def swapped(self) -> "ExponentPair":
        """The coordinate-swapped pair, which yields the same family."""
        return ExponentPair((self.a[1], self.a[0]), (self.b[1], self.b[0]))


def pab_poly(pair: ExponentPair, n: int) -> UniPoly:
    """P_{a,b,n}; the factorial arguments b_i n + c_i k = a_i k + b_i (n-k)
    are automatically non-negative."""
    if n < 0:
        raise ValueError("n must be >= 0")
    (b1, b2), (c1, c2) = pair.b, pair.c
    coeffs = [
        Fraction(
            factorial(b1 * n + c1 * k) * factorial(b2 * n + c2 * k),
            factorial(k) * factorial(n - k),
        )
        for k in range(n + 1)
    ]
    return UniPoly(coeffs)


def two_term_poly(pair: ExponentPair, mu1: ScalarLike, mu2: ScalarLike) -> MultiPoly:
    """f = mu1 X1^a1 X2^a2 + mu2 X1^b1 X2^b2."""
    return MultiPoly(2, {pair.a: mu1}) + MultiPoly(2, {pair.b: mu2})


def check_pab_identity(
    pair: ExponentPair, mu1: ScalarLike, mu2: ScalarLike, n: int
) -> bool:
    """Exact check of L(f^n) = n! mu2^n P_{a,b,n}(mu1/mu2), mu1, mu2 nonzero."""
    mu1 = GaussianRational.coerce(mu1)
    mu2 = GaussianRational.coerce(mu2)
    if not mu1 or not mu2:
        raise ValueError("both coefficients must be nonzero")
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = factorial_value_power(two_term_poly(pair, mu1, mu2), n)
    rhs = factorial(n) * mu2**n * pab_poly(pair, n).eval(mu1 / mu2)
    return lhs == rhs


def common_zero_degree(pair: ExponentPair, n: int) -> int:
    """Degree of gcd(P_{a,b,n}, P_{a,b,n+1}); 0 means no common complex root."""
    return uni_gcd(pab_poly(pair, n), pab_poly(pair, n + 1)).degree


@dataclass(frozen=True)
class RpcFinding:
    """A nontrivial gcd between consecutive family polynomials; any instance
    is a counterexample candidate for the relatively-prime scan."""

    pair: ExponentPair
    n: int
    gcd: UniPoly


def canonical_pairs(max_exp: int) -> list[ExponentPair]:
    """All distinct pairs with entries <= max_exp, deduplicated under the
    coordinate swap (which fixes the family), in lexicographic order."""
    if max_exp < 1:
        raise ValueError("max_exp must be >= 1")
    out = []
    entries = range(max_exp + 1)
    for a in itertools.product(entries, repeat=2):
        for b in itertools.product(entries, repeat=2):
            if a == b:
                continue
            swapped = ((a[1], a[0]), (b[1], b[0]))
            if (a, b) <= swapped:
                out.append(ExponentPair(a, b))
    out.sort(key=lambda p: (p.a, p.b))
    return out


def pair_gcd_profile(pair: ExponentPair, n_max: int) -> tuple[list[int], list[RpcFinding]]:
    """Gcd degrees for n = 0..n_max plus findings for the nonzero ones."""
    degrees = []
    findings = []
    current = pab_poly(pair, 0)
    for n in range(n_max + 1):
        following = pab_poly(pair, n + 1)
        g = uni_gcd(current, following)
        degrees.append(g.degree)
        if g.degree > 0:
            findings.append(RpcFinding(pair, n, g))
        current = following
    return degrees, findings


def rpc_scan(max_exp: int, n_max: int) -> list[RpcFinding]:
    """Scan all canonical pairs for common roots of consecutive polynomials;
    output ordered by (a, b, n). An empty list means no counterexample
    candidate in the scanned box."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    findings = []
    for pair in canonical_pairs(max_exp):
        findings.extend(pair_gcd_profile(pair, n_max)[1])
    return findings


def verify_difference_identity(a_param: int, n_max: int, case: int) -> bool:
    """The closed-case difference identities, checked exactly for n = 0..n_max.

    case 1, a = (a, 0), b = (0, 1):
        P_{n+1} - P_n = (a(n+1))!/(n+1)! X^{n+1}
    case 2, a = (a, 0), b = (a, 1):
        (an)! P_{n+1} - (a(n+1))! P_n = (an)!(a(n+1))!/(n+1)! X^{n+1}
    """
    if a_param < 0:
        raise ValueError("a_param must be >= 0")
    if case == 1:
        pair = ExponentPair((a_param, 0), (0, 1))
    elif case == 2:
        pair = ExponentPair((a_param, 0), (a_param, 1))
    else:
        raise ValueError("case must be 1 or 2")
    current = pab_poly(pair, 0)
    for n in range(n_max + 1):
        following = pab_poly(pair, n + 1)
        if case == 1:
            lhs = following - current
            rhs = UniPoly.monomial(
                n + 1, Fraction(factorial(a_param * (n + 1)), factorial(n + 1))
            )
        else:
            lhs = following * factorial(a_param * n) - current * factorial(
                a_param * (n + 1)
            )
            rhs = UniPoly.monomial(
                n + 1,
                Fraction(
                    factorial(a_param * n) * factorial(a_param * (n + 1)),
                    factorial(n + 1),
                ),
            )
        if lhs != rhs:
            return False
        current = following
    return True


@dataclass(frozen=True)
class Recurrence:
    """Order-r linear recurrence with bivariate polynomial coefficients.

    coeffs[t] is C_t as a MultiPoly in two formal variables, variable 1 the
    index n and variable 2 the polynomial variable X; the recurrence asserts
    sum_t C_t(n, X) P_{n+t}(X) = 0.
    """

    coeffs: tuple[MultiPoly, ...]

    def __post_init__(self):
        if not self.coeffs or not any(self.coeffs):
            raise ValueError("a recurrence needs a nonzero coefficient polynomial")
        for c in self.coeffs:
            if c.num_vars != 2:
                raise ValueError("coefficients must be bivariate (n, X)")
            if any(not v.is_real for v in c.terms.values()):
                raise ValueError("recurrence coefficients must be rational")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def normalized(self) -> "Recurrence":
        """Scale so all scalars are coprime integers and the leading term of
        the first nonzero coefficient polynomial is positive."""
        scalars = [v.re for c in self.coeffs for v in c.terms.values()]
        den_lcm = 1
        for s in scalars:
            den_lcm = den_lcm * s.denominator // int_gcd(den_lcm, s.denominator)
        nums = [abs(int(s * den_lcm)) for s in scalars]
        num_gcd = 0
        for v in nums:
            num_gcd = int_gcd(num_gcd, v)
        scale = Fraction(den_lcm, num_gcd)
        for c in self.coeffs:
            if c:
                if c.sorted_terms()[0][1].re * scale < 0:
                    scale = -scale
                break
        return Recurrence(tuple(c * scale for c in self.coeffs))

    def __str__(self) -> str:
        from .expr import format_poly

        parts = [
            f"C{t}(n, X) = {format_poly(c, ('n', 'X'))}"
            for t, c in enumerate(self.coeffs)
        ]
        return "; ".join(parts)


def coefficient_at(c: MultiPoly, n: int) -> UniPoly:
    """Evaluate a bivariate recurrence coefficient at integer n, leaving X."""
    acc: dict[int, GaussianRational] = {}
    for (i, j), value in c.terms.items():
        acc[j] = acc.get(j, GR_ZERO) + value * n**i
    if not acc:
        return UniPoly.zero()
    out = [GR_ZERO] * (max(acc) + 1)
    for j, value in acc.items():
        out[j] = value
    return UniPoly(out)


def apply_recurrence(
    rec: Recurrence, family: Callable[[int], UniPoly], n: int
) -> UniPoly:
    """sum_t C_t(n, X) * family(n+t); the zero polynomial exactly when the
    recurrence holds at n."""
    total = UniPoly.zero()
    for t, c in enumerate(rec.coeffs):
        total = total + coefficient_at(c, n) * family(n + t)
    return total


class UnderdeterminedSystemError(ValueError):
    """The requested sample budget cannot overdetermine the ansatz."""


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the exact nullspace via reduced row echelon form."""
    mat = [row[:] for row in rows]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(mat):
            break
    in_pivot = set(pivot_cols)
    basis = []
    for free in (c for c in range(ncols) if c not in in_pivot):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row_idx, pc in enumerate(pivot_cols):
            vec[pc] = -mat[row_idx][free]
        basis.append(vec)
    return basis


def _ansatz_rows(
    family: Callable[[int], UniPoly], n0: int, order: int, deg_n: int, deg_x: int
) -> list[list[Fraction]]:
    """Linear constraints on the unknown C_t coefficients from one sample n0.

    Unknown (t, i, j) is the coefficient of n^i X^j in C_t; one row per power
    of X in the expanded combination.
    """
    polys = [family(n0 + t) for t in range(order + 1)]
    max_deg = deg_x + max(p.degree for p in polys)
    n_powers = [Fraction(n0) ** i for i in range(deg_n + 1)]
    rows = []
    for d in range(max_deg + 1):
        row = []
        for t in range(order + 1):
            for i in range(deg_n + 1):
                for j in range(deg_x + 1):
                    coeff = polys[t].coefficient(d - j) if d - j >= 0 else GR_ZERO
                    row.append(coeff.re * n_powers[i])
        rows.append(row)
    return rows


def _vector_to_recurrence(
    vec: Sequence[Fraction], order: int, deg_n: int, deg_x: int
) -> Recurrence | None:
    coeffs = []
    pos = 0
    for _ in range(order + 1):
        terms = {}
        for i in range(deg_n + 1):
            for j in range(deg_x + 1):
                if vec[pos]:
                    terms[(i, j)] = vec[pos]
                pos += 1
        coeffs.append(MultiPoly(2, terms))
    if not any(coeffs):
        return None
    return Recurrence(tuple(coeffs))


def discover_recurrence(
    pair: ExponentPair,
    order: int,
    deg_n: int,
    deg_x: int,
    n_samples: int = 20,
    sample_count: int | None = None,
) -> Recurrence | None:
    """Search for an exact recurrence of the given shape for n -> P_{a,b,n}.

    Solves the exact nullspace of the sampled linear system (consecutive n
    from max(2, deg_n + 1), enough samples to overdetermine by at least five
    equations), then re-verifies any candidate on n_samples fresh values of n
    before returning it. Returns None when only the trivial solution exists.
    If sample_count is given and too small to overdetermine, raises
    UnderdeterminedSystemError (a configuration error, distinct from an
    honest "no recurrence found").
    """
    rec, _ = discover_recurrence_detailed(
        pair, order, deg_n, deg_x, n_samples=n_samples, sample_count=sample_count
    )
    return rec


def discover_recurrence_detailed(
    pair: ExponentPair,
    order: int,
    deg_n: int,
    deg_x: int,
    n_samples: int = 20,
    sample_count: int | None = None,
) -> tuple[Recurrence | None, dict]:
    """discover_recurrence plus the sampled and verified n ranges."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if deg_n < 0 or deg_x < 0:
        raise ValueError("coefficient degrees must be >= 0")
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    unknowns = (order + 1) * (deg_n + 1) * (deg_x + 1)
    required = unknowns + 5
    family = lambda n: pab_poly(pair, n)

    n_start = max(2, deg_n + 1)
    rows: list[list[Fraction]] = []
    n_cursor = n_start
    if sample_count is not None:
        if sample_count < 1:
            raise UnderdeterminedSystemError("sample_count must be >= 1")
        for _ in range(sample_count):
            rows.extend(_ansatz_rows(family, n_cursor, order, deg_n, deg_x))
            n_cursor += 1
        if len(rows) < required:
            raise UnderdeterminedSystemError(
                f"{sample_count} samples give {len(rows)} equations for "
                f"{unknowns} unknowns; need at least {required}"
            )
    else:
        while len(rows) < required:
            rows.extend(_ansatz_rows(family, n_cursor, order, deg_n, deg_x))
            n_cursor += 1
    details = {"sampled": (n_start, n_cursor - 1)}

    for _ in range(6):
        basis = _nullspace(rows, unknowns)
        candidate = None
        for vec in basis:
            candidate = _vector_to_recurrence(vec, order, deg_n, deg_x)
            if candidate is not None:
                break
        if candidate is None:
            details["verified"] = None
            return None, details
        verify_range = range(n_cursor, n_cursor + n_samples)
        failed = None
        for n in verify_range:
            if apply_recurrence(candidate, family, n):
                failed = n
                break
        if failed is None:
            details["verified"] = (verify_range.start, verify_range.stop - 1)
            return candidate.normalized(), details
        rows.extend(_ansatz_rows(family, failed, order, deg_n, deg_x))
    details["verified"] = None
    return None, details
