"""The factorial functional and its membership windows.

The functional sends a monomial X1^l1 ... Xm^lm to l1! ... lm! and extends
linearly. A nonzero polynomial f belongs to the window family at n when at
least one of L(f^n), ..., L(f^{n + N(f) - 1}) is nonzero, where N(f) is the
monomial count of f; the zero polynomial belongs by convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GR_ZERO, GaussianRational, MultiPoly, factorial


def factorial_value(f: MultiPoly) -> GaussianRational:
    """L(f): sum of coeff * product of factorials of the exponents."""
    total = GR_ZERO
    for exps, coeff in f.terms.items():
        weight = 1
        for e in exps:
            weight *= factorial(e)
        total = total + coeff * weight
    return total


def factorial_value_power(f: MultiPoly, k: int) -> GaussianRational:
    """L(f^k) by full expansion of the power; exact.

    One code path shared with the direct definition keeps this oracle-grade;
    adequate for small monomial counts and moderate k.
    """
    if k < 0:
        raise ValueError("power must be >= 0")
    return factorial_value(f**k)


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of one window test.

    window is (start_n, length) with length = N(f); values holds all window
    values L(f^n), ..., L(f^{n+N(f)-1}) (never truncated early, so reports
    double as regression fixtures); witness_k is the smallest k in the window
    with a nonzero value, absent for the zero polynomial.
    """

    member: bool
    witness_k: int | None
    window: tuple[int, int]
    values: tuple[GaussianRational, ...]


def _window_verdict(n: int, values: list[GaussianRational]) -> MembershipVerdict:
    witness = None
    for offset, value in enumerate(values):
        if value:
            witness = n + offset
            break
    return MembershipVerdict(
        member=witness is not None or not values,
        witness_k=witness,
        window=(n, len(values)),
        values=tuple(values),
    )


def window_membership(f: MultiPoly, n: int) -> MembershipVerdict:
    """Test f against the window {n, ..., n + N(f) - 1}.

    The zero polynomial is a member of every window by convention (witness
    absent, empty value list).
    """
    if n < 1:
        raise ValueError("window start must be >= 1")
    size = f.term_count
    values = []
    power = f**n
    for k in range(n, n + size):
        values.append(factorial_value(power))
        if k + 1 < n + size:
            power = power * f
    return _window_verdict(n, values)


def strong_scan(f: MultiPoly, n_max: int) -> list[MembershipVerdict]:
    """window_membership(f, n) for n = 1..n_max, reusing incremental powers."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    size = f.term_count
    values: list[GaussianRational] = []
    power = MultiPoly.constant(f.num_vars, 1)
    for _ in range(n_max + size - 1):
        power = power * f
        values.append(factorial_value(power))
    return [_window_verdict(n, values[n - 1 : n - 1 + size]) for n in range(1, n_max + 1)]
