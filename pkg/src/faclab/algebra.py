"""Exact arithmetic substrate: Gaussian-rational scalars, sparse multivariate
polynomials, dense univariate polynomials, and univariate GCD.

Every value is immutable after construction and every operation is a pure
function, so the whole module is safe to use from concurrent workers.

Scalars live in Q(i): two fractions.Fraction parts, always in lowest terms
with positive denominator (Fraction guarantees this). Working in Q(i) instead
of floating C means every identity check in the package is exact and gcd-based
common-root detection needs no tolerances.

Exponent vectors are plain tuples of non-negative ints whose length equals the
ambient variable count; MultiPoly validates them at construction. Univariate
polynomials are dense coefficient tuples indexed by degree with a nonzero
trailing coefficient (empty tuple = zero polynomial).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

ScalarLike = Union[int, Fraction, "GaussianRational"]

_FACTORIALS: list[int] = [1]


def factorial(n: int) -> int:
    """n! from an append-only memo table of arbitrary-precision ints.

    Appends under CPython's GIL are atomic, so concurrent readers are safe;
    growth is effectively serialized. Workers in separate processes each grow
    their own table.
    """
    if n < 0:
        raise ValueError(f"factorial of negative {n}")
    table = _FACTORIALS
    while len(table) <= n:
        table.append(table[-1] * len(table))
    return table[n]


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


class GaussianRational:
    """Exact scalar a + b*i with arbitrary-precision rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(value: ScalarLike) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other: ScalarLike) -> "GaussianRational":
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "GaussianRational":
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other: ScalarLike) -> "GaussianRational":
        return GaussianRational.coerce(other) + (-self)

    def __mul__(self, other: ScalarLike) -> "GaussianRational":
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other: ScalarLike) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int) -> "GaussianRational":
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.im < 0:
            return f"{self.re}-{-self.im}i"
        return f"{self.re}+{self.im}i"

    __repr__ = __str__


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)


def _validated_exps(exps: tuple, num_vars: int) -> tuple[int, ...]:
    exps = tuple(exps)
    if len(exps) != num_vars:
        raise ValueError(f"exponent vector {exps} has length {len(exps)}, expected {num_vars}")
    for e in exps:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent vector {exps} has a non-natural entry")
    return exps


class MultiPoly:
    """Sparse multivariate polynomial: map from exponent vectors to scalars.

    Zero coefficients are never stored; the number of stored terms is the
    monomial count N(f). Variables are 1-based (X1, ..., Xm) everywhere in the
    public surface, matching the printed notation.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple, ScalarLike] | None = None):
        if num_vars < 0:
            raise ValueError("variable count must be >= 0")
        clean: dict[tuple[int, ...], GaussianRational] = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = GaussianRational.coerce(coeff)
                if not coeff:
                    continue
                clean[_validated_exps(exps, num_vars)] = coeff
        self.num_vars = num_vars
        self.terms = clean

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPoly":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value: ScalarLike) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "MultiPoly":
        """The variable X<index>, 1-based."""
        if not 1 <= index <= num_vars:
            raise ValueError(f"variable index {index} out of range 1..{num_vars}")
        exps = tuple(1 if i == index - 1 else 0 for i in range(num_vars))
        return cls(num_vars, {exps: 1})

    @classmethod
    def monomial(cls, num_vars: int, exps: tuple, coeff: ScalarLike = 1) -> "MultiPoly":
        return cls(num_vars, {tuple(exps): coeff})

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        """Largest exponent sum; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], GaussianRational]]:
        """Terms in descending lexicographic exponent order (deterministic)."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def coefficient(self, exps: tuple) -> GaussianRational:
        return self.terms.get(tuple(exps), GR_ZERO)

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"variable-count mismatch: {self.num_vars} vs {other.num_vars}"
            )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly(self.num_vars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        acc = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = acc.get(exps, GR_ZERO) + coeff
            if new:
                acc[exps] = new
            else:
                acc.pop(exps, None)
        out = MultiPoly(self.num_vars)
        out.terms = acc
        return out

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: Union["MultiPoly", ScalarLike]) -> "MultiPoly":
        if isinstance(other, (int, Fraction, GaussianRational)):
            scalar = GaussianRational.coerce(other)
            out = MultiPoly(self.num_vars)
            if scalar:
                out.terms = {e: c * scalar for e, c in self.terms.items()}
            return out
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        acc: dict[tuple[int, ...], GaussianRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                new = acc.get(exps, GR_ZERO) + c1 * c2
                if new:
                    acc[exps] = new
                else:
                    acc.pop(exps, None)
        out = MultiPoly(self.num_vars)
        out.terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("polynomial power must be >= 0")
        result = MultiPoly.constant(self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def permute(self, sigma: Iterable[int]) -> "MultiPoly":
        """Relabel variables by a permutation sigma of {1..m}: Xi -> X(sigma[i])."""
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(1, self.num_vars + 1)):
            raise ValueError(f"{sigma} is not a permutation of 1..{self.num_vars}")
        out = MultiPoly(self.num_vars)
        acc = {}
        for exps, coeff in self.terms.items():
            new = [0] * self.num_vars
            for i, e in enumerate(exps):
                new[sigma[i] - 1] = e
            acc[tuple(new)] = coeff
        out.terms = acc
        return out

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {c}" for e, c in self.sorted_terms())
        return f"MultiPoly({self.num_vars}, {{{body}}})"


def poly_powers(f: MultiPoly) -> Iterator[tuple[int, MultiPoly]]:
    """Yields (k, f^k) for k = 1, 2, ... reusing the previous power."""
    power = f
    k = 1
    while True:
        yield k, power
        power = power * f
        k += 1


class UniPoly:
    """Dense univariate polynomial over Q(i); index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        clean = [GaussianRational.coerce(c) for c in coeffs]
        while clean and not clean[-1]:
            clean.pop()
        self.coeffs = tuple(clean)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: ScalarLike = 1) -> "UniPoly":
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return GR_ZERO

    def leading(self) -> GaussianRational:
        if not self.coeffs:
            return GR_ZERO
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: Union["UniPoly", ScalarLike]) -> "UniPoly":
        if isinstance(other, (int, Fraction, GaussianRational)):
            scalar = GaussianRational.coerce(other)
            return UniPoly(c * scalar for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [GR_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        quotient = [GR_ZERO] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        lead = other.leading()
        d = other.degree
        while len(rem) - 1 >= d and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < d:
                break
            factor = rem[-1] / lead
            shift = len(rem) - 1 - d
            quotient[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * c
            rem.pop()
        return UniPoly(quotient), UniPoly(rem)

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lead = self.leading()
        return UniPoly(c / lead for c in self.coeffs)

    def eval(self, x: ScalarLike) -> GaussianRational:
        x = GaussianRational.coerce(x)
        acc = GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "X" if k == 1 else f"X^{k}"
                if c == GR_ONE:
                    parts.append(mono)
                elif c == -GR_ONE:
                    parts.append(f"-{mono}")
                elif c.is_real:
                    parts.append(f"{c}*{mono}")
                else:
                    parts.append(f"({c})*{mono}")
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor via the exact Euclidean remainder
    sequence; uni_gcd(0, 0) = 0.

    Over the exact coefficient field, a gcd of degree 0 is equivalent to the
    inputs having no common complex root, which is what the conjecture scans
    rely on. Degrees in all scans stay small, so coefficient growth along the
    remainder sequence is acceptable.
    """
    while q:
        p, q = q, p % q
    return p.monic()
