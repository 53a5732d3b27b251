"""Polynomial expression parsing and printing.

Grammar (whitespace insignificant):

    poly        := ["+"|"-"] term (("+"|"-") term)*
    term        := coefficient ["*"] factor* | factor+
    factor      := variable ["^" natural]
    variable    := ("X"|"x") positive-index
    coefficient := integer | integer "/" positive-integer | "(" gaussian ")"
    gaussian    := rat | rat "i" | rat ("+"|"-") rat "i" | ["-"] "i"
    rat         := ["-"] integer ["/" positive-integer]

Printing is deterministic (terms in descending lexicographic exponent order)
and round-trips: parsing the printed form reproduces the polynomial exactly.
Scalars always print as exact fractions, never decimals.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import GaussianRational, MultiPoly

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<var>[Xx](?P<index>\d+))|(?P<int>\d+)|(?P<imag>i)|(?P<op>[-+*/^()]))"
)


class ExprError(ValueError):
    """Parse failure with the offending position (0-based)."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            if text[pos:].strip():
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ExprError(f"unexpected character {text[bad]!r}", bad)
            break
        if match.group("var"):
            index = int(match.group("index"))
            if index < 1:
                raise ExprError("variable index must be >= 1", match.start("var"))
            tokens.append(("var", index, match.start("var")))
        elif match.group("int"):
            tokens.append(("int", int(match.group("int")), match.start("int")))
        elif match.group("imag"):
            tokens.append(("imag", "i", match.start("imag")))
        else:
            op = match.group("op")
            tokens.append((op, op, match.start("op")))
        pos = match.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, object, int]:
        return self.tokens[self.pos]

    def take(self, kind: str | None = None) -> tuple[str, object, int]:
        token = self.tokens[self.pos]
        if kind is not None and token[0] != kind:
            raise ExprError(f"expected {kind!r}, found {token[0]!r}", token[2])
        self.pos += 1
        return token

    def at(self, kind: str) -> bool:
        return self.tokens[self.pos][0] == kind

    def rat(self) -> Fraction:
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        elif self.at("+"):
            self.take()
        _, value, _ = self.take("int")
        if self.at("/"):
            self.take()
            kind, den, pos = self.take("int")
            if den == 0:
                raise ExprError("zero denominator", pos)
            return Fraction(sign * value, den)
        return Fraction(sign * value)

    def gaussian(self) -> GaussianRational:
        if self.at("imag"):
            self.take()
            return GaussianRational(0, 1)
        if self.at("-") and self.tokens[self.pos + 1][0] == "imag":
            self.take()
            self.take()
            return GaussianRational(0, -1)
        first = self.rat()
        if self.at("imag"):
            self.take()
            return GaussianRational(0, first)
        if self.at("+") or self.at("-"):
            sign = 1 if self.take()[0] == "+" else -1
            second = self.rat()
            self.take("imag")
            return GaussianRational(first, sign * second)
        return GaussianRational(first)

    def coefficient(self) -> GaussianRational:
        if self.at("("):
            self.take()
            value = self.gaussian()
            self.take(")")
            return value
        return GaussianRational(self.rat())

    def factor(self) -> tuple[int, int]:
        _, index, _ = self.take("var")
        if self.at("^"):
            self.take()
            _, exp, _ = self.take("int")
            return index, exp
        return index, 1

    def term(self) -> tuple[GaussianRational, dict[int, int]]:
        coeff = GaussianRational(1)
        explicit_coeff = False
        if self.at("int") or self.at("("):
            coeff = self.coefficient()
            explicit_coeff = True
            if self.at("*"):
                self.take()
                if not self.at("var"):
                    token = self.peek()
                    raise ExprError("expected a variable after '*'", token[2])
        exps: dict[int, int] = {}
        saw_factor = False
        while self.at("var"):
            index, exp = self.factor()
            exps[index] = exps.get(index, 0) + exp
            saw_factor = True
            if self.at("*"):
                self.take()
                if not self.at("var"):
                    token = self.peek()
                    raise ExprError("expected a variable after '*'", token[2])
        if not explicit_coeff and not saw_factor:
            token = self.peek()
            raise ExprError("expected a term", token[2])
        return coeff, exps

    def poly(self) -> list[tuple[GaussianRational, dict[int, int]]]:
        terms = []
        sign = 1
        if self.at("+") or self.at("-"):
            sign = 1 if self.take()[0] == "+" else -1
        coeff, exps = self.term()
        terms.append((coeff * sign, exps))
        while self.at("+") or self.at("-"):
            sign = 1 if self.take()[0] == "+" else -1
            coeff, exps = self.term()
            terms.append((coeff * sign, exps))
        self.take("end")
        return terms


def parse_poly(text: str, num_vars: int | None = None) -> MultiPoly:
    """Parse an expression; the variable count is the largest index among the
    surviving (nonzero) terms unless given explicitly."""
    raw = [(coeff, exps) for coeff, exps in _Parser(text).poly() if coeff]
    max_index = max(
        (index for _, exps in raw for index, e in exps.items() if e > 0), default=0
    )
    if num_vars is None:
        num_vars = max(1, max_index)
    elif max_index > num_vars:
        raise ExprError(f"variable X{max_index} exceeds {num_vars} variables", 0)
    acc = MultiPoly.zero(num_vars)
    for coeff, exps in raw:
        vec = [0] * num_vars
        for index, e in exps.items():
            if e > 0:
                vec[index - 1] += e
        acc = acc + MultiPoly(num_vars, {tuple(vec): coeff})
    return acc


def parse_scalar(text: str) -> GaussianRational:
    """Parse an exact scalar: 3, -3/2, 1/2+1/3i, 2i, -i, 1-2i."""
    parser = _Parser(text)
    value = parser.gaussian()
    parser.take("end")
    return value


def parse_scalar_list(text: str) -> list[GaussianRational]:
    """Comma-separated scalars, e.g. "1,-2/3,1+2i"."""
    items = [part.strip() for part in text.split(",")]
    if not items or any(not part for part in items):
        raise ExprError("empty entry in scalar list", 0)
    return [parse_scalar(part) for part in items]


_RANGE_RE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_grid(text: str) -> list[GaussianRational]:
    """A grid spec: an inclusive integer range "a..b" or a comma list."""
    match = _RANGE_RE.match(text)
    if match:
        low, high = int(match.group(1)), int(match.group(2))
        if low > high:
            raise ExprError(f"empty range {low}..{high}", 0)
        return [GaussianRational(v) for v in range(low, high + 1)]
    return parse_scalar_list(text)


def format_scalar(value: GaussianRational) -> str:
    return str(value)


def _format_monomial(exps: tuple[int, ...], var_names) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 0:
            continue
        name = var_names[i] if var_names else f"X{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: MultiPoly, var_names: tuple[str, ...] | None = None) -> str:
    """Canonical printed form; round-trips through parse_poly."""
    if not p:
        return "0"
    rendered = []
    for exps, coeff in p.sorted_terms():
        mono = _format_monomial(exps, var_names)
        if not mono:
            rendered.append(str(coeff) if coeff.is_real else f"({coeff})")
        elif not coeff.is_real:
            rendered.append(f"({coeff})*{mono}")
        elif coeff == 1:
            rendered.append(mono)
        elif coeff == -1:
            rendered.append(f"-{mono}")
        else:
            rendered.append(f"{coeff}*{mono}")
    text = rendered[0]
    for part in rendered[1:]:
        if part.startswith("-"):
            text += f" - {part[1:]}"
        else:
            text += f" + {part}"
    return text
