"""Exact multivariate Laurent polynomials with integer coefficients.

Values are immutable.  Terms are kept in a dict from exponent tuples to
nonzero ints, so two equal polynomials always have identical term maps.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence


class NotDivisibleError(ArithmeticError):
    """Raised when an exact Laurent division has a nonzero remainder."""


Exponent = tuple[int, ...]


class LaurentPolynomial:
    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, int] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean: dict[Exponent, int] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {n}")
            if coeff:
                clean[exp] = clean.get(exp, 0) + int(coeff)
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, variables: Sequence[str]) -> LaurentPolynomial:
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c: int) -> LaurentPolynomial:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables: Sequence[str], exponent: Sequence[int], coeff: int = 1) -> LaurentPolynomial:
        return cls(variables, {tuple(exponent): coeff})

    @classmethod
    def generator(cls, variables: Sequence[str], index: int) -> LaurentPolynomial:
        exp = [0] * len(variables)
        exp[index] = 1
        return cls(variables, {tuple(exp): 1})

    @staticmethod
    def standard_variables(n: int, letter: str = "u") -> tuple[str, ...]:
        return tuple(f"{letter}{i + 1}" for i in range(n))

    # basic queries

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items())

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self.terms.get(tuple(exponent), 0)

    def min_exponents(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return tuple(min(col) for col in zip(*self.terms))

    def max_exponents(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return tuple(max(col) for col in zip(*self.terms))

    def _check(self, other: LaurentPolynomial) -> None:
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(self.variables, other)
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPolynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise NotDivisibleError("negative power of a non-monomial")
            (exp, c), = self.terms.items()
            if c not in (1, -1):
                raise NotDivisibleError("negative power of a monomial with non-unit coefficient")
            return LaurentPolynomial(self.variables, {tuple(-k * e for e in exp): c ** (-k)})
        result = LaurentPolynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exponent: Sequence[int]) -> LaurentPolynomial:
        """Multiply by the monomial with the given exponent vector."""
        return LaurentPolynomial(
            self.variables,
            {tuple(a + b for a, b in zip(e, exponent)): c for e, c in self.terms.items()},
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(self.variables, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return divide_exact(self, other)

    # substitution and evaluation

    def evaluate(self, values: Sequence) -> object:
        total = 0
        for exp, c in self.terms.items():
            t = c
            for v, e in zip(values, exp):
                t = t * v ** e
            total = total + t
        return total

    def rename(self, variables: Sequence[str]) -> LaurentPolynomial:
        if len(variables) != self.nvars:
            raise ValueError("rename needs the same number of variables")
        return LaurentPolynomial(variables, self.terms)

    # printing

    def __str__(self) -> str:
        return canonical_string(self)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({canonical_string(self)!r})"

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [[list(e), c] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPolynomial:
        return cls(data["variables"], {tuple(e): c for e, c in data["terms"]})


def canonical_string(f: LaurentPolynomial) -> str:
    """Terms in lexicographic exponent order, factors ``u<i>^<e>`` joined by ``*``."""
    if not f.terms:
        return "0"
    parts = []
    for exp, c in f.sorted_terms():
        factors = [f"{v}^{e}" for v, e in zip(f.variables, exp) if e]
        if not factors:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(abs(c))] + factors)
        parts.append(("-" if c < 0 else "+") + body)
    text = " ".join(p[0] + " " + p[1:] for p in parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def parse_laurent(text: str, variables: Sequence[str]) -> LaurentPolynomial:
    """Inverse of :func:`canonical_string`."""
    index = {v: i for i, v in enumerate(variables)}
    text = text.strip()
    if text == "0":
        return LaurentPolynomial(variables)
    tokens = text.replace("- ", "-").replace("+ ", "+").split()
    terms: dict[Exponent, int] = {}
    for tok in tokens:
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("+-")
        coeff = 1
        exp = [0] * len(variables)
        for factor in tok.split("*"):
            if "^" in factor:
                name, e = factor.split("^")
                exp[index[name]] += int(e)
            elif factor in index:
                exp[index[factor]] += 1
            else:
                coeff *= int(factor)
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + sign * coeff
    return LaurentPolynomial(variables, terms)


def denominator_vector(f: LaurentPolynomial) -> tuple[int, ...]:
    """The vector d with f * prod u_i^{d_i} a polynomial not divisible by any u_i."""
    if f.is_zero():
        raise ValueError("denominator vector of the zero polynomial")
    return tuple(-m for m in f.min_exponents())


def _leading(terms: Mapping[Exponent, int]) -> tuple[Exponent, int]:
    exp = max(terms)
    return exp, terms[exp]


def divide_exact(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Return q with q*b == a in the Laurent ring, or raise NotDivisibleError.

    Both sides are shifted into polynomials with b free of monomial factors;
    then lexicographic long division decides divisibility, since u_i is prime
    and does not divide the shifted divisor.
    """
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if a.is_zero():
        return a
    bmin = b.min_exponents()
    amin = a.min_exponents()
    b0 = {tuple(x - m for x, m in zip(e, bmin)): c for e, c in b.terms.items()}
    rem = {tuple(x - m for x, m in zip(e, amin)): c for e, c in a.terms.items()}
    lead_e, lead_c = _leading(b0)
    quotient: dict[Exponent, int] = {}
    while rem:
        re, rc = _leading(rem)
        qe = tuple(x - y for x, y in zip(re, lead_e))
        if min(qe) < 0 or rc % lead_c:
            raise NotDivisibleError("Laurent division leaves a remainder")
        qc = rc // lead_c
        quotient[qe] = qc
        for e, c in b0.items():
            key = tuple(x + y for x, y in zip(e, qe))
            v = rem.get(key, 0) - qc * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    offset = tuple(x - y for x, y in zip(amin, bmin))
    return LaurentPolynomial(a.variables, {tuple(x + o for x, o in zip(e, offset)): c for e, c in quotient.items()})


def product(factors: Iterable[LaurentPolynomial], variables: Sequence[str]) -> LaurentPolynomial:
    out = LaurentPolynomial.constant(variables, 1)
    for f in factors:
        out = out * f
    return out


def laurent_arith(a: LaurentPolynomial, b: LaurentPolynomial, op: str) -> LaurentPolynomial:
    """a op b for op in {"add", "sub", "mul"}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


laurent_divide_exact = divide_exact
