"""Chebyshev polynomials and the three imaginary families of the Kronecker cluster algebra.

The families are indexed by n >= 0 and differ only in the polynomial applied
to z = X_{M_lambda}:  z^n (generic variables), P_n(z) (first kind) and
C_n(z) (second kind).  Base changes between them are unitriangular integer
matrices whose column n expands the target element of index n in the source
family.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .catalog import kronecker
from .ccmap import variables_for
from .laurent import LaurentPolynomial
from .linalg import inverse_rational


@dataclass(frozen=True)
class UnivariateIntPolynomial:
    """Integer polynomial stored by ascending degree with no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: UnivariateIntPolynomial) -> UnivariateIntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UnivariateIntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> UnivariateIntPolynomial:
        return UnivariateIntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: UnivariateIntPolynomial) -> UnivariateIntPolynomial:
        return self + (-other)

    def times_x(self) -> UnivariateIntPolynomial:
        return UnivariateIntPolynomial((0,) + self.coeffs) if self.coeffs else self

    def __call__(self, x):
        """Horner evaluation; works for ints, Fractions and Laurent polynomials."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


ONE = UnivariateIntPolynomial((1,))
X = UnivariateIntPolynomial((0, 1))


@lru_cache(maxsize=None)
def chebyshev_second(n: int) -> UnivariateIntPolynomial:
    """C_{n+1} = x C_n - C_{n-1} with C_{-1} = 0 and C_0 = 1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE
    if n == 1:
        return X
    return chebyshev_second(n - 1).times_x() - chebyshev_second(n - 2)


@lru_cache(maxsize=None)
def chebyshev_first(n: int) -> UnivariateIntPolynomial:
    """P_n = C_n - C_{n-2}, normalized so that P_n(t + 1/t) = t^n + t^-n; P_0 = 1."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n < 2:
        return chebyshev_second(n)
    return chebyshev_second(n) - chebyshev_second(n - 2)


def power(n: int) -> UnivariateIntPolynomial:
    return UnivariateIntPolynomial((0,) * n + (1,))


FAMILIES = {"z": power, "P": chebyshev_first, "C": chebyshev_second}
FAMILY_ALIASES = {
    "z": "z", "semicanonical": "z", "generic": "z",
    "P": "P", "canonical": "P",
    "C": "C", "CZ": "C", "cz": "C",
}


def _family(name: str):
    try:
        return FAMILIES[FAMILY_ALIASES[name]]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; use z, P or C") from None


def _coefficient_columns(family, size: int) -> list[list[int]]:
    """Matrix whose column n is the coefficient vector of family(n) in powers of x."""
    cols = []
    for n in range(size):
        c = list(family(n).coeffs)
        cols.append(c + [0] * (size - len(c)))
    return [[cols[n][i] for n in range(size)] for i in range(size)]


@dataclass(frozen=True)
class BaseChangeMatrix:
    from_family: str
    to_family: str
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def is_unipotent(self) -> bool:
        n = self.size
        return all(
            self.entries[i][j] == (1 if i == j else 0) for i in range(n) for j in range(i + 1)
        )

    def is_positive(self) -> bool:
        return all(x >= 0 for row in self.entries for x in row)

    def inverse(self) -> BaseChangeMatrix:
        inv = inverse_rational([list(r) for r in self.entries])
        if any(x.denominator != 1 for row in inv for x in row):
            raise ArithmeticError("base change has no integral inverse")
        rows = tuple(tuple(int(x) for x in row) for row in inv)
        return BaseChangeMatrix(self.to_family, self.from_family, rows)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def base_change_matrix(from_family: str, to_family: str, n: int) -> BaseChangeMatrix:
    """(n+1) x (n+1) matrix M with to(k) = sum_i M[i][k] from(i)."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    size = n + 1
    src = _coefficient_columns(_family(from_family), size)
    dst = _coefficient_columns(_family(to_family), size)
    src_inv = inverse_rational(src)
    prod = [[sum(src_inv[i][k] * dst[k][j] for k in range(size)) for j in range(size)] for i in range(size)]
    if any(x.denominator != 1 for row in prod for x in row):
        raise ArithmeticError("base change is not integral")
    rows = tuple(tuple(int(x) for x in row) for row in prod)
    return BaseChangeMatrix(FAMILY_ALIASES[from_family], FAMILY_ALIASES[to_family], rows)


def expansion_coefficients(n: int) -> list[int]:
    """lambda_{i,n} with z^n = sum_i lambda_{i,n} P_i, via P_1 P_i = P_{i-1} + P_{i+1} and P_1^2 = 2 + P_2."""
    lam = [1]
    for _ in range(n):
        new = [0] * (len(lam) + 1)
        for i, c in enumerate(lam):
            if c == 0:
                continue
            if i == 0:
                new[1] += c
            elif i == 1:
                new[0] += 2 * c
                new[2] += c
            else:
                new[i - 1] += c
                new[i + 1] += c
        lam = new
    return lam


def kronecker_z() -> LaurentPolynomial:
    """(1 + u1^2 + u2^2) / (u1 u2)."""
    names = variables_for(kronecker())
    return LaurentPolynomial(names, {(-1, -1): 1, (1, -1): 1, (-1, 1): 1})


def kronecker_basis_element(which: str, n: int) -> LaurentPolynomial:
    """Element of index n in the imaginary part of the chosen basis, as a Laurent polynomial."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    poly = _family(which)(n)
    z = kronecker_z()
    return _evaluate(poly.coeffs, z)


def _evaluate(coeffs: Sequence[int], z: LaurentPolynomial) -> LaurentPolynomial:
    acc = LaurentPolynomial.zero(z.variables)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc
