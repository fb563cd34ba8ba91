"""Dense exact linear algebra over Q and over prime fields, plus interpolation.

Matrices are lists of rows.  Rational routines use Fraction; modular routines
use plain ints reduced mod p.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Matrix = list[list]


class InterpolationError(ValueError):
    """Point counts do not come from a single integer polynomial of the given degree."""


def _as_fraction_rows(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref_rational(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    m = _as_fraction_rows(rows)
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_rational(rows: Sequence[Sequence]) -> int:
    return len(rref_rational(rows)[1])


def nullspace_rational(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}; each basis vector is scaled to integer entries."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref_rational(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(_primitive(v))
    return basis


def _primitive(v: list[Fraction]) -> list[Fraction]:
    from math import gcd, lcm

    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    g = g or 1
    return [Fraction(x // g) for x in ints]


def solve_rational(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of A x = b, or None when the system is inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    red, pivots = rref_rational(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[-1]
    return x


def inverse_rational(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref_rational(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


# prime fields


def rref_mod(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    m = [[x % p for x in row] for row in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        if inv != 1:
            m[r] = [x * inv % p for x in m[r]]
        rowr = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [(x - f * y) % p for x, y in zip(m[i], rowr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref_mod(rows, p)[1])


def nullspace_mod(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref_mod(rows, p)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = -row[f] % p
        basis.append(v)
    return basis


def solve_integer_certified(rows: Sequence[Sequence[int]], rhs: Sequence[int], p: int = (1 << 61) - 1) -> list[int] | None:
    """An integer solution of A x = b found modulo p and then checked exactly over the integers.

    Residues are lifted to the symmetric range (-p/2, p/2).  Returns None if
    the system is inconsistent mod p or the lifted vector fails the exact
    check; callers fall back to rational elimination in that case.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref_mod(aug, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, pc in zip(red, pivots):
        v = row[-1]
        x[pc] = v - p if v > p // 2 else v
    for r, b in zip(rows, rhs):
        if sum(a * y for a, y in zip(r, x) if a) != b:
            return None
    return x


def reduce_mod(x, p: int) -> int:
    """Image of a rational number in F_p; raises when p divides the denominator."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ZeroDivisionError(f"{p} divides the denominator of {x}")
    return x.numerator * pow(x.denominator, p - 2, p) % p


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def primes(start: int = 2):
    n = start
    while True:
        if is_prime(n):
            yield n
        n += 1


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


# interpolation


def interpolate_integer_polynomial(points: Sequence[tuple[int, int]], degree_bound: int) -> list[int]:
    """Coefficients (lowest degree first) of the integer polynomial through the points.

    The first degree_bound+1 points determine the polynomial; any further
    points must agree with it.
    """
    qs = [q for q, _ in points]
    if len(set(qs)) != len(qs):
        raise InterpolationError("interpolation nodes must be distinct")
    if len(points) < degree_bound + 1:
        raise InterpolationError(f"need {degree_bound + 1} points, got {len(points)}")
    base = points[: degree_bound + 1]
    # Newton divided differences, then expansion into the monomial basis
    xs = [Fraction(q) for q, _ in base]
    coef = [Fraction(c) for _, c in base]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * a for s, a in zip(shifted, poly)]
        poly[0] += coef[i]
    if any(c.denominator != 1 for c in poly):
        raise InterpolationError("interpolating polynomial has non-integral coefficients")
    ints = [int(c) for c in poly]
    while len(ints) > 1 and ints[-1] == 0:
        ints.pop()
    for q, c in points[degree_bound + 1:]:
        if evaluate_polynomial(ints, q) != c:
            raise InterpolationError(f"extra point ({q}, {c}) disagrees with the interpolant")
    return ints


def evaluate_polynomial(coeffs: Sequence[int], x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
