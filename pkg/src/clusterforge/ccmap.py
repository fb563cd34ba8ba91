"""The Caldero-Chapoton map on decorated objects and the checks built on it."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .fourier_motzkin import in_cone
from .grassmannian import grassmannian_euler_char, sub_dimension_vectors
from .laurent import LaurentPolynomial, denominator_vector
from .linalg import rank_mod, rank_rational
from .quiver import Quiver, QuiverError
from .representation import DecoratedObject, Representation


def variables_for(q: Quiver, letter: str = "u") -> tuple[str, ...]:
    return tuple(f"{letter}{v}" for v in q.vertices)


def cc_exponent(q: Quiver, d: Sequence[int], e: Sequence[int]) -> tuple[int, ...]:
    """Exponent of u_i in the e-term: -<e, alpha_i> - <alpha_i, d - e>."""
    f = [x - y for x, y in zip(d, e)]
    out = []
    for i in range(q.n):
        a = q.simple(i)
        out.append(-q.euler(e, a) - q.euler(a, f))
    return tuple(out)


@lru_cache(maxsize=None)
def cc_map_module(m: Representation) -> LaurentPolynomial:
    q = m.quiver
    terms: dict[tuple[int, ...], int] = {}
    for e in sub_dimension_vectors(m.dims):
        chi = grassmannian_euler_char(m, e)
        if chi:
            exp = cc_exponent(q, m.dims, e)
            terms[exp] = terms.get(exp, 0) + chi
    return LaurentPolynomial(variables_for(q), terms)


def cc_map(obj: DecoratedObject | Representation) -> LaurentPolynomial:
    """X_M for a module or a decorated object; P_i[1] contributes u_i."""
    if isinstance(obj, Representation):
        return cc_map_module(obj)
    x = cc_map_module(obj.module)
    if any(obj.shifts):
        x = x.shift(obj.shifts)
    return x


def verify_denominator_theorem(obj: DecoratedObject | Representation) -> bool:
    if isinstance(obj, Representation):
        obj = DecoratedObject.of_module(obj)
    return denominator_vector(cc_map(obj)) == obj.dimension


def support_cone_apex(obj: DecoratedObject) -> tuple[int, ...]:
    q = obj.quiver
    return tuple(-q.euler(q.simple(i), obj.module.dims) + obj.shifts[i] for i in range(q.n))


def support_cone_check(obj: DecoratedObject | Representation) -> bool:
    """Every exponent of X_M lies in apex + cone(-B alpha_i) and the apex coefficient is 1."""
    if isinstance(obj, Representation):
        obj = DecoratedObject.of_module(obj)
    q = obj.quiver
    if q.has_multiple_arrows():
        raise QuiverError("support cones need a quiver without multiple arrows")
    b = q.exchange_matrix
    # the e-term exponent minus the apex is -B e, so the edges are the -B alpha_i
    gens = [tuple(-b[j][i] for j in range(q.n)) for i in range(q.n)]
    apex = support_cone_apex(obj)
    x = cc_map(obj)
    if x.coefficient(apex) != 1:
        return False
    for exp in x.terms:
        if not in_cone([a - c for a, c in zip(exp, apex)], gens):
            return False
    return True


def coefficient_matrix(fs: Sequence[LaurentPolynomial]) -> list[list[int]]:
    support = sorted({e for f in fs for e in f.terms})
    col = {e: j for j, e in enumerate(support)}
    rows = []
    for f in fs:
        row = [0] * len(support)
        for e, c in f.terms.items():
            row[col[e]] = c
        rows.append(row)
    return rows


_CERT_PRIME = (1 << 61) - 1


def linear_independence(fs: Sequence[LaurentPolynomial]) -> bool:
    """Exact rank test over Q; a full rank modulo a large prime already certifies it."""
    if not fs:
        raise ValueError("need at least one polynomial")
    rows = coefficient_matrix(fs)
    if rank_mod(rows, _CERT_PRIME) == len(fs):
        return True
    return rank_rational(rows) == len(fs)
