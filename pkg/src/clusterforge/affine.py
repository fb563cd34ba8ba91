"""Tubes of affine quivers of type A: quasi-simples, homogeneous members and tube characters.

Quasi-simples of an exceptional tube of rank p are found as Coxeter orbits
of thin, defect-zero real roots whose orbit sums to delta.  They are ordered
so that c(e_i) = e_{i-1}, i.e. E_{i+1} is the inverse AR-translate of E_i, and
E_i^{(n)} has quasi-composition factors E_i, E_{i+1}, ..., E_{i+n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .ccmap import cc_map, variables_for
from .corpus import band_arrows
from .laurent import LaurentPolynomial, NotDivisibleError, divide_exact
from .quiver import DimVector, Quiver, QuiverError, classify_type, defect, minimal_imaginary_root
from .representation import (
    Representation,
    endomorphism_dimension,
    hom_dimension,
    thin_indecomposable,
)


class ExceptionalParameterError(ValueError):
    """The requested lambda gives a delta-module lying in an exceptional tube."""

    def __init__(self, lam, tube: int, socle: int):
        super().__init__(f"lambda={_fmt_lambda(lam)} lies in exceptional tube {tube} with quasi-socle E_{socle}")
        self.lam = lam
        self.tube = tube
        self.socle = socle


class TubeRecursionError(ArithmeticError):
    """A mesh relation produced an inexact division."""


def _fmt_lambda(lam) -> str:
    return "inf" if lam is None else str(lam)


@dataclass(frozen=True)
class TubeDescriptor:
    rank: int
    quasi_simple_dims: tuple[DimVector, ...]
    homogeneous: bool = False

    def dim(self, i: int, n: int) -> DimVector:
        """Dimension vector of E_i^{(n)}."""
        p = self.rank
        size = len(self.quasi_simple_dims[0])
        out = [0] * size
        for k in range(n):
            e = self.quasi_simple_dims[(i + k) % p]
            out = [a + b for a, b in zip(out, e)]
        return tuple(out)

    def to_json(self) -> dict:
        return {"rank": self.rank, "quasi_simples": [list(e) for e in self.quasi_simple_dims],
                "homogeneous": self.homogeneous}


def _require_affine_a(q: Quiver) -> None:
    kind = classify_type(q)
    if not kind.is_affine_a:
        raise QuiverError(f"expected a quiver of affine type A, got {kind}")


def _thin_vectors_below(delta: DimVector):
    n = len(delta)
    for mask in range(1, 1 << n):
        v = tuple((mask >> i) & 1 for i in range(n))
        if v != delta:
            yield v


@lru_cache(maxsize=None)
def exceptional_tubes(q: Quiver) -> tuple[TubeDescriptor, ...]:
    """Exceptional tubes of an affine type A quiver, ordered by rank then by first quasi-simple."""
    _require_affine_a(q)
    delta = minimal_imaginary_root(q)
    candidates = sorted(
        v for v in _thin_vectors_below(delta)
        if q.quadratic(v) == 1 and q.euler(delta, v) == 0
    )
    seen: set[DimVector] = set()
    tubes = []
    for e in candidates:
        if e in seen:
            continue
        orbit = [e]
        while True:
            nxt = q.coxeter(orbit[-1], power=-1)
            if nxt == e:
                break
            orbit.append(nxt)
            if len(orbit) > q.n:
                break
        total = tuple(sum(col) for col in zip(*orbit))
        if total != delta or len(orbit) < 2:
            continue
        seen.update(orbit)
        tubes.append(TubeDescriptor(len(orbit), tuple(orbit)))
    tubes.sort(key=lambda t: (t.rank, t.quasi_simple_dims[0]))
    return tuple(tubes)


def quasi_simple_module(q: Quiver, tube: TubeDescriptor, i: int) -> Representation:
    return thin_indecomposable(q, tube.quasi_simple_dims[i % tube.rank])


def delta_module(q: Quiver, lam) -> Representation:
    """Thin delta-module with lam on the special arrow; None puts 0 on the partner arrow instead."""
    special, partner = band_arrows(q)
    delta = minimal_imaginary_root(q)
    if lam is None:
        m = thin_indecomposable(q, delta)
        maps = list(m.maps)
        maps[partner] = ((Fraction(0),),)
        return Representation(q, m.dims, tuple(maps))
    return thin_indecomposable(q, delta, special=(special, Fraction(lam)))


def classify_lambda(q: Quiver, lam) -> tuple[int, int] | None:
    """None when the delta-module for lam is homogeneous, else (tube index, socle index)."""
    _require_affine_a(q)
    m = delta_module(q, lam)
    for t, tube in enumerate(exceptional_tubes(q)):
        for i in range(tube.rank):
            if hom_dimension(quasi_simple_module(q, tube, i), m):
                return t, i
    return None


def homogeneous_regular(q: Quiver, lam=1) -> Representation:
    """Thin delta-module with the designated arrow set to lam (None for the point at infinity).

    The result is certified quasi-simple homogeneous: End = k and no nonzero
    map from any exceptional quasi-simple.
    """
    _require_affine_a(q)
    m = delta_module(q, lam)
    if endomorphism_dimension(m) != 1:
        raise ExceptionalParameterError(lam, -1, -1)
    where = classify_lambda(q, lam)
    if where is not None:
        raise ExceptionalParameterError(lam, *where)
    return m


@lru_cache(maxsize=None)
def default_homogeneous(q: Quiver) -> Representation:
    """The first certified homogeneous delta-module for lam = 1, 2, 3, ..."""
    lam = 1
    while True:
        try:
            return homogeneous_regular(q, lam)
        except ExceptionalParameterError:
            lam += 1


def homogeneous_character(q: Quiver) -> LaurentPolynomial:
    """z = X_{M_lambda} for a homogeneous lambda."""
    return cc_map(default_homogeneous(q))


@dataclass
class TubeCharacterTable:
    tube: TubeDescriptor
    chars: dict[tuple[int, int], LaurentPolynomial] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> LaurentPolynomial:
        i, n = key
        return self.chars[(i % self.tube.rank, n)]

    @property
    def max_length(self) -> int:
        return max(n for _, n in self.chars)


def tube_characters(q: Quiver, tube: TubeDescriptor, max_length: int,
                    base: Sequence[LaurentPolynomial] | None = None) -> TubeCharacterTable:
    """X_{E_i^{(n)}} for n <= max_length via X(i, n+1) = (X(i+1, n) X(i, n) - 1) / X(i+1, n-1).

    base overrides the quasi-simple characters; a homogeneous tube uses
    base = [z] and then X(0, n) = C_n(z).
    """
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    p = tube.rank
    if base is None:
        base = [cc_map(quasi_simple_module(q, tube, i)) for i in range(p)]
    names = base[0].variables
    one = LaurentPolynomial.constant(names, 1)
    table = TubeCharacterTable(tube)
    for i in range(p):
        table.chars[(i, 0)] = one
        table.chars[(i, 1)] = base[i]
    for n in range(1, max_length):
        for i in range(p):
            num = table[(i + 1, n)] * table[(i, n)] - one
            try:
                table.chars[(i, n + 1)] = divide_exact(num, table[(i + 1, n - 1)])
            except NotDivisibleError as exc:
                raise TubeRecursionError(f"mesh relation not exact at E_{i}^({n + 1})") from exc
    return table


def homogeneous_tube(q: Quiver) -> TubeDescriptor:
    return TubeDescriptor(1, (minimal_imaginary_root(q),), homogeneous=True)


def homogeneous_tube_characters(q: Quiver, max_length: int) -> TubeCharacterTable:
    return tube_characters(q, homogeneous_tube(q), max_length, base=[homogeneous_character(q)])


@dataclass(frozen=True)
class DifferenceReport:
    socle: int
    socle_dim: DimVector
    quotient_dim: DimVector
    x_me: LaurentPolynomial
    x_homogeneous: LaurentPolynomial
    x_quotient: LaurentPolynomial
    difference: LaurentPolynomial

    @property
    def passed(self) -> bool:
        return self.difference == self.x_quotient


def check_difference_property(q: Quiver, tube: TubeDescriptor) -> list[DifferenceReport]:
    """For each quasi-simple E compare X_{M_E} - X_{M_lambda} with X of q.rad(M_E)/E.

    M_E comes from the tube recursion; the quotient, of dimension
    delta - c(e) - e, is built directly as a thin module, with X = 1 when it
    is zero.
    """
    _require_affine_a(q)
    if tube.homogeneous:
        raise ValueError("the difference property concerns exceptional tubes")
    p = tube.rank
    table = tube_characters(q, tube, p)
    z = homogeneous_character(q)
    delta = minimal_imaginary_root(q)
    names = variables_for(q)
    out = []
    for i, e in enumerate(tube.quasi_simple_dims):
        ce = q.coxeter(e)
        quot = tuple(a - b - c for a, b, c in zip(delta, ce, e))
        if any(quot):
            xq = cc_map(thin_indecomposable(q, quot))
        else:
            xq = LaurentPolynomial.constant(names, 1)
        x_me = table[(i, p)]
        out.append(DifferenceReport(i, e, quot, x_me, z, xq, x_me - z))
    return out


def regular_defect_ok(q: Quiver, tube: TubeDescriptor) -> bool:
    return all(defect(q, e) == 0 and q.quadratic(e) == 1 for e in tube.quasi_simple_dims)
