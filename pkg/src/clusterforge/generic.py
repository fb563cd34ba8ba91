"""Canonical decompositions, generic variables X_d and the generic set B'(Q).

For Dynkin and affine quivers the Schur roots below a vector are explicit:
every positive real root is Schur except the regular ones lying above delta,
and delta is the only imaginary Schur root.  A canonical decomposition is a
multiset of Schur roots summing to d whose witnesses have no extensions in
either direction; it is found by backtracking and is unique when it exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .ccmap import cc_map, variables_for
from .corpus import rigid_brick
from .laurent import LaurentPolynomial
from .linalg import solve_integer_certified, solve_rational
from .quiver import DimVector, Quiver, QuiverError, classify_type, minimal_imaginary_root
from .representation import Representation, ext1_dimension


class DecompositionError(ValueError):
    """No decomposition into Schur roots with vanishing extensions was found."""


@dataclass(frozen=True)
class CanonicalDecomposition:
    d: DimVector
    summands: tuple[tuple[DimVector, int], ...]  # real Schur roots with multiplicities
    delta_multiplicity: int = 0

    def flat(self, delta: DimVector | None = None) -> list[DimVector]:
        out = [e for e, m in self.summands for _ in range(m)]
        if self.delta_multiplicity:
            out += [delta] * self.delta_multiplicity
        return out

    def __str__(self) -> str:
        parts = []
        if self.delta_multiplicity:
            parts.append(f"delta^{self.delta_multiplicity}")
        for e, m in self.summands:
            body = "(" + ",".join(map(str, e)) + ")"
            parts.append(body if m == 1 else f"{body}^{m}")
        return " + ".join(parts) if parts else "0"


def _supported(q: Quiver) -> str:
    kind = classify_type(q)
    if kind.is_dynkin:
        return "dynkin"
    if kind.is_affine:
        return "affine"
    raise QuiverError("canonical decompositions are implemented for Dynkin and affine quivers")


def is_real_schur(q: Quiver, e: Sequence[int]) -> bool:
    e = tuple(e)
    if not any(e) or any(x < 0 for x in e) or q.quadratic(e) != 1:
        return False
    if classify_type(q).is_dynkin:
        return True
    delta = minimal_imaginary_root(q)
    if q.euler(delta, e) != 0:
        return True
    return not all(a >= b for a, b in zip(e, delta))


@lru_cache(maxsize=None)
def schur_roots_below(q: Quiver, d: DimVector) -> tuple[DimVector, ...]:
    """Real Schur roots e <= d, largest first."""
    out = [e for e in itertools.product(*(range(x + 1) for x in d)) if is_real_schur(q, e)]
    out.sort(key=lambda e: (-sum(e), e))
    return tuple(out)


@lru_cache(maxsize=None)
def witness(q: Quiver, e: DimVector) -> Representation:
    """The rigid indecomposable of a real Schur root."""
    return rigid_brick(q, e)


@lru_cache(maxsize=None)
def _generic_delta(q: Quiver) -> Representation:
    from .affine import default_homogeneous

    return default_homogeneous(q)


@lru_cache(maxsize=None)
def _ext_free(q: Quiver, a: DimVector, b: DimVector) -> bool:
    """Generic Ext^1 vanishes in both directions between the Schur roots a and b."""
    delta = minimal_imaginary_root(q) if classify_type(q).is_affine else None
    if a == delta and b == delta:
        return True
    ma = _generic_delta(q) if a == delta else witness(q, a)
    mb = _generic_delta(q) if b == delta else witness(q, b)
    return ext1_dimension(ma, mb) == 0 and ext1_dimension(mb, ma) == 0


@lru_cache(maxsize=None)
def canonical_decomposition(q: Quiver, d: Sequence[int]) -> CanonicalDecomposition:
    d = tuple(int(x) for x in d)
    if any(x < 0 for x in d):
        raise ValueError("canonical decomposition needs a nonnegative vector")
    kind = _supported(q)
    if not any(d):
        return CanonicalDecomposition(d, ())
    delta = minimal_imaginary_root(q) if kind == "affine" else None
    roots = list(schur_roots_below(q, d))
    if delta is not None and all(a >= b for a, b in zip(d, delta)):
        roots = [delta] + roots
    found = _search(q, d, roots, 0, [])
    if found is None:
        raise DecompositionError(f"no canonical decomposition found for {d}")
    ndelta = sum(1 for e in found if e == delta)
    counts: dict[DimVector, int] = {}
    for e in found:
        if e != delta:
            counts[e] = counts.get(e, 0) + 1
    return CanonicalDecomposition(d, tuple(sorted(counts.items())), ndelta)


def _search(q: Quiver, rest: DimVector, roots: list[DimVector], start: int, chosen: list[DimVector]):
    if not any(rest):
        return list(chosen)
    for k in range(start, len(roots)):
        e = roots[k]
        if any(a > b for a, b in zip(e, rest)):
            continue
        if not all(_ext_free(q, e, f) for f in set(chosen)):
            continue
        chosen.append(e)
        # the same root may repeat, so the next search starts at k
        found = _search(q, tuple(a - b for a, b in zip(rest, e)), roots, k, chosen)
        chosen.pop()
        if found is not None:
            return found
    return None


@dataclass(frozen=True)
class GenericBasisElement:
    d: tuple[int, ...]
    value: LaurentPolynomial
    kind: str  # "cluster_monomial" or "z_power_times_rigid_regular"
    delta_multiplicity: int = 0
    rigid_part: tuple[DimVector, ...] = ()

    def describe(self) -> str:
        if self.kind == "cluster_monomial":
            return "cluster monomial"
        rest = " + ".join("(" + ",".join(map(str, e)) + ")" for e in self.rigid_part)
        return f"z^{self.delta_multiplicity}" + (f" * X[{rest}]" if rest else "")


@lru_cache(maxsize=None)
def _root_value(q: Quiver, e: DimVector) -> LaurentPolynomial:
    return cc_map(witness(q, e))


def generic_variable(q: Quiver, d: Sequence[int]) -> GenericBasisElement:
    """X_d = X_{[d]_+} * prod over d_i < 0 of u_i^{-d_i}, with X_{[d]_+} from the canonical decomposition."""
    d = tuple(int(x) for x in d)
    names = variables_for(q)
    pos = tuple(max(x, 0) for x in d)
    dec = canonical_decomposition(q, pos)
    value = LaurentPolynomial.constant(names, 1)
    for e, m in dec.summands:
        value = value * _root_value(q, e) ** m
    if dec.delta_multiplicity:
        from .affine import homogeneous_character

        value = value * homogeneous_character(q) ** dec.delta_multiplicity
    shift = tuple(-min(x, 0) for x in d)
    if any(shift):
        value = value.shift(shift)
    if dec.delta_multiplicity:
        rigid = tuple(e for e, m in dec.summands for _ in range(m))
        return GenericBasisElement(d, value, "z_power_times_rigid_regular", dec.delta_multiplicity, rigid)
    return GenericBasisElement(d, value, "cluster_monomial")


def box_vectors(box: Sequence[int], lower: Sequence[int] | None = None) -> Iterator[DimVector]:
    lower = tuple(lower) if lower is not None else tuple(-1 for _ in box)
    return itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lower, box)))


def enumerate_generic_basis(q: Quiver, box: Sequence[int], lower: Sequence[int] | None = None) -> list[GenericBasisElement]:
    """All X_d with lower <= d <= box (lower defaults to -1 everywhere), sorted by d."""
    kind = classify_type(q)
    if not (kind.is_affine_a or kind.is_dynkin):
        raise QuiverError("basis enumeration needs tube data, available for affine type A and Dynkin quivers")
    return [generic_variable(q, d) for d in box_vectors(box, lower)]


def express_in_basis(target: LaurentPolynomial, elements: Sequence[GenericBasisElement]) -> dict[tuple[int, ...], int] | None:
    """Integer coefficients c_d with target = sum c_d X_d, or None if no rational solution is integral."""
    support = sorted({e for el in elements for e in el.value.terms} | set(target.terms))
    col = {e: j for j, e in enumerate(support)}
    # unknowns are the coefficients, one equation per monomial
    rows = [[0] * len(elements) for _ in support]
    for j, el in enumerate(elements):
        for e, c in el.value.terms.items():
            rows[col[e]][j] = c
    rhs = [target.coefficient(e) for e in support]
    fast = solve_integer_certified(rows, rhs)
    if fast is not None:
        return {el.d: x for el, x in zip(elements, fast) if x}
    sol = solve_rational(rows, rhs)
    if sol is None or any(Fraction(x).denominator != 1 for x in sol):
        return None
    return {el.d: int(x) for el, x in zip(elements, sol) if x}
