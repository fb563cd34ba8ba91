"""Explicit indecomposable modules: strings, bands and rigid bricks of given dimension.

For quivers of type A and affine type A every indecomposable is a string
module (one per reduced walk up to inversion) or a band module.  Other small
quivers are handled by a seeded search for a brick with 0/1 entries.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .quiver import DimVector, Quiver, QuiverError, classify_type, is_real_root
from .representation import (
    DecoratedObject,
    Letter,
    Representation,
    band_module,
    endomorphism_dimension,
    ext1_dimension,
    is_reduced_walk,
    string_module,
    thin_indecomposable,
    walk_vertices,
)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    obj: DecoratedObject

    @property
    def dimension(self) -> DimVector:
        return self.obj.dimension


def _letters_from(q: Quiver, v: int) -> list[tuple[Letter, int]]:
    out = []
    for k, (s, t) in enumerate(q.arrow_indices):
        if s == v:
            out.append(((k, 1), t))
        if t == v:
            out.append(((k, -1), s))
    return out


def reduced_walks(q: Quiver, max_length: int) -> Iterator[tuple[int, tuple[Letter, ...]]]:
    """All reduced walks of length <= max_length, each walk once up to inversion."""
    seen = set()
    for v in range(q.n):
        stack = [(v, ())]
        while stack:
            cur, letters = stack.pop()
            key = _walk_key(q, v, letters)
            if key not in seen:
                seen.add(key)
                yield v, letters
            if len(letters) == max_length:
                continue
            for letter, nxt in _letters_from(q, cur):
                new = letters + (letter,)
                if is_reduced_walk(new):
                    stack.append((nxt, new))


def _inverse_walk(q: Quiver, start: int, letters: tuple[Letter, ...]) -> tuple[int, tuple[Letter, ...]]:
    end = walk_vertices(q, start, letters)[-1]
    return end, tuple((k, -s) for k, s in reversed(letters))


def _walk_key(q: Quiver, start: int, letters: tuple[Letter, ...]):
    return min((start, letters), _inverse_walk(q, start, letters))


def band_arrows(q: Quiver) -> tuple[int, int]:
    """A special arrow and a partner of opposite orientation along the cycle.

    The special arrow is the last arrow of the longer oriented path, so on
    1->2->3->4, 1->4 the scalar sits on 3->4.
    """
    kind = classify_type(q)
    if not kind.is_affine_a:
        raise QuiverError("bands are used for affine type A only")
    if q.n == 2:
        return 0, 1
    # walk the cycle and split arrows by direction of traversal
    adj = {i: [] for i in range(q.n)}
    for k, (s, t) in enumerate(q.arrow_indices):
        adj[s].append((k, t))
        adj[t].append((k, s))
    along, against = [], []
    cur, prev_arrow = 0, None
    for _ in range(q.n):
        k, nxt = next((k, x) for k, x in adj[cur] if k != prev_arrow)
        (along if q.arrow_indices[k][0] == cur else against).append(k)
        cur, prev_arrow = nxt, k
    if len(along) < len(against):
        along, against = against, along
    return max(along), min(against)


def string_modules(q: Quiver, max_total_dim: int) -> list[tuple[str, Representation]]:
    out = []
    for start, letters in reduced_walks(q, max_total_dim - 1):
        m = string_module(q, start, letters)
        out.append((_walk_name(q, start, letters), m))
    return out


def _walk_name(q: Quiver, start: int, letters) -> str:
    if not letters:
        return f"S{q.vertices[start]}"
    parts = []
    for k, s in letters:
        a, b = q.arrows[k]
        parts.append(f"a{k}" if s > 0 else f"a{k}'")
    return f"string[{q.vertices[start]}:{' '.join(parts)}]"


def indecomposable_corpus(q: Quiver, max_total_dim: int, include_shifts: bool = True) -> list[CorpusEntry]:
    """Indecomposable decorated objects with dimension sum at most max_total_dim."""
    kind = classify_type(q)
    out: list[CorpusEntry] = []
    if include_shifts:
        for i in range(q.n):
            out.append(CorpusEntry(f"P{q.vertices[i]}[1]", DecoratedObject.shifted_projective(q, i)))
    if kind.letter == "A":
        for name, m in string_modules(q, max_total_dim):
            out.append(CorpusEntry(name, DecoratedObject.of_module(m)))
        if kind.is_affine:
            special, partner = band_arrows(q)
            n = 1
            while n * q.n <= max_total_dim:
                m = band_module(q, n, 1, special, partner)
                out.append(CorpusEntry(f"band[{n}, lambda=1]", DecoratedObject.of_module(m)))
                n += 1
        return out
    if not kind.is_dynkin:
        raise QuiverError("corpus generation covers Dynkin quivers and affine type A")
    from .quiver import positive_roots_up_to

    for d, _ in positive_roots_up_to(q, (max_total_dim,) * q.n):
        if sum(d) <= max_total_dim:
            out.append(CorpusEntry(f"M{list(d)}", DecoratedObject.of_module(rigid_brick(q, d))))
    return out


def rigid_brick(q: Quiver, d: Sequence[int], seed: int = 0, attempts: int = 4000) -> Representation:
    """A representation of a real Schur root with End = k, hence the rigid indecomposable.

    Thin vectors use the all-ones representation; otherwise 0/1 matrices are
    sampled until End has dimension one over Q.
    """
    d = tuple(d)
    if not is_real_root(q, d):
        raise QuiverError(f"{d} is not a real root")
    if all(x <= 1 for x in d):
        m = thin_indecomposable(q, d)
        if endomorphism_dimension(m) == 1:
            return m
    kind = classify_type(q)
    if kind.letter == "A":
        m = _string_with_dimension(q, d)
        if m is not None and endomorphism_dimension(m) == 1:
            return m
    rng = random.Random(seed)
    for _ in range(attempts):
        maps = []
        for s, t in q.arrow_indices:
            maps.append(tuple(tuple(rng.randint(0, 1) for _ in range(d[s])) for _ in range(d[t])))
        m = Representation(q, d, tuple(maps))
        if endomorphism_dimension(m) == 1:
            return m
    raise QuiverError(f"no brick of dimension {d} found")


@lru_cache(maxsize=None)
def _strings_by_dimension(q: Quiver, total: int) -> dict[DimVector, list[Representation]]:
    table: dict[DimVector, list[Representation]] = {}
    for start, letters in reduced_walks(q, total - 1):
        m = string_module(q, start, letters)
        table.setdefault(m.dims, []).append(m)
    return table


def _string_with_dimension(q: Quiver, d: DimVector) -> Representation | None:
    for m in _strings_by_dimension(q, sum(d)).get(d, []):
        if ext1_dimension(m, m) == 0:
            return m
    return None


def rigid_indecomposables(q: Quiver, box: Sequence[int], max_total_dim: int | None = None) -> list[CorpusEntry]:
    """Rigid indecomposable decorated objects whose extended dimension lies in [-1, box]."""
    total = max_total_dim if max_total_dim is not None else sum(box)
    out = []
    for entry in indecomposable_corpus(q, total):
        obj = entry.obj
        d = obj.dimension
        if any(x > b for x, b in zip(d, box)):
            continue
        m = obj.module
        if m.is_zero() or ext1_dimension(m, m) == 0:
            out.append(entry)
    return out


def all_indecomposables_upto(q: Quiver, max_total_dim: int) -> list[CorpusEntry]:
    return indecomposable_corpus(q, max_total_dim)


def grid(bound: Sequence[int], lower: Sequence[int] | None = None) -> Iterator[DimVector]:
    lower = lower or [0] * len(bound)
    return itertools.product(*(range(lo, b + 1) for lo, b in zip(lower, bound)))
