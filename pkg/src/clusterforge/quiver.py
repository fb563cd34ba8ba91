"""Quivers, their bilinear forms and root data, reflections and grading forms.

Dimension vectors are tuples indexed by vertex position (the order of
``Quiver.vertices``), never by vertex label.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence

from .fourier_motzkin import solve_inequalities
from .linalg import inverse_rational, matmul, nullspace_rational, transpose

DimVector = tuple[int, ...]


class QuiverError(ValueError):
    """Input quiver is outside the domain of an operation."""


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex labels")
        known = set(self.vertices)
        for s, t in self.arrows:
            if s not in known or t not in known:
                raise QuiverError(f"arrow ({s}, {t}) uses an unknown vertex")

    # construction and serialization

    @classmethod
    def from_arrows(cls, arrows: Iterable[Sequence[int]], vertices: Iterable[int] | None = None) -> Quiver:
        arrows = [tuple(a) for a in arrows]
        if vertices is None:
            vertices = sorted({v for a in arrows for v in a})
        return cls(tuple(vertices), tuple(arrows))

    @classmethod
    def from_json(cls, data) -> Quiver:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["vertices"]), tuple(tuple(a) for a in data["arrows"]))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "arrows": [list(a) for a in self.arrows]}

    # indexing

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index(self, vertex: int) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise QuiverError(f"unknown vertex {vertex}") from None

    @cached_property
    def arrow_indices(self) -> tuple[tuple[int, int], ...]:
        """Arrows as (source position, target position)."""
        return tuple((self._index[s], self._index[t]) for s, t in self.arrows)

    def incoming(self, i: int) -> list[int]:
        """Indices of arrows ending at vertex position i."""
        return [k for k, (_, t) in enumerate(self.arrow_indices) if t == i]

    def outgoing(self, i: int) -> list[int]:
        return [k for k, (s, _) in enumerate(self.arrow_indices) if s == i]

    def simple(self, i: int) -> DimVector:
        return tuple(int(j == i) for j in range(self.n))

    # combinatorics

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except QuiverError:
            return False
        return True

    def topological_order(self) -> list[int]:
        """Vertex positions ordered so that every arrow goes forward."""
        indeg = [0] * self.n
        for _, t in self.arrow_indices:
            indeg[t] += 1
        queue = deque(i for i in range(self.n) if indeg[i] == 0)
        order = []
        while queue:
            i = queue.popleft()
            order.append(i)
            for k in self.outgoing(i):
                t = self.arrow_indices[k][1]
                indeg[t] -= 1
                if indeg[t] == 0:
                    queue.append(t)
        if len(order) != self.n:
            raise QuiverError("quiver has an oriented cycle")
        return order

    def is_connected(self) -> bool:
        return self.is_connected_on(range(self.n))

    def is_connected_on(self, support: Iterable[int]) -> bool:
        support = set(support)
        if not support:
            return False
        start = next(iter(support))
        seen = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for s, t in self.arrow_indices:
                for a, b in ((s, t), (t, s)):
                    if a == i and b in support and b not in seen:
                        seen.add(b)
                        stack.append(b)
        return seen == support

    def is_sink(self, i: int) -> bool:
        return not self.outgoing(i)

    def is_source(self, i: int) -> bool:
        return not self.incoming(i)

    def sinks(self) -> list[int]:
        return [i for i in range(self.n) if self.is_sink(i)]

    def sources(self) -> list[int]:
        return [i for i in range(self.n) if self.is_source(i)]

    def has_multiple_arrows(self) -> bool:
        c = Counter(frozenset(a) for a in self.arrow_indices)
        return any(v > 1 for v in c.values())

    def opposite(self) -> Quiver:
        return Quiver(self.vertices, tuple((t, s) for s, t in self.arrows))

    def reflect(self, i: int) -> Quiver:
        """Reverse every arrow at the sink or source in position i."""
        if not (self.is_sink(i) or self.is_source(i)):
            raise QuiverError(f"vertex {self.vertices[i]} is neither a sink nor a source")
        v = self.vertices[i]
        return Quiver(self.vertices, tuple((t, s) if v in (s, t) else (s, t) for s, t in self.arrows))

    @cached_property
    def exchange_matrix(self) -> tuple[tuple[int, ...], ...]:
        """b_ij = #(i -> j) - #(j -> i)."""
        b = [[0] * self.n for _ in range(self.n)]
        for s, t in self.arrow_indices:
            b[s][t] += 1
            b[t][s] -= 1
        return tuple(tuple(r) for r in b)

    # forms

    @cached_property
    def euler_matrix(self) -> tuple[tuple[int, ...], ...]:
        e = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        for s, t in self.arrow_indices:
            e[s][t] -= 1
        return tuple(tuple(r) for r in e)

    def euler(self, a: Sequence[int], b: Sequence[int]) -> int:
        """<a, b> = sum a_i b_i - sum over arrows a_s b_t."""
        val = sum(x * y for x, y in zip(a, b))
        for s, t in self.arrow_indices:
            val -= a[s] * b[t]
        return val

    def tits(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Symmetrized form (a, b) = <a, b> + <b, a>."""
        return self.euler(a, b) + self.euler(b, a)

    def quadratic(self, d: Sequence[int]) -> int:
        return self.euler(d, d)

    @cached_property
    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Matrix C with <a, b> = -<b, C a>, that is C = -E^{-1} E^T."""
        e = [list(r) for r in self.euler_matrix]
        c = matmul(inverse_rational(e), transpose(e))
        out = []
        for row in c:
            if any(Fraction(x).denominator != 1 for x in row):
                raise QuiverError("Coxeter matrix is not integral")
            out.append(tuple(-int(x) for x in row))
        return tuple(out)

    @cached_property
    def coxeter_inverse_matrix(self) -> tuple[tuple[int, ...], ...]:
        inv = inverse_rational([list(r) for r in self.coxeter_matrix])
        return tuple(tuple(int(x) for x in row) for row in inv)

    def coxeter(self, d: Sequence[int], power: int = 1) -> DimVector:
        m = self.coxeter_matrix if power >= 0 else self.coxeter_inverse_matrix
        v = tuple(d)
        for _ in range(abs(power)):
            v = tuple(sum(m[i][j] * v[j] for j in range(self.n)) for i in range(self.n))
        return v

    def simple_reflection(self, i: int, d: Sequence[int]) -> DimVector:
        """s_i(d) = d - (d, alpha_i) alpha_i."""
        c = self.tits(d, self.simple(i))
        return tuple(x - c * int(j == i) for j, x in enumerate(d))

    def to_string(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


# type classification


@dataclass(frozen=True)
class QuiverType:
    family: str  # "Dynkin", "Affine" or "Wild"
    letter: str = ""
    rank: int = 0
    orientation: tuple[int, int] | None = None  # (r, s) for affine type A

    def __str__(self) -> str:
        if self.family == "Wild":
            return "Wild"
        if self.family == "Dynkin":
            return f"Dynkin {self.letter}{self.rank}"
        if self.letter == "A":
            r, s = self.orientation
            return f"Affine A~({r},{s})"
        return f"Affine {self.letter}~{self.rank}"

    @property
    def is_dynkin(self) -> bool:
        return self.family == "Dynkin"

    @property
    def is_affine(self) -> bool:
        return self.family == "Affine"

    @property
    def is_affine_a(self) -> bool:
        return self.family == "Affine" and self.letter == "A"


def _arm_lengths(adj: dict[int, set[int]], center: int) -> list[int]:
    arms = []
    for nb in adj[center]:
        length, prev, cur = 1, center, nb
        while len(adj[cur]) == 2:
            nxt = next(x for x in adj[cur] if x != prev)
            prev, cur = cur, nxt
            length += 1
        if len(adj[cur]) > 2:
            return []
        arms.append(length)
    return sorted(arms)


@lru_cache(maxsize=None)
def classify_type(q: Quiver) -> QuiverType:
    if not q.is_connected():
        raise QuiverError("quiver is not connected")
    if not q.is_acyclic():
        raise QuiverError("quiver is not acyclic")
    n = q.n
    edges = Counter(frozenset(a) for a in q.arrow_indices)
    if any(len(e) == 1 for e in edges):
        raise QuiverError("quiver has a loop")
    if any(m > 2 for m in edges.values()):
        return QuiverType("Wild")
    if any(m == 2 for m in edges.values()):
        if n == 2:
            return QuiverType("Affine", "A", 1, (1, 1))
        return QuiverType("Wild")
    adj: dict[int, set[int]] = {i: set() for i in range(n)}
    for e in edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    nedges = len(edges)
    if nedges == n:
        if all(len(adj[i]) == 2 for i in range(n)):
            r, s = _cycle_orientation(q)
            return QuiverType("Affine", "A", n - 1, (max(r, s), min(r, s)))
        return QuiverType("Wild")
    if nedges > n:
        return QuiverType("Wild")
    degrees = sorted((len(adj[i]) for i in range(n)), reverse=True)
    if n == 1 or degrees[0] <= 2:
        return QuiverType("Dynkin", "A", n)
    branch = [i for i in range(n) if len(adj[i]) >= 3]
    if len(branch) == 1:
        c = branch[0]
        if len(adj[c]) == 4:
            arms = _arm_lengths(adj, c)
            return QuiverType("Affine", "D", 4) if arms == [1, 1, 1, 1] else QuiverType("Wild")
        if len(adj[c]) > 4:
            return QuiverType("Wild")
        a, b, cc = _arm_lengths(adj, c)
        if a == 1 and b == 1:
            return QuiverType("Dynkin", "D", n)
        table = {(1, 2, 2): ("Dynkin", "E", 6), (1, 2, 3): ("Dynkin", "E", 7), (1, 2, 4): ("Dynkin", "E", 8),
                 (2, 2, 2): ("Affine", "E", 6), (1, 3, 3): ("Affine", "E", 7), (1, 2, 5): ("Affine", "E", 8)}
        if (a, b, cc) in table:
            fam, letter, rank = table[(a, b, cc)]
            return QuiverType(fam, letter, rank)
        return QuiverType("Wild")
    if len(branch) == 2 and all(len(adj[c]) == 3 for c in branch):
        leaves = lambda c: sum(1 for x in adj[c] if len(adj[x]) == 1)
        if all(leaves(c) == 2 for c in branch):
            return QuiverType("Affine", "D", n - 1)
    return QuiverType("Wild")


def _cycle_orientation(q: Quiver) -> tuple[int, int]:
    """Arrow counts along and against one traversal of the underlying cycle."""
    n = q.n
    adj = {i: [] for i in range(n)}
    for s, t in q.arrow_indices:
        adj[s].append(t)
        adj[t].append(s)
    cycle = [0]
    prev = None
    cur = 0
    while len(cycle) < n:
        nxt = next(x for x in adj[cur] if x != prev and x not in cycle)
        cycle.append(nxt)
        prev, cur = cur, nxt
    along = 0
    arrows = list(q.arrow_indices)
    for k in range(n):
        a, b = cycle[k], cycle[(k + 1) % n]
        if (a, b) in arrows:
            along += 1
    return along, n - along


@lru_cache(maxsize=None)
def minimal_imaginary_root(q: Quiver) -> DimVector:
    if not classify_type(q).is_affine:
        raise QuiverError("minimal imaginary root requires an affine quiver")
    sym = [[q.tits(q.simple(i), q.simple(j)) for j in range(q.n)] for i in range(q.n)]
    kernel = nullspace_rational(sym, q.n)
    if len(kernel) != 1:
        raise QuiverError("Tits form radical is not one-dimensional")
    v = [int(x) for x in kernel[0]]
    g = 0
    for x in v:
        g = gcd(g, x)
    v = [x // g for x in v]
    if v[0] < 0:
        v = [-x for x in v]
    return tuple(v)


def defect(q: Quiver, d: Sequence[int]) -> int:
    return q.euler(minimal_imaginary_root(q), d)


def positive_roots_up_to(q: Quiver, bound: Sequence[int]) -> list[tuple[DimVector, str]]:
    """All positive roots below the bound, tagged 'real' or 'imaginary'."""
    kind = classify_type(q)
    if kind.family == "Wild":
        raise QuiverError("root enumeration needs a Dynkin or affine quiver")
    out = []
    for d in itertools.product(*(range(b + 1) for b in bound)):
        if not any(d):
            continue
        val = q.quadratic(d)
        if val == 1:
            out.append((tuple(d), "real"))
        elif val == 0 and kind.is_affine:
            out.append((tuple(d), "imaginary"))
    return out


def is_real_root(q: Quiver, d: Sequence[int]) -> bool:
    return any(d) and q.quadratic(d) == 1 and (all(x >= 0 for x in d) or all(x <= 0 for x in d))


def reflect_quiver(q: Quiver, i: int) -> Quiver:
    return q.reflect(i)


def sigma_on_dimension(q: Quiver, i: int, d: Sequence[int]) -> DimVector:
    """Piecewise-linear reflection at the sink or source i on integer vectors.

    Summands of the positive part are moved by the simple reflection, a
    shifted projective at i becomes the simple at i, other shifted
    projectives stay put.  Since s_i is linear and fixes the summand rule for
    alpha_i, the summand-wise definition collapses to
    s_i([d]_+) + [d]_- - 2 min(d_i, 0) alpha_i.
    """
    if not (q.is_sink(i) or q.is_source(i)):
        raise QuiverError(f"vertex {q.vertices[i]} is neither a sink nor a source")
    if classify_type(q).family == "Wild":
        raise QuiverError("reflection of dimension vectors needs a Dynkin or affine quiver")
    pos = tuple(max(x, 0) for x in d)
    neg = tuple(min(x, 0) for x in d)
    s = q.simple_reflection(i, pos)
    out = [a + b for a, b in zip(s, neg)]
    out[i] += -2 * min(d[i], 0)
    return tuple(out)


# gradability


def find_grading_form(q: Quiver) -> tuple[int, ...] | None:
    """Integer covector eps with eps(B alpha_i) < 0 for every vertex, or None."""
    b = q.exchange_matrix
    n = q.n
    # eps . column_i <= -1 is equivalent to strict negativity up to scaling
    rows = [([b[j][i] for j in range(n)], -1) for i in range(n)]
    sol = solve_inequalities(rows, n)
    if sol is None:
        return None
    from math import lcm

    den = 1
    for x in sol:
        den = lcm(den, x.denominator)
    eps = tuple(int(x * den) for x in sol)
    g = 0
    for x in eps:
        g = gcd(g, x)
    if g > 1:
        eps = tuple(x // g for x in eps)
    assert all(sum(eps[j] * b[j][i] for j in range(n)) < 0 for i in range(n))
    return eps


def reflection_class(q: Quiver, max_steps: int) -> list[tuple[Quiver, tuple[int, ...]]]:
    """Quivers reachable by at most max_steps sink/source reflections, with a reflection path."""
    seen = {q: ()}
    queue = deque([q])
    while queue:
        cur = queue.popleft()
        path = seen[cur]
        if len(path) >= max_steps:
            continue
        for i in range(cur.n):
            if cur.is_sink(i) or cur.is_source(i):
                nxt = cur.reflect(i)
                if nxt not in seen:
                    seen[nxt] = path + (i,)
                    queue.append(nxt)
    return list(seen.items())


def graded_in_reflection_class(q: Quiver, max_steps: int = 8) -> tuple[Quiver, tuple[int, ...], tuple[int, ...]] | None:
    """First quiver in the reflection class with a grading form, with the path and the form."""
    for cand, path in reflection_class(q, max_steps):
        eps = find_grading_form(cand)
        if eps is not None:
            return cand, path, eps
    return None
