"""Euler characteristics of quiver Grassmannians.

Thin modules are handled directly: every Grassmannian is a point or empty.
Other modules are handled by counting F_p-points for several primes,
interpolating the counting polynomial and evaluating it at q = 1.

Tree modules, whose coefficient quiver in the given basis is a tree with
entries 0/1, are handled by counting successor-closed subsets of that tree.
Giving each basis vector the arrow-count of its tree path from a root as a
degree, a torus with one factor per arrow acts on Gr_e(M).  When the degrees
at every vertex are pairwise distinct the fixed points are exactly the
coordinate subrepresentations; otherwise the module falls through to point
counting.

Point counting enumerates subspaces only on part of the quiver.  Vertices
whose neighbours are all fixed form an independent set; for those the
admissible subspaces are exactly the e-dimensional spaces between a forced
lower space W and a forced upper space Z, counted by a Gaussian binomial.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from .linalg import (
    InterpolationError,
    evaluate_polynomial,
    gaussian_binomial,
    interpolate_integer_polynomial,
    is_prime,
    nullspace_mod,
    rank_mod,
    rref_mod,
)
from .quiver import DimVector
from .representation import Representation, RepresentationError


class GrassmannianError(ArithmeticError):
    """Point counts could not be turned into an Euler characteristic."""


def sub_dimension_vectors(d: Sequence[int]) -> Iterator[DimVector]:
    return itertools.product(*(range(x + 1) for x in d))


# strategy A: thin modules


def thin_euler_char(m: Representation, e: Sequence[int]) -> int:
    for k, (s, t) in enumerate(m.quiver.arrow_indices):
        if e[s] and not e[t] and m.dims[t] and m.maps[k][0][0] != 0:
            return 0
    return 1


# strategy C: tree modules


def coefficient_quiver(m: Representation) -> tuple[list[tuple[int, int]], list[tuple[int, int, int]]] | None:
    """Basis vectors (vertex, index) and labelled edges (tail, head, arrow), or None if some entry is not 0 or 1."""
    nodes = [(v, b) for v in range(m.quiver.n) for b in range(m.dims[v])]
    pos = {x: k for k, x in enumerate(nodes)}
    edges = []
    for k, (s, t) in enumerate(m.quiver.arrow_indices):
        for r, row in enumerate(m.maps[k]):
            for c, x in enumerate(row):
                if x == 0:
                    continue
                if x != 1:
                    return None
                edges.append((pos[(s, c)], pos[(t, r)], k))
    return nodes, edges


def _is_tree(nnodes: int, edges: list[tuple[int, int]]) -> bool:
    if nnodes == 0 or len(edges) != nnodes - 1:
        return False
    parent = list(range(nnodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, _ in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def _merge(f: dict, g: dict, bound) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            if all(x <= y for x, y in zip(e, bound)):
                out[e] = out.get(e, 0) + c1 * c2
    return out


def _degrees_separate(nodes, edges: list[tuple[int, int, int]], narrows: int) -> bool:
    """Arrow-count degrees along the tree are distinct among basis vectors of each vertex."""
    adj: list[list[tuple[int, int, int]]] = [[] for _ in nodes]
    for a, b, k in edges:
        adj[a].append((b, k, 1))
        adj[b].append((a, k, -1))
    deg = {0: (0,) * narrows}
    stack = [0]
    while stack:
        x = stack.pop()
        for y, k, sign in adj[x]:
            if y not in deg:
                d = list(deg[x])
                d[k] += sign
                deg[y] = tuple(d)
                stack.append(y)
    seen = set()
    for x, d in deg.items():
        key = (nodes[x][0], d)
        if key in seen:
            return False
        seen.add(key)
    return True


@lru_cache(maxsize=None)
def tree_profile(m: Representation) -> dict[DimVector, int] | None:
    """Number of successor-closed basis subsets per dimension vector, or None if m is not a tree module."""
    if m.field is not None:
        return None
    cq = coefficient_quiver(m)
    if cq is None:
        return None
    nodes, edges = cq
    if not _is_tree(len(nodes), edges):
        return None
    n = m.quiver.n
    adj: list[list[tuple[int, bool]]] = [[] for _ in nodes]
    for a, b, _ in edges:
        adj[a].append((b, True))  # a -> b: a in S forces b in S
        adj[b].append((a, False))
    if not _degrees_separate(nodes, edges, len(m.quiver.arrows)):
        return None
    zero = (0,) * n
    # iterative post-order from node 0; for each node: generating functions with the node out / in
    order, parent, seen = [], {0: None}, {0}
    stack = [0]
    while stack:
        x = stack.pop()
        order.append(x)
        for y, _ in adj[x]:
            if y not in seen:
                seen.add(y)
                parent[y] = x
                stack.append(y)
    gf_out: dict[int, dict] = {}
    gf_in: dict[int, dict] = {}
    for x in reversed(order):
        unit = tuple(int(v == nodes[x][0]) for v in range(n))
        f_out = {zero: 1}
        f_in = {unit: 1}
        for y, forward in adj[x]:
            if parent.get(y) != x:
                continue
            child_any = dict(gf_out[y])
            for e, c in gf_in[y].items():
                child_any[e] = child_any.get(e, 0) + c
            if forward:
                # x -> y: x in forces y in; y in alone is allowed
                f_in = _merge(f_in, gf_in[y], m.dims)
                f_out = _merge(f_out, child_any, m.dims)
            else:
                # y -> x: y in forces x in
                f_in = _merge(f_in, child_any, m.dims)
                f_out = _merge(f_out, gf_out[y], m.dims)
        gf_out[x], gf_in[x] = f_out, f_in
    total = dict(gf_out[0])
    for e, c in gf_in[0].items():
        total[e] = total.get(e, 0) + c
    return total


# subspace enumeration over F_p


def subspaces_rref(m: int, k: int, p: int) -> Iterator[list[list[int]]]:
    """All k-dimensional subspaces of F_p^m, one reduced echelon basis each."""
    if k == 0:
        yield []
        return
    for pivots in itertools.combinations(range(m), k):
        pivset = set(pivots)
        free = [(r, j) for r, c in enumerate(pivots) for j in range(c + 1, m) if j not in pivset]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * m for _ in range(k)]
            for r, c in enumerate(pivots):
                rows[r][c] = 1
            for (r, j), v in zip(free, values):
                rows[r][j] = v
            yield rows


def _apply(a: Sequence[Sequence[int]], v: Sequence[int], p: int) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) % p for row in a]


def _annihilator_times(a, u_basis, dim_t: int, dim_s: int, p: int) -> list[list[int]]:
    """Rows y^T A for y spanning the annihilator of U; their kernel is A^{-1}(U)."""
    if len(u_basis) == dim_t:
        return []
    ann = nullspace_mod(u_basis, dim_t, p) if u_basis else [[int(i == j) for j in range(dim_t)] for i in range(dim_t)]
    out = []
    for y in ann:
        row = [sum(y[r] * a[r][c] for r in range(dim_t)) % p for c in range(dim_s)]
        if any(row):
            out.append(row)
    return out


class _Counter:
    """F_p point count of Gr_e(M) for one module reduced mod p and one e."""

    def __init__(self, m: Representation, e: Sequence[int], p: int):
        self.p = p
        self.q = m.quiver
        self.d = m.dims
        self.e = tuple(e)
        self.maps = [[list(r) for r in mat] for mat in m.maps]
        n = self.q.n
        self.fixed = [self.e[i] in (0, self.d[i]) for i in range(n)]
        free = [i for i in range(n) if not self.fixed[i]]
        self.counted = _best_independent_set(self.q, free, self.d, self.e)
        topo = self.q.topological_order()
        self.enumerated = [i for i in topo if i in free and i not in self.counted]

    def _fixed_basis(self, i: int) -> list[list[int]]:
        if self.e[i] == 0:
            return []
        return [[int(r == c) for c in range(self.d[i])] for r in range(self.d[i])]

    def count(self) -> int:
        n = self.q.n
        chosen: dict[int, list[list[int]]] = {i: self._fixed_basis(i) for i in range(n) if self.fixed[i]}
        # arrows between fixed vertices
        for k, (s, t) in enumerate(self.q.arrow_indices):
            if self.fixed[s] and self.fixed[t] and not self._image_inside(k, chosen[s], chosen[t], t):
                return 0
        return self._recurse(0, chosen)

    def _image_inside(self, k, u_s, u_t, t) -> bool:
        if not u_s or len(u_t) == self.d[t]:
            return True
        imgs = [_apply(self.maps[k], u, self.p) for u in u_s]
        return rank_mod(u_t + imgs, self.p) == len(u_t)

    def _lower_upper(self, i: int, chosen) -> tuple[list[list[int]], list[list[int]]]:
        """Forced lower span W (reduced basis) and the rows cutting out the upper space Z."""
        p = self.p
        gens = []
        for k in self.q.incoming(i):
            s = self.q.arrow_indices[k][0]
            if s in chosen:
                gens.extend(_apply(self.maps[k], u, p) for u in chosen[s])
        w = rref_mod(gens, p)[0] if gens else []
        cuts = []
        for k in self.q.outgoing(i):
            t = self.q.arrow_indices[k][1]
            if t in chosen:
                cuts.extend(_annihilator_times(self.maps[k], chosen[t], self.d[t], self.d[i], p))
        return w, cuts

    def _recurse(self, pos: int, chosen) -> int:
        p = self.p
        if pos == len(self.enumerated):
            total = 1
            for r in self.counted:
                w, cuts = self._lower_upper(r, chosen)
                if cuts and any(any(_apply(cuts, x, p)) for x in w):
                    return 0
                zdim = self.d[r] - (rank_mod(cuts, p) if cuts else 0)
                total *= gaussian_binomial(zdim - len(w), self.e[r] - len(w), p)
                if not total:
                    return 0
            return total
        i = self.enumerated[pos]
        w, cuts = self._lower_upper(i, chosen)
        if len(w) > self.e[i]:
            return 0
        if cuts and any(any(_apply(cuts, x, p)) for x in w):
            return 0
        z = nullspace_mod(cuts, self.d[i], p) if cuts else [[int(r == c) for c in range(self.d[i])] for r in range(self.d[i])]
        if len(z) < self.e[i]:
            return 0
        # complement of W inside Z
        comp = []
        span = [list(x) for x in w]
        rank = len(span)
        for v in z:
            if rank_mod(span + [v], p) > rank:
                span.append(v)
                comp.append(v)
                rank += 1
        total = 0
        for rows in subspaces_rref(len(comp), self.e[i] - len(w), p):
            lifted = [[sum(c * vec[j] for c, vec in zip(row, comp)) % p for j in range(self.d[i])] for row in rows]
            chosen[i] = [list(x) for x in w] + lifted
            total += self._recurse(pos + 1, chosen)
        chosen.pop(i, None)
        return total


def _best_independent_set(q, free: list[int], d, e) -> list[int]:
    adj = {i: set() for i in free}
    for s, t in q.arrow_indices:
        if s in adj and t in adj:
            adj[s].add(t)
            adj[t].add(s)
    best, best_score = [], -1
    for size in range(len(free), -1, -1):
        for combo in itertools.combinations(free, size):
            if any(b in adj[a] for a in combo for b in combo):
                continue
            score = sum(e[i] * (d[i] - e[i]) for i in combo)
            if score > best_score:
                best, best_score = list(combo), score
    return best


def count_points(m: Representation, e: Sequence[int], p: int) -> int:
    """Number of F_p-rational subrepresentations of dimension e of m reduced mod p."""
    mp = m.reduce(p)
    return _Counter(mp, e, p).count()


# degree bounds and prime selection


def _kernel_dims(m: Representation) -> list[int]:
    q = m.quiver
    return [m.dims[s] - m.map_rank(k) for k, (s, _) in enumerate(q.arrow_indices)]


def degree_bound(m: Representation, e: Sequence[int]) -> int | None:
    """Upper bound for the degree of the counting polynomial, None if Gr_e(M) is empty.

    Walking the vertices in topological order, U_i must contain M(a)(U_j) for
    each arrow j -> i, whose dimension is at least e_j - dim ker M(a); the
    number of choices at i is then at most a Gaussian binomial of degree
    (e_i - w)(d_i - e_i).  The dual walk bounds U_i inside preimages.
    The smaller of the two totals is returned.
    """
    q = m.quiver
    kers = _kernel_dims(m)
    d = m.dims
    fwd = 0
    bwd = 0
    for i in range(q.n):
        w = 0
        for k in q.incoming(i):
            s = q.arrow_indices[k][0]
            w = max(w, e[s] - kers[k])
        if w > e[i]:
            return None
        fwd += (e[i] - w) * (d[i] - e[i])
        z = d[i]
        for k in q.outgoing(i):
            t = q.arrow_indices[k][1]
            z = min(z, kers[k] + e[t])
        if z < e[i]:
            return None
        bwd += e[i] * (z - e[i])
    return min(fwd, bwd)


def good_primes(m: Representation, how_many: int) -> list[int]:
    """Smallest primes not dividing a denominator and preserving every map rank."""
    dens = m.denominators()
    ranks = [m.map_rank(k) for k in range(len(m.maps))]
    out = []
    p = 1
    while len(out) < how_many:
        p += 1
        if not is_prime(p) or any(den % p == 0 for den in dens):
            continue
        mp = m.reduce(p)
        if [mp.map_rank(k) for k in range(len(m.maps))] != ranks:
            continue
        out.append(p)
    return out


@lru_cache(maxsize=None)
def counting_polynomial(m: Representation, e: tuple[int, ...]) -> tuple[int, ...]:
    """Integer coefficients of q -> |Gr_e(M)(F_q)|, certified with one extra prime."""
    if m.field is not None:
        raise RepresentationError("point counting starts from a module over the rationals")
    bound = degree_bound(m, e)
    if bound is None:
        return (0,)
    ps = good_primes(m, bound + 2)
    points = [(p, count_points(m, e, p)) for p in ps]
    try:
        return tuple(interpolate_integer_polynomial(points, bound))
    except InterpolationError as exc:
        raise GrassmannianError(f"point counts {points} for e={e} are not polynomial: {exc}") from exc


@lru_cache(maxsize=None)
def _euler_char_cached(m: Representation, e: tuple[int, ...]) -> int:
    if not any(e) or e == m.dims:
        return 1
    if m.is_thin():
        return thin_euler_char(m, e)
    tree = tree_profile(m)
    if tree is not None:
        return tree.get(e, 0)
    return evaluate_polynomial(counting_polynomial(m, e), 1)


def grassmannian_euler_char(m: Representation, e: Sequence[int]) -> int:
    e = tuple(int(x) for x in e)
    if len(e) != m.quiver.n or any(x < 0 or x > y for x, y in zip(e, m.dims)):
        raise RepresentationError(f"sub-dimension vector {e} out of range for {m.dims}")
    if m.field is not None:
        raise RepresentationError("Euler characteristics are computed for modules over the rationals")
    return _euler_char_cached(m, e)


def grassmannian_profile(m: Representation) -> dict[DimVector, int]:
    """Map from every e <= dim M to chi(Gr_e(M))."""
    return {e: grassmannian_euler_char(m, e) for e in sub_dimension_vectors(m.dims)}


def point_count_euler_char(m: Representation, e: Sequence[int]) -> int:
    """Strategy B regardless of thinness; used to cross-check the thin shortcut."""
    e = tuple(e)
    return evaluate_polynomial(counting_polynomial(m, e), 1)
