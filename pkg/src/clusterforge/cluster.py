"""Seeds, mutation, breadth-first enumeration of cluster variables and the maps Phi_i."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .ccmap import cc_map, variables_for
from .corpus import rigid_indecomposables
from .laurent import LaurentPolynomial, NotDivisibleError, canonical_string, denominator_vector, divide_exact
from .quiver import Quiver, QuiverError

Matrix = tuple[tuple[int, ...], ...]


class LaurentPhenomenonError(ArithmeticError):
    """An exchange relation did not divide exactly."""


def quiver_from_matrix(vertices: Sequence[int], b: Matrix) -> Quiver:
    arrows = []
    for i in range(len(b)):
        for j in range(len(b)):
            arrows.extend([(vertices[i], vertices[j])] * max(b[i][j], 0))
    return Quiver(tuple(vertices), tuple(arrows))


def mutate_matrix(b: Matrix, k: int) -> Matrix:
    n = len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i][j])
            else:
                row.append(b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2)
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class Seed:
    vertices: tuple[int, ...]
    matrix: Matrix
    cluster: tuple[LaurentPolynomial, ...]

    @classmethod
    def initial(cls, q: Quiver) -> Seed:
        names = variables_for(q)
        return cls(q.vertices, q.exchange_matrix, tuple(LaurentPolynomial.generator(names, i) for i in range(q.n)))

    @property
    def quiver(self) -> Quiver:
        return quiver_from_matrix(self.vertices, self.matrix)

    def key(self) -> frozenset[str]:
        return frozenset(canonical_string(x) for x in self.cluster)


def exchange_monomials(s: Seed, k: int) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    names = s.cluster[0].variables
    plus = LaurentPolynomial.constant(names, 1)
    minus = LaurentPolynomial.constant(names, 1)
    for i, row in enumerate(s.matrix):
        if row[k] > 0:
            plus = plus * s.cluster[i] ** row[k]
        elif row[k] < 0:
            minus = minus * s.cluster[i] ** (-row[k])
    return plus, minus


def mutate(s: Seed, k: int) -> Seed:
    """x_k' = (prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik}) / x_k."""
    if not 0 <= k < len(s.vertices):
        raise QuiverError(f"no vertex in position {k}")
    plus, minus = exchange_monomials(s, k)
    try:
        new = divide_exact(plus + minus, s.cluster[k])
    except NotDivisibleError as exc:
        raise LaurentPhenomenonError(f"exchange at position {k} is not Laurent") from exc
    cluster = list(s.cluster)
    cluster[k] = new
    return Seed(s.vertices, mutate_matrix(s.matrix, k), tuple(cluster))


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CLUSTERFORGE_THREADS", "1")))
    except ValueError:
        return 1


@dataclass
class ExplorationResult:
    variables: dict[str, LaurentPolynomial] = field(default_factory=dict)
    seeds: int = 0
    closed: bool = False
    edges: list[tuple[Seed, int, Seed]] = field(default_factory=list)


def explore(q: Quiver, depth: int, keep_edges: bool = False) -> ExplorationResult:
    """Breadth-first search over seeds up to the given number of mutations."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    start = Seed.initial(q)
    res = ExplorationResult()
    seen = {start.key()}
    for x in start.cluster:
        res.variables[canonical_string(x)] = x
    frontier = [start]
    n = len(start.vertices)
    workers = _threads()
    for level in range(depth + 1):
        if not frontier:
            res.closed = True
            break
        jobs = [(s, k) for s in frontier for k in range(n)]
        if level == depth:
            # one more round only to learn whether the exchange graph is closed
            res.closed = all(mutate(s, k).key() in seen for s, k in jobs)
            break
        if workers > 1:
            with ThreadPoolExecutor(workers) as pool:
                results = list(pool.map(lambda job: mutate(*job), jobs))
        else:
            results = [mutate(s, k) for s, k in jobs]
        nxt = []
        for (s, k), t in zip(jobs, results):
            if keep_edges:
                res.edges.append((s, k, t))
            key = t.key()
            if key in seen:
                continue
            seen.add(key)
            nxt.append(t)
            for x in t.cluster:
                res.variables.setdefault(canonical_string(x), x)
        frontier = nxt
    res.seeds = len(seen)
    return res


def enumerate_cluster_variables(q: Quiver, depth: int = 6) -> list[LaurentPolynomial]:
    """Distinct cluster variables within depth mutations, sorted by canonical string."""
    res = explore(q, depth)
    return [res.variables[k] for k in sorted(res.variables)]


def exchange_graph_closes(q: Quiver, depth: int) -> bool:
    return explore(q, depth).closed


@dataclass
class CorrespondenceReport:
    from_modules: dict[str, LaurentPolynomial]
    from_mutation: dict[str, LaurentPolynomial]

    @property
    def equal(self) -> bool:
        return set(self.from_modules) == set(self.from_mutation)

    @property
    def missing_from_mutation(self) -> list[str]:
        return sorted(set(self.from_modules) - set(self.from_mutation))

    @property
    def missing_from_modules(self) -> list[str]:
        return sorted(set(self.from_mutation) - set(self.from_modules))


def _in_box(d: Sequence[int], box: Sequence[int]) -> bool:
    return all(-1 <= x <= b for x, b in zip(d, box))


def rigid_correspondence_check(q: Quiver, box: Sequence[int], depth: int = 6) -> CorrespondenceReport:
    """Compare X_M over rigid indecomposables with dimension in [-1, box] with mutation-reached variables."""
    box = tuple(box)
    mods = {}
    for entry in rigid_indecomposables(q, box):
        if _in_box(entry.dimension, box):
            x = cc_map(entry.obj)
            mods[canonical_string(x)] = x
    muts = {k: x for k, x in explore(q, depth).variables.items() if _in_box(denominator_vector(x), box)}
    return CorrespondenceReport(mods, muts)


# canonical isomorphisms at sinks and sources


def canonical_isomorphism(q: Quiver, i: int):
    """Phi_i for a sink or source i: rewrite f(u) in the reflected seed via u_i = (prod v_j + 1) / v_i.

    The result uses the same variable names, now read as the variables of
    the seed attached to the reflected quiver.
    """
    if not (q.is_sink(i) or q.is_source(i)):
        raise QuiverError(f"vertex {q.vertices[i]} is neither a sink nor a source")
    names = variables_for(q)
    neigh = [0] * q.n
    for s, t in q.arrow_indices:
        if s == i:
            neigh[t] += 1
        elif t == i:
            neigh[s] += 1
    a = LaurentPolynomial.monomial(names, neigh) + 1

    def phi(f: LaurentPolynomial) -> LaurentPolynomial:
        if f.variables != names:
            raise ValueError("polynomial is over different variables")
        lowest = min((e[i] for e in f.terms), default=0)
        m = max(0, -lowest)
        powers = {0: LaurentPolynomial.constant(names, 1)}
        acc = LaurentPolynomial.zero(names)
        for e, c in f.terms.items():
            k = e[i] + m
            if k not in powers:
                powers[k] = a ** k
            shifted = list(e)
            shifted[i] = -e[i]
            acc = acc + powers[k] * LaurentPolynomial.monomial(names, shifted, c)
        if m == 0:
            return acc
        try:
            return divide_exact(acc, a ** m)
        except NotDivisibleError as exc:
            raise LaurentPhenomenonError("input is not in the image of the cluster algebra") from exc

    return phi


def apply_all(phi, fs: Iterable[LaurentPolynomial]) -> list[LaurentPolynomial]:
    return [phi(f) for f in fs]
