"""Quiver representations over Q or a prime field, Hom/Ext, and explicit constructors."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import rank_mod, rank_rational, reduce_mod, rref_rational, nullspace_rational
from .quiver import DimVector, Quiver, QuiverError

Mat = tuple[tuple, ...]


class RepresentationError(ValueError):
    """Malformed representation or incompatible operands."""


def _zero(rows: int, cols: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * cols for _ in range(rows)]


def _freeze(m: Sequence[Sequence]) -> Mat:
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class Representation:
    """Matrices on arrows; maps[k] has shape dims[target] x dims[source].

    field is None for the rationals, otherwise a prime p with entries in 0..p-1.
    """

    quiver: Quiver
    dims: DimVector
    maps: tuple[Mat, ...]
    field: int | None = None

    def __post_init__(self):
        q = self.quiver
        dims = tuple(int(x) for x in self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) != q.n or any(x < 0 for x in dims):
            raise RepresentationError(f"dimension vector {dims} does not fit the quiver")
        if len(self.maps) != len(q.arrows):
            raise RepresentationError("one matrix per arrow is required")
        conv = (lambda x: Fraction(x)) if self.field is None else (lambda x: reduce_mod(x, self.field))
        maps = []
        for (s, t), m in zip(q.arrow_indices, self.maps):
            m = [list(r) for r in m]
            if dims[t] == 0 or dims[s] == 0:
                m = [[0] * dims[s] for _ in range(dims[t])]
            if len(m) != dims[t] or any(len(r) != dims[s] for r in m):
                raise RepresentationError(f"matrix shape mismatch on arrow {q.vertices[s]}->{q.vertices[t]}")
            maps.append(tuple(tuple(conv(x) for x in r) for r in m))
        object.__setattr__(self, "maps", tuple(maps))

    # basic data

    @property
    def dimension(self) -> DimVector:
        return self.dims

    def total_dimension(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return not any(self.dims)

    def is_thin(self) -> bool:
        return all(x <= 1 for x in self.dims)

    def map_matrix(self, k: int) -> Mat:
        return self.maps[k]

    def denominators(self) -> set[int]:
        dens = set()
        if self.field is None:
            for m in self.maps:
                for row in m:
                    for x in row:
                        if x.denominator != 1:
                            dens.add(x.denominator)
        return dens

    def reduce(self, p: int) -> Representation:
        if self.field is not None:
            if self.field != p:
                raise RepresentationError("cannot change the characteristic")
            return self
        return Representation(self.quiver, self.dims, self.maps, p)

    def map_rank(self, k: int) -> int:
        m = self.maps[k]
        if not m or not m[0]:
            return 0
        if self.field is None:
            return rank_rational(m)
        return rank_mod(m, self.field)

    # serialization

    def to_json(self) -> dict:
        def fmt(x):
            if self.field is not None:
                return int(x)
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        data = {
            "quiver": self.quiver.to_json(),
            "dims": list(self.dims),
            "maps": {str(k): [[fmt(x) for x in r] for r in m] for k, m in enumerate(self.maps)},
        }
        if self.field is not None:
            data["field"] = self.field
        return data

    @classmethod
    def from_json(cls, data) -> Representation:
        if isinstance(data, str):
            data = json.loads(data)
        q = Quiver.from_json(data["quiver"])
        dims = tuple(data["dims"])
        raw = data.get("maps", {})
        maps = []
        for k, (s, t) in enumerate(q.arrow_indices):
            m = raw.get(str(k), raw.get(k))
            if m is None:
                m = [[0] * dims[s] for _ in range(dims[t])]
            maps.append(tuple(tuple(Fraction(x) for x in r) for r in m))
        return cls(q, dims, tuple(maps), data.get("field"))

    # operations

    def direct_sum(self, other: Representation) -> Representation:
        if self.quiver != other.quiver or self.field != other.field:
            raise RepresentationError("direct sum needs the same quiver and field")
        dims = tuple(a + b for a, b in zip(self.dims, other.dims))
        maps = []
        for k, (s, t) in enumerate(self.quiver.arrow_indices):
            m = [[0] * dims[s] for _ in range(dims[t])]
            for r, row in enumerate(self.maps[k]):
                for c, x in enumerate(row):
                    m[r][c] = x
            for r, row in enumerate(other.maps[k]):
                for c, x in enumerate(row):
                    m[self.dims[t] + r][self.dims[s] + c] = x
            maps.append(m)
        return Representation(self.quiver, dims, tuple(maps), self.field)

    def __str__(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def zero_representation(q: Quiver, field: int | None = None) -> Representation:
    return Representation(q, (0,) * q.n, tuple(() for _ in q.arrows), field)


def direct_sum(reps: Iterable[Representation]) -> Representation:
    reps = list(reps)
    if not reps:
        raise RepresentationError("empty direct sum needs a quiver")
    out = reps[0]
    for r in reps[1:]:
        out = out.direct_sum(r)
    return out


# Hom and Ext


def _rank(rows, fld):
    if not rows:
        return 0
    return rank_rational(rows) if fld is None else rank_mod(rows, fld)


def hom_dimension(m: Representation, n: Representation) -> int:
    """Dimension of the space of families f_v with f_t M(a) = N(a) f_s on every arrow."""
    if m.quiver != n.quiver or m.field != n.field:
        raise RepresentationError("Hom needs the same quiver and field")
    q = m.quiver
    offsets = []
    total = 0
    for v in range(q.n):
        offsets.append(total)
        total += n.dims[v] * m.dims[v]
    if total == 0:
        return 0
    rows = []
    for k, (s, t) in enumerate(q.arrow_indices):
        ma, na = m.maps[k], n.maps[k]
        for r in range(n.dims[t]):
            for c in range(m.dims[s]):
                row = [0] * total
                # (N(a) f_s)[r][c] = sum_x N(a)[r][x] f_s[x][c]
                for x in range(n.dims[s]):
                    coef = na[r][x]
                    if coef:
                        row[offsets[s] + x * m.dims[s] + c] += coef
                # (f_t M(a))[r][c] = sum_y f_t[r][y] M(a)[y][c]
                for y in range(m.dims[t]):
                    coef = ma[y][c]
                    if coef:
                        row[offsets[t] + r * m.dims[t] + y] -= coef
                if any(row):
                    rows.append(row)
    return total - _rank(rows, m.field)


def ext1_dimension(m: Representation, n: Representation) -> int:
    return hom_dimension(m, n) - m.quiver.euler(m.dims, n.dims)


def endomorphism_dimension(m: Representation) -> int:
    return hom_dimension(m, m)


def is_brick(m: Representation) -> bool:
    return not m.is_zero() and endomorphism_dimension(m) == 1


# decorated objects


@dataclass(frozen=True)
class DecoratedObject:
    """A module together with multiplicities of the shifted projectives P_i[1]."""

    module: Representation
    shifts: tuple[int, ...] = field(default=())

    def __post_init__(self):
        shifts = tuple(self.shifts) or (0,) * self.module.quiver.n
        if len(shifts) != self.module.quiver.n or any(x < 0 for x in shifts):
            raise RepresentationError("shift multiplicities must be nonnegative, one per vertex")
        object.__setattr__(self, "shifts", shifts)

    @property
    def quiver(self) -> Quiver:
        return self.module.quiver

    @property
    def dimension(self) -> DimVector:
        """Extended dimension vector: dim of the module minus the shifts."""
        return tuple(d - s for d, s in zip(self.module.dims, self.shifts))

    @classmethod
    def of_module(cls, m: Representation) -> DecoratedObject:
        return cls(m, (0,) * m.quiver.n)

    @classmethod
    def shifted_projective(cls, q: Quiver, i: int, mult: int = 1) -> DecoratedObject:
        shifts = tuple(mult if j == i else 0 for j in range(q.n))
        return cls(zero_representation(q), shifts)

    def direct_sum(self, other: DecoratedObject) -> DecoratedObject:
        return DecoratedObject(
            self.module.direct_sum(other.module),
            tuple(a + b for a, b in zip(self.shifts, other.shifts)),
        )

    def to_json(self) -> dict:
        return {"module": self.module.to_json(), "shifts": list(self.shifts)}

    @classmethod
    def from_json(cls, data) -> DecoratedObject:
        if isinstance(data, str):
            data = json.loads(data)
        if "module" not in data:
            m = Representation.from_json(data)
            return cls.of_module(m)
        m = Representation.from_json(data["module"])
        return cls(m, tuple(data.get("shifts", ())))


def is_rigid(obj: DecoratedObject | Representation) -> bool:
    if isinstance(obj, Representation):
        obj = DecoratedObject.of_module(obj)
    m = obj.module
    if not m.is_zero() and ext1_dimension(m, m) != 0:
        return False
    return all(m.dims[i] == 0 for i, s in enumerate(obj.shifts) if s > 0)


# constructors


def simple_representation(q: Quiver, i: int) -> Representation:
    return Representation(q, q.simple(i), tuple(() for _ in q.arrows))


def thin_indecomposable(q: Quiver, d: Sequence[int], special: tuple[int, object] | None = None) -> Representation:
    """All maps inside the support equal 1, except the designated arrow carrying a scalar."""
    d = tuple(d)
    if any(x not in (0, 1) for x in d):
        raise RepresentationError("thin representations need a 0/1 dimension vector")
    support = [i for i, x in enumerate(d) if x]
    if not q.is_connected_on(support):
        raise RepresentationError("support of a thin indecomposable must be connected")
    maps = []
    for k, (s, t) in enumerate(q.arrow_indices):
        if d[s] and d[t]:
            val = Fraction(special[1]) if special is not None and special[0] == k else Fraction(1)
            maps.append(((val,),))
        else:
            maps.append(tuple(tuple(Fraction(0) for _ in range(d[s])) for _ in range(d[t])))
    return Representation(q, d, tuple(maps))


Letter = tuple[int, int]  # (arrow index, +1 along the arrow, -1 against it)


def walk_vertices(q: Quiver, start: int, letters: Sequence[Letter]) -> list[int]:
    path = [start]
    cur = start
    for k, sign in letters:
        s, t = q.arrow_indices[k]
        if sign > 0:
            if s != cur:
                raise RepresentationError("walk letter does not start at the current vertex")
            cur = t
        else:
            if t != cur:
                raise RepresentationError("inverse walk letter does not start at the current vertex")
            cur = s
        path.append(cur)
    return path


def is_reduced_walk(letters: Sequence[Letter]) -> bool:
    return all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(letters, letters[1:]))


def string_module(q: Quiver, start: int, letters: Sequence[Letter]) -> Representation:
    """Module with one basis vector per vertex visited by a reduced walk.

    A letter along arrow a sends the current basis vector to the next one; a
    letter against a sends the next basis vector to the current one.
    """
    if not is_reduced_walk(letters):
        raise RepresentationError("walk is not reduced")
    path = walk_vertices(q, start, letters)
    dims = [0] * q.n
    slot = []
    for v in path:
        slot.append(dims[v])
        dims[v] += 1
    maps = [_zero(dims[t], dims[s]) for s, t in q.arrow_indices]
    for pos, (k, sign) in enumerate(letters):
        a, b = pos, pos + 1
        if sign < 0:
            a, b = b, a
        maps[k][slot[b]][slot[a]] = Fraction(1)
    return Representation(q, tuple(dims), tuple(_freeze(m) for m in maps))


def jordan_block(n: int, lam) -> list[list[Fraction]]:
    return [[Fraction(lam) if r == c else Fraction(int(c == r + 1)) for c in range(n)] for r in range(n)]


def band_module(q: Quiver, n: int, lam, special: int, partner: int) -> Representation:
    """Every vertex carries k^n and every arrow the identity, except two arrows.

    For finite lam the special arrow carries the Jordan block J_n(lam); for
    lam = None (the point at infinity) the special arrow is the identity and
    the partner arrow carries J_n(0).
    """
    ident = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    maps = []
    for k in range(len(q.arrows)):
        if lam is None:
            m = jordan_block(n, 0) if k == partner else ident
        else:
            m = jordan_block(n, lam) if k == special else ident
        maps.append(_freeze(m))
    return Representation(q, (n,) * q.n, tuple(maps))


def _paths_from(q: Quiver, i: int) -> list[tuple[int, ...]]:
    out = [()]
    frontier = [((), i)]
    while frontier:
        new = []
        for path, v in frontier:
            for k in q.outgoing(v):
                p = path + (k,)
                out.append(p)
                new.append((p, q.arrow_indices[k][1]))
        frontier = new
    return out


def _path_end(q: Quiver, start: int, path: tuple[int, ...]) -> int:
    return q.arrow_indices[path[-1]][1] if path else start


def projective_representation(q: Quiver, i: int) -> Representation:
    """P_i: basis of P_i(j) is the set of paths i -> j."""
    if not q.is_acyclic():
        raise QuiverError("projectives are finite only for acyclic quivers")
    paths = _paths_from(q, i)
    basis: list[list[tuple[int, ...]]] = [[] for _ in range(q.n)]
    for p in paths:
        basis[_path_end(q, i, p)].append(p)
    dims = tuple(len(b) for b in basis)
    maps = []
    for k, (s, t) in enumerate(q.arrow_indices):
        m = _zero(dims[t], dims[s])
        for c, p in enumerate(basis[s]):
            r = basis[t].index(p + (k,))
            m[r][c] = Fraction(1)
        maps.append(_freeze(m))
    return Representation(q, dims, tuple(maps))


def injective_representation(q: Quiver, i: int) -> Representation:
    """I_i: basis of I_i(j) is the set of paths j -> i."""
    opq = q.opposite()
    p = projective_representation(opq, i)
    maps = tuple(_freeze([list(col) for col in zip(*m)]) for m in p.maps)
    return Representation(q, p.dims, maps)
