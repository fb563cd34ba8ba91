"""Exact feasibility of rational linear inequality systems by Fourier-Motzkin elimination."""

from __future__ import annotations

from fractions import Fraction
from math import floor, ceil
from typing import Sequence

Row = tuple[list[Fraction], Fraction]  # coefficients a, bound b meaning a.x <= b


def _normalize(rows: Sequence[tuple[Sequence, object]]) -> list[Row]:
    return [([Fraction(x) for x in a], Fraction(b)) for a, b in rows]


def _dedupe(rows: list[Row]) -> list[Row]:
    seen = set()
    out = []
    for a, b in rows:
        # scale so the first nonzero coefficient has absolute value 1
        lead = next((x for x in a if x), None)
        if lead is not None:
            s = abs(lead)
            a = [x / s for x in a]
            b = b / s
        key = (tuple(a), b)
        if key not in seen:
            seen.add(key)
            out.append((a, b))
    return out


def _eliminate(rows: list[Row], k: int) -> list[Row]:
    pos, neg, rest = [], [], []
    for a, b in rows:
        if a[k] > 0:
            pos.append((a, b))
        elif a[k] < 0:
            neg.append((a, b))
        else:
            rest.append((a, b))
    for ap, bp in pos:
        for an, bn in neg:
            sp, sn = ap[k], -an[k]
            a = [sn * x + sp * y for x, y in zip(ap, an)]
            a[k] = Fraction(0)
            rest.append((a, sn * bp + sp * bn))
    return _dedupe(rest)


def _pick(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(min(0, floor(hi)))
    if hi is None:
        return Fraction(max(0, ceil(lo)))
    if ceil(lo) <= hi:
        return Fraction(min(max(0, ceil(lo)), floor(hi)))
    return (lo + hi) / 2


def solve_inequalities(rows: Sequence[tuple[Sequence, object]], nvars: int) -> list[Fraction] | None:
    """A point x with a.x <= b for every (a, b), or None if the system is infeasible."""
    systems = [_dedupe(_normalize(rows))]
    for k in range(nvars - 1, -1, -1):
        systems.append(_eliminate(systems[-1], k))
    for a, b in systems[-1]:
        if b < 0:
            return None
    x = [Fraction(0)] * nvars
    # back substitution: systems[nvars - k] still involves variables 0..k
    for k in range(nvars):
        system = systems[nvars - 1 - k]
        lo = hi = None
        for a, b in system:
            if a[k] == 0:
                continue
            val = (b - sum(a[j] * x[j] for j in range(k))) / a[k]
            if a[k] > 0:
                hi = val if hi is None else min(hi, val)
            else:
                lo = val if lo is None else max(lo, val)
        if lo is not None and hi is not None and lo > hi:
            return None
        x[k] = _pick(lo, hi)
    return x


def in_cone(point: Sequence, generators: Sequence[Sequence]) -> bool:
    """Whether point is a nonnegative rational combination of the generators."""
    m = len(generators)
    if m == 0:
        return all(x == 0 for x in point)
    rows = []
    for i, target in enumerate(point):
        coeffs = [g[i] for g in generators]
        rows.append((coeffs, target))
        rows.append(([-c for c in coeffs], -target))
    for j in range(m):
        rows.append(([-int(j == t) for t in range(m)], 0))
    return solve_inequalities(rows, m) is not None
