"""Self-checks run by ``clusterforge verify``: structural properties that need no reference data."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import catalog
from .affine import (
    check_difference_property,
    exceptional_tubes,
    homogeneous_character,
    homogeneous_tube_characters,
    tube_characters,
)
from .ccmap import linear_independence, verify_denominator_theorem
from .cluster import explore, rigid_correspondence_check
from .corpus import indecomposable_corpus
from .generic import enumerate_generic_basis, express_in_basis
from .laurent import LaurentPolynomial
from .kronecker import base_change_matrix, chebyshev_second
from .quiver import find_grading_form, graded_in_reflection_class, minimal_imaginary_root, reflection_class
from .reflections import reflection_context, verify_generic_compatibility, verify_reflection_compatibility


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _affine_family(max_vertices: int):
    for n in range(2, max_vertices + 1):
        for r in range(1, n):
            s = n - r
            if r >= s:
                yield catalog.affine_a(r, s)


def denominators(max_total: int = 8) -> CheckResult:
    bad, total = [], 0
    for name in ("kronecker", "a21", "a31", "a22", "a2", "a3", "d4"):
        q = catalog.NAMED[name]()
        for entry in indecomposable_corpus(q, max_total):
            total += 1
            if not verify_denominator_theorem(entry.obj):
                bad.append(f"{name}:{entry.name}")
    return CheckResult("denominator vectors equal dimension vectors", not bad, f"{total} objects, failures: {bad}")


def difference_property(max_vertices: int = 6, steps: int = 4) -> CheckResult:
    bad, count = [], 0
    for q0 in _affine_family(max_vertices):
        for q, _ in reflection_class(q0, steps):
            for tube in exceptional_tubes(q):
                for rep in check_difference_property(q, tube):
                    count += 1
                    if not rep.passed:
                        bad.append((q.arrows, rep.socle_dim))
    return CheckResult("difference property", not bad, f"{count} quasi-simples, failures: {bad}")


def tube_chebyshev(max_length: int = 4) -> CheckResult:
    bad = []
    for name in ("kronecker", "a21"):
        q = catalog.NAMED[name]()
        z = homogeneous_character(q)
        table = homogeneous_tube_characters(q, max_length)
        for n in range(1, max_length + 1):
            coeffs = chebyshev_second(n).coeffs
            acc = LaurentPolynomial.zero(z.variables)
            for c in reversed(coeffs):
                acc = acc * z + c
            if table[(0, n)] != acc:
                bad.append((name, n))
    return CheckResult("homogeneous tube characters are Chebyshev polynomials in z", not bad, f"failures: {bad}")


def base_changes(n: int = 10) -> CheckResult:
    ok = True
    for src in ("P", "C"):
        m = base_change_matrix(src, "z", n)
        ok &= m.is_unipotent() and m.is_positive()
        ok &= m.inverse().is_unipotent()
    return CheckResult("Kronecker base changes are positive unipotent with integral inverses", ok)


def correspondence(depth: int = 6) -> CheckResult:
    bad = []
    for name in ("a2", "a3", "a21"):
        q = catalog.NAMED[name]()
        box = tuple(2 * x for x in minimal_imaginary_root(q)) if name == "a21" else (2,) * q.n
        rep = rigid_correspondence_check(q, box, depth)
        if not rep.equal:
            bad.append(name)
    counts = {name: len(explore(catalog.NAMED[name](), depth).variables) for name in ("a2", "a3", "d4")}
    ok = not bad and counts == {"a2": 5, "a3": 9, "d4": 16}
    return CheckResult("rigid objects match cluster variables", ok, f"mismatch: {bad}, counts: {counts}")


def reflections(max_total: int = 6, samples: int = 30) -> CheckResult:
    bad = []
    rng = random.Random(0)
    for name in ("kronecker", "a21", "a31"):
        q = catalog.NAMED[name]()
        corpus = indecomposable_corpus(q, max_total)
        for i in q.sinks():
            ctx = reflection_context(q, i)
            for entry in corpus:
                if not verify_reflection_compatibility(ctx, entry.obj):
                    bad.append((name, i, entry.name))
            for _ in range(samples // 3):
                d = tuple(rng.randint(-1, 3) for _ in range(q.n))
                if not verify_generic_compatibility(ctx, d):
                    bad.append((name, i, d))
    return CheckResult("reflections commute with the CC map", not bad, f"failures: {bad}")


def gradability(max_vertices: int = 6) -> CheckResult:
    bad = [q0.arrows for q0 in _affine_family(max_vertices) if graded_in_reflection_class(q0) is None]
    cycle = find_grading_form(catalog.doubled_three_cycle())
    q = catalog.affine_a(2, 1)
    box = tuple(2 * x for x in minimal_imaginary_root(q))
    indep = linear_independence([el.value for el in enumerate_generic_basis(q, box)])
    ok = not bad and cycle is None and indep
    return CheckResult("grading forms and linear independence", ok,
                       f"ungraded: {bad}, doubled cycle: {cycle}, independent: {indep}")


def spanning(max_length: int = 3, names: tuple[str, ...] = ("kronecker", "a21", "a31")) -> CheckResult:
    bad, count = [], 0
    for name in names:
        q = catalog.NAMED[name]()
        tables = [homogeneous_tube_characters(q, max_length)]
        tables += [tube_characters(q, t, max_length) for t in exceptional_tubes(q)]
        for table in tables:
            for i in range(table.tube.rank):
                for n in range(1, max_length + 1):
                    if n < table.tube.rank:
                        continue  # rigid, already a cluster variable
                    d = table.tube.dim(i, n)
                    els = enumerate_generic_basis(q, d, lower=(0,) * q.n)
                    count += 1
                    if express_in_basis(table[(i, n)], els) is None:
                        bad.append((name, i, n))
    return CheckResult("non-rigid tube modules lie in the span of generic variables", not bad,
                       f"{count} tube modules, failures: {bad}")


SUITE: dict[str, Callable[[], CheckResult]] = {
    "denominators": denominators,
    "difference": difference_property,
    "chebyshev": tube_chebyshev,
    "basechange": base_changes,
    "correspondence": correspondence,
    "reflections": reflections,
    "gradability": gradability,
    "spanning": spanning,
}


def run_suite(names=None) -> list[CheckResult]:
    return [SUITE[n]() for n in (names or SUITE)]
