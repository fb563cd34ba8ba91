"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (bad input, unsupported
quiver), 2 when a verification fails.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import catalog
from .affine import (
    ExceptionalParameterError,
    check_difference_property,
    delta_module,
    exceptional_tubes,
)
from .ccmap import cc_map
from .checks import SUITE, run_suite
from .cluster import Seed, mutate
from .corpus import rigid_brick
from .generic import DecompositionError, canonical_decomposition, enumerate_generic_basis, generic_variable
from .grassmannian import GrassmannianError, grassmannian_profile
from .kronecker import FAMILY_ALIASES, base_change_matrix
from .laurent import canonical_string
from .quiver import Quiver, QuiverError, classify_type, find_grading_form, graded_in_reflection_class, minimal_imaginary_root
from .reflections import extended_reflect, reflection_context, verify_reflection_compatibility
from .representation import DecoratedObject, Representation, RepresentationError

DOMAIN_ERRORS = (QuiverError, RepresentationError, DecompositionError, GrassmannianError, ValueError, ArithmeticError)


class VerificationFailed(Exception):
    pass


def _ints(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}") from None


def _lambda(text: str | None):
    if text is None:
        return 1
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"expected a rational number or 'inf', got {text!r}") from None


def load_quiver(spec: str) -> Quiver:
    """A JSON file path, inline JSON, or one of the named quivers."""
    if spec in catalog.NAMED:
        return catalog.NAMED[spec]()
    path = Path(spec)
    text = path.read_text() if path.exists() else spec
    try:
        return Quiver.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise QuiverError(f"cannot read quiver from {spec!r}: {exc}") from None


def load_object(spec: str) -> DecoratedObject:
    path = Path(spec)
    text = path.read_text() if path.exists() else spec
    try:
        return DecoratedObject.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise RepresentationError(f"cannot read object from {spec!r}: {exc}") from None


def _vertex(q: Quiver, label: int) -> int:
    return q.index(label)


def object_for_dimension(q: Quiver, d: tuple[int, ...], lam) -> DecoratedObject:
    """delta gives the thin delta-module M_lambda, -alpha_i gives P_i[1], a real root its rigid indecomposable."""
    if len(d) != q.n:
        raise QuiverError(f"dimension vector {d} has the wrong length")
    negatives = [i for i, x in enumerate(d) if x < 0]
    if negatives:
        if any(x > 0 for x in d):
            raise QuiverError("mixed signs: pass an object JSON instead")
        shifts = tuple(-x for x in d)
        return DecoratedObject(Representation(q, (0,) * q.n, tuple(() for _ in q.arrows)), shifts)
    kind = classify_type(q)
    if kind.is_affine and d == minimal_imaginary_root(q):
        if not kind.is_affine_a:
            raise QuiverError("delta-modules are available for affine type A only")
        return DecoratedObject.of_module(delta_module(q, lam))
    return DecoratedObject.of_module(rigid_brick(q, d))


def _resolve_object(q: Quiver, obj_spec, dim, lam) -> DecoratedObject:
    if obj_spec:
        obj = load_object(obj_spec)
        if obj.quiver != q:
            raise QuiverError("object and quiver do not match")
        return obj
    d = _ints(dim)
    if d is None:
        raise click.UsageError("pass --object or --dim")
    return object_for_dimension(q, d, _lambda(lam))


def _emit(fmt: str, text: str, data) -> None:
    if fmt == "json":
        click.echo(json.dumps(data, sort_keys=True))
    else:
        click.echo(text)


def _vec(d) -> str:
    return "(" + ",".join(str(x) for x in d) + ")"


quiver_option = click.option("--quiver", "quiver_spec", required=True, help="Quiver JSON file, inline JSON or a named quiver.")
format_option = click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
dim_option = click.option("--dim", help="Dimension vector, comma-separated.")
lambda_option = click.option("--lambda", "lam", help="Parameter of a delta-module: a rational or 'inf'.")
object_option = click.option("--object", "obj_spec", help="Representation or decorated object JSON (file or inline).")


@click.group()
def cli() -> None:
    """Caldero-Chapoton characters, tubes, generic bases and reflections for small quivers."""


@cli.command()
@quiver_option
@format_option
def classify(quiver_spec, fmt):
    """Type of the quiver, with delta and the exceptional tubes in affine type A."""
    q = load_quiver(quiver_spec)
    kind = classify_type(q)
    data = {"type": str(kind)}
    lines = [str(kind)]
    if kind.is_affine:
        delta = minimal_imaginary_root(q)
        data["delta"] = list(delta)
        lines.append(f"delta = {_vec(delta)}")
    if kind.is_affine_a:
        tubes = exceptional_tubes(q)
        data["tubes"] = [t.to_json() for t in tubes]
        for t in tubes:
            lines.append(f"tube of rank {t.rank}: " + " ".join(_vec(e) for e in t.quasi_simple_dims))
    _emit(fmt, "\n".join(lines), data)


@cli.command()
@quiver_option
@object_option
@dim_option
@lambda_option
@format_option
def ccmap(quiver_spec, obj_spec, dim, lam, fmt):
    """X_M for an object given as JSON or by its dimension vector."""
    q = load_quiver(quiver_spec)
    obj = _resolve_object(q, obj_spec, dim, lam)
    x = cc_map(obj)
    _emit(fmt, canonical_string(x), {"dimension": list(obj.dimension), "value": x.to_json(), "string": canonical_string(x)})


@cli.command()
@quiver_option
@object_option
@dim_option
@lambda_option
@format_option
def grassmannian(quiver_spec, obj_spec, dim, lam, fmt):
    """Euler characteristics of all quiver Grassmannians of a module."""
    q = load_quiver(quiver_spec)
    obj = _resolve_object(q, obj_spec, dim, lam)
    prof = grassmannian_profile(obj.module)
    rows = sorted(prof.items())
    _emit(fmt, "\n".join(f"{_vec(e)} {c}" for e, c in rows), [{"e": list(e), "chi": c} for e, c in rows])


@cli.command()
@quiver_option
@dim_option
@format_option
def generic(quiver_spec, dim, fmt):
    """Canonical decomposition and generic variable X_d."""
    q = load_quiver(quiver_spec)
    d = _ints(dim)
    if d is None or len(d) != q.n:
        raise click.UsageError("--dim with one entry per vertex is required")
    el = generic_variable(q, d)
    dec = canonical_decomposition(q, tuple(max(x, 0) for x in d))
    data = {"d": list(d), "decomposition": str(dec), "kind": el.kind, "value": canonical_string(el.value)}
    text = f"{_vec(d)}  {dec}  {el.describe()}\n{canonical_string(el.value)}"
    _emit(fmt, text, data)


@cli.command()
@quiver_option
@click.option("--box", required=True, help="Upper corner of the box, comma-separated.")
@format_option
def basis(quiver_spec, box, fmt):
    """Generic variables X_d for every d between -1 and the box."""
    q = load_quiver(quiver_spec)
    b = _ints(box)
    if len(b) != q.n:
        raise click.UsageError("--box needs one entry per vertex")
    els = enumerate_generic_basis(q, b)
    rows = [(el.d, el.describe(), canonical_string(el.value)) for el in els]
    _emit(fmt, "\n".join(f"{_vec(d)}\t{k}\t{v}" for d, k, v in rows),
          [{"d": list(d), "kind": k, "value": v} for d, k, v in rows])


@cli.command("mutate")
@quiver_option
@click.option("--sequence", default="", help="Vertex labels to mutate at, in order, comma-separated.")
@format_option
def mutate_cmd(quiver_spec, sequence, fmt):
    """Cluster reached from the initial seed by a sequence of mutations."""
    q = load_quiver(quiver_spec)
    seed = Seed.initial(q)
    for label in _ints(sequence) or ():
        seed = mutate(seed, _vertex(q, label))
    cluster = [canonical_string(x) for x in seed.cluster]
    text = "\n".join(f"x{v} = {s}" for v, s in zip(q.vertices, cluster))
    _emit(fmt, text, {"cluster": cluster, "matrix": [list(r) for r in seed.matrix]})


@cli.command()
@quiver_option
@format_option
def diffprop(quiver_spec, fmt):
    """For each quasi-simple E: X_{M_E} - X_{M_lambda} against X of the quotient q.rad(M_E)/E."""
    q = load_quiver(quiver_spec)
    lines, data, ok = [], [], True
    for t, tube in enumerate(exceptional_tubes(q)):
        for rep in check_difference_property(q, tube):
            verdict = "PASS" if rep.passed else "FAIL"
            ok &= rep.passed
            lines.append(f"{_vec(rep.socle_dim)} {canonical_string(rep.difference)} {verdict}")
            data.append({"tube": t, "socle": list(rep.socle_dim), "difference": canonical_string(rep.difference),
                         "quotient": list(rep.quotient_dim), "passed": rep.passed})
    _emit(fmt, "\n".join(lines), data)
    if not ok:
        raise VerificationFailed("difference property fails")


@cli.command()
@quiver_option
@click.option("--vertex", required=True, type=int, help="Label of a sink or source.")
@object_option
@dim_option
@lambda_option
@format_option
def reflect(quiver_spec, vertex, obj_spec, dim, lam, fmt):
    """Extended reflection of an object and the check Phi_i(X_M) = X_{R_i M}."""
    q = load_quiver(quiver_spec)
    ctx = reflection_context(q, _vertex(q, vertex))
    obj = _resolve_object(q, obj_spec, dim, lam)
    out = extended_reflect(ctx, obj)
    ok = verify_reflection_compatibility(ctx, obj)
    verdict = "PASS" if ok else "FAIL"
    text = f"{json.dumps(out.to_json(), sort_keys=True)}\ndimension {_vec(out.dimension)}\n{verdict}"
    _emit(fmt, text, {"object": out.to_json(), "dimension": list(out.dimension), "compatible": ok})
    if not ok:
        raise VerificationFailed("reflection compatibility fails")


@cli.command()
@quiver_option
@click.option("--depth", default=8, show_default=True, help="Maximal number of reflections to search.")
@format_option
def grade(quiver_spec, depth, fmt):
    """A grading form on the quiver or on some quiver in its reflection class."""
    q = load_quiver(quiver_spec)
    if not q.is_acyclic():
        eps = find_grading_form(q)
        found = None if eps is None else (q, (), eps)
    else:
        found = graded_in_reflection_class(q, depth)
    if found is None:
        _emit(fmt, "infeasible", {"feasible": False})
        return
    cand, path, eps = found
    labels = [q.vertices[i] for i in path]
    text = f"epsilon = {_vec(eps)}\nquiver = {cand.to_string()}\nreflections = {labels}"
    _emit(fmt, text, {"feasible": True, "epsilon": list(eps), "quiver": cand.to_json(), "reflections": labels})


@cli.command("kronecker-basechange")
@click.option("--from", "src", required=True, type=click.Choice(sorted(FAMILY_ALIASES)), help="Basis expanded in.")
@click.option("--to", "dst", required=True, type=click.Choice(sorted(FAMILY_ALIASES)), help="Basis being expanded.")
@click.option("--n", "n", default=10, show_default=True, type=int)
@click.option("--inverse", is_flag=True, help="Print the inverse matrix.")
@format_option
def kronecker_basechange(src, dst, n, inverse, fmt):
    """Base change matrix between z^n, P_n(z) and C_n(z), one row per line."""
    m = base_change_matrix(src, dst, n)
    if inverse:
        m = m.inverse()
    _emit(fmt, m.to_text(), {"from": m.from_family, "to": m.to_family, "entries": [list(r) for r in m.entries]})


@cli.command()
@click.option("--only", multiple=True, type=click.Choice(sorted(SUITE)), help="Run only these checks.")
@format_option
def verify(only, fmt):
    """Run the built-in property checks."""
    results = run_suite(list(only) or None)
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}" for r in results]
    _emit(fmt, "\n".join(lines), [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results])
    if not all(r.passed for r in results):
        raise VerificationFailed("some checks failed")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except VerificationFailed as exc:
        click.echo(f"verification failed: {exc}", err=True)
        return 2
    except ExceptionalParameterError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except click.exceptions.Abort:
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except DOMAIN_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
