import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import golden

from clusterforge import catalog
from clusterforge.ccmap import cc_map
from clusterforge.cluster import (
    LaurentPhenomenonError,
    Seed,
    canonical_isomorphism,
    enumerate_cluster_variables,
    exchange_graph_closes,
    explore,
    mutate,
    mutate_matrix,
    rigid_correspondence_check,
)
from clusterforge.corpus import indecomposable_corpus
from clusterforge.laurent import LaurentPolynomial, divide_exact
from clusterforge.quiver import QuiverError, minimal_imaginary_root


def kronecker_sequence(lo, hi):
    """x_{n-1} x_{n+1} = x_n^2 + 1 starting from x_1 = u1, x_2 = u2."""
    names = ("u1", "u2")
    xs = {1: LaurentPolynomial.generator(names, 0), 2: LaurentPolynomial.generator(names, 1)}
    for n in range(2, hi):
        xs[n + 1] = divide_exact(xs[n] * xs[n] + 1, xs[n - 1])
    for n in range(1, lo, -1):
        xs[n - 1] = divide_exact(xs[n] * xs[n] + 1, xs[n + 1])
    return xs


def test_mutation_examples():
    k = Seed.initial(catalog.kronecker())
    assert mutate(k, 0).cluster[0] == golden("(u2**2 + 1)/u1", 2)
    a = Seed.initial(catalog.affine_a(2, 1))
    assert mutate(a, 2).cluster[2] == golden("(u1*u2 + 1)/u3", 3)
    with pytest.raises(QuiverError):
        mutate(k, 5)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["kronecker", "a21", "a31", "a3", "d4"]), st.lists(st.integers(0, 3), max_size=6))
def test_mutation_is_an_involution(name, path):
    q = catalog.NAMED[name]()
    s = Seed.initial(q)
    for k in path:
        s = mutate(s, k % q.n)
    for k in path[-1:]:
        back = mutate(mutate(s, k % q.n), k % q.n)
        assert back.cluster == s.cluster and back.matrix == s.matrix
    b = s.matrix
    assert mutate_matrix(mutate_matrix(b, 0), 0) == b


def test_kronecker_counts_follow_the_recursion():
    q = catalog.kronecker()
    for depth in range(5):
        found = set(map(str, enumerate_cluster_variables(q, depth)))
        seq = kronecker_sequence(1 - depth, 2 + depth)
        assert found == {str(x) for x in seq.values()}
        assert len(found) == 2 + 2 * depth
    assert not exchange_graph_closes(q, 6)


def test_dynkin_counts():
    assert len(enumerate_cluster_variables(catalog.linear_a(2), 5)) == 5
    assert exchange_graph_closes(catalog.linear_a(2), 5)
    assert len(enumerate_cluster_variables(catalog.linear_a(3), 6)) == 9
    assert len(enumerate_cluster_variables(catalog.d4(), 6)) == 16
    assert enumerate_cluster_variables(catalog.linear_a(3), 0) == [
        LaurentPolynomial.generator(("u1", "u2", "u3"), i) for i in range(3)]


def test_depth_must_be_nonnegative():
    with pytest.raises(ValueError):
        explore(catalog.linear_a(2), -1)


@pytest.mark.parametrize("name", ["a2", "a3", "a21"])
def test_rigid_correspondence(name):
    q = catalog.NAMED[name]()
    box = tuple(2 * x for x in minimal_imaginary_root(q)) if name == "a21" else (2,) * q.n
    rep = rigid_correspondence_check(q, box, 6)
    assert rep.equal, (rep.missing_from_mutation, rep.missing_from_modules)
    assert rep.from_modules


def test_canonical_isomorphism_is_invertible():
    q = catalog.affine_a(2, 1)
    for i in q.sinks() + q.sources():
        phi = canonical_isomorphism(q, i)
        back = canonical_isomorphism(q.reflect(i), i)
        for entry in indecomposable_corpus(q, 4):
            x = cc_map(entry.obj)
            assert back(phi(x)) == x


def test_canonical_isomorphism_examples():
    q = catalog.kronecker()
    phi = canonical_isomorphism(q, 0)
    u = ("u1", "u2")
    assert phi(LaurentPolynomial.generator(u, 0)) == golden("(u2**2 + 1)/u1", 2)
    assert phi(LaurentPolynomial.generator(u, 1)) == golden("u2", 2)
    with pytest.raises(QuiverError):
        canonical_isomorphism(catalog.linear_a(3), 1)
    with pytest.raises(LaurentPhenomenonError):
        phi(golden("1/u1", 2))
