import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterforge import catalog
from clusterforge.quiver import (
    Quiver,
    QuiverError,
    classify_type,
    find_grading_form,
    graded_in_reflection_class,
    is_real_root,
    minimal_imaginary_root,
    positive_roots_up_to,
    reflect_quiver,
    sigma_on_dimension,
)


@st.composite
def acyclic_quivers(draw, max_n=5):
    n = draw(st.integers(2, max_n))
    order = draw(st.permutations(list(range(1, n + 1))))
    pairs = [(order[a], order[b]) for a, b in itertools.combinations(range(n), 2)]
    mult = draw(st.lists(st.integers(0, 2), min_size=len(pairs), max_size=len(pairs)))
    arrows = [p for p, m in zip(pairs, mult) for _ in range(m)]
    return Quiver(tuple(range(1, n + 1)), tuple(arrows))


vectors = st.lists(st.integers(-4, 4), min_size=5, max_size=5)


@settings(max_examples=80, deadline=None)
@given(acyclic_quivers(), vectors, vectors)
def test_coxeter_identity(q, a, b):
    a, b = a[: q.n], b[: q.n]
    assert q.euler(a, b) == -q.euler(b, q.coxeter(a))
    assert q.coxeter(q.coxeter(a), -1) == tuple(a)


@settings(max_examples=60, deadline=None)
@given(acyclic_quivers())
def test_exchange_matrix_is_skew(q):
    b = q.exchange_matrix
    assert all(b[i][j] == -b[j][i] for i in range(q.n) for j in range(q.n))
    # symmetrized Euler form has 2 on the diagonal and minus the arrow counts elsewhere
    for i, j in itertools.product(range(q.n), repeat=2):
        expected = 2 if i == j else -abs(b[i][j])
        assert q.tits(q.simple(i), q.simple(j)) == expected


@settings(max_examples=60, deadline=None)
@given(acyclic_quivers())
def test_reflecting_twice_is_identity(q):
    for i in q.sinks() + q.sources():
        assert reflect_quiver(reflect_quiver(q, i), i) == q
        assert q.is_sink(i) == reflect_quiver(q, i).is_source(i)


def test_euler_form_examples():
    q = catalog.kronecker()
    assert q.euler((0, 1), (1, 0)) == -2
    assert q.euler((1, 0), (0, 1)) == 0
    assert q.quadratic((1, 1)) == 0


@pytest.mark.parametrize("name, expected", [
    ("kronecker", "Affine A~(1,1)"),
    ("a21", "Affine A~(2,1)"),
    ("a31", "Affine A~(3,1)"),
    ("a22", "Affine A~(2,2)"),
    ("a2", "Dynkin A2"),
    ("a3", "Dynkin A3"),
    ("d4", "Dynkin D4"),
])
def test_classification(name, expected):
    assert str(classify_type(catalog.NAMED[name]())) == expected


def test_classification_of_other_quivers():
    assert str(classify_type(Quiver((1, 2), ((1, 2),) * 3))) == "Wild"
    assert str(classify_type(Quiver((1, 2, 3, 4, 5), ((1, 3), (2, 3), (3, 4), (3, 5))))) == "Affine D~4"
    e6 = Quiver(tuple(range(1, 7)), ((1, 2), (2, 3), (3, 4), (4, 5), (6, 3)))
    assert str(classify_type(e6)) == "Dynkin E6"
    with pytest.raises(QuiverError):
        classify_type(catalog.doubled_three_cycle())
    with pytest.raises(QuiverError):
        classify_type(Quiver((1, 2, 3), ((1, 2),)))


@pytest.mark.parametrize("q, delta", [
    (catalog.kronecker(), (1, 1)),
    (catalog.affine_a(2, 1), (1, 1, 1)),
    (catalog.affine_a(3, 1), (1, 1, 1, 1)),
    (catalog.square_a22(), (1, 1, 1, 1)),
    (Quiver((1, 2, 3, 4, 5), ((1, 3), (2, 3), (3, 4), (3, 5))), (1, 1, 2, 1, 1)),
])
def test_minimal_imaginary_root(q, delta):
    assert minimal_imaginary_root(q) == delta
    assert q.quadratic(delta) == 0
    assert q.coxeter(delta) == delta


def test_minimal_imaginary_root_needs_affine():
    with pytest.raises(QuiverError):
        minimal_imaginary_root(catalog.linear_a(3))


def test_kronecker_roots():
    roots = positive_roots_up_to(catalog.kronecker(), (2, 2))
    assert sorted(d for d, k in roots if k == "real") == [(0, 1), (1, 0), (1, 2), (2, 1)]
    assert sorted(d for d, k in roots if k == "imaginary") == [(1, 1), (2, 2)]


def test_dynkin_root_counts():
    # |Phi+| for A2, A3, D4
    for q, count in ((catalog.linear_a(2), 3), (catalog.linear_a(3), 6), (catalog.d4(), 12)):
        assert len(positive_roots_up_to(q, (2,) * q.n)) == count
        assert all(is_real_root(q, d) for d, _ in positive_roots_up_to(q, (2,) * q.n))


def test_sigma_examples():
    q = catalog.kronecker()  # vertex 1 (position 0) is the sink
    assert sigma_on_dimension(q, 0, (1, 0)) == (-1, 0)
    assert sigma_on_dimension(q, 0, (-1, 0)) == (1, 0)
    assert sigma_on_dimension(q, 0, (0, 1)) == (2, 1)
    assert sigma_on_dimension(q, 0, (0, -1)) == (0, -1)
    with pytest.raises(QuiverError):
        sigma_on_dimension(catalog.linear_a(3), 1, (1, 1, 1))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["kronecker", "a21", "a31", "a22", "a3", "d4"]), vectors)
def test_sigma_is_an_involution(name, d):
    q = catalog.NAMED[name]()
    d = tuple(d[: q.n])
    for i in q.sinks() + q.sources():
        back = sigma_on_dimension(q.reflect(i), i, sigma_on_dimension(q, i, d))
        assert back == d


def test_grading_forms():
    q = catalog.kronecker()
    b = q.exchange_matrix
    eps = (1, -1)
    assert all(sum(eps[j] * b[j][i] for j in range(2)) < 0 for i in range(2))
    assert find_grading_form(q) is not None
    assert find_grading_form(catalog.doubled_three_cycle()) is None
    for r, s in ((1, 1), (2, 1), (3, 1), (2, 2), (4, 1), (3, 2)):
        assert graded_in_reflection_class(catalog.affine_a(r, s)) is not None


def test_json_round_trip():
    q = catalog.affine_a(3, 1)
    assert Quiver.from_json(q.to_string()) == q
    with pytest.raises(QuiverError):
        Quiver((1, 2), ((1, 3),))
