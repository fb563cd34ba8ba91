import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import golden

from clusterforge import catalog
from clusterforge.affine import exceptional_tubes, homogeneous_character, tube_characters
from clusterforge.ccmap import cc_exponent, cc_map, linear_independence, support_cone_check, verify_denominator_theorem
from clusterforge.corpus import indecomposable_corpus
from clusterforge.kronecker import kronecker_z
from clusterforge.laurent import LaurentPolynomial, denominator_vector
from clusterforge.quiver import QuiverError
from clusterforge.representation import (
    DecoratedObject,
    direct_sum,
    simple_representation,
    thin_indecomposable,
)

A21_TERMS_E = "(u2*u1**2 + u3*u1*u2 + u1 + u3 + u2*u3**2)/(u1*u2*u3)"
A21_TERMS_LAMBDA = "(u2*u1**2 + u1 + u3 + u2*u3**2)/(u1*u2*u3)"
A31_M0 = "(u1*u4*u3**2 + u3*u1**2*u4 + u3*u2*u4**2 + u4*u3 + u3*u2*u1**2 + u1*u4 + u2*u1)/(u1*u2*u3*u4)"
A31_MLAMBDA = "(u3*u2*u1**2 + u2*u1 + u1*u4 + u4*u3 + u3*u2*u4**2)/(u1*u2*u3*u4)"


def test_kronecker_z():
    q = catalog.kronecker()
    z = golden("(1 + u1**2 + u2**2)/(u1*u2)", 2)
    assert kronecker_z() == z
    assert homogeneous_character(q) == z
    assert cc_map(thin_indecomposable(q, (1, 1), special=(0, 3))) == z


def test_a21_values():
    q = catalog.affine_a(2, 1)
    assert cc_map(thin_indecomposable(q, (1, 1, 1), special=(0, 0))) == golden(A21_TERMS_E, 3)
    assert cc_map(thin_indecomposable(q, (1, 1, 1), special=(1, 0))) == golden(A21_TERMS_E, 3)
    for lam in (1, 2, -3):
        assert cc_map(thin_indecomposable(q, (1, 1, 1), special=(1, lam))) == golden(A21_TERMS_LAMBDA, 3)
    (tube,) = exceptional_tubes(q)
    table = tube_characters(q, tube, 2)
    assert {table[(0, 1)], table[(1, 1)]} == {golden("(u1 + u3)/u2", 3), golden("(1 + u1*u2 + u2*u3)/(u1*u3)", 3)}


def test_a31_values():
    q = catalog.affine_a(3, 1)
    m0 = cc_map(thin_indecomposable(q, (1,) * 4, special=(2, 0)))
    ml = cc_map(thin_indecomposable(q, (1,) * 4, special=(2, 5)))
    assert m0 == golden(A31_M0, 4)
    assert ml == golden(A31_MLAMBDA, 4)
    assert m0 - ml == golden("(u1 + u3)/u2", 4)
    (tube,) = exceptional_tubes(q)
    table = tube_characters(q, tube, 2)
    xs = {table[(i, 1)] for i in range(3)}
    ys = {table[(i, 2)] for i in range(3)}
    assert xs == {golden(t, 4) for t in ("(u2 + u4)/u3", "(u1 + u3)/u2", "(1 + u1*u3 + u2*u4)/(u1*u4)")}
    assert ys == {golden(t, 4) for t in (
        "(u2*u1 + u1*u4 + u4*u3)/(u2*u3)",
        "(u3*u1**2 + u1 + u3**2*u1 + u3 + u3*u2*u4)/(u1*u2*u4)",
        "(u2*u3*u1 + u2 + u2**2*u4 + u4 + u2*u4**2)/(u1*u3*u4)",
    )}


def test_a22_values():
    q = catalog.square_a22()
    assert homogeneous_character(q) == golden(
        "(u1**2 + u4**2 + 2*u1*u4 + u1**2*u2*u3 + u2*u3*u4**2)/(u1*u2*u3*u4)", 4)
    pairs = []
    for tube in exceptional_tubes(q):
        table = tube_characters(q, tube, 1)
        pairs.append({table[(0, 1)], table[(1, 1)]})
    x = {golden("(u1 + u4)/u2", 4), golden("(u1 + u4 + u1*u2*u3 + u2*u3*u4)/(u1*u3*u4)", 4)}
    y = {golden("(u1 + u4)/u3", 4), golden("(u1 + u4 + u1*u2*u3 + u2*u3*u4)/(u1*u2*u4)", 4)}
    assert sorted(pairs, key=str) == sorted([x, y], key=str)


def test_shifted_projectives_give_initial_variables():
    q = catalog.affine_a(2, 1)
    for i in range(3):
        obj = DecoratedObject.shifted_projective(q, i)
        assert cc_map(obj) == LaurentPolynomial.generator(cc_map(obj).variables, i)


def test_simple_at_sink():
    q = catalog.affine_a(2, 1)  # vertex 3 is a sink fed by 1 and 2
    assert cc_map(simple_representation(q, 2)) == golden("(1 + u1*u2)/u3", 3)


def test_exponent_formula_on_kronecker():
    q = catalog.kronecker()
    assert cc_exponent(q, (1, 1), (0, 0)) == (-1, 1)
    assert cc_exponent(q, (1, 1), (1, 1)) == (1, -1)


@pytest.mark.parametrize("name", ["kronecker", "a21", "a31", "a22", "a2", "a3", "d4"])
def test_denominator_theorem(name):
    q = catalog.NAMED[name]()
    for entry in indecomposable_corpus(q, 6):
        assert verify_denominator_theorem(entry.obj), entry.name
        x = cc_map(entry.obj)
        assert denominator_vector(x) == entry.obj.dimension


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["kronecker", "a21", "a3"]), st.data())
def test_cc_map_is_multiplicative(name, data):
    q = catalog.NAMED[name]()
    corpus = indecomposable_corpus(q, 4)
    a = data.draw(st.sampled_from(corpus)).obj
    b = data.draw(st.sampled_from(corpus)).obj
    assert cc_map(a.direct_sum(b)) == cc_map(a) * cc_map(b)


@pytest.mark.parametrize("name", ["a21", "a31", "a22", "a3", "d4"])
def test_support_cone(name):
    q = catalog.NAMED[name]()
    for entry in indecomposable_corpus(q, 5):
        assert support_cone_check(entry.obj), entry.name


def test_support_cone_rejects_multiple_arrows():
    q = catalog.kronecker()
    with pytest.raises(QuiverError):
        support_cone_check(simple_representation(q, 0))


def test_linear_independence():
    z = kronecker_z()
    assert not linear_independence([z, z])
    assert linear_independence([z, z * z, LaurentPolynomial.constant(z.variables, 1)])
    with pytest.raises(ValueError):
        linear_independence([])


def test_direct_sum_of_simples():
    q = catalog.kronecker()
    s = direct_sum([simple_representation(q, 0), simple_representation(q, 1)])
    assert cc_map(s) == cc_map(simple_representation(q, 0)) * cc_map(simple_representation(q, 1))
