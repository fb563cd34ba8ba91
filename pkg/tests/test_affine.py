import pytest

from conftest import golden

from clusterforge import catalog
from clusterforge.affine import (
    ExceptionalParameterError,
    check_difference_property,
    classify_lambda,
    delta_module,
    exceptional_tubes,
    homogeneous_character,
    homogeneous_regular,
    homogeneous_tube_characters,
    regular_defect_ok,
    tube_characters,
)
from clusterforge.ccmap import cc_map
from clusterforge.corpus import band_arrows
from clusterforge.kronecker import chebyshev_second
from clusterforge.quiver import QuiverError, minimal_imaginary_root, reflection_class
from clusterforge.representation import band_module, hom_dimension, is_brick, thin_indecomposable


def test_tube_data():
    assert exceptional_tubes(catalog.kronecker()) == ()
    (t,) = exceptional_tubes(catalog.affine_a(2, 1))
    assert t.rank == 2 and t.quasi_simple_dims == ((0, 1, 0), (1, 0, 1))
    assert t.dim(0, 3) == (1, 2, 1)
    (t,) = exceptional_tubes(catalog.affine_a(3, 1))
    assert t.rank == 3
    ranks = sorted(t.rank for t in exceptional_tubes(catalog.square_a22()))
    assert ranks == [2, 2]
    ranks = sorted(t.rank for t in exceptional_tubes(catalog.affine_a(3, 2)))
    assert ranks == [2, 3]
    with pytest.raises(QuiverError):
        exceptional_tubes(catalog.d4())


@pytest.mark.parametrize("r, s", [(2, 1), (3, 1), (2, 2), (3, 2), (4, 1)])
def test_tubes_are_coxeter_orbits(r, s):
    q = catalog.affine_a(r, s)
    delta = minimal_imaginary_root(q)
    for tube in exceptional_tubes(q):
        assert regular_defect_ok(q, tube)
        es = tube.quasi_simple_dims
        assert tuple(map(sum, zip(*es))) == delta
        for i, e in enumerate(es):
            # c(e_i) = e_{i-1}
            assert q.coxeter(e) == es[(i - 1) % tube.rank]
            assert is_brick(thin_indecomposable(q, e))


def test_classify_lambda():
    q = catalog.affine_a(2, 1)
    assert classify_lambda(q, 0) == (0, 0)
    assert classify_lambda(q, None) is None  # lambda = infinity is homogeneous too
    for lam in (1, 2, -1):
        assert classify_lambda(q, lam) is None
    with pytest.raises(ExceptionalParameterError):
        homogeneous_regular(q, 0)
    m = homogeneous_regular(q, 2)
    for tube in exceptional_tubes(q):
        for e in tube.quasi_simple_dims:
            assert hom_dimension(thin_indecomposable(q, e), m) == 0


def test_lambda_independence_of_z():
    for name in ("kronecker", "a21", "a31", "a22"):
        q = catalog.NAMED[name]()
        z = homogeneous_character(q)
        for lam in (1, 2, 5, -3):
            if classify_lambda(q, lam) is None:
                assert cc_map(delta_module(q, lam)) == z


def test_recursion_matches_direct_thin_modules():
    # below the rank every E_i^(n) is thin, so the CC map can be taken directly
    for r, s in ((3, 1), (4, 1), (3, 2)):
        q = catalog.affine_a(r, s)
        for tube in exceptional_tubes(q):
            table = tube_characters(q, tube, tube.rank - 1)
            for i in range(tube.rank):
                for n in range(1, tube.rank):
                    assert table[(i, n)] == cc_map(thin_indecomposable(q, tube.dim(i, n)))


@pytest.mark.parametrize("name, top", [("kronecker", 3), ("a21", 2), ("a31", 2)])
def test_homogeneous_tube_against_band_modules(name, top):
    q = catalog.NAMED[name]()
    special, partner = band_arrows(q)
    z = homogeneous_character(q)
    table = homogeneous_tube_characters(q, top)
    for n in range(1, top + 1):
        direct = cc_map(band_module(q, n, 3, special, partner))
        assert direct == table[(0, n)] == chebyshev_second(n)(z)


def test_a21_difference_property():
    q = catalog.affine_a(2, 1)
    (tube,) = exceptional_tubes(q)
    reports = check_difference_property(q, tube)
    assert all(r.passed for r in reports)
    # both quotients vanish, so the difference is 1
    assert all(r.difference == golden("1", 3) for r in reports)


def test_a31_difference_property():
    q = catalog.affine_a(3, 1)
    (tube,) = exceptional_tubes(q)
    reports = {r.socle_dim: r for r in check_difference_property(q, tube)}
    assert all(r.passed for r in reports.values())
    assert reports[(0, 0, 1, 0)].difference == golden("(u1 + u3)/u2", 4)
    assert reports[(0, 0, 1, 0)].x_me == golden(
        "(u1*u4*u3**2 + u3*u1**2*u4 + u3*u2*u4**2 + u4*u3 + u3*u2*u1**2 + u1*u4 + u2*u1)/(u1*u2*u3*u4)", 4)


def test_a22_difference_property():
    q = catalog.square_a22()
    for tube in exceptional_tubes(q):
        for r in check_difference_property(q, tube):
            assert r.passed and r.difference == golden("1", 4)


@pytest.mark.parametrize("r, s", [(2, 1), (3, 1), (2, 2), (4, 1), (3, 2)])
def test_difference_property_across_reflections(r, s):
    for q, _ in reflection_class(catalog.affine_a(r, s), 2):
        for tube in exceptional_tubes(q):
            assert all(rep.passed for rep in check_difference_property(q, tube))


def test_homogeneous_tube_rejected_by_difference_check():
    from clusterforge.affine import homogeneous_tube

    q = catalog.affine_a(2, 1)
    with pytest.raises(ValueError):
        check_difference_property(q, homogeneous_tube(q))
