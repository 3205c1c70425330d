import random
from fractions import Fraction

import pytest

from torofock.rootsys import build_root_system
from torofock.fock import ToroidalAlgebra, ToroidalElement, section5_matrix
from torofock.weylmod.suites import element_pool


@pytest.fixture(scope="module")
def alg():
    return ToroidalAlgebra(build_root_system("A", 1), 2)


@pytest.fixture(scope="module")
def alg3():
    return ToroidalAlgebra(build_root_system("A", 2), 3)


def test_central_relation_canonicalization(alg):
    # sum_i m_i t^m K_i = 0: at m = (2, 3) the two generators are proportional
    a = alg.k(1, (2, 3))
    b = alg.k(2, (2, 3))
    assert b == a.scale(Fraction(-2, 3))
    assert (a.scale(2) + b.scale(3)).is_zero()
    # zero torus exponent: no relation between the K_i
    assert not (alg.k(1, (0, 0)) + alg.k(2, (0, 0))).is_zero()
    # pure torus-degree exponent: the lone nonzero coordinate collapses it
    assert alg.k(2, (0, 5)).is_zero()


def test_bracket_sl2_triple(alg):
    e = alg.x((1,), (0, 0))
    f = alg.x((-1,), (0, 0))
    h = alg.bracket(e, f)
    assert h == alg.h(0, (0, 0))
    assert alg.bracket(h, e) == e.scale(2)
    assert alg.bracket(h, f) == f.scale(-2)


def test_bracket_central_term(alg):
    e = alg.x((1,), (1, 0))
    f = alg.x((-1,), (-1, 0))
    out = alg.bracket(e, f)
    # h tensor t^0 plus (x,y) p_1 K_1 with (x_a, x_-a) = 1
    assert out == alg.h(0, (0, 0)) + alg.k(1, (0, 0))


def test_bracket_with_derivations(alg):
    x = alg.x((1,), (2, -1))
    assert alg.bracket(alg.d(1), x) == x.scale(2)
    assert alg.bracket(alg.d(2), x) == x.scale(-1)
    assert alg.bracket(alg.d(1), alg.d(2)).is_zero()
    k = alg.k(2, (1, 1))
    assert alg.bracket(alg.d(1), k) == k.scale(1)


def test_bracket_centre_is_central(alg):
    k = alg.k(1, (3, 0))
    for other in (alg.x((1,), (0, 1)), alg.h(0, (1, 1)), alg.k(2, (0, 1))):
        assert alg.bracket(k, other).is_zero()
        assert alg.bracket(other, k).is_zero()


def test_bracket_root_addition(alg3):
    rs = alg3.rs
    a1, a2 = (1, 0), (0, 1)
    out = alg3.bracket(alg3.x(a1, (0, 0, 0)), alg3.x(a2, (0, 0, 0)))
    sign = alg3.structure_sign(a1, a2)
    assert out == alg3.x((1, 1), (0, 0, 0), coeff=sign)
    # theta + simple root is not a root
    assert alg3.bracket(
        alg3.x((1, 1), (0, 0, 0)), alg3.x(a1, (0, 0, 0))
    ).is_zero()


def test_jacobi_identity_sampled(alg3):
    rng = random.Random(5)
    pool = element_pool(alg3, rng, size=25)
    for _ in range(60):
        a, b, c = (rng.choice(pool) for _ in range(3))
        total = (
            alg3.bracket(a, alg3.bracket(b, c))
            + alg3.bracket(b, alg3.bracket(c, a))
            + alg3.bracket(c, alg3.bracket(a, b))
        )
        assert total.is_zero()


def test_section5_matrix_images(alg3):
    # images copied from the distinguished block matrix: exponents rotate
    amat = section5_matrix(3)
    x = alg3.x((1, 0), (5, 7, 9))
    out = alg3.gl_automorphism_apply(amat, x)
    assert out == alg3.x((1, 0), (-9, 7, 5))
    # K_1 goes to the last central direction
    k1 = alg3.k(1, (1, 0, 0))
    assert alg3.gl_automorphism_apply(amat, k1) == alg3.k(3, (0, 0, 1))
    # the last central direction returns negated
    kn = alg3.k(3, (0, 0, 2))
    assert alg3.gl_automorphism_apply(amat, kn) == alg3.k(1, (-2, 0, 0), coeff=-1)
    # middle directions fixed
    assert alg3.gl_automorphism_apply(amat, alg3.k(2, (0, 1, 0))) == alg3.k(2, (0, 1, 0))
    # derivations through the inverse matrix
    assert alg3.gl_automorphism_apply(amat, alg3.d(1)) == alg3.d(3)
    assert alg3.gl_automorphism_apply(amat, alg3.d(3)) == alg3.d(1, coeff=-1)
    assert alg3.gl_automorphism_apply(amat, alg3.d(2)) == alg3.d(2)


def test_gl_identity_and_determinant_guard(alg):
    ident = [[1, 0], [0, 1]]
    x = alg.x((1,), (1, -1))
    assert alg.gl_automorphism_apply(ident, x) == x
    with pytest.raises(ValueError):
        alg.gl_automorphism_apply([[2, 0], [0, 1]], x)


def test_gl_preserves_brackets_sampled(alg):
    rng = random.Random(9)
    pool = element_pool(alg, rng, size=20)
    amat = section5_matrix(2)
    auto = alg.gl_automorphism(amat)
    for _ in range(60):
        a, b = rng.choice(pool), rng.choice(pool)
        assert auto(alg.bracket(a, b)) == alg.bracket(auto(a), auto(b))


def test_gl_square_composes(alg3):
    amat = section5_matrix(3)
    asq = [
        [sum(amat[i][k] * amat[k][j] for k in range(3)) for j in range(3)]
        for i in range(3)
    ]
    rng = random.Random(2)
    pool = element_pool(alg3, rng, size=15)
    for element in pool:
        twice = alg3.gl_automorphism_apply(amat, alg3.gl_automorphism_apply(amat, element))
        assert twice == alg3.gl_automorphism_apply(asq, element)
