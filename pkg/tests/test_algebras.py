import random

import pytest

from morava3 import (
    AlgebraMismatch,
    DeformationElement,
    PrecisionProfile,
    build_a,
    define_f,
    define_w,
    make_c,
)
from conftest import rand_series

PROF = PrecisionProfile(24, 16)


def de(coeffs):
    return DeformationElement(PROF, coeffs)


def rand_alg_element(rng, algebra):
    return algebra.element([rand_series(rng, PROF) for _ in range(algebra.rank)])


def test_f_coefficient_list():
    f = define_f(PROF)
    c = make_c(PROF)
    h = DeformationElement.h(PROF)
    expected = [
        de([-3]),
        c.scale(-3),
        de([9, -1]),
        c.scale(9),
        de([-12, 6]),
        (h + 6) * c,
        de([-3, 3]),
        c.scale(3),
    ]
    assert list(f.modulus.coeffs) == expected


def test_w_coefficient_list():
    w = define_w(PROF)
    assert list(w.modulus.coeffs) == [de([-3]), de([-9, 1]), de([-6]), de([0])]


def test_f_reduces_to_u8_mod_3_h():
    for coeff in define_f(PROF).modulus.coeffs:
        g = coeff.coeff(0)
        assert g.re % 3 == 0 and g.im % 3 == 0


def test_u8_reduction_is_negated_low_coefficients():
    f = define_f(PROF)
    u = f.generator()
    u8 = (u**7) * u
    for j, cf in enumerate(f.modulus.coeffs):
        assert u8.coord(j) == -cf


def test_a4_reduction_in_w():
    w = define_w(PROF)
    a = w.generator()
    a4 = (a**3) * a
    assert a4 == w.element([de([3]), de([9, -1]), de([6]), de([0])])


def test_one_is_neutral():
    rng = random.Random(31)
    f = define_f(PROF)
    x = rand_alg_element(rng, f)
    assert f.one() * x == x


def test_mul_associative_commutative():
    rng = random.Random(32)
    f = define_f(PROF)
    for _ in range(5):
        x = rand_alg_element(rng, f)
        y = rand_alg_element(rng, f)
        z = rand_alg_element(rng, f)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)


def test_algebra_mismatch():
    rng = random.Random(33)
    f = define_f(PROF)
    w = define_w(PROF)
    with pytest.raises(AlgebraMismatch):
        rand_alg_element(rng, f) * rand_alg_element(rng, w)


def test_rep_matrix_of_generator_is_companion():
    f = define_f(PROF)
    assert f.rep_matrix(f.generator()) == build_a(PROF)
    assert f.rep_matrix(f.generator()) == f.companion_matrix()


def test_rep_matrix_identity_and_linearity():
    rng = random.Random(34)
    f = define_f(PROF)
    assert f.rep_matrix(f.one()) == build_a(PROF).one_like()
    x = rand_alg_element(rng, f)
    y = rand_alg_element(rng, f)
    assert f.rep_matrix(x + y) == f.rep_matrix(x) + f.rep_matrix(y)


def test_rep_matrix_is_ring_hom():
    rng = random.Random(35)
    f = define_f(PROF)
    for _ in range(3):
        x = rand_alg_element(rng, f)
        y = rand_alg_element(rng, f)
        assert f.rep_matrix(x * y) == f.rep_matrix(x) * f.rep_matrix(y)


def test_trace_of_one_is_rank():
    f = define_f(PROF)
    w = define_w(PROF)
    assert f.trace(f.one()) == de([8])
    assert w.trace(w.one()) == de([4])


def test_trace_of_generators():
    f = define_f(PROF)
    w = define_w(PROF)
    # Newton: p_1 = -(top coefficient)
    assert f.trace(f.generator()) == make_c(PROF).scale(-3)
    assert w.trace(w.generator()).is_zero()


def test_trace_symmetry():
    rng = random.Random(36)
    w = define_w(PROF)
    x = rand_alg_element(rng, w)
    y = rand_alg_element(rng, w)
    assert w.trace(x * y) == w.trace(y * x)


def test_modulus_kills_generator_power():
    for alg in (define_f(PROF), define_w(PROF)):
        g = alg.generator()
        val = g ** alg.rank
        for j, cf in enumerate(alg.modulus.coeffs):
            assert val.coord(j) == -cf


def test_scalar_embedding_and_coercion():
    f = define_f(PROF)
    x = f.generator()
    assert x + 1 == x + f.one()
    assert (x - x).is_zero()
    h = DeformationElement.h(PROF)
    assert f.scalar(h).coord(0) == h
