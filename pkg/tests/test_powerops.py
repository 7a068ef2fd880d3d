import random

import pytest

from morava3 import (
    CrossCheckFailed,
    DeformationElement,
    GaloisInt,
    NotDivisibleBy3,
    PowerOpContext,
    PrecisionProfile,
    READING_LITERAL_CUBIC,
    build_composite_h,
    build_eta_a,
    build_psi3_h,
    define_f,
    define_w,
    make_c,
    substitute,
)
from conftest import rand_series

PROF = PrecisionProfile(24, 16)


def de(coeffs, profile=PROF):
    return DeformationElement(profile, coeffs)


# -- psi3 --------------------------------------------------------------------


def test_psi3_h_coordinates():
    el = build_psi3_h(define_w(PROF))
    assert el.coord(0) == de([-342, 201, -27, 1])
    assert el.coord(1) == de([-334, 108, -6])
    assert el.coord(2) == de([-27, 3])
    assert el.coord(3) == de([57, -18, 1])


def test_psi3_h_dies_mod_maximal_ideal():
    # image must vanish mod (3, h, a) for the substitution to converge
    g = build_psi3_h(define_w(PROF)).coord(0).coeff(0)
    assert g.re % 3 == 0 and g.im % 3 == 0


def test_psi3_point_values(ctx24):
    i_el = DeformationElement.i_unit(PROF)
    assert ctx24.psi3(i_el) == ctx24.algebra_w.scalar(-i_el)
    assert ctx24.psi3(0).is_zero()
    assert ctx24.psi3(DeformationElement.h(PROF)) == ctx24.psi3_h


def test_psi3_preserves_c_relation_to_truncation_order(ctx24):
    # psi3 is only a ring map up to the dropped tail of the truncated
    # series c: the difference lies in (3,h)^(M//4) but is NOT exactly zero
    pc = ctx24.psi3(ctx24.c)
    diff = pc * pc - (ctx24.psi3_h - ctx24.algebra_w.one())
    assert not diff.is_zero()
    v = PROF.h_deg // 4
    for coord in diff.coords:
        for k in range(PROF.h_deg):
            need = 3 ** max(0, v - k)
            g = coord.coeff(k)
            assert g.re % need == 0 and g.im % need == 0


# -- eta ---------------------------------------------------------------------


def test_eta_of_one_and_scalars(ctx24):
    w = ctx24.algebra_w
    f = ctx24.algebra_f
    assert ctx24.eta(w.one()) == f.one()
    x = de([5, 2, 1])
    assert ctx24.eta(w.scalar(x)) == f.scalar(x)


def test_eta_a_top_coordinate_is_c_over_17_minus_h(ctx24):
    c = make_c(PROF)
    inv = de([17, -1]).invert()
    assert ctx24.eta_a.coord(7) == c * inv


def test_w_vanishes_at_eta_a(ctx24):
    y = ctx24.eta_a
    h = DeformationElement.h(PROF)
    y2 = y * y
    val = y2 * y2 - y2.scale(6) + y.scale_series(h - 9) - ctx24.algebra_f.scalar(3)
    assert val.is_zero()


def test_eta_a_is_the_unique_root_variant():
    # the variant with the u^5 numerator 3c^3 - 6 (instead of 3c^3 - 6c)
    # fails the defining relation, so it cannot define the map
    f = define_f(PROF)
    c = make_c(PROF)
    c3 = c * c * c
    inv = de([17, -1]).invert()
    good = build_eta_a(f)
    bad_coord = (c3.scale(3) - 6) * inv
    bad = f.element(list(good.coords[:5]) + [bad_coord] + list(good.coords[6:]))
    h = DeformationElement.h(PROF)
    y2 = bad * bad
    val = y2 * y2 - y2.scale(6) + bad.scale_series(h - 9) - f.scalar(3)
    assert not val.is_zero()


# -- the composite -----------------------------------------------------------


def test_composite_coordinates_golden(ctx24):
    c = make_c(PROF)
    inv = de([-17, 1]).invert()
    golden = [
        de([1557, -2301, 579, -44, 1]),
        (de([128, -48, 17, -1]) * c).scale(3),
        de([-3032, 4564, -1323, 114, -3]),
        de([-5509, 4069, -855, 56, -1]) * c,
        de([-2617, 3134, -566, -18, 3]),
        (de([-354, 416, -99, 5]) * c).scale(3),
        de([-1124, 1377, -334, 17]),
        de([361, -111, 6]) * c,
    ]
    for j in range(8):
        assert ctx24.psi_c3_h.coord(j) == golden[j] * inv


def test_composite_equals_eta_of_psi3_h(ctx24):
    assert ctx24.eta(ctx24.psi3_h) == ctx24.psi_c3_h
    assert ctx24.psi_c3_h == build_composite_h(ctx24.algebra_f)


def test_rep_matrix_of_composite_is_b(ctx24):
    assert ctx24.algebra_f.rep_matrix(ctx24.psi_c3_h) == ctx24.mat_b


def test_literal_cubic_reading_fails_cross_check():
    with pytest.raises(CrossCheckFailed):
        PowerOpContext(PROF, READING_LITERAL_CUBIC)


def test_unknown_reading_rejected():
    with pytest.raises(ValueError):
        build_psi3_h(define_w(PROF), "something-else")


def test_sign_flipped_composite_breaks_the_golden_trace():
    # negating the u^1, u^2, u^3 numerators makes the trace of the matrix
    # non-polynomial and wrecks delta(h): the golden data is the unique
    # consistent choice
    f = define_f(PROF)
    good = build_composite_h(f)
    flipped = f.element(
        [good.coord(0), -good.coord(1), -good.coord(2), -good.coord(3)]
        + [good.coord(j) for j in range(4, 8)]
    )
    tr = f.trace(flipped)
    assert tr != de([-306, 366, -54, 2])
    h = DeformationElement.h(PROF)
    d = h.scale(3) - (h * h * h + tr).exact_div3()
    assert d != de([102, -119, 18, -1])


def test_psi_c3_point_values(ctx24):
    h = DeformationElement.h(PROF)
    assert ctx24.psi_c3(h) == ctx24.psi_c3_h
    i_el = DeformationElement.i_unit(PROF)
    assert ctx24.psi_c3(i_el) == ctx24.algebra_f.scalar(-i_el)


def test_psi_c3_additive_and_multiplicative(ctx24):
    rng = random.Random(41)
    for _ in range(10):
        x = rand_series(rng, PROF)
        y = rand_series(rng, PROF)
        assert ctx24.psi_c3(x + y) == ctx24.psi_c3(x) + ctx24.psi_c3(y)
    for _ in range(10):
        x = rand_series(rng, PROF, max_degree=7)
        y = rand_series(rng, PROF, max_degree=7)
        assert ctx24.psi_c3(x * y) == ctx24.psi_c3(x) * ctx24.psi_c3(y)


# -- alpha and delta ---------------------------------------------------------


def test_alpha_point_values(ctx24):
    assert ctx24.alpha(0).is_zero()
    assert ctx24.alpha(1) == de([3])


def test_alpha_of_h(ctx24):
    got = ctx24.alpha(DeformationElement.h(PROF))
    assert got == de([-102, 122, -18, 1])
    assert got.eff_p == 23


def test_delta_point_values(ctx24):
    assert ctx24.delta(0).is_zero()
    assert ctx24.delta(1).is_zero()


def test_delta_of_h_golden(ctx24):
    got = ctx24.delta(DeformationElement.h(PROF))
    assert got == de([102, -119, 18, -1])
    assert got.eff_p == 23


def test_delta_of_i_validates_twist(ctx24):
    i_el = DeformationElement.i_unit(PROF)
    assert ctx24.delta(i_el) == de([(0, 6)])


def test_untwisted_substitution_breaks_integrality(ctx24):
    # without the Frobenius twist the numerator of alpha(i) is not
    # divisible by 3, which is what forces the twist convention
    i_el = DeformationElement.i_unit(PROF)
    mat = substitute(i_el, ctx24.mat_b, twist=False, check_convergence=False)
    with pytest.raises(NotDivisibleBy3):
        (i_el * i_el * i_el + mat.trace()).exact_div3()


def test_alpha_routes_agree(ctx24):
    rng = random.Random(47)
    for _ in range(5):
        x = rand_series(rng, PROF)
        assert ctx24.alpha(x) == ctx24.alpha_via_b(x)


def test_delta_via_b_matches_golden(ctx24):
    h = DeformationElement.h(PROF)
    assert ctx24.delta_via_b(h) == de([102, -119, 18, -1])
    assert ctx24.delta_via_b(0).is_zero()


def test_delta_routes_agree(ctx12, profile12):
    rng = random.Random(42)
    for _ in range(50):
        x = rand_series(rng, profile12)
        assert ctx12.delta(x) == ctx12.delta_via_b(x)


def test_p_derivation_law(ctx12, profile12):
    rng = random.Random(43)
    for _ in range(50):
        x = rand_series(rng, profile12)
        y = rand_series(rng, profile12)
        lhs = ctx12.delta(x + y) - ctx12.delta(x) - ctx12.delta(y)
        rhs = (x * x * x + y * y * y - (x + y) ** 3).exact_div3()
        assert lhs == rhs
        assert lhs.eff_p == profile12.p_exp - 1


def test_alpha_defect_law(ctx12, profile12):
    rng = random.Random(44)
    for _ in range(50):
        x = rand_series(rng, profile12)
        y = rand_series(rng, profile12)
        lhs = ctx12.alpha(x + y) - ctx12.alpha(x) - ctx12.alpha(y)
        rhs = ((x + y) ** 3 - x * x * x - y * y * y).exact_div3()
        assert lhs == rhs


def test_integrality(ctx12, profile12):
    rng = random.Random(45)
    for _ in range(1000):
        x = rand_series(rng, profile12)
        ctx12.alpha(x)  # must not raise NotDivisibleBy3


def test_reality_preservation(ctx12, profile12):
    rng = random.Random(46)
    for _ in range(50):
        x = rand_series(rng, profile12, real=True)
        assert ctx12.delta(x).is_real()


def test_b_power_traces(ctx24):
    traces = ctx24.b_power_traces(4)
    assert traces[0] == de([-306, 366, -54, 2])
    assert all(t.is_real() for t in traces)


def test_context_rejects_wrong_profile_elements(ctx24):
    other = DeformationElement.h(PrecisionProfile(24, 8))
    with pytest.raises(ValueError):
        ctx24.delta(other)


def test_eta_rejects_foreign_elements(ctx24):
    from morava3 import AlgebraMismatch

    with pytest.raises(AlgebraMismatch):
        ctx24.eta(ctx24.algebra_f.one())


def test_substitution_rejects_non_nilpotent_algebra_target(ctx24):
    from morava3 import NoConvergence

    h = DeformationElement.h(PROF)
    with pytest.raises(NoConvergence):
        substitute(h, ctx24.algebra_w.one())


def test_degenerate_profile_still_constructs():
    ctx = PowerOpContext(PrecisionProfile(2, 1))
    assert ctx.delta(0).is_zero()
    assert ctx.delta(1).is_zero()
    i_el = DeformationElement.i_unit(ctx.profile)
    assert ctx.psi3(i_el) == ctx.algebra_w.scalar(-i_el)
    c = make_c(ctx.profile)
    assert c * c == DeformationElement.h(ctx.profile) - 1
