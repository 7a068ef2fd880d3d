import random

import pytest

from morava3 import (
    BadBranch,
    DeformationElement,
    GaloisInt,
    NoConvergence,
    NotAUnit,
    NotDivisibleBy3,
    PrecisionProfile,
    make_c,
    substitute,
)
from conftest import rand_series, rand_unit_series

PROF = PrecisionProfile(24, 16)


def de(coeffs, profile=PROF):
    return DeformationElement(profile, coeffs)


def test_truncation_at_top_degree():
    h = DeformationElement.h(PROF)
    top = de([0] * 15 + [1])
    assert (h * top).is_zero()


def test_one_is_neutral():
    rng = random.Random(3)
    x = rand_series(rng, PROF)
    assert DeformationElement.one(PROF) * x == x


def test_product_of_conjugate_binomials():
    assert de([1, 1]) * de([1, -1]) == de([1, 0, -1])


def test_mul_matches_schoolbook_reference():
    # independent convolution oracle with plain Python complex-int pairs
    rng = random.Random(4)
    mod = PROF.modulus
    for _ in range(20):
        a = rand_series(rng, PROF)
        b = rand_series(rng, PROF)
        got = a * b
        for k in range(PROF.h_deg):
            sr = si = 0
            for j in range(k + 1):
                x, y = a.coeff(j).re, a.coeff(j).im
                u, v = b.coeff(k - j).re, b.coeff(k - j).im
                sr += x * u - y * v
                si += x * v + y * u
            assert got.coeff(k) == GaloisInt(sr % mod, si % mod, 24)


def test_invert_geometric_series():
    assert de([1, -1]).invert() == de([1] * 16)


def test_invert_h_minus_17_exists():
    x = de([-17, 1])
    assert x * x.invert() == DeformationElement.one(PROF)


def test_invert_nonunit_raises():
    with pytest.raises(NotAUnit):
        DeformationElement.h(PROF).invert()


def test_invert_random_roundtrip():
    rng = random.Random(5)
    one = DeformationElement.one(PROF)
    for _ in range(100):
        x = rand_unit_series(rng, PROF)
        assert x * x.invert() == one


def test_sqrt_trivial():
    assert de([1]).sqrt(GaloisInt.one(24)) == de([1])


def test_sqrt_squares_back():
    rng = random.Random(6)
    for _ in range(100):
        branch = GaloisInt(rng.randrange(3**24), rng.randrange(3**24), 24)
        if not branch.is_unit():
            branch = branch + 1
        x = rand_series(rng, PROF)
        x = x + branch * branch - x.coeff(0)
        s = x.sqrt(branch)
        assert s * s == x
        assert s.coeff(0) == branch


def test_sqrt_nonunit_raises():
    with pytest.raises(NotAUnit):
        DeformationElement.h(PROF).sqrt(GaloisInt.one(24))


def test_sqrt_bad_branch_raises():
    with pytest.raises(BadBranch):
        de([1, -1]).sqrt(GaloisInt(2, 0, 24))


def test_make_c_relation_and_branch():
    for n, m in [(24, 16), (2, 1), (3, 2), (12, 10)]:
        prof = PrecisionProfile(n, m)
        c = make_c(prof)
        h = DeformationElement.h(prof)
        assert c * c == h - 1
        assert c.coeff(0) == GaloisInt.i(n)


def test_make_c_reduces_to_i_mod_3_h():
    c = make_c(PROF)
    g = c.coeff(0)
    assert g.re % 3 == 0 and g.im % 3 == 1


def test_frobenius_fixes_h_and_negates_c():
    h = DeformationElement.h(PROF)
    assert h.frobenius() == h
    x = de([(0, 0), (0, 0), (0, 1)])  # i*h^2
    assert x.frobenius() == -x
    c = make_c(PROF)
    assert c.frobenius() == -c


def test_exact_div3_series():
    x = de([3, 6, 9])
    y = x.exact_div3()
    assert y == de([1, 2, 3])
    assert y.eff_p == 23
    with pytest.raises(NotDivisibleBy3):
        de([1, 3]).exact_div3()


def test_effective_precision_flows_through_ops():
    x = de([3, 6]).exact_div3()
    y = de([1, 1])
    assert (x + y).eff_p == 23
    assert (x * y).eff_p == 23
    assert x.scale(5).eff_p == 23


def test_substitute_identity_and_powers(ctx24):
    b = ctx24.mat_b
    h = DeformationElement.h(PROF)
    assert substitute(h, b) == b
    assert substitute(h * h, b) == b * b
    i_const = DeformationElement.i_unit(PROF)
    assert substitute(i_const, b, twist=True) == b.one_like().scale(GaloisInt(0, -1, 24))


def test_substitute_h_into_h_is_identity():
    rng = random.Random(7)
    h = DeformationElement.h(PROF)
    for _ in range(50):
        x = rand_series(rng, PROF)
        assert substitute(x, h) == x


def test_substitute_is_ring_hom_on_commuting_target(ctx24):
    rng = random.Random(8)
    b = ctx24.mat_b
    for _ in range(10):
        x = rand_series(rng, PROF, max_degree=7)
        y = rand_series(rng, PROF, max_degree=7)
        lhs = substitute(x * y, b, twist=True, check_convergence=False)
        rhs = substitute(x, b, twist=True, check_convergence=False) * substitute(
            y, b, twist=True, check_convergence=False
        )
        assert lhs == rhs


def test_substitute_rejects_non_nilpotent_target():
    one = DeformationElement.one(PROF)
    x = DeformationElement.h(PROF)
    with pytest.raises(NoConvergence):
        substitute(x, one)


def test_substitute_skips_certificate_when_asked():
    one = DeformationElement.one(PROF)
    x = DeformationElement.h(PROF)
    assert substitute(x, one, check_convergence=False) == one


def test_profile_mismatch_raises():
    other = PrecisionProfile(24, 8)
    with pytest.raises(ValueError):
        DeformationElement.h(PROF) + DeformationElement.h(other)
