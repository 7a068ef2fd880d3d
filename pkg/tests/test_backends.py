"""Parity between the pure-Python kernels and the compiled twin."""

import random

import pytest

from morava3 import DeformationElement, PrecisionProfile, backend
from morava3 import _kernel_py

compiled = pytest.mark.skipif(not backend.HAVE_COMPILED, reason="compiled kernels not built")


def rand_flat(rng, count, mod):
    return [rng.randrange(mod) for _ in range(count)]


@compiled
@pytest.mark.parametrize("p_exp", [2, 12, 24, 39])
def test_series_mul_parity(p_exp):
    rng = random.Random(61)
    mod = 3**p_exp
    from morava3 import _kernel_c

    for _ in range(20):
        m = rng.randrange(1, 20)
        ar, ai, br, bi = (rand_flat(rng, m, mod) for _ in range(4))
        assert _kernel_c.series_mul(ar, ai, br, bi, mod) == _kernel_py.series_mul(
            ar, ai, br, bi, mod
        )


@compiled
def test_scale_add_parity():
    rng = random.Random(62)
    mod = 3**24
    from morava3 import _kernel_c

    for _ in range(20):
        n = rng.randrange(1, 64)
        ar, ai, br, bi = (rand_flat(rng, n, mod) for _ in range(4))
        s, t = rng.randrange(mod), rng.randrange(mod)
        assert _kernel_c.scale_add(ar, ai, br, bi, s, t, mod) == _kernel_py.scale_add(
            ar, ai, br, bi, s, t, mod
        )


@compiled
@pytest.mark.parametrize("n,mlen", [(1, 1), (3, 5), (8, 16)])
def test_mat_mul_parity(n, mlen):
    rng = random.Random(63)
    mod = 3**24
    from morava3 import _kernel_c

    for _ in range(5):
        ar, ai, br, bi = (rand_flat(rng, n * n * mlen, mod) for _ in range(4))
        assert _kernel_c.mat_mul(ar, ai, br, bi, n, mlen, mod) == _kernel_py.mat_mul(
            ar, ai, br, bi, n, mlen, mod
        )


@compiled
@pytest.mark.parametrize("d,mlen", [(1, 4), (4, 10), (8, 16)])
def test_poly_mul_reduce_parity(d, mlen):
    rng = random.Random(64)
    mod = 3**24
    from morava3 import _kernel_c

    for _ in range(5):
        xr, xi, yr, yi, mr, mi = (rand_flat(rng, d * mlen, mod) for _ in range(6))
        got = _kernel_c.poly_mul_reduce(xr, xi, yr, yi, mr, mi, d, mlen, mod)
        want = _kernel_py.poly_mul_reduce(xr, xi, yr, yi, mr, mi, d, mlen, mod)
        assert got == want


def test_large_modulus_uses_python_kernels():
    assert backend.kernel_for(3**45) is _kernel_py
    assert backend.kernel_for(3**39) is not None


def test_forced_python_backend_end_to_end():
    prof = PrecisionProfile(10, 6)
    h = DeformationElement.h(prof)
    x = DeformationElement(prof, [5, (2, 7), 1])
    backend.set_backend("python")
    try:
        py_val = x * x * x + h * x
    finally:
        backend.set_backend("auto")
    auto_val = x * x * x + h * x
    assert py_val == auto_val


@compiled
def test_forced_compiled_rejects_oversized_modulus():
    backend.set_backend("compiled")
    try:
        with pytest.raises(RuntimeError):
            backend.kernel_for(3**45)
    finally:
        backend.set_backend("auto")


def test_high_precision_profile_works_via_python_fallback():
    # 3^45 residues exceed 64-bit words, so this exercises the fallback
    prof = PrecisionProfile(45, 4)
    x = DeformationElement(prof, [1, -1])
    assert x * x.invert() == DeformationElement.one(prof)


def test_set_backend_validation():
    with pytest.raises(ValueError):
        backend.set_backend("gpu")
    backend.set_backend(None)
    assert backend.current_mode() == "auto"
