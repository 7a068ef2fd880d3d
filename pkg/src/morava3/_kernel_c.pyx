# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of morava3._kernel_py.

Same signatures and the same results, restricted to moduli that fit in a
64-bit word (backend.py enforces mod <= 3**39).  Partial products are
reduced with 128-bit intermediates and accumulated in signed 128-bit sums,
so a convolution may add up to 2**64 reduced terms before overflow.
"""

from cpython.array cimport array
from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"
    ctypedef long long i128 "__int128"


cdef inline u64 _mulmod(u64 a, u64 b, u64 m) nogil:
    return <u64>((<u128>a * b) % m)


cdef inline u64 _wrap(i128 s, u64 m) nogil:
    cdef i128 r = s % <i128>m
    if r < 0:
        r += <i128>m
    return <u64>r


def series_mul(ar, ai, br, bi, mod):
    """Truncated product of two coefficient series over Z[i]/(mod, i^2+1)."""
    cdef array xar = array('Q', ar)
    cdef array xai = array('Q', ai)
    cdef array xbr = array('Q', br)
    cdef array xbi = array('Q', bi)
    cdef u64 m = mod
    cdef Py_ssize_t mlen = len(ar)
    cdef array car = array('Q', bytes(8 * mlen))
    cdef array cai = array('Q', bytes(8 * mlen))
    cdef u64[::1] pa = xar, qa = xai, pb = xbr, qb = xbi, pc = car, qc = cai
    cdef Py_ssize_t k, j
    cdef i128 sr, si
    cdef u64 x, y, u, v
    with nogil:
        for k in range(mlen):
            sr = 0
            si = 0
            for j in range(k + 1):
                x = pa[j]
                y = qa[j]
                u = pb[k - j]
                v = qb[k - j]
                sr += <i128>_mulmod(x, u, m) - <i128>_mulmod(y, v, m)
                si += <i128>_mulmod(x, v, m) + <i128>_mulmod(y, u, m)
            pc[k] = _wrap(sr, m)
            qc[k] = _wrap(si, m)
    return car.tolist(), cai.tolist()


def scale_add(ar, ai, br, bi, sre, sim, mod):
    """Slotwise a + s*b for a Gaussian scalar s = sre + sim*i."""
    cdef array xar = array('Q', ar)
    cdef array xai = array('Q', ai)
    cdef array xbr = array('Q', br)
    cdef array xbi = array('Q', bi)
    cdef u64 m = mod
    cdef u64 wr = sre % mod
    cdef u64 wi = sim % mod
    cdef Py_ssize_t n = len(ar)
    cdef array car = array('Q', bytes(8 * n))
    cdef array cai = array('Q', bytes(8 * n))
    cdef u64[::1] pa = xar, qa = xai, pb = xbr, qb = xbi, pc = car, qc = cai
    cdef Py_ssize_t t
    cdef i128 sr, si
    cdef u64 x, y
    with nogil:
        for t in range(n):
            x = pb[t]
            y = qb[t]
            sr = <i128>pa[t] + <i128>_mulmod(wr, x, m) - <i128>_mulmod(wi, y, m)
            si = <i128>qa[t] + <i128>_mulmod(wr, y, m) + <i128>_mulmod(wi, x, m)
            pc[t] = _wrap(sr, m)
            qc[t] = _wrap(si, m)
    return car.tolist(), cai.tolist()


def mat_mul(ar, ai, br, bi, n, mlen, mod):
    """Product of two n x n matrices of series, flattened row-major."""
    cdef array xar = array('Q', ar)
    cdef array xai = array('Q', ai)
    cdef array xbr = array('Q', br)
    cdef array xbi = array('Q', bi)
    cdef u64 m = mod
    cdef Py_ssize_t nn = n, ml = mlen
    cdef Py_ssize_t total = nn * nn * ml
    cdef array car = array('Q', bytes(8 * total))
    cdef array cai = array('Q', bytes(8 * total))
    cdef u64[::1] pa = xar, qa = xai, pb = xbr, qb = xbi, pc = car, qc = cai
    cdef i128 *accr = <i128 *>malloc(2 * ml * sizeof(i128))
    if accr == NULL:
        raise MemoryError()
    cdef i128 *acci = accr + ml
    cdef Py_ssize_t i, j, l, k, t, offa, offb, offc
    cdef i128 sr, si
    cdef u64 x, y, u, v
    try:
        with nogil:
            for i in range(nn):
                for j in range(nn):
                    for k in range(ml):
                        accr[k] = 0
                        acci[k] = 0
                    for l in range(nn):
                        offa = (i * nn + l) * ml
                        offb = (l * nn + j) * ml
                        for k in range(ml):
                            sr = 0
                            si = 0
                            for t in range(k + 1):
                                x = pa[offa + t]
                                y = qa[offa + t]
                                u = pb[offb + k - t]
                                v = qb[offb + k - t]
                                sr += <i128>_mulmod(x, u, m) - <i128>_mulmod(y, v, m)
                                si += <i128>_mulmod(x, v, m) + <i128>_mulmod(y, u, m)
                            accr[k] += sr
                            acci[k] += si
                    offc = (i * nn + j) * ml
                    for k in range(ml):
                        pc[offc + k] = _wrap(accr[k], m)
                        qc[offc + k] = _wrap(acci[k], m)
    finally:
        free(accr)
    return car.tolist(), cai.tolist()


def poly_mul_reduce(xr, xi, yr, yi, mr, mi, d, mlen, mod):
    """Product in E0[g]/(m(g)) for monic m of degree d (see the Python twin)."""
    cdef array xxr = array('Q', xr)
    cdef array xxi = array('Q', xi)
    cdef array xyr = array('Q', yr)
    cdef array xyi = array('Q', yi)
    cdef array xmr = array('Q', mr)
    cdef array xmi = array('Q', mi)
    cdef u64 m = mod
    cdef Py_ssize_t dd = d, ml = mlen
    cdef Py_ssize_t wlen = 2 * dd - 1
    cdef array war = array('Q', bytes(8 * wlen * ml))
    cdef array wai = array('Q', bytes(8 * wlen * ml))
    cdef u64[::1] pxr = xxr, pxi = xxi, pyr = xyr, pyi = xyi
    cdef u64[::1] pmr = xmr, pmi = xmi, pwr = war, pwi = wai
    cdef Py_ssize_t s, j, k, t, j_lo, j_hi, offx, offy, offq, offm, offt
    cdef i128 sr, si
    cdef u64 x, y, u, v
    with nogil:
        for s in range(wlen):
            j_lo = s - dd + 1
            if j_lo < 0:
                j_lo = 0
            j_hi = s
            if j_hi > dd - 1:
                j_hi = dd - 1
            for k in range(ml):
                sr = 0
                si = 0
                for j in range(j_lo, j_hi + 1):
                    offx = j * ml
                    offy = (s - j) * ml
                    for t in range(k + 1):
                        x = pxr[offx + t]
                        y = pxi[offx + t]
                        u = pyr[offy + k - t]
                        v = pyi[offy + k - t]
                        sr += <i128>_mulmod(x, u, m) - <i128>_mulmod(y, v, m)
                        si += <i128>_mulmod(x, v, m) + <i128>_mulmod(y, u, m)
                pwr[s * ml + k] = _wrap(sr, m)
                pwi[s * ml + k] = _wrap(si, m)
        for s in range(wlen - 1, dd - 1, -1):
            offq = s * ml
            for j in range(dd):
                offm = j * ml
                offt = (s - dd + j) * ml
                for k in range(ml):
                    sr = 0
                    si = 0
                    for t in range(k + 1):
                        x = pwr[offq + t]
                        y = pwi[offq + t]
                        u = pmr[offm + k - t]
                        v = pmi[offm + k - t]
                        sr += <i128>_mulmod(x, u, m) - <i128>_mulmod(y, v, m)
                        si += <i128>_mulmod(x, v, m) + <i128>_mulmod(y, u, m)
                    pwr[offt + k] = _wrap(<i128>pwr[offt + k] - sr, m)
                    pwi[offt + k] = _wrap(<i128>pwi[offt + k] - si, m)
    return war.tolist()[: dd * ml], wai.tolist()[: dd * ml]
