"""Pure-Python arithmetic kernels.

Reference implementation of the hot loops; `morava3.backend` swaps in the
Cython twin (`morava3._kernel_c`) when it is available.  All functions take
flat sequences of canonical residues (0 <= v < mod) and return lists of the
same shape.  Series are truncated at their length; a "series pair" is the
(real, imaginary) coefficient arrays of one element of Z9[[h]].

Sums are accumulated as plain Python integers and reduced once per output
slot, which is cheaper here than reducing every partial product.
"""


def series_mul(ar, ai, br, bi, mod):
    """Truncated product of two coefficient series over Z[i]/(mod, i^2+1)."""
    m = len(ar)
    cr = [0] * m
    ci = [0] * m
    for k in range(m):
        sr = 0
        si = 0
        for j in range(k + 1):
            x = ar[j]
            y = ai[j]
            u = br[k - j]
            v = bi[k - j]
            sr += x * u - y * v
            si += x * v + y * u
        cr[k] = sr % mod
        ci[k] = si % mod
    return cr, ci


def scale_add(ar, ai, br, bi, sre, sim, mod):
    """Slotwise a + s*b for a Gaussian scalar s = sre + sim*i."""
    n = len(ar)
    cr = [0] * n
    ci = [0] * n
    for t in range(n):
        x = br[t]
        y = bi[t]
        cr[t] = (ar[t] + sre * x - sim * y) % mod
        ci[t] = (ai[t] + sre * y + sim * x) % mod
    return cr, ci


def mat_mul(ar, ai, br, bi, n, mlen, mod):
    """Product of two n x n matrices of series, flattened row-major."""
    cr = [0] * (n * n * mlen)
    ci = [0] * (n * n * mlen)
    for i in range(n):
        for j in range(n):
            accr = [0] * mlen
            acci = [0] * mlen
            for l in range(n):
                offa = (i * n + l) * mlen
                offb = (l * n + j) * mlen
                for k in range(mlen):
                    sr = 0
                    si = 0
                    for t in range(k + 1):
                        x = ar[offa + t]
                        y = ai[offa + t]
                        u = br[offb + k - t]
                        v = bi[offb + k - t]
                        sr += x * u - y * v
                        si += x * v + y * u
                    accr[k] += sr
                    acci[k] += si
            offc = (i * n + j) * mlen
            for k in range(mlen):
                cr[offc + k] = accr[k] % mod
                ci[offc + k] = acci[k] % mod
    return cr, ci


def poly_mul_reduce(xr, xi, yr, yi, mr, mi, d, mlen, mod):
    """Product in E0[g]/(m(g)) for monic m of degree d.

    x, y are coordinate vectors (d series each); m holds the modulus
    coefficients c_0..c_{d-1} (leading 1 implicit).  The full product of
    degree 2d-2 is reduced by long division, which needs no inversion
    because the modulus is monic.
    """
    wlen = 2 * d - 1
    wr = [0] * (wlen * mlen)
    wi = [0] * (wlen * mlen)
    for s in range(wlen):
        j_lo = max(0, s - d + 1)
        j_hi = min(d - 1, s)
        for k in range(mlen):
            sr = 0
            si = 0
            for j in range(j_lo, j_hi + 1):
                offx = j * mlen
                offy = (s - j) * mlen
                for t in range(k + 1):
                    x = xr[offx + t]
                    y = xi[offx + t]
                    u = yr[offy + k - t]
                    v = yi[offy + k - t]
                    sr += x * u - y * v
                    si += x * v + y * u
            wr[s * mlen + k] = sr % mod
            wi[s * mlen + k] = si % mod
    for s in range(wlen - 1, d - 1, -1):
        offq = s * mlen
        for j in range(d):
            offm = j * mlen
            offt = (s - d + j) * mlen
            for k in range(mlen):
                sr = 0
                si = 0
                for t in range(k + 1):
                    x = wr[offq + t]
                    y = wi[offq + t]
                    u = mr[offm + k - t]
                    v = mi[offm + k - t]
                    sr += x * u - y * v
                    si += x * v + y * u
                wr[offt + k] = (wr[offt + k] - sr) % mod
                wi[offt + k] = (wi[offt + k] - si) % mod
    return wr[: d * mlen], wi[: d * mlen]
