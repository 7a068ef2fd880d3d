"""Square matrices over the coefficient ring, companion matrices, and the
two 8x8 matrices the delta formula is built from."""

from . import backend
from .errors import DimensionMismatch
from .galois import PRIME, GaloisInt, PrecisionProfile
from .series import DeformationElement, make_c


class MonicPoly:
    """A monic polynomial over E0: coefficients c_0..c_{d-1}, leading 1 implicit."""

    __slots__ = ("profile", "coeffs")

    def __init__(self, profile: PrecisionProfile, coeffs):
        if not coeffs:
            raise ValueError("a monic polynomial needs degree >= 1")
        self.profile = profile
        self.coeffs = tuple(
            c if isinstance(c, DeformationElement) else DeformationElement(profile, [c])
            for c in coeffs
        )

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def full_coeffs(self):
        """c_0..c_{d-1} followed by the leading 1."""
        return list(self.coeffs) + [DeformationElement.one(self.profile)]

    def __eq__(self, other):
        if not isinstance(other, MonicPoly):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def __str__(self):
        from .render import render_poly

        return render_poly(self.full_coeffs(), "g")


class MatrixE0:
    """A square matrix of DeformationElement entries sharing one profile."""

    __slots__ = ("n", "profile", "eff_p", "entries")

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise DimensionMismatch("matrix must be square and nonempty")
        profile = rows[0][0].profile
        eff = min(e.eff_p for row in rows for e in row)
        if any(e.profile != profile for row in rows for e in row):
            raise DimensionMismatch("matrix entries must share one profile")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "eff_p", eff)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixE0 is immutable")

    @classmethod
    def zero(cls, n: int, profile: PrecisionProfile):
        z = DeformationElement.zero(profile)
        return cls([[z] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int, profile: PrecisionProfile):
        z = DeformationElement.zero(profile)
        one = DeformationElement.one(profile)
        return cls([[one if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, value: DeformationElement, n: int):
        z = DeformationElement.zero(value.profile)
        return cls([[value if i == j else z for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> DeformationElement:
        return self.entries[i][j]

    def _check(self, other):
        if self.n != other.n or self.profile != other.profile:
            raise DimensionMismatch(
                f"{self.n}x{self.n} vs {other.n}x{other.n} or differing profiles"
            )

    def _flat(self, mod):
        re = []
        im = []
        for row in self.entries:
            for e in row:
                r, i = e._lists(mod)
                re.extend(r)
                im.extend(i)
        return re, im

    def _from_flat(self, re, im, eff):
        mlen = self.profile.h_deg
        rows = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                off = (i * self.n + j) * mlen
                row.append(
                    DeformationElement._raw(
                        self.profile, re[off : off + mlen], im[off : off + mlen], eff
                    )
                )
            rows.append(row)
        return MatrixE0(rows)

    def __add__(self, other):
        if not isinstance(other, MatrixE0):
            return NotImplemented
        self._check(other)
        return MatrixE0(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        if not isinstance(other, MatrixE0):
            return NotImplemented
        self._check(other)
        return MatrixE0(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __neg__(self):
        return MatrixE0([[-a for a in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, MatrixE0):
            self._check(other)
            eff = min(self.eff_p, other.eff_p)
            mod = PRIME**eff
            ar, ai = self._flat(mod)
            br, bi = other._flat(mod)
            kern = backend.kernel_for(mod)
            cr, ci = kern.mat_mul(ar, ai, br, bi, self.n, self.profile.h_deg, mod)
            return self._from_flat(cr, ci, eff)
        if isinstance(other, (int, GaloisInt)):
            return self.scale(other)
        if isinstance(other, DeformationElement):
            return MatrixE0([[a * other for a in row] for row in self.entries])
        return NotImplemented

    def __rmul__(self, other):
        # Scalars commute with everything here.
        if isinstance(other, (int, GaloisInt, DeformationElement)):
            return self * other
        return NotImplemented

    def scale(self, s) -> "MatrixE0":
        if isinstance(s, int):
            s = GaloisInt(s, 0, self.eff_p)
        eff = min(self.eff_p, s.n)
        mod = PRIME**eff
        br, bi = self._flat(mod)
        kern = backend.kernel_for(mod)
        zero = [0] * len(br)
        cr, ci = kern.scale_add(zero, zero, br, bi, s.re % mod, s.im % mod, mod)
        return self._from_flat(cr, ci, eff)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        out = MatrixE0.identity(self.n, self.profile)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def trace(self) -> DeformationElement:
        t = DeformationElement.zero(self.profile).at_precision(self.eff_p)
        for i in range(self.n):
            t = t + self.entries[i][i]
        return t

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def __eq__(self, other):
        if not isinstance(other, MatrixE0):
            return NotImplemented
        if self.n != other.n or self.profile != other.profile:
            return False
        return all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    __hash__ = None

    # -- substitution protocol ----------------------------------------------

    def one_like(self):
        return MatrixE0.identity(self.n, self.profile)

    def subst_rank(self) -> int:
        return self.n

    def __repr__(self):
        return f"MatrixE0(n={self.n}, eff_p={self.eff_p})"

    def __str__(self):
        from .render import render_matrix

        return render_matrix(self)


def companion(poly: MonicPoly) -> MatrixE0:
    """Companion matrix: 1s on the subdiagonal, negated coefficients in the
    last column."""
    d = poly.degree
    profile = poly.profile
    z = DeformationElement.zero(profile)
    one = DeformationElement.one(profile)
    rows = []
    for i in range(d):
        row = [z] * d
        if i >= 1:
            row[i - 1] = one
        row[d - 1] = -poly.coeffs[i]
        rows.append(row)
    return MatrixE0(rows)


def poly_at_matrix(coeffs, x: MatrixE0) -> MatrixE0:
    """Horner evaluation of sum coeffs[j] * x^j (coeffs low to high)."""
    if not coeffs:
        return MatrixE0.zero(x.n, x.profile)
    acc = MatrixE0.diagonal(coeffs[-1], x.n)
    for j in range(len(coeffs) - 2, -1, -1):
        acc = acc * x + MatrixE0.diagonal(coeffs[j], x.n)
    return acc


def build_a(profile: PrecisionProfile) -> MatrixE0:
    """The reference 8x8 matrix A, with c = i*sqrt(1-h): subdiagonal 1s
    and the defining last column.  It is the companion matrix of the octic
    modulus built by define_f."""
    c = make_c(profile)
    de = lambda ints: DeformationElement(profile, ints)
    h = de([0, 1])
    last = [
        de([3]),
        c.scale(3),
        h - 9,
        c.scale(-9),
        de([12, -6]),
        -(h - 1) * c - c.scale(7),
        de([3, -3]),
        c.scale(-3),
    ]
    z = DeformationElement.zero(profile)
    one = DeformationElement.one(profile)
    rows = []
    for i in range(8):
        row = [z] * 8
        if i >= 1:
            row[i - 1] = one
        row[7] = last[i]
        rows.append(row)
    return MatrixE0(rows)


def composite_numerators(profile: PrecisionProfile):
    """Numerators (low u-degree first) of the composite image of h over the
    common denominator h-17, which is a unit (constant term -17 = 1 in F9).

    The same eight series define the matrix B (with the companion matrix A
    in place of u) and the image of h under the composite ring map into
    E0[u]/f.  They are pinned by the golden tests: the trace of the matrix
    they build must be the integer polynomial 2h^3 - 54h^2 + 366h - 306,
    which forces delta(h) = -h^3 + 18h^2 - 119h + 102.
    """
    c = make_c(profile)
    de = lambda ints: DeformationElement(profile, ints)
    return [
        de([1557, -2301, 579, -44, 1]),
        (de([128, -48, 17, -1]) * c).scale(3),
        de([-3032, 4564, -1323, 114, -3]),
        de([-5509, 4069, -855, 56, -1]) * c,
        de([-2617, 3134, -566, -18, 3]),
        (de([-354, 416, -99, 5]) * c).scale(3),
        de([-1124, 1377, -334, 17]),
        de([361, -111, 6]) * c,
    ]


def build_b(profile: PrecisionProfile) -> MatrixE0:
    """The degree-7 polynomial in A whose trace realizes the delta formula."""
    a = build_a(profile)
    de = lambda ints: DeformationElement(profile, ints)
    inv = de([-17, 1]).invert()
    return poly_at_matrix([num * inv for num in composite_numerators(profile)], a)
