"""Monogenic finite free algebras E0[g]/(m(g)).

Elements live in the power basis 1, g, ..., g^(d-1); products reduce by
long division against the monic modulus.  The trace of an element is the
matrix trace of its representing matrix, which is also how the companion
matrix enters: rep_matrix(g) is the companion matrix of the modulus.

Two instances matter here: E0[u]/f(u) of rank 8 and E0[a]/W(a) of rank 4.
"""

from . import backend
from .errors import AlgebraMismatch
from .galois import PRIME, GaloisInt, PrecisionProfile
from .matrices import MatrixE0, MonicPoly, companion
from .series import DeformationElement, make_c


class MonogenicAlgebra:
    """E0[g]/(m(g)) for a monic modulus m of degree d."""

    def __init__(self, modulus: MonicPoly, name: str, symbol: str = "g"):
        self.modulus = modulus
        self.name = name
        self.symbol = symbol
        self.profile = modulus.profile
        self._companion = None

    @property
    def rank(self) -> int:
        return self.modulus.degree

    def companion_matrix(self) -> MatrixE0:
        if self._companion is None:
            self._companion = companion(self.modulus)
        return self._companion

    def element(self, coords) -> "AlgebraElement":
        return AlgebraElement(self, coords)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, [])

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, [DeformationElement.one(self.profile)])

    def generator(self) -> "AlgebraElement":
        z = DeformationElement.zero(self.profile)
        return AlgebraElement(self, [z, DeformationElement.one(self.profile)])

    def scalar(self, value) -> "AlgebraElement":
        """Embed an element of E0 (or an integer) as a constant."""
        if not isinstance(value, DeformationElement):
            value = DeformationElement(self.profile, [value])
        return AlgebraElement(self, [value])

    def rep_matrix(self, x: "AlgebraElement") -> MatrixE0:
        """Matrix of multiplication by x in the power basis; column j holds
        the coordinates of x * g^j."""
        if x.algebra is not self:
            raise AlgebraMismatch("element belongs to a different algebra")
        d = self.rank
        cols = [list(x.coords)]
        mcoeffs = self.modulus.coeffs
        for _ in range(d - 1):
            prev = cols[-1]
            top = prev[d - 1]
            col = [-top * mcoeffs[0]]
            for k in range(1, d):
                col.append(prev[k - 1] - top * mcoeffs[k])
            cols.append(col)
        return MatrixE0([[cols[j][i] for j in range(d)] for i in range(d)])

    def trace(self, x: "AlgebraElement") -> DeformationElement:
        return self.rep_matrix(x).trace()

    def __repr__(self):
        return f"MonogenicAlgebra({self.name}, rank={self.rank})"


class AlgebraElement:
    """Coordinates of an element in the power basis of its algebra."""

    __slots__ = ("algebra", "coords", "eff_p")

    def __init__(self, algebra: MonogenicAlgebra, coords):
        profile = algebra.profile
        coords = list(coords)
        if len(coords) > algebra.rank:
            raise ValueError("too many coordinates for the algebra rank")
        coords = [
            c if isinstance(c, DeformationElement) else DeformationElement(profile, [c])
            for c in coords
        ]
        z = DeformationElement.zero(profile)
        coords.extend([z] * (algebra.rank - len(coords)))
        eff = min(c.eff_p for c in coords)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", tuple(coords))
        object.__setattr__(self, "eff_p", eff)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @property
    def profile(self) -> PrecisionProfile:
        return self.algebra.profile

    def coord(self, j: int) -> DeformationElement:
        return self.coords[j]

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("operands belong to different algebras")

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, (int, GaloisInt, DeformationElement)):
            return self.algebra.scalar(other)
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return AlgebraElement(self.algebra, [x + y for x, y in zip(self.coords, b.coords)])

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return AlgebraElement(self.algebra, [x - y for x, y in zip(self.coords, b.coords)])

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b - self

    def __neg__(self):
        return AlgebraElement(self.algebra, [-x for x in self.coords])

    def __mul__(self, other):
        if isinstance(other, (int, GaloisInt)):
            return self.scale(other)
        if isinstance(other, DeformationElement):
            return self.scale_series(other)
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        d = self.algebra.rank
        mlen = self.profile.h_deg
        eff = min(self.eff_p, b.eff_p)
        mod = PRIME**eff
        xr, xi = _flat(self.coords, mod)
        yr, yi = _flat(b.coords, mod)
        mr, mi = _flat(self.algebra.modulus.coeffs, mod)
        kern = backend.kernel_for(mod)
        zr, zi = kern.poly_mul_reduce(xr, xi, yr, yi, mr, mi, d, mlen, mod)
        coords = [
            DeformationElement._raw(
                self.profile, zr[j * mlen : (j + 1) * mlen], zi[j * mlen : (j + 1) * mlen], eff
            )
            for j in range(d)
        ]
        return AlgebraElement(self.algebra, coords)

    def __rmul__(self, other):
        if isinstance(other, (int, GaloisInt, DeformationElement)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = self.algebra.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def scale(self, s) -> "AlgebraElement":
        return AlgebraElement(self.algebra, [x.scale(s) for x in self.coords])

    def scale_series(self, s: DeformationElement) -> "AlgebraElement":
        return AlgebraElement(self.algebra, [x * s for x in self.coords])

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.coords)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement) and other.algebra is not self.algebra:
            return False
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return all(x == y for x, y in zip(self.coords, b.coords))

    __hash__ = None

    # -- substitution protocol ----------------------------------------------

    def one_like(self):
        return self.algebra.one()

    def subst_rank(self) -> int:
        return self.algebra.rank

    def rep_matrix(self) -> MatrixE0:
        return self.algebra.rep_matrix(self)

    def trace(self) -> DeformationElement:
        return self.algebra.trace(self)

    def __repr__(self):
        return f"AlgebraElement({self.algebra.name}, eff_p={self.eff_p})"

    def __str__(self):
        from .render import render_poly

        return render_poly(list(self.coords), self.algebra.symbol)


def _flat(elements, mod):
    re = []
    im = []
    for e in elements:
        r, i = e._lists(mod)
        re.extend(r)
        im.extend(i)
    return re, im


def define_f(profile: PrecisionProfile) -> MonogenicAlgebra:
    """Rank-8 algebra E0[u]/f(u).

    The octic's coefficients are the negated last column of the matrix A
    (build_a), which is the ground truth here; in particular the u^2
    coefficient is 9-h.
    """
    c = make_c(profile)
    de = lambda ints: DeformationElement(profile, ints)
    h = de([0, 1])
    coeffs = [
        de([-3]),
        c.scale(-3),
        de([9, -1]),
        c.scale(9),
        de([-12, 6]),
        (h + 6) * c,
        de([-3, 3]),
        c.scale(3),
    ]
    return MonogenicAlgebra(MonicPoly(profile, coeffs), "f", "u")


def define_w(profile: PrecisionProfile) -> MonogenicAlgebra:
    """Rank-4 algebra E0[a]/W(a) with W = a^4 - 6a^2 + (h-9)a - 3."""
    de = lambda ints: DeformationElement(profile, ints)
    coeffs = [de([-3]), de([-9, 1]), de([-6]), de([0])]
    return MonogenicAlgebra(MonicPoly(profile, coeffs), "W", "a")
