"""The coefficient ring E0 = Z9[[h]] truncated to the ideal (3^N, h^M).

Elements are coefficient vectors of fixed length M with scalars in the
Galois ring; `eff_p` tracks the effective 3-adic precision, which drops by
one digit at every exact division by 3 and is the minimum of the operands'
precisions everywhere else.  c is not an adjoined symbol: make_c constructs
it as i*sqrt(1-h), fixing the branch with constant term i, so that every
element of the ring really is a series in h.
"""

from . import backend
from .errors import BadBranch, NoConvergence, NotAUnit, NotDivisibleBy3
from .galois import PRIME, DEFAULT_PROFILE, GaloisInt, PrecisionProfile


class DeformationElement:
    """A truncated series sum z_k h^k with GaloisInt coefficients."""

    __slots__ = ("profile", "eff_p", "_re", "_im")

    def __init__(self, profile: PrecisionProfile, coeffs=(), eff_p=None):
        """Build from a list of coefficients (ints, (re, im) pairs or GaloisInt).

        Coefficients beyond h^(M-1) are truncated away; missing ones are zero.
        """
        if eff_p is None:
            eff_p = profile.p_exp
        if not 1 <= eff_p <= profile.p_exp:
            raise ValueError("eff_p must lie in [1, profile.p_exp]")
        mod = PRIME**eff_p
        m = profile.h_deg
        re = [0] * m
        im = [0] * m
        for k, z in enumerate(coeffs):
            if k >= m:
                break
            if isinstance(z, GaloisInt):
                re[k] = z.re % mod
                im[k] = z.im % mod
            elif isinstance(z, tuple):
                re[k] = z[0] % mod
                im[k] = z[1] % mod
            else:
                re[k] = z % mod
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "eff_p", eff_p)
        object.__setattr__(self, "_re", tuple(re))
        object.__setattr__(self, "_im", tuple(im))

    def __setattr__(self, name, value):
        raise AttributeError("DeformationElement is immutable")

    @classmethod
    def _raw(cls, profile, re, im, eff_p):
        # Trusted constructor: values already canonical mod 3^eff_p.
        self = object.__new__(cls)
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "eff_p", eff_p)
        object.__setattr__(self, "_re", tuple(re))
        object.__setattr__(self, "_im", tuple(im))
        return self

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, profile):
        return cls(profile)

    @classmethod
    def one(cls, profile):
        return cls(profile, [1])

    @classmethod
    def h(cls, profile):
        return cls(profile, [0, 1])

    @classmethod
    def i_unit(cls, profile):
        return cls(profile, [(0, 1)])

    @classmethod
    def constant(cls, value, profile, eff_p=None):
        return cls(profile, [value], eff_p)

    # -- accessors ---------------------------------------------------------

    @property
    def h_deg(self):
        return self.profile.h_deg

    @property
    def modulus(self):
        return PRIME**self.eff_p

    def coeff(self, k: int) -> GaloisInt:
        return GaloisInt(self._re[k], self._im[k], self.eff_p)

    def coeffs(self):
        return [self.coeff(k) for k in range(self.h_deg)]

    def constant_term(self) -> GaloisInt:
        return self.coeff(0)

    def degree(self) -> int:
        """Largest k with a nonzero coefficient, or -1 for the zero element."""
        for k in range(self.h_deg - 1, -1, -1):
            if self._re[k] or self._im[k]:
                return k
        return -1

    def is_zero(self) -> bool:
        return not (any(self._re) or any(self._im))

    def is_real(self) -> bool:
        return not any(self._im)

    def at_precision(self, eff_p: int) -> "DeformationElement":
        if eff_p > self.eff_p:
            raise ValueError(f"cannot raise precision from {self.eff_p} to {eff_p}")
        if eff_p == self.eff_p:
            return self
        mod = PRIME**eff_p
        return DeformationElement._raw(
            self.profile, [v % mod for v in self._re], [v % mod for v in self._im], eff_p
        )

    def _lists(self, mod):
        if self.modulus == mod:
            return self._re, self._im
        return [v % mod for v in self._re], [v % mod for v in self._im]

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, DeformationElement):
            if other.profile != self.profile:
                raise ValueError("operands have different precision profiles")
            return other
        if isinstance(other, GaloisInt):
            return DeformationElement(self.profile, [other], min(other.n, self.profile.p_exp))
        if isinstance(other, int):
            return DeformationElement(self.profile, [other])
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        eff = min(self.eff_p, b.eff_p)
        mod = PRIME**eff
        ar, ai = self._lists(mod)
        br, bi = b._lists(mod)
        return DeformationElement._raw(
            self.profile,
            [(x + y) % mod for x, y in zip(ar, br)],
            [(x + y) % mod for x, y in zip(ai, bi)],
            eff,
        )

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        eff = min(self.eff_p, b.eff_p)
        mod = PRIME**eff
        ar, ai = self._lists(mod)
        br, bi = b._lists(mod)
        return DeformationElement._raw(
            self.profile,
            [(x - y) % mod for x, y in zip(ar, br)],
            [(x - y) % mod for x, y in zip(ai, bi)],
            eff,
        )

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b - self

    def __neg__(self):
        mod = self.modulus
        return DeformationElement._raw(
            self.profile,
            [(-v) % mod for v in self._re],
            [(-v) % mod for v in self._im],
            self.eff_p,
        )

    def scale(self, s) -> "DeformationElement":
        """Multiply by a Gaussian scalar (cheaper than a full series product)."""
        if isinstance(s, int):
            s = GaloisInt(s, 0, self.eff_p)
        eff = min(self.eff_p, s.n)
        mod = PRIME**eff
        ar, ai = self._lists(mod)
        kern = backend.kernel_for(mod)
        zero = [0] * self.h_deg
        cr, ci = kern.scale_add(zero, zero, ar, ai, s.re % mod, s.im % mod, mod)
        return DeformationElement._raw(self.profile, cr, ci, eff)

    def __mul__(self, other):
        if isinstance(other, (int, GaloisInt)):
            return self.scale(other)
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        eff = min(self.eff_p, b.eff_p)
        mod = PRIME**eff
        ar, ai = self._lists(mod)
        br, bi = b._lists(mod)
        kern = backend.kernel_for(mod)
        cr, ci = kern.series_mul(ar, ai, br, bi, mod)
        return DeformationElement._raw(self.profile, cr, ci, eff)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        out = DeformationElement.one(self.profile).at_precision(self.eff_p)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        """Values agree at the coarser of the two effective precisions."""
        try:
            b = self._coerce(other)
        except ValueError:
            return False
        if b is None:
            return NotImplemented
        mod = PRIME ** min(self.eff_p, b.eff_p)
        return all((x - y) % mod == 0 for x, y in zip(self._re, b._re)) and all(
            (x - y) % mod == 0 for x, y in zip(self._im, b._im)
        )

    __hash__ = None

    # -- the operations that lose or demand structure ------------------------

    def frobenius(self) -> "DeformationElement":
        """Coefficientwise conjugation; h itself is fixed."""
        mod = self.modulus
        return DeformationElement._raw(
            self.profile, self._re, [(-v) % mod for v in self._im], self.eff_p
        )

    def exact_div3(self) -> "DeformationElement":
        """Divide every coefficient by 3, losing one 3-adic digit."""
        if self.eff_p < 2:
            raise ValueError("exact_div3 needs effective precision >= 2")
        if any(v % PRIME for v in self._re) or any(v % PRIME for v in self._im):
            raise NotDivisibleBy3("series has a coefficient not divisible by 3")
        return DeformationElement._raw(
            self.profile,
            [v // PRIME for v in self._re],
            [v // PRIME for v in self._im],
            self.eff_p - 1,
        )

    def invert(self) -> "DeformationElement":
        """Newton inversion y <- y(2 - xy), doubling h-accuracy per step."""
        c0 = self.constant_term()
        if not c0.is_unit():
            raise NotAUnit("constant term vanishes in F9")
        y = DeformationElement.constant(c0.invert(), self.profile, self.eff_p)
        two = DeformationElement.constant(2, self.profile, self.eff_p)
        for _ in range(_newton_steps(self.h_deg)):
            y = y * (two - self * y)
        return y

    def sqrt(self, branch: GaloisInt) -> "DeformationElement":
        """Newton square root with constant term pinned to `branch`.

        The iteration s <- (s + x/s)/2 is exact: 2 is a unit in Z3, and the
        arithmetic is exact modulo the working ideal.
        """
        c0 = self.constant_term()
        if not c0.is_unit():
            raise NotAUnit("constant term vanishes in F9")
        b = branch.at_precision(min(branch.n, self.eff_p))
        if b * b != c0:
            raise BadBranch(f"{branch!r} squared is not the constant term")
        eff = b.n
        half = GaloisInt(pow(2, -1, PRIME**eff), 0, eff)
        s = DeformationElement.constant(b, self.profile, eff)
        for _ in range(_newton_steps(self.h_deg)):
            s = (s + self * s.invert()).scale(half)
        return s

    # -- substitution protocol (series as their own ambient ring) -----------

    def one_like(self):
        return DeformationElement.one(self.profile)

    def subst_rank(self) -> int:
        return 1

    def __repr__(self):
        nz = {k: (self._re[k], self._im[k]) for k in range(self.h_deg) if self._re[k] or self._im[k]}
        return f"DeformationElement(eff_p={self.eff_p}, {nz})"

    def __str__(self):
        from .render import render_series

        return render_series(self)


def _newton_steps(h_deg: int) -> int:
    """ceil(log2(M)) + 1: deterministic fixed-point iteration count."""
    steps = 1
    reach = 1
    while reach < h_deg:
        reach *= 2
        steps += 1
    return steps


def make_c(profile: PrecisionProfile) -> DeformationElement:
    """The square root of h-1 congruent to i modulo (3, h): i * sqrt(1-h)."""
    one_minus_h = DeformationElement(profile, [1, -1])
    root = one_minus_h.sqrt(GaloisInt.one(profile.p_exp))
    return root.scale(GaloisInt.i(profile.p_exp))


def certify_nilpotent(target, cap: int) -> None:
    """Check that target^k vanishes at working precision for some k <= cap.

    Vanishing is monotone in the exponent (t^k = 0 forces t^(k+1) = 0), so
    repeated squaring decides t^cap = 0 in O(log cap) products.  Raises
    NoConvergence when the target is not topologically nilpotent.
    """
    power = target
    exponent = 1
    while not power.is_zero():
        if exponent >= cap:
            raise NoConvergence(
                f"powers do not vanish within the iteration cap {cap}"
            )
        power = power * power
        exponent *= 2


def substitute(x: DeformationElement, target, twist: bool = False, check_convergence: bool = True):
    """Evaluate the series x at a topologically nilpotent ring element.

    Returns sum of sigma?(z_k) * target^k over k < M, where sigma applies the
    Frobenius to the coefficient z_k iff `twist` is set.  The target may be
    an element of any ring structure over E0 exposing one_like/scale/
    subst_rank/is_zero: another series, a quotient-algebra element, or a
    square matrix.  With check_convergence (the default) the target's
    topological nilpotence is certified up to the cap rank*(N+M); callers
    holding a precertified target may skip that.
    """
    prof = x.profile
    cap = target.subst_rank() * (prof.p_exp + prof.h_deg)

    z0 = x.coeff(0)
    if twist:
        z0 = z0.frobenius()
    acc = target.one_like().scale(z0)

    vanished = False
    power = None
    exponent = 0
    for k in range(1, x.degree() + 1):
        power = target if k == 1 else power * target
        exponent = k
        if power.is_zero():
            vanished = True  # later terms vanish, nilpotence certified
            break
        zk = x.coeff(k)
        if twist:
            zk = zk.frobenius()
        if not zk.is_zero():
            acc = acc + power.scale(zk)

    if check_convergence and not vanished:
        if power is None:
            power = target
            exponent = 1
        while not power.is_zero():
            if exponent >= cap:
                raise NoConvergence(f"powers do not vanish within the iteration cap {cap}")
            power = power * power
            exponent *= 2
    return acc
