"""The scalar ring Z[i]/(3^N, i^2+1) and the working-precision profile.

This is the Galois ring W(F9) truncated to N 3-adic digits.  Residues are
kept canonical (0 <= re, im < 3^N), so equality of values is equality of
representations.  The Frobenius lift is coefficientwise conjugation i -> -i;
an element is a unit exactly when its image in F9 is nonzero.
"""

from dataclasses import dataclass

from .errors import NotAUnit, NotDivisibleBy3

PRIME = 3


@dataclass(frozen=True)
class PrecisionProfile:
    """Working ideal (3^p_exp, h^h_deg): all arithmetic happens modulo it."""

    p_exp: int = 24
    h_deg: int = 16

    def __post_init__(self):
        if self.p_exp < 1 or self.h_deg < 1:
            raise ValueError("precision profile needs p_exp >= 1 and h_deg >= 1")

    @property
    def modulus(self) -> int:
        return PRIME**self.p_exp


DEFAULT_PROFILE = PrecisionProfile()


class GaloisInt:
    """An element re + im*i of Z[i]/(3^n, i^2+1), canonical and immutable."""

    __slots__ = ("re", "im", "n")

    def __init__(self, re: int, im: int = 0, n: int = DEFAULT_PROFILE.p_exp):
        if n < 1:
            raise ValueError("precision exponent must be >= 1")
        mod = PRIME**n
        object.__setattr__(self, "re", re % mod)
        object.__setattr__(self, "im", im % mod)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("GaloisInt is immutable")

    @classmethod
    def zero(cls, n: int) -> "GaloisInt":
        return cls(0, 0, n)

    @classmethod
    def one(cls, n: int) -> "GaloisInt":
        return cls(1, 0, n)

    @classmethod
    def i(cls, n: int) -> "GaloisInt":
        return cls(0, 1, n)

    @property
    def modulus(self) -> int:
        return PRIME**self.n

    def _coerce(self, other):
        if isinstance(other, GaloisInt):
            return other
        if isinstance(other, int):
            return GaloisInt(other, 0, self.n)
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        n = min(self.n, b.n)
        return GaloisInt(self.re + b.re, self.im + b.im, n)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        n = min(self.n, b.n)
        return GaloisInt(self.re - b.re, self.im - b.im, n)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b - self

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        n = min(self.n, b.n)
        return GaloisInt(
            self.re * b.re - self.im * b.im,
            self.re * b.im + self.im * b.re,
            n,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaloisInt(-self.re, -self.im, self.n)

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        out = GaloisInt.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        """Values agree at the coarser of the two precisions."""
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        mod = PRIME ** min(self.n, b.n)
        return (self.re - b.re) % mod == 0 and (self.im - b.im) % mod == 0

    __hash__ = None

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        """Unit criterion: nonzero image in F9."""
        return self.re % PRIME != 0 or self.im % PRIME != 0

    def at_precision(self, n: int) -> "GaloisInt":
        if n > self.n:
            raise ValueError(f"cannot raise precision from {self.n} to {n}")
        return GaloisInt(self.re, self.im, n)

    def frobenius(self) -> "GaloisInt":
        """The lift of the q = 9 Frobenius: conjugation, i -> -i."""
        return GaloisInt(self.re, -self.im, self.n)

    def exact_div3(self) -> "GaloisInt":
        """Divide by 3, losing one 3-adic digit of precision."""
        if self.n < 2:
            raise ValueError("exact_div3 needs precision n >= 2")
        if self.re % PRIME or self.im % PRIME:
            raise NotDivisibleBy3(f"{self!r} is not divisible by 3")
        return GaloisInt(self.re // PRIME, self.im // PRIME, self.n - 1)

    def invert(self) -> "GaloisInt":
        """Multiplicative inverse: conjugate over the norm re^2 + im^2."""
        if not self.is_unit():
            raise NotAUnit(f"{self!r} has zero residue in F9")
        mod = self.modulus
        norm_inv = pow(self.re * self.re + self.im * self.im, -1, mod)
        return GaloisInt(self.re * norm_inv, -self.im * norm_inv, self.n)

    def __repr__(self):
        return f"GaloisInt({self.re}, {self.im}, n={self.n})"

    def __str__(self):
        from .render import render_gaussian

        return render_gaussian(self)
