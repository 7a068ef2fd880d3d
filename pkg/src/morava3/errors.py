"""Exception types shared across the package."""


class RingError(Exception):
    """Base class for arithmetic failures in the coefficient ring."""


class NotAUnit(RingError):
    """Inversion was attempted on an element with zero residue in F9."""


class NotDivisibleBy3(RingError):
    """An exact division by 3 hit a quantity that is not divisible by 3.

    The theory guarantees divisibility for every value this library divides,
    so this always signals a wrong formula or a wrong twist convention
    upstream, never a legitimate runtime condition.
    """


class BadBranch(RingError):
    """A square-root branch point does not square to the constant term."""


class NoConvergence(RingError):
    """Powers of a substitution target fail to vanish at working precision."""


class DimensionMismatch(RingError):
    """Matrix operands have incompatible dimensions or profiles."""


class AlgebraMismatch(RingError):
    """Operands belong to different quotient algebras."""


class CrossCheckFailed(RingError):
    """Two independently computed values that must agree do not."""


class ParseError(ValueError):
    """Expression syntax error, with byte offset and expected-token set."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str = ""):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        want = ", ".join(self.expected)
        got = f", found {found!r}" if found else ""
        super().__init__(f"parse error at offset {offset}: expected {want}{got}")
