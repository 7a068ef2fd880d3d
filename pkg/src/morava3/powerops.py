"""The power operations on the coefficient ring.

psi3 lands in E0[a]/W, eta maps that to E0[u]/f, and their composite is the
additive C3-power operation.  alpha divides the trace of the composite
(plus the rational cube) by 3, and delta(x) = 3x - alpha(x).  Every scalar
operation exists along two independently computed routes - the quotient
algebra and the matrix substitution - and the context cross-checks the
golden composite formula against eta(psi3(h)) at construction.
"""

from .errors import AlgebraMismatch, CrossCheckFailed
from .galois import DEFAULT_PROFILE, GaloisInt, PrecisionProfile
from .matrices import MatrixE0, build_a, build_b, composite_numerators
from .algebras import AlgebraElement, MonogenicAlgebra, define_f, define_w
from .series import DeformationElement, certify_nilpotent, make_c, substitute

READING_H_SQUARED = "h-squared"
READING_LITERAL_CUBIC = "literal-cubic"


def build_psi3_h(algebra_w: MonogenicAlgebra, reading: str = READING_H_SQUARED) -> AlgebraElement:
    """The image of h in E0[a]/W.

    Two readings of the middle term are implemented: the default h^2
    reading, and a literal-cubic variant kept only so the composite
    cross-check can demonstrate that it is inconsistent.
    """
    profile = algebra_w.profile
    de = lambda ints: DeformationElement(profile, ints)
    if reading == READING_H_SQUARED:
        coords = [
            de([-342, 201, -27, 1]),
            de([-334, 108, -6]),
            de([-27, 3]),
            de([57, -18, 1]),
        ]
    elif reading == READING_LITERAL_CUBIC:
        coords = [
            de([-342, 201, 0, -26]),
            de([-334, 108, 0, -6]),
            de([-27, 3]),
            de([57, -18, 0, 1]),
        ]
    else:
        raise ValueError(f"unknown reading {reading!r}")
    return algebra_w.element(coords)


def build_eta_a(algebra_f: MonogenicAlgebra) -> AlgebraElement:
    """The image of a in E0[u]/f, over the denominator 17-h.

    This is the unique root of W in the rank-8 algebra (unique: of the 2520
    ways to match the eight roots of f to the four roots of W with each
    taken twice, exactly one has rational coordinates), which is what makes
    the map from E0[a]/W well defined.
    """
    profile = algebra_f.profile
    c = make_c(profile)
    c2 = c * c
    c3 = c2 * c
    c4 = c2 * c2
    de = lambda ints: DeformationElement(profile, ints)
    inv = de([17, -1]).invert()
    coords = [
        de([-18]),
        c.scale(-12),
        c2 + 2,
        c3.scale(4) - c.scale(15),
        c4 + c2 + 2,
        c3.scale(3) - c.scale(6),
        c2.scale(3) - 2,
        c,
    ]
    return algebra_f.element([g * inv for g in coords])


def build_composite_h(algebra_f: MonogenicAlgebra) -> AlgebraElement:
    """The golden image of h under the composite map, in E0[u]/f.

    Same eight numerators over h-17 as the matrix built by build_b, with u
    in place of the companion matrix.
    """
    profile = algebra_f.profile
    de = lambda ints: DeformationElement(profile, ints)
    inv = de([-17, 1]).invert()
    numerators = composite_numerators(profile)
    return algebra_f.element([num * inv for num in numerators])


class PowerOpContext:
    """Precomputed data for the power operations at one precision profile.

    Construction builds c, the two quotient algebras, the matrices A and B,
    psi3(h) and the composite eta(psi3(h)); it verifies the composite against
    the golden closed form (CrossCheckFailed arbitrates the psi3(h) reading)
    and certifies the topological nilpotence of every substitution target
    once, so the operations can skip the per-call certificate.
    """

    def __init__(self, profile: PrecisionProfile = DEFAULT_PROFILE, reading: str = READING_H_SQUARED):
        self.profile = profile
        self.c = make_c(profile)
        self.algebra_w = define_w(profile)
        self.algebra_f = define_f(profile)
        self.mat_a = build_a(profile)
        self.mat_b = build_b(profile)
        self.psi3_h = build_psi3_h(self.algebra_w, reading)
        self.eta_a = build_eta_a(self.algebra_f)
        self._eta_a_pows = [self.algebra_f.one()]
        for _ in range(self.algebra_w.rank - 1):
            self._eta_a_pows.append(self._eta_a_pows[-1] * self.eta_a)

        golden = build_composite_h(self.algebra_f)
        composed = self.eta(self.psi3_h)
        for j in range(self.algebra_f.rank):
            if composed.coord(j) != golden.coord(j):
                raise CrossCheckFailed(
                    f"eta(psi3(h)) disagrees with the golden composite at the "
                    f"u^{j} coefficient; wrong psi3(h) reading?"
                )
        self.psi_c3_h = composed

        cap = profile.p_exp + profile.h_deg
        certify_nilpotent(self.psi3_h, self.algebra_w.rank * cap)
        certify_nilpotent(self.psi_c3_h, self.algebra_f.rank * cap)
        certify_nilpotent(self.mat_b, self.mat_b.n * cap)

    def _as_series(self, x) -> DeformationElement:
        if isinstance(x, DeformationElement):
            if x.profile != self.profile:
                raise ValueError("element does not match the context profile")
            return x
        return DeformationElement(self.profile, [x])

    # -- the three ring homomorphisms ---------------------------------------

    def psi3(self, x) -> AlgebraElement:
        """The additive total power operation into E0[a]/W: twisted
        substitution h -> psi3(h), Frobenius on Z9 coefficients."""
        x = self._as_series(x)
        return substitute(x, self.psi3_h, twist=True, check_convergence=False)

    def eta(self, y: AlgebraElement) -> AlgebraElement:
        """The E0-linear map E0[a]/W -> E0[u]/f sending a to its closed-form image."""
        if y.algebra is not self.algebra_w:
            raise AlgebraMismatch("eta expects an element of E0[a]/W")
        out = self.algebra_f.zero()
        for j, g in enumerate(y.coords):
            if not g.is_zero():
                out = out + self._eta_a_pows[j].scale_series(g)
        return out

    def psi_c3(self, x) -> AlgebraElement:
        """The composite eta . psi3: twisted substitution h -> eta(psi3(h))."""
        x = self._as_series(x)
        return substitute(x, self.psi_c3_h, twist=True, check_convergence=False)

    # -- the scalar operations, two routes each ------------------------------

    def alpha(self, x) -> DeformationElement:
        """(x^3 + tr of the composite image of x) / 3; loses one 3-adic digit."""
        x = self._as_series(x)
        tr = self.algebra_f.trace(self.psi_c3(x))
        return (x * x * x + tr).exact_div3()

    def delta(self, x) -> DeformationElement:
        """The additive 3-derivation 3x - alpha(x)."""
        x = self._as_series(x)
        return x.scale(3) - self.alpha(x)

    def alpha_via_b(self, x) -> DeformationElement:
        """alpha along the matrix route: tr x(B) with Frobenius-twisted
        coefficients, bypassing the quotient algebra."""
        x = self._as_series(x)
        mat = substitute(x, self.mat_b, twist=True, check_convergence=False)
        return (x * x * x + mat.trace()).exact_div3()

    def delta_via_b(self, x) -> DeformationElement:
        x = self._as_series(x)
        return x.scale(3) - self.alpha_via_b(x)

    def b_power_traces(self, max_power: int):
        """[tr(B), tr(B^2), ..., tr(B^max_power)]."""
        traces = []
        power = self.mat_b
        for k in range(max_power):
            if k:
                power = power * self.mat_b
            traces.append(power.trace())
        return traces
