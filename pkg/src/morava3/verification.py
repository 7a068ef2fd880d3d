"""The cross-validation battery behind the verify command.

Every invariant the library promises is re-checked here on deterministic
pseudo-random inputs: structural identities (companion matrix, vanishing of
the moduli, representing matrices), the golden values, the two delta
routes, the p-derivation laws, integrality, reality, and the convergence
of powers of B.  A report is data, not an exception: failures carry the
first counterexample, checks that need more precision than the profile
offers are marked skipped.
"""

import random
from dataclasses import dataclass
from typing import Optional

from .errors import RingError
from .galois import PRIME, GaloisInt
from .matrices import MatrixE0, companion, poly_at_matrix
from .powerops import PowerOpContext, build_composite_h
from .series import DeformationElement, substitute


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: Optional[str] = None


@dataclass(frozen=True)
class VerificationReport:
    profile: object
    seed: int
    trials: int
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(ch.status != "fail" for ch in self.checks)

    def counts(self):
        n = {"pass": 0, "fail": 0, "skipped": 0}
        for ch in self.checks:
            n[ch.status] += 1
        return n

    def render_text(self) -> str:
        lines = []
        for ch in self.checks:
            tag = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[ch.status]
            extra = f" ({ch.detail})" if ch.detail else ""
            lines.append(f"[{tag}] {ch.name}{extra}")
        n = self.counts()
        lines.append(
            f"{n['pass']} passed, {n['fail']} failed, {n['skipped']} skipped "
            f"(N={self.profile.p_exp}, M={self.profile.h_deg}, "
            f"seed={self.seed}, trials={self.trials})"
        )
        return "\n".join(lines)


def _rand_element(rng, profile, max_degree=None, real=False):
    mod = profile.modulus
    top = profile.h_deg - 1 if max_degree is None else min(max_degree, profile.h_deg - 1)
    return DeformationElement(
        profile, [(rng.randrange(mod), 0 if real else rng.randrange(mod)) for _ in range(top + 1)]
    )


def _rand_unit_scalar(rng, p_exp):
    mod = PRIME**p_exp
    while True:
        g = GaloisInt(rng.randrange(mod), rng.randrange(mod), p_exp)
        if g.is_unit():
            return g


def _rand_matrix(rng, profile, n):
    return MatrixE0([[_rand_element(rng, profile) for _ in range(n)] for _ in range(n)])


def _brief(x) -> str:
    s = repr(x)
    return s if len(s) <= 160 else s[:157] + "..."


# Each check: (name, min_p_exp, min_h_deg, fn(ctx, rng, trials) -> None | detail)


def _chk_c_squared(ctx, rng, trials):
    h = DeformationElement.h(ctx.profile)
    if ctx.c * ctx.c != h - 1:
        return "c*c != h-1"


def _chk_frobenius_c(ctx, rng, trials):
    if ctx.c.frobenius() != -ctx.c:
        return "frobenius(c) != -c"


def _chk_frobenius_props(ctx, rng, trials):
    for t in range(trials):
        x = _rand_element(rng, ctx.profile)
        y = _rand_element(rng, ctx.profile)
        if x.frobenius().frobenius() != x:
            return f"involution failed, trial {t}: x = {_brief(x)}"
        if (x * y).frobenius() != x.frobenius() * y.frobenius():
            return f"multiplicativity failed, trial {t}"


def _chk_scalar_inverses(ctx, rng, trials):
    for t in range(trials):
        g = _rand_unit_scalar(rng, ctx.profile.p_exp)
        if g * g.invert() != GaloisInt.one(g.n):
            return f"trial {t}: a*invert(a) != 1 for {g!r}"


def _chk_exact_div3(ctx, rng, trials):
    mod = ctx.profile.modulus
    for t in range(trials):
        b = GaloisInt(rng.randrange(mod), rng.randrange(mod), ctx.profile.p_exp)
        a = b * 3
        if a.exact_div3() * 3 != a.at_precision(a.n - 1):
            return f"trial {t}: 3*div3(a) != a for a = {a!r}"


def _chk_series_inversion(ctx, rng, trials):
    one = DeformationElement.one(ctx.profile)
    for t in range(trials):
        x = _rand_element(rng, ctx.profile)
        x = x + _rand_unit_scalar(rng, ctx.profile.p_exp) - x.coeff(0)
        if x * x.invert() != one:
            return f"trial {t}: x*invert(x) != 1 for x = {_brief(x)}"


def _chk_series_sqrt(ctx, rng, trials):
    for t in range(trials):
        branch = _rand_unit_scalar(rng, ctx.profile.p_exp)
        x = _rand_element(rng, ctx.profile)
        x = x + branch * branch - x.coeff(0)
        s = x.sqrt(branch)
        if s * s != x:
            return f"trial {t}: sqrt(x)^2 != x for x = {_brief(x)}"


def _chk_subst_h_identity(ctx, rng, trials):
    h = DeformationElement.h(ctx.profile)
    for t in range(trials):
        x = _rand_element(rng, ctx.profile)
        if substitute(x, h) != x:
            return f"trial {t}: substituting h is not the identity on {_brief(x)}"


def _chk_subst_ring_hom(ctx, rng, trials):
    # deg x + deg y < M keeps the product free of truncation loss
    half = (ctx.profile.h_deg - 1) // 2
    for t in range(trials):
        x = _rand_element(rng, ctx.profile, max_degree=half)
        y = _rand_element(rng, ctx.profile, max_degree=ctx.profile.h_deg - 1 - half)
        lhs = substitute(x * y, ctx.mat_b, twist=True, check_convergence=False)
        rhs = substitute(x, ctx.mat_b, twist=True, check_convergence=False) * substitute(
            y, ctx.mat_b, twist=True, check_convergence=False
        )
        if lhs != rhs:
            return f"trial {t}: substitution not multiplicative on degree-bounded input"


def _chk_companion(ctx, rng, trials):
    if companion(ctx.algebra_f.modulus) != ctx.mat_a:
        return "companion(f) differs from the reference matrix"


def _chk_f_at_a(ctx, rng, trials):
    if not poly_at_matrix(ctx.algebra_f.modulus.full_coeffs(), ctx.mat_a).is_zero():
        return "f(A) != 0"


def _chk_rep_generator(ctx, rng, trials):
    if ctx.algebra_f.rep_matrix(ctx.algebra_f.generator()) != ctx.mat_a:
        return "rep_matrix(u) != A"


def _chk_trace_commutator(ctx, rng, trials):
    for t in range(min(trials, 8)):
        x = _rand_matrix(rng, ctx.profile, 4)
        y = _rand_matrix(rng, ctx.profile, 4)
        if (x * y).trace() != (y * x).trace():
            return f"trial {t}: tr(XY) != tr(YX)"


def _power_sums(poly, count):
    """Newton's identities: power sums of a monic polynomial's roots."""
    d = poly.degree
    profile = poly.profile
    one = DeformationElement.one(profile)
    e = [one]  # e_0
    for k in range(1, d + 1):
        ck = poly.coeffs[d - k]
        e.append(ck if k % 2 == 0 else -ck)
    sums = [DeformationElement.constant(d, profile)]
    for k in range(1, count + 1):
        acc = DeformationElement.zero(profile)
        for i in range(1, min(k, d) + 1):
            if i == k:
                term = e[k].scale(k)
            else:
                term = e[i] * sums[k - i]
            acc = acc + (term if i % 2 == 1 else -term)
        sums.append(acc)
    return sums


def _chk_newton_power_sums(ctx, rng, trials):
    count = 2 * ctx.profile.h_deg
    sums = _power_sums(ctx.algebra_f.modulus, count)
    power = ctx.mat_a
    for k in range(1, count + 1):
        if k > 1:
            power = power * ctx.mat_a
        if power.trace() != sums[k]:
            return f"tr(A^{k}) disagrees with Newton's identities"


def _chk_b_nilpotent(ctx, rng, trials):
    cap = ctx.mat_b.n * (ctx.profile.p_exp + ctx.profile.h_deg)
    power = ctx.mat_b
    exponent = 1
    while not power.is_zero():
        if exponent >= cap:
            return f"B^{exponent} != 0 beyond the cap {cap}"
        power = power * power
        exponent *= 2


def _chk_b_traces_real(ctx, rng, trials):
    for k, tr in enumerate(ctx.b_power_traces(2 * ctx.profile.h_deg), start=1):
        if not tr.is_real():
            return f"tr(B^{k}) has a nonzero imaginary part"


def _chk_w_at_eta(ctx, rng, trials):
    y = ctx.eta_a
    y2 = y * y
    h = DeformationElement.h(ctx.profile)
    val = y2 * y2 - y2.scale(6) + y.scale_series(h - 9) - ctx.algebra_f.scalar(3)
    if not val.is_zero():
        return "W(eta(a)) != 0"


def _chk_composite_golden(ctx, rng, trials):
    golden = build_composite_h(ctx.algebra_f)
    for j in range(ctx.algebra_f.rank):
        if ctx.psi_c3_h.coord(j) != golden.coord(j):
            return f"composite coefficient of u^{j} is off"


def _chk_rep_composite(ctx, rng, trials):
    if ctx.algebra_f.rep_matrix(ctx.psi_c3_h) != ctx.mat_b:
        return "rep_matrix(eta(psi3(h))) != B"


def _chk_psi3_i(ctx, rng, trials):
    i_el = DeformationElement.i_unit(ctx.profile)
    if ctx.psi3(i_el) != ctx.algebra_w.scalar(-i_el):
        return "psi3(i) != -i"


def _chk_psi3_relation(ctx, rng, trials):
    # truncated substitution only preserves c^2 = h-1 to the order its
    # dropped tail guarantees: (3,h)^floor(M/4)
    v = ctx.profile.h_deg // 4
    pc = ctx.psi3(ctx.c)
    diff = pc * pc - (ctx.psi3_h - ctx.algebra_w.one())
    for coord in diff.coords:
        for k in range(ctx.profile.h_deg):
            need = PRIME ** max(0, v - k)
            g = coord.coeff(k)
            if g.re % need or g.im % need:
                return f"psi3(c)^2 - (psi3(h)-1) not in (3,h)^{v}"


def _chk_alpha_points(ctx, rng, trials):
    if ctx.alpha(0) != 0:
        return "alpha(0) != 0"
    if ctx.alpha(1) != 3:
        return "alpha(1) != 3"


def _chk_delta_points(ctx, rng, trials):
    if ctx.delta(0) != 0:
        return "delta(0) != 0"
    if ctx.delta(1) != 0:
        return "delta(1) != 0"


def _chk_delta_i(ctx, rng, trials):
    i_el = DeformationElement.i_unit(ctx.profile)
    if ctx.delta(i_el) != DeformationElement(ctx.profile, [(0, 6)]):
        return "delta(i) != 6i"


def _chk_delta_h_golden(ctx, rng, trials):
    golden = DeformationElement(ctx.profile, [102, -119, 18, -1])
    if ctx.delta(DeformationElement.h(ctx.profile)) != golden:
        return "delta(h) != -h^3 + 18h^2 - 119h + 102"


def _chk_alpha_h_golden(ctx, rng, trials):
    golden = DeformationElement(ctx.profile, [-102, 122, -18, 1])
    if ctx.alpha(DeformationElement.h(ctx.profile)) != golden:
        return "alpha(h) != h^3 - 18h^2 + 122h - 102"


def _chk_p_derivation(ctx, rng, trials):
    for t in range(trials):
        x = _rand_element(rng, ctx.profile)
        y = _rand_element(rng, ctx.profile)
        lhs = ctx.delta(x + y) - ctx.delta(x) - ctx.delta(y)
        rhs = (x * x * x + y * y * y - (x + y) ** 3).exact_div3()
        if lhs != rhs:
            return f"trial {t}: x = {_brief(x)}, y = {_brief(y)}"


def _chk_alpha_defect(ctx, rng, trials):
    for t in range(trials):
        x = _rand_element(rng, ctx.profile)
        y = _rand_element(rng, ctx.profile)
        lhs = ctx.alpha(x + y) - ctx.alpha(x) - ctx.alpha(y)
        rhs = ((x + y) ** 3 - x * x * x - y * y * y).exact_div3()
        if lhs != rhs:
            return f"trial {t}: x = {_brief(x)}, y = {_brief(y)}"


def _chk_psi_c3_additive(ctx, rng, trials):
    for t in range(trials):
        x = _rand_element(rng, ctx.profile)
        y = _rand_element(rng, ctx.profile)
        if ctx.psi_c3(x + y) != ctx.psi_c3(x) + ctx.psi_c3(y):
            return f"trial {t}: x = {_brief(x)}, y = {_brief(y)}"


def _chk_psi_c3_multiplicative(ctx, rng, trials):
    # deg x + deg y < M keeps the product free of truncation loss
    half = (ctx.profile.h_deg - 1) // 2
    for t in range(trials):
        x = _rand_element(rng, ctx.profile, max_degree=half)
        y = _rand_element(rng, ctx.profile, max_degree=ctx.profile.h_deg - 1 - half)
        if ctx.psi_c3(x * y) != ctx.psi_c3(x) * ctx.psi_c3(y):
            return f"trial {t}: x = {_brief(x)}, y = {_brief(y)}"


def _chk_delta_paths(ctx, rng, trials):
    for t in range(trials):
        x = _rand_element(rng, ctx.profile)
        if ctx.delta(x) != ctx.delta_via_b(x):
            return f"trial {t}: routes disagree on x = {_brief(x)}"


def _chk_integrality(ctx, rng, trials):
    for t in range(trials):
        x = _rand_element(rng, ctx.profile)
        val = x * x * x + ctx.algebra_f.trace(ctx.psi_c3(x))
        if any(v % PRIME for v in val._re) or any(v % PRIME for v in val._im):
            return f"trial {t}: x^3 + tr psi(x) not divisible by 3, x = {_brief(x)}"


def _chk_reality(ctx, rng, trials):
    for t in range(trials):
        x = _rand_element(rng, ctx.profile, real=True)
        if not ctx.delta(x).is_real():
            return f"trial {t}: delta of real x has imaginary part, x = {_brief(x)}"


_CHECKS = (
    ("c-squared-equals-h-minus-1", 1, 1, _chk_c_squared),
    ("frobenius-negates-c", 1, 1, _chk_frobenius_c),
    ("frobenius-involution-multiplicative", 1, 1, _chk_frobenius_props),
    ("scalar-unit-inverses", 1, 1, _chk_scalar_inverses),
    ("exact-div3-roundtrip", 2, 1, _chk_exact_div3),
    ("series-inversion-roundtrip", 1, 1, _chk_series_inversion),
    ("series-sqrt-roundtrip", 1, 1, _chk_series_sqrt),
    ("substitute-h-is-identity", 1, 1, _chk_subst_h_identity),
    ("substitution-is-multiplicative-on-b", 1, 3, _chk_subst_ring_hom),
    ("companion-matches-a", 1, 1, _chk_companion),
    ("f-vanishes-at-a", 1, 1, _chk_f_at_a),
    ("rep-matrix-of-u-is-a", 1, 1, _chk_rep_generator),
    ("trace-of-commutator-vanishes", 1, 1, _chk_trace_commutator),
    ("newton-power-sums-match-traces", 1, 1, _chk_newton_power_sums),
    ("b-powers-vanish", 1, 1, _chk_b_nilpotent),
    ("b-power-traces-are-real", 1, 1, _chk_b_traces_real),
    ("w-vanishes-at-eta-a", 1, 1, _chk_w_at_eta),
    ("composite-matches-golden-formula", 1, 1, _chk_composite_golden),
    ("rep-matrix-of-composite-is-b", 1, 1, _chk_rep_composite),
    ("psi3-sends-i-to-minus-i", 1, 1, _chk_psi3_i),
    ("psi3-preserves-c-relation-graded", 1, 4, _chk_psi3_relation),
    ("alpha-at-0-and-1", 2, 1, _chk_alpha_points),
    ("delta-at-0-and-1", 2, 1, _chk_delta_points),
    ("delta-at-i-is-6i", 2, 1, _chk_delta_i),
    ("delta-h-golden", 2, 4, _chk_delta_h_golden),
    ("alpha-h-golden", 2, 4, _chk_alpha_h_golden),
    ("p-derivation-law", 2, 1, _chk_p_derivation),
    ("alpha-defect-law", 2, 1, _chk_alpha_defect),
    ("psi-c3-additive", 1, 1, _chk_psi_c3_additive),
    ("psi-c3-multiplicative", 1, 3, _chk_psi_c3_multiplicative),
    ("delta-routes-agree", 2, 1, _chk_delta_paths),
    ("integrality-of-alpha-numerator", 2, 1, _chk_integrality),
    ("reality-preserved-by-delta", 2, 1, _chk_reality),
)


def verify_report(ctx: PowerOpContext, trials: int = 100, seed: int = 0) -> VerificationReport:
    """Run the full battery; deterministic for fixed (profile, seed, trials).

    Each check draws from its own stream seeded by (seed, check name), so
    skipping or reordering checks cannot shift another check's inputs.
    """
    results = []
    profile = ctx.profile
    for name, min_p, min_m, fn in _CHECKS:
        if profile.p_exp < min_p or profile.h_deg < min_m:
            need = []
            if profile.p_exp < min_p:
                need.append(f"p_exp >= {min_p}")
            if profile.h_deg < min_m:
                need.append(f"h_deg >= {min_m}")
            results.append(CheckResult(name, "skipped", "needs " + ", ".join(need)))
            continue
        rng = random.Random(f"{seed}:{name}")
        try:
            detail = fn(ctx, rng, trials)
        except RingError as exc:
            detail = f"{type(exc).__name__}: {exc}"
        if detail is None:
            results.append(CheckResult(name, "pass"))
        else:
            results.append(CheckResult(name, "fail", detail))
    return VerificationReport(profile, seed, trials, tuple(results))
