"""Canonical text and JSON rendering.

Text output is deterministic: polynomials print in decreasing degree,
residues print as the least nonnegative representative except that values
within sqrt(modulus) of the modulus print as (small) negative integers, so
3-adic encodings of small negative numbers read naturally.  Everything a
series renders to parses back through the expression grammar.

JSON output is canonical too: sorted keys, no whitespace, residues as
decimal strings.
"""

import json

from .galois import PRIME, GaloisInt


def render_int(value: int, p_exp: int) -> str:
    """Balanced rendering: v, or v - 3^n when that is small and negative."""
    mod = PRIME**p_exp
    neg = value - mod
    if value * 2 > mod and neg * neg < mod:
        return str(neg)
    return str(value)


def render_gaussian(g: GaloisInt) -> str:
    re = render_int(g.re, g.n)
    im = render_int(g.im, g.n)
    if g.im == 0:
        return re
    if im == "1":
        im_part = "i"
    elif im == "-1":
        im_part = "-i"
    else:
        im_part = f"{im}*i"
    if g.re == 0:
        return im_part
    joiner = "" if im_part.startswith("-") else "+"
    return f"{re}{joiner}{im_part}"


def _is_single_signed_term(s: str) -> bool:
    # usable as a bare factor: no interior +/- (sign only at position 0)
    return "+" not in s[1:] and "-" not in s[1:]


def _join_terms(terms, compact):
    if not terms:
        return "0"
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += minus + t[1:]
        else:
            out += plus + t
    return out


def _var_power(var: str, k: int) -> str:
    return var if k == 1 else f"{var}^{k}"


def _scalar_term(scalar: str, var: str, k: int) -> str:
    if k == 0:
        return scalar
    vp = _var_power(var, k)
    if scalar == "1":
        return vp
    if scalar == "-1":
        return f"-{vp}"
    if _is_single_signed_term(scalar):
        return f"{scalar}*{vp}"
    return f"({scalar})*{vp}"


def render_series(x, var: str = "h", compact: bool = False) -> str:
    terms = []
    for k in range(x.h_deg - 1, -1, -1):
        g = x.coeff(k)
        if g.is_zero():
            continue
        terms.append(_scalar_term(render_gaussian(g), var, k))
    return _join_terms(terms, compact)


def render_poly(coeffs, var: str) -> str:
    """Render sum coeffs[j]*var^j for series coefficients (low to high)."""
    terms = []
    for j in range(len(coeffs) - 1, -1, -1):
        s = coeffs[j]
        if s.is_zero():
            continue
        if s.degree() <= 0:
            terms.append(_scalar_term(render_gaussian(s.coeff(0)), var, j))
        else:
            inner = render_series(s, compact=True)
            terms.append(f"({inner})" if j == 0 else f"({inner})*{_var_power(var, j)}")
    return _join_terms(terms, compact=False)


def render_matrix(mat) -> str:
    lines = []
    for row in mat.entries:
        lines.append("[" + ", ".join(render_series(e, compact=True) for e in row) + "]")
    return "\n".join(lines)


# -- JSON ------------------------------------------------------------------

ELEMENT_SCHEMA = {
    "type": "object",
    "required": ["precision", "coeffs"],
    "additionalProperties": False,
    "properties": {
        "precision": {
            "type": "object",
            "required": ["p_exp", "h_deg", "eff_p"],
            "additionalProperties": False,
            "properties": {
                "p_exp": {"type": "integer", "minimum": 1},
                "h_deg": {"type": "integer", "minimum": 1},
                "eff_p": {"type": "integer", "minimum": 1},
            },
        },
        "coeffs": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "string", "pattern": "^[0-9]+$"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
}


def element_json(x) -> dict:
    return {
        "precision": {"p_exp": x.profile.p_exp, "h_deg": x.profile.h_deg, "eff_p": x.eff_p},
        "coeffs": [[str(x._re[k]), str(x._im[k])] for k in range(x.h_deg)],
    }


def algebra_element_json(el) -> dict:
    return {"algebra": el.algebra.name, "coords": [element_json(s) for s in el.coords]}


def matrix_json(mat) -> dict:
    return {"dim": mat.n, "entries": [element_json(e) for row in mat.entries for e in row]}


def monic_poly_json(poly) -> dict:
    return {"degree": poly.degree, "coeffs": [element_json(s) for s in poly.coeffs]}


def report_json(report) -> dict:
    return {
        "profile": {"p_exp": report.profile.p_exp, "h_deg": report.profile.h_deg},
        "seed": report.seed,
        "trials": report.trials,
        "passed": report.passed,
        "checks": [
            {"name": ch.name, "status": ch.status, "detail": ch.detail} for ch in report.checks
        ],
    }


def dumps(obj) -> str:
    """Canonical JSON: byte-identical across runs for equal inputs."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
