"""
Text and JSON rendering of central polynomials and symmetric polynomials.

Universal coefficients (Laurent in ``w = q^{-N}``, even powers only) are
shown in terms of ``q^-1*[N] = (1 - w^2)/(q - q^{-1})``, so the two-cycle value
reads ``C3 + C1^2 - q^-1*[N]*C2``.

The JSON form of a central polynomial is a list of entries
``{"monomial": [[k, mult], ...], "coeff_num": str, "coeff_den": str, "w_power": int}``
with one entry per (monomial, power of w); numerator and denominator are
polynomials in q with the denominator monic.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from fractions import Fraction
from math import comb

from .coeff import LAMBDA, QRat, UCoeff, UPoly, format_poly

__all__ = [
    "render_center",
    "render_sympoly",
    "render_coeff",
    "center_to_json",
    "center_from_json",
    "parse_qpoly",
    "ucoeff_in_d",
]

D_SYMBOL = "q^-1*[N]"


def _mono_text(kind, mono):
    parts = []
    for k, e in sorted(Counter(mono).items()):
        parts.append(f"{kind}{k}" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def ucoeff_in_d(c: UCoeff):
    """{k: QRat} with c = sum_k coeff_k d^k, d = q^{-1}[N]; requires even nonnegative w-powers."""
    out = {}
    for p, v in c.terms.items():
        if p % 2 or p < 0:
            raise ValueError(f"w-power {p} has no polynomial d-form")
        j = p // 2
        # w^{2j} = (1 - lambda d)^j
        for k in range(j + 1):
            t = v * (comb(j, k) * (-1) ** k) * LAMBDA ** k
            out[k] = out[k] + t if k in out else t
    return {k: v for k, v in out.items() if v}


def _split_sign(c):
    """(sign, magnitude text or None for 1) for a rational-function coefficient."""
    if isinstance(c, (int, Fraction)):
        c = Fraction(c)
        if c < 0:
            return "-", (None if c == -1 else str(-c))
        return "+", (None if c == 1 else str(c))
    if isinstance(c, UPoly):
        s = str(c)
        if len(c.coeffs) == 1:
            return _split_sign(c.coeffs[0])
        return "+", f"({s})"
    if isinstance(c, QRat):
        if c.is_constant():
            return _split_sign(c.constant_value())
        if c.numerator[-1] < 0:
            sign, mag = _split_sign(-c)
            return ("-" if sign == "+" else "+"), mag
        if c.is_laurent():
            terms = c.laurent_terms()
            if len(terms) == 1:
                (k, v), = terms.items()
                mono = "q" if k == 1 else f"q^{k}"
                return "+", (mono if v == 1 else f"{v}*{mono}")
        return "+", f"({c})"
    return "+", f"({c})"


def render_coeff(c) -> str:
    """Render a single coefficient (QRat, UCoeff, Fraction)."""
    if isinstance(c, UCoeff):
        return _render_sum(_coeff_terms(c, ""))
    sign, mag = _split_sign(c)
    body = mag if mag is not None else "1"
    return body if sign == "+" else f"-{body}"


def _coeff_terms(c, mono_text):
    """List of (sign, body) for coefficient c times a monomial text."""
    out = []
    if isinstance(c, UCoeff):
        try:
            pieces = sorted(ucoeff_in_d(c).items())
        except ValueError:
            pieces = None
        if pieces is None:
            return [("+", f"({c})" + (f"*{mono_text}" if mono_text else ""))]
        for k, v in pieces:
            dtxt = "*".join([D_SYMBOL] * k)
            out.extend(_coeff_terms(v, "*".join(t for t in (dtxt, mono_text) if t)))
        return out
    sign, mag = _split_sign(c)
    if mag is None:
        body = mono_text or "1"
    else:
        body = f"{mag}*{mono_text}" if mono_text else mag
    return [(sign, body)]


def _render_sum(parts):
    if not parts:
        return "0"
    out = []
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def render_center(p) -> str:
    parts = []
    for mono, c in p.sorted_terms():
        parts.extend(_coeff_terms(c, _mono_text(p.kind, mono)))
    return _render_sum(parts)


def render_sympoly(s, expand: bool = False) -> str:
    """Render in S-symbols when possible, or as an explicit monomial sum."""
    if not expand:
        try:
            return render_center(s.to_h())
        except ValueError:
            pass
    parts = []
    for e, c in sorted(s.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-a for a in kv[0]))):
        mono = "*".join(f"{s.var}{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a)
        parts.extend(_coeff_terms(c, mono))
    return _render_sum(parts)


# ---------------------------------------------------------------------------
# JSON

def _qrat_parts(c):
    if isinstance(c, QRat):
        return format_poly(c.numerator), format_poly(c.denominator)
    c = Fraction(c)
    return str(c), "1"


def center_to_json(p) -> list:
    entries = []
    for mono, c in p.sorted_terms():
        mono_list = [[k, e] for k, e in sorted(Counter(mono).items())]
        pieces = c.terms.items() if isinstance(c, UCoeff) else [(0, c)]
        for wp, v in sorted(pieces):
            num, den = _qrat_parts(v)
            entries.append({"monomial": mono_list, "coeff_num": num, "coeff_den": den, "w_power": wp})
    return entries


_TERM = re.compile(r"^(?:(?P<c>\d+(?:/\d+)?)\*?)?(?P<q>q(?:\^(?P<e>-?\d+))?)?$")


def parse_qpoly(text: str) -> QRat:
    """Parse a polynomial in q as produced by the renderer (e.g. ``2*q^3 - 1/2*q + 1``)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    tokens = re.findall(r"[+-]?(?:\^-|[^+-])+", s)
    terms = {}
    for tok in tokens:
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("+-")
        mt = _TERM.match(tok)
        if not mt or not (mt.group("c") or mt.group("q")):
            raise ValueError(f"cannot parse term {tok!r}")
        c = Fraction(mt.group("c")) if mt.group("c") else Fraction(1)
        k = 0
        if mt.group("q"):
            k = int(mt.group("e")) if mt.group("e") else 1
        terms[k] = terms.get(k, 0) + sign * c
    return QRat.laurent(terms)


def center_from_json(entries, kind="C"):
    from .centerpoly import CenterPoly

    terms = {}
    universal = any(e["w_power"] for e in entries)
    for e in entries:
        mono = tuple(k for k, mult in e["monomial"] for _ in range(mult))
        c = parse_qpoly(e["coeff_num"]) / parse_qpoly(e["coeff_den"])
        if universal or isinstance(terms.get(mono), UCoeff):
            c = UCoeff({e["w_power"]: c})
        if mono in terms:
            terms[mono] = terms[mono] + c
        else:
            terms[mono] = c
    if universal:
        terms = {k: (v if isinstance(v, UCoeff) else UCoeff(v)) for k, v in terms.items()}
    return CenterPoly(kind, terms)


def dumps_center(p) -> str:
    return json.dumps(center_to_json(p))
