"""Text, JSON and sign-sequence renderings of normal forms."""

import json
from fractions import Fraction

from .dyadic import Dyadic, encode_sign
from .series import DEFAULT_BUDGET, EPS0, ONE, ZERO, lift


def _coef(c):
    return str(c)


def _exponent(e):
    """Exponent as it appears after '^'."""
    if e.is_real():
        r = e.real()
        if r.denominator == 1:
            return str(r)
        return f"({r})"
    s = to_text(e, None)
    if s == "w":
        return s
    return f"({s})"


def _monomial(e, c):
    """Render |c| * w^e."""
    c = abs(c)
    if e is ZERO:
        return _coef(c)
    if e is ONE:
        base = "w"
    elif e is EPS0:
        base = "eps0"
    else:
        base = "w^" + _exponent(e)
    return base if c == 1 else f"{base}*{_coef(c)}"


def _truncated(x, budget):
    if budget is None:
        return list(x.finite_terms()), False
    terms = x.head(budget)
    return terms, x.more_than(budget) is not False


def to_text(x, budget=DEFAULT_BUDGET):
    """Human-readable normal form, e.g. ``w^2*3 + 5 + w^-1*7``.
    budget=None demands a finite value."""
    x = lift(x)
    if x is EPS0:
        return "eps0"
    terms, trunc = _truncated(x, budget)
    parts = []
    for e, c in terms:
        m = _monomial(e, c)
        if not parts:
            parts.append(m if c > 0 else "-" + m)
        else:
            parts.append((" + " if c > 0 else " - ") + m)
    if trunc:
        marker = f"... (truncated at depth {budget})"
        parts.append(" + " + marker if parts else marker)
    return "".join(parts) if parts else "0"


def to_obj(x, budget=DEFAULT_BUDGET):
    x = lift(x)
    terms, trunc = _truncated(x, budget)
    return {"terms": [{"exp": _exp_obj(e), "coef": _coef(c)} for e, c in terms],
            "truncated": trunc}


def _exp_obj(e):
    if e is EPS0:
        return {"atom": "eps0"}
    return to_obj(e, None)


def to_json(x, budget=DEFAULT_BUDGET):
    return json.dumps(to_obj(x, budget), separators=(",", ":"))


def from_obj(obj):
    from .series import Surreal
    if obj.get("atom") == "eps0":
        return EPS0
    return Surreal.from_terms((from_obj(t["exp"]), Fraction(t["coef"])) for t in obj["terms"])


def from_json(text):
    return from_obj(json.loads(text))


def as_dyadic(x):
    x = lift(x)
    if not x.is_real():
        return None
    r = x.real()
    d = r.denominator
    if d & (d - 1):
        return None
    return Dyadic(r)


def to_sign(x):
    d = as_dyadic(x)
    if d is None:
        raise ValueError("sign format is only available for dyadic rationals")
    return encode_sign(d)


def render(x, fmt="nf", budget=DEFAULT_BUDGET):
    if fmt == "nf":
        return to_text(x, budget)
    if fmt == "json":
        return to_json(x, budget)
    if fmt == "sign":
        return to_sign(x)
    raise ValueError(f"unknown format {fmt!r}")
