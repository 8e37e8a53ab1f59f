"""Exponential and logarithm on normal forms.

For a purely infinite x = sum w^{c_i} r_i,
    exp(x) = w^(sum w^{g(c_i)} r_i),
and for a monomial w^b with b = sum w^{b_j} s_j,
    log(w^b) = sum w^{h(b_j)} s_j.
Infinitesimal parts go through the Taylor and Mercator series.  Exact mode
refuses anything that would need e**r or ln(r) for a nonzero rational r.

g and h are evaluated in closed form on the following region (anything else
raises UnsupportedDomain):
  * positive, non-infinitesimal values bounded by a finite tower of w:
    g(c) = c and h(b) = b;
  * eps0: g(eps0) = eps0 + 1, h(eps0 + 1) = eps0; values >= eps0 + w are fixed;
  * g(w^-k * t) for integers k >= 1 and rationals t > 0:
        t <= 1:  t - k
        t > 1:   -(k - 1) + w^-1 * (t - 1)
    with h the inverse on rationals <= 0 and on -m + w^-1 * u.
The last rule is what makes log(w) = w^(w^-1) and log(log(w)) = w^(w^-2).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, floor

from .cuts import simplest_between
from .dyadic import Dyadic
from .errors import (LevelOutOfBound, TranscendentalConstant, Undecided,
                     UnsupportedDomain)
from .series import (DEFAULT_BUDGET, EPS0, ONE, OMEGA, ZERO, Surreal,
                     _cmp, _fadd, additive_decompose, is_infinitesimal,
                     lift, multiplicative_decompose, nf_add, nf_mul,
                     power_series)

MAX_LEVEL = 16
_G = {}
_H = {}
_EPS0_PLUS_1 = _fadd(EPS0, ONE)
_EPS0_PLUS_W = _fadd(EPS0, OMEGA)


def _exp_coef(k):
    return Fraction(1, factorial(k))


def _log_coef(k):
    return Fraction(0) if k == 0 else Fraction((-1) ** (k + 1), k)


def taylor_exp_infinitesimal(eps):
    """exp(eps) = sum eps^k / k! for infinitesimal eps."""
    eps = lift(eps)
    if not is_infinitesimal(eps):
        raise UnsupportedDomain("Taylor expansion needs an infinitesimal argument")
    return power_series(_exp_coef, eps)


def taylor_log_unit(u):
    """log(1 + eps) = sum (-1)^(k+1) eps^k / k for u = 1 + eps."""
    eps = nf_add(lift(u), Surreal.constant(-1))
    if not is_infinitesimal(eps):
        raise UnsupportedDomain("Mercator expansion needs 1 + infinitesimal")
    if eps.lead() is None:
        return ZERO
    return power_series(_log_coef, eps)


def _tower_bounded(x):
    """x lies below some finite tower w^w^...^w (so below eps0)."""
    while True:
        if not x.contains(EPS0):
            return True
        if x is EPS0:
            return False
        e = x._terms[0][0]
        if _cmp(e, ZERO) <= 0:
            return True
        x = e


def _single(x):
    t = x._terms
    return t[0] if len(t) == 1 else None


def _neg_int(e):
    """k if e is the rational -k for an integer k >= 1, else None."""
    if e.is_real():
        r = e.real()
        if r.denominator == 1 and r < 0:
            return -r.numerator
    return None


def g_map(a):
    a = _finite(a)
    r = _G.get(a)
    if r is None:
        r = _G[a] = _g(a)
    return r


def _g(a):
    if _cmp(a, ZERO) <= 0:
        raise UnsupportedDomain("g is defined on positive values only")
    if a is EPS0:
        return _EPS0_PLUS_1
    if _cmp(a, _EPS0_PLUS_W) >= 0:
        return a
    if not is_infinitesimal(a):
        if _tower_bounded(a):
            return a
        raise UnsupportedDomain("g between the towers and eps0 + w is not supported")
    t = _single(a)
    if t is not None:
        k = _neg_int(t[0])
        if k is not None:
            c = t[1]
            if c <= 1:
                return Surreal.constant(c - k)
            return nf_add(Surreal.constant(1 - k), Surreal.monomial(-1, c - 1))
    raise UnsupportedDomain("g of this infinitesimal is not supported")


def h_map(b):
    b = _finite(b)
    r = _H.get(b)
    if r is None:
        r = _H[b] = _h(b)
    return r


def _h(b):
    if b is _EPS0_PLUS_1:
        return EPS0
    if _cmp(b, _EPS0_PLUS_W) >= 0:
        return b
    if b.contains(EPS0) and not _tower_bounded(b):
        raise UnsupportedDomain("h between the towers and eps0 + w is not supported")
    if _cmp(b, ZERO) > 0 and not is_infinitesimal(b):
        return b
    if b.is_real():
        # b = -n - s with n a natural number and 0 <= s < 1
        r = -b.real()
        n = floor(r)
        s = r - n
        return Surreal.monomial(-(n + 1), 1 - s)
    t = b._terms
    if len(t) <= 2 and t[-1][0] is _W_MINUS_1 and t[-1][1] > 0:
        m = 0
        if len(t) == 2:
            if t[0][0] is not ZERO or t[0][1].denominator != 1 or t[0][1] >= 0:
                raise UnsupportedDomain("h of this value is not supported")
            m = -t[0][1].numerator
        return Surreal.monomial(-(m + 1), 1 + t[-1][1])
    raise UnsupportedDomain("h of this value is not supported")


_W_MINUS_1 = Surreal.constant(-1)


def g_genetic(a):
    """g on a positive dyadic, computed from its canonical cut:
    g(a) = {0, g(a^L) | g(a^R)} (left options restricted to positive ones)."""
    from .cuts import canonical_cut
    a = Dyadic(a)
    if a <= 0:
        raise UnsupportedDomain("g is defined on positive values only")
    cut = canonical_cut(a)
    left = [Dyadic(0)] + [g_genetic(x) for x in cut.left if x > 0]
    right = [g_genetic(x) for x in cut.right]
    return simplest_between(left, right)


def _finite(x):
    x = lift(x)
    if x.is_finite():
        return Surreal._finite(x._terms) if not isinstance(x._terms, tuple) else x
    raise UnsupportedDomain("exponents must be finite")


@dataclass(frozen=True)
class NumericValue:
    """An exact normal form times a real constant known only as an interval.
    Display only: it never flows back into exact arithmetic."""
    exact: Surreal
    factor: object  # mpmath interval

    def __str__(self):
        from .render import to_text
        lo, hi = self.factor.a, self.factor.b
        return f"[{lo}, {hi}] * ({to_text(self.exact)})"


def _interval(q):
    from mpmath import iv
    iv.prec = 64
    return iv.mpf(q.numerator) / q.denominator


def exp_nf(x, budget=DEFAULT_BUDGET, numeric=False):
    x = lift(x)
    parts = additive_decompose(x, budget)
    if parts.real and not numeric:
        raise TranscendentalConstant(f"exp({parts.real}) is not rational")
    big = Surreal.from_terms((g_map(c), r) for c, r in parts.purely_infinite._terms)
    result = Surreal.monomial(big, 1)
    if parts.infinitesimal.lead() is not None:
        result = nf_mul(result, taylor_exp_infinitesimal(parts.infinitesimal))
    if numeric and parts.real:
        from mpmath import iv
        return NumericValue(result, iv.exp(_interval(parts.real)))
    return result


def log_monomial(b):
    """log(w^b) = sum w^{h(b_j)} s_j."""
    return _log_mono(_finite(b))


def _log_mono(b):
    acc = ZERO
    for e, c in b._terms:
        acc = _fadd(acc, Surreal.monomial(h_map(e), c))
    return acc


def log_nf(x, budget=DEFAULT_BUDGET, numeric=False):
    x = lift(x)
    t = x.lead()
    if t is None or t[1] < 0:
        raise UnsupportedDomain("log needs a positive argument")
    parts = multiplicative_decompose(x)
    if parts.coefficient != 1 and not numeric:
        raise TranscendentalConstant(f"log({parts.coefficient}) is not rational")
    result = _log_mono(_finite(parts.exponent))
    if parts.tail.lead() is not None:
        result = nf_add(result, taylor_log_unit(nf_add(ONE, parts.tail)))
    if numeric and parts.coefficient != 1:
        from mpmath import iv
        return NumericValue(result, iv.log(_interval(parts.coefficient)))
    return result


# -- the log-atomic ladder -------------------------------------------------------

@dataclass(frozen=True)
class LogAtomic:
    """lambda_n: exp applied n times to w (log applied -n times when n < 0)."""
    level: int

    def value(self):
        return lambda_of_level(self.level)

    def __str__(self):
        n = self.level
        if n == 0:
            return "w"
        if n > 0:
            return "exp(w)" if n == 1 else f"exp_{n}(w)"
        return "log(w)" if n == -1 else f"log_{-n}(w)"


_LAMBDA = {}


def lambda_of_level(n, max_level=MAX_LEVEL):
    if abs(n) > max_level:
        raise LevelOutOfBound(f"level {n} exceeds the bound {max_level}")
    r = _LAMBDA.get(n)
    if r is not None:
        return r
    if n == 0:
        r = OMEGA
    elif n > 0:
        r = exp_nf(lambda_of_level(n - 1, max_level))
    else:
        r = log_nf(lambda_of_level(n + 1, max_level))
    _LAMBDA[n] = r
    return r


def log_level(x):
    """n if x is log_n(w) = w^(w^-n) for n >= 0, else None."""
    x = lift(x)
    if x is EPS0 or not x.is_monomial():
        return None
    a, c = x._terms[0]
    if c != 1 or not a.is_monomial():
        return None
    e, s = a._terms[0]
    if s != 1:
        return None
    if e is ZERO:
        return 0
    k = _neg_int(e)
    return k


def is_log_atomic(x, max_iter=32):
    """Whether every iterated log of x stays a monomial w^y."""
    x = lift(x)
    if not x.is_finite():
        return False
    for _ in range(max_iter):
        if x is EPS0 or log_level(x) is not None:
            return True
        if not x.is_monomial() or x._terms[0][1] != 1:
            return False
        if _cmp(x._terms[0][0], ZERO) <= 0:
            return False
        x = log_nf(x)
    raise Undecided(f"no anchor reached within {max_iter} logarithms")


def _lead_log(m):
    """Leading term (w^e, coefficient) of log of a positive infinite value
    whose leading monomial is m = (a, c)."""
    a = m[0]
    b0, s0 = a._terms[0]
    return h_map(b0), s0


def _ladder_power(x):
    """(k, s) when the leading monomial of x is lambda_k^s, else None."""
    a, c = x._terms[0] if x.is_finite() else x.lead()
    if a is EPS0 or _cmp(a, ZERO) <= 0:
        return None
    # lambda_k for k <= 0 is w^(w^k); lambda_k^s = w^(w^k * s)
    if a.is_monomial():
        e, s = a._terms[0]
        if e is ZERO:
            return 0, s
        k = _neg_int(e)
        if k is not None:
            return -k, s
    # lambda_k for k >= 1 is w^lambda_{k-1}
    for k in range(1, MAX_LEVEL):
        lam = _LAMBDA.get(k - 1) or lambda_of_level(k - 1)
        if a.is_monomial() and a._terms[0][0] is lam._terms[0][0]:
            return k, a._terms[0][1]
        if _cmp(a, lam) < 0:
            break
    return None


def same_level(x, y, max_n=8):
    """Whether log_n(x) ~ log_n(y) for some n (the same archimedean level)."""
    x, y = lift(x), lift(y)
    for v in (x, y):
        if v.sign() <= 0 or is_infinitesimal(v):
            raise UnsupportedDomain("levels are defined for positive infinite values")
    tx, ty = x.lead(), y.lead()
    for _ in range(max_n + 1):
        if tx[0] is ty[0] and tx[1] == ty[1]:
            return True
        px, py = _ladder_power(Surreal.monomial(*tx)), _ladder_power(Surreal.monomial(*ty))
        if px is not None and py is not None:
            # lambda_k^s and lambda_k^t agree after two logs; distinct k never do
            return px[0] == py[0]
        tx, ty = _lead_log(tx), _lead_log(ty)
    raise Undecided(f"levels not separated within {max_n} logarithms")


def same_explog_class(x, y, max_n=8):
    """Whether log_n(x) < y < exp_n(x) for some n."""
    x, y = lift(x), lift(y)
    for v in (x, y):
        if v.sign() <= 0 or is_infinitesimal(v):
            raise UnsupportedDomain("exp-log classes are defined for positive infinite values")
        if v.contains(EPS0):
            raise UnsupportedDomain("values involving eps0 are not supported here")
    lx, ly = x.lead(), y.lead()
    for n in range(1, max_n + 1):
        lx, ly = _lead_log(lx), _lead_log(ly)
        if _lead_less(lx, y.lead()) and _lead_less(ly, x.lead()):
            return True
    raise Undecided(f"classes not separated within {max_n} logarithms")


def _lead_less(t, u):
    """a < b judged from leading terms; a tie counts as not yet below."""
    k = _cmp(t[0], u[0])
    if k:
        return k < 0
    return t[1] < u[1]
