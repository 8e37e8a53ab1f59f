"""Surreal numbers in Conway normal form.

A value is a sum of terms ``w^a * r`` with rational ``r != 0`` and strictly
decreasing exponents ``a``.  Exponents are themselves finite normal forms.
Finite values are interned, so equal finite values are the same object.
Values with infinitely many terms are lazy streams: a stream yields
*positions* ``(exponent, coefficient)`` in decreasing exponent order, where a
zero coefficient just records that everything still to come lies below that
exponent.  Work on streams is always bounded by an explicit budget.
"""

import heapq
import threading
import weakref
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key

from .errors import (IrrationalCoefficient, MalformedStream, Undecided,
                     ZeroDivisor, UnsupportedDomain)

DEFAULT_BUDGET = 20
# consecutive empty positions tolerated before a stream is declared stalled
ZERO_RUN_CAP = 48
# powers of an infinitesimal started while waiting for one output position
POWER_CAP = 400

_INTERN = weakref.WeakValueDictionary()
_CMP = {}
_ADD = {}
_CACHE_LIMIT = 200_000


class Order(Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"
    UNDECIDED = "UNDECIDED"


class Relation(Enum):
    PREC = "PREC"          # x is infinitely smaller than y
    ASYMP_EQ = "ASYMP_EQ"  # same archimedean class
    SIM = "SIM"            # same leading term
    SUCC = "SUCC"


class _Stall(Exception):
    pass


def _q(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if hasattr(c, "to_fraction"):
        return c.to_fraction()
    raise TypeError(f"not a rational coefficient: {c!r}")


class Surreal:
    __slots__ = ("_terms", "_raw", "_src", "_done", "_stalled", "_lock", "_zrun", "__weakref__")

    # -- construction -----------------------------------------------------

    @staticmethod
    def _finite(terms):
        """Intern a finite value; `terms` must already be normalized."""
        terms = tuple(terms)
        obj = _INTERN.get(terms)
        if obj is None:
            obj = object.__new__(Surreal)
            obj._terms = terms
            obj._raw = terms
            obj._src = None
            obj._done = True
            obj._stalled = False
            obj._lock = None
            obj._zrun = 0
            _INTERN[terms] = obj
        return obj

    @staticmethod
    def _stream(gen):
        obj = object.__new__(Surreal)
        obj._terms = []
        obj._raw = []
        obj._src = gen
        obj._done = False
        obj._stalled = False
        obj._lock = threading.RLock()
        obj._zrun = 0
        return obj

    @classmethod
    def from_terms(cls, terms):
        """Build a finite value from (exponent, coefficient) pairs in any order."""
        acc = {}
        for e, c in terms:
            e = _frozen(e)
            acc[e] = acc.get(e, Fraction(0)) + _q(c)
        return _normalize(acc)

    @classmethod
    def constant(cls, r):
        r = _q(r)
        return cls._finite(((ZERO, r),)) if r else ZERO

    @classmethod
    def monomial(cls, exp, coef=1):
        exp = _frozen(exp)
        coef = _q(coef)
        return cls._finite(((exp, coef),)) if coef else ZERO

    # -- stream access ----------------------------------------------------

    def is_finite(self):
        """True once the value is known to have finitely many terms."""
        return self._done and not self._stalled

    def _advance(self):
        try:
            e, c = next(self._src)
        except StopIteration:
            self._done = True
            self._src = None
            return False
        except _Stall:
            self._done = True
            self._stalled = True
            self._src = None
            return False
        if self._raw and _cmp(self._raw[-1][0], e) <= 0:
            self._done = True
            self._src = None
            raise MalformedStream("stream exponents are not strictly decreasing")
        self._raw.append((e, c))
        if c:
            self._terms.append((e, c))
            self._zrun = 0
        else:
            self._zrun += 1
        return True

    def position(self, i):
        """Raw position i (possibly with a zero coefficient), or None."""
        raw = self._raw
        if i < len(raw):
            return raw[i]
        if self._done:
            return None
        with self._lock:
            while len(self._raw) <= i:
                if self._done or not self._advance():
                    return None
            return self._raw[i]

    def term(self, i, cap=None):
        """Nonzero term i, or None when there is none or it could not be found."""
        terms = self._terms
        if i < len(terms):
            return terms[i]
        if self._done:
            return None
        cap = ZERO_RUN_CAP if cap is None else cap
        with self._lock:
            self._zrun = 0
            while len(self._terms) <= i:
                if self._done:
                    return None
                if self._zrun > cap:
                    return None
                self._advance()
            return self._terms[i]

    def head(self, n):
        out = []
        for i in range(n):
            t = self.term(i)
            if t is None:
                break
            out.append(t)
        return out

    def more_than(self, n):
        """Whether there are more than n terms: True, False, or None if unknown."""
        if self.term(n) is not None:
            return True
        if self._done and not self._stalled:
            return False
        return None

    def known_terms(self):
        return list(self._terms)

    def finite_terms(self):
        if not self.is_finite():
            raise Undecided("value is not known to be finite")
        return tuple(self._terms)

    def collapse(self, budget=DEFAULT_BUDGET):
        """The interned finite value if the stream ends within budget terms, else self."""
        if self._src is None and self._done and not self._stalled and isinstance(self._terms, tuple):
            return self
        more = self.more_than(budget)
        if more is False:
            return Surreal._finite(self._terms)
        return self

    def truncate(self, n):
        return Surreal._finite(self.head(n))

    def lead(self, cap=None):
        t = self.term(0, cap)
        if t is None and not self.is_finite():
            raise Undecided("leading term not found within budget")
        return t

    # -- python protocol --------------------------------------------------

    def __hash__(self):
        if self._src is not None or not isinstance(self._terms, tuple):
            raise TypeError("stream values are not hashable")
        return id(self)

    def __eq__(self, other):
        other = _try_lift(other)
        if other is None:
            return NotImplemented
        if _is_interned(self) and _is_interned(other):
            return self is other
        r = nf_compare(self, other)
        if r is Order.UNDECIDED:
            raise Undecided("equality undecided within budget")
        return r is Order.EQ

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def _order(self, other):
        other = _try_lift(other)
        if other is None:
            return None
        r = nf_compare(self, other)
        if r is Order.UNDECIDED:
            raise Undecided("order undecided within budget")
        return r

    def __lt__(self, other):
        r = self._order(other)
        return NotImplemented if r is None else r is Order.LT

    def __le__(self, other):
        r = self._order(other)
        return NotImplemented if r is None else r is not Order.GT

    def __gt__(self, other):
        r = self._order(other)
        return NotImplemented if r is None else r is Order.GT

    def __ge__(self, other):
        r = self._order(other)
        return NotImplemented if r is None else r is not Order.LT

    def __bool__(self):
        return self.term(0) is not None or not self.is_finite()

    def __neg__(self):
        return nf_neg(self)

    def __add__(self, other):
        other = _try_lift(other)
        return NotImplemented if other is None else nf_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _try_lift(other)
        return NotImplemented if other is None else nf_add(self, nf_neg(other))

    def __rsub__(self, other):
        other = _try_lift(other)
        return NotImplemented if other is None else nf_add(other, nf_neg(self))

    def __mul__(self, other):
        other = _try_lift(other)
        return NotImplemented if other is None else nf_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _try_lift(other)
        return NotImplemented if other is None else nf_div(self, other)

    def __rtruediv__(self, other):
        other = _try_lift(other)
        return NotImplemented if other is None else nf_div(other, self)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return nf_pow(self, n)

    def __repr__(self):
        from .render import to_text
        return f"Surreal({to_text(self, 8)!r})"

    def __str__(self):
        from .render import to_text
        return to_text(self, DEFAULT_BUDGET)

    # -- small queries ----------------------------------------------------

    def is_real(self):
        """A rational constant (finite with only a w^0 term)."""
        if not self.is_finite():
            return False
        t = self._terms
        return not t or (len(t) == 1 and t[0][0] is ZERO)

    def real(self):
        """Rational value of a constant."""
        if not self.is_real():
            raise ValueError("not a rational constant")
        return self._terms[0][1] if self._terms else Fraction(0)

    def is_monomial(self):
        return self.is_finite() and len(self._terms) == 1

    def sign(self):
        t = self.lead()
        return 0 if t is None else (1 if t[1] > 0 else -1)

    def valuation(self):
        """Exponent of the leading term (None for zero)."""
        t = self.lead()
        return None if t is None else t[0]

    def contains(self, atom):
        if self is atom:
            return True
        seen = self.head(DEFAULT_BUDGET) if not self.is_finite() else self._terms
        return any(e is not self and e.contains(atom) for e, _ in seen)

    def coefficient(self, exp):
        exp = lift(exp)
        for e, c in (self._terms if self.is_finite() else self.head(DEFAULT_BUDGET)):
            k = _cmp(e, exp)
            if k == 0:
                return c
            if k < 0:
                break
        return Fraction(0)


def _is_interned(x):
    return x._src is None and isinstance(x._terms, tuple)


def _frozen(e):
    """An exponent as an interned finite value."""
    e = lift(e)
    if _is_interned(e):
        return e
    if e.is_finite():
        return Surreal._finite(e._terms)
    raise MalformedStream("exponents must be finite")


def _try_lift(x):
    if isinstance(x, Surreal):
        return x
    try:
        return lift(x)
    except TypeError:
        return None


def lift(x):
    if isinstance(x, Surreal):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Surreal.constant(x)
    if hasattr(x, "to_fraction"):
        return Surreal.constant(x.to_fraction())
    from .ordinals import Ordinal, embed
    if isinstance(x, Ordinal):
        return embed(x)
    raise TypeError(f"cannot interpret {x!r} as a surreal")


# -- the constants --------------------------------------------------------------

ZERO = Surreal._finite(())
ONE = Surreal._finite(((ZERO, Fraction(1)),))
OMEGA = Surreal._finite(((ONE, Fraction(1)),))


def _make_eps0():
    obj = object.__new__(Surreal)
    obj._terms = ((obj, Fraction(1)),)
    obj._raw = obj._terms
    obj._src = None
    obj._done = True
    obj._stalled = False
    obj._lock = None
    obj._zrun = 0
    _INTERN[obj._terms] = obj
    return obj


EPS0 = _make_eps0()
_KEEP = [ZERO, ONE, OMEGA, EPS0]


# -- comparison of finite values -------------------------------------------------

def _cmp(x, y):
    """Three-way comparison of finite values."""
    if x is y:
        return 0
    key = (x, y)
    r = _CMP.get(key)
    if r is not None:
        return r
    tx, ty = x._terms, y._terms
    r = 0
    for i in range(max(len(tx), len(ty))):
        if i >= len(tx):
            r = -1 if ty[i][1] > 0 else 1
            break
        if i >= len(ty):
            r = 1 if tx[i][1] > 0 else -1
            break
        (ex, cx), (ey, cy) = tx[i], ty[i]
        if ex is not ey:
            k = _cmp(ex, ey)
            if k > 0:
                r = 1 if cx > 0 else -1
                break
            if k < 0:
                r = -1 if cy > 0 else 1
                break
        if cx != cy:
            r = 1 if cx > cy else -1
            break
    if len(_CMP) > _CACHE_LIMIT:
        _CMP.clear()
    _CMP[key] = r
    return r


_exp_key = cmp_to_key(lambda a, b: _cmp(b, a))


def _normalize(acc):
    items = [(e, c) for e, c in acc.items() if c]
    items.sort(key=lambda t: _exp_key(t[0]))
    return Surreal._finite(items)


# -- finite arithmetic -----------------------------------------------------------

def _fadd(x, y):
    if x is ZERO:
        return y
    if y is ZERO:
        return x
    key = (x, y) if id(x) < id(y) else (y, x)
    r = _ADD.get(key)
    if r is not None:
        return r
    tx, ty = x._terms, y._terms
    out = []
    i = j = 0
    while i < len(tx) and j < len(ty):
        k = _cmp(tx[i][0], ty[j][0])
        if k > 0:
            out.append(tx[i])
            i += 1
        elif k < 0:
            out.append(ty[j])
            j += 1
        else:
            c = tx[i][1] + ty[j][1]
            if c:
                out.append((tx[i][0], c))
            i += 1
            j += 1
    out.extend(tx[i:])
    out.extend(ty[j:])
    r = Surreal._finite(out)
    if len(_ADD) > _CACHE_LIMIT:
        _ADD.clear()
    _ADD[key] = r
    return r


def _fscale(x, e, c):
    """x * w^e * c for finite x."""
    if not c:
        return ZERO
    return Surreal._finite([(_fadd(a, e), r * c) for a, r in x._terms])


def _fmul(x, y):
    if len(x._terms) > len(y._terms):
        x, y = y, x
    if not x._terms:
        return ZERO
    if len(x._terms) == 1:
        return _fscale(y, *x._terms[0])
    acc = {}
    for a, r in x._terms:
        for b, s in y._terms:
            e = _fadd(a, b)
            acc[e] = acc.get(e, 0) + r * s
    return _normalize(acc)


def _fneg(x):
    return Surreal._finite([(e, -c) for e, c in x._terms])


# -- stream generators -----------------------------------------------------------

class _Item:
    __slots__ = ("e", "k", "i")

    def __init__(self, e, k, i):
        self.e, self.k, self.i = e, k, i

    def __lt__(self, other):
        # max-heap on the exponent
        return _cmp(self.e, other.e) > 0


def _raw_iter(x, start=0):
    i = start
    while True:
        p = x.position(i)
        if p is None:
            if x._stalled:
                raise _Stall()
            return
        yield p
        i += 1


def _merge_gen(parts):
    """Positions of a sum of values given as (value, exponent shift, scale)."""
    iters = [_raw_iter(x) for x, _, _ in parts]
    heap = []

    def push(k):
        # the item's third slot carries the scaled coefficient
        p = next(iters[k], None)
        if p is not None:
            e, c = p
            shift = parts[k][1]
            heapq.heappush(heap, _Item(e if shift is ZERO else _fadd(e, shift), k, c * parts[k][2]))

    for k in range(len(parts)):
        push(k)
    while heap:
        top = heapq.heappop(heap)
        e, total = top.e, top.i
        push(top.k)
        while heap and heap[0].e is e:
            it = heapq.heappop(heap)
            total += it.i
            push(it.k)
        yield e, total


def _mul_gen(x, y):
    """Cauchy product over raw positions, frontier kept in a heap."""
    if x.position(0) is None or y.position(0) is None:
        if x._stalled or y._stalled:
            raise _Stall()
        return
    heap = [_Item(_fadd(x.position(0)[0], y.position(0)[0]), 0, 0)]
    seen = {(0, 0)}

    def succ(i, j):
        for a, b in ((i + 1, j), (i, j + 1)):
            if (a, b) in seen:
                continue
            px, py = x.position(a), y.position(b)
            if px is None or py is None:
                if x._stalled or y._stalled:
                    raise _Stall()
                continue
            seen.add((a, b))
            heapq.heappush(heap, _Item(_fadd(px[0], py[0]), a, b))

    while heap:
        top = heapq.heappop(heap)
        e = top.e
        pairs = [(top.k, top.i)]
        while heap and heap[0].e is e:
            it = heapq.heappop(heap)
            pairs.append((it.k, it.i))
        total = Fraction(0)
        for i, j in pairs:
            total += x.position(i)[1] * y.position(j)[1]
            succ(i, j)
        yield e, total


def _series_gen(coef, eps):
    """Positions of sum_k coef(k) * eps**k for an infinitesimal eps whose
    raw position 0 is its leading term.  coef(k) returning None ends the series."""
    v = eps.position(0)[0]
    powers = [ONE]
    heap = []
    k_next = 0
    lead_next = ZERO
    exhausted = False

    def start():
        nonlocal k_next, lead_next, exhausted
        k = k_next
        c = coef(k)
        if c is None:
            exhausted = True
            return
        while len(powers) <= k:
            powers.append(nf_mul(powers[-1], eps))
        k_next += 1
        lead_next = _fadd(lead_next, v)
        if c:
            p = powers[k].position(0)
            heapq.heappush(heap, _Item(p[0], k, 0))

    def advance(k, i):
        p = powers[k].position(i + 1)
        if p is None:
            if powers[k]._stalled:
                raise _Stall()
            return
        heapq.heappush(heap, _Item(p[0], k, i + 1))

    coefs = {}
    while True:
        started = 0
        while not exhausted and (not heap or _cmp(lead_next, heap[0].e) >= 0):
            start()
            started += 1
            if started > POWER_CAP:
                raise _Stall()
        if not heap:
            return
        top = heapq.heappop(heap)
        e = top.e
        group = [top]
        while heap and heap[0].e is e:
            group.append(heapq.heappop(heap))
        total = Fraction(0)
        for it in group:
            c = coefs.get(it.k)
            if c is None:
                c = coefs[it.k] = coef(it.k)
            total += c * powers[it.k].position(it.i)[1]
            advance(it.k, it.i)
        yield e, total


def _lazy_sum_gen(values):
    """Positions of the sum of finite values whose leading exponents strictly
    decrease (the sum may be infinite)."""
    values = iter(values)
    pending = next(values, None)
    heap = []
    vals = []

    def start(v):
        vals.append(v)
        if v._terms:
            heapq.heappush(heap, _Item(v._terms[0][0], len(vals) - 1, 0))

    while True:
        started = 0
        while pending is not None and (not heap or not pending._terms
                                       or _cmp(pending._terms[0][0], heap[0].e) >= 0):
            start(pending)
            pending = next(values, None)
            started += 1
            if started > POWER_CAP:
                raise _Stall()
        if not heap:
            return
        top = heapq.heappop(heap)
        e = top.e
        group = [top]
        while heap and heap[0].e is e:
            group.append(heapq.heappop(heap))
        total = Fraction(0)
        for it in group:
            t = vals[it.k]._terms
            total += t[it.i][1]
            if it.i + 1 < len(t):
                heapq.heappush(heap, _Item(t[it.i + 1][0], it.k, it.i + 1))
        yield e, total


def _tail(x, start):
    """Stream of raw positions of x from index `start` on."""
    if _is_interned(x):
        return Surreal._finite(x._terms[start:])
    return Surreal._stream(_raw_iter(x, start))


def _stripped(x):
    """x with leading empty positions removed (so position 0 is the lead term)."""
    t = x.lead()
    if t is None:
        return ZERO
    if _is_interned(x):
        return x
    i = 0
    while x.position(i)[1] == 0:
        i += 1
    return _tail(x, i)


def sum_of_stream(terms):
    """A lazy value from an iterable of (exponent, coefficient) pairs whose
    exponents strictly decrease.  Violations raise MalformedStream on reading."""

    def gen():
        for e, c in terms:
            yield _frozen(e), _q(c)

    return Surreal._stream(gen())


# -- public arithmetic -----------------------------------------------------------

def nf_neg(x):
    x = lift(x)
    if _is_interned(x):
        return _fneg(x)
    return Surreal._stream(_merge_gen([(x, ZERO, Fraction(-1))]))


def nf_add(x, y):
    x, y = lift(x), lift(y)
    if _is_interned(x) and _is_interned(y):
        return _fadd(x, y)
    return Surreal._stream(_merge_gen([(x, ZERO, Fraction(1)), (y, ZERO, Fraction(1))]))


def nf_sum(values):
    values = [lift(v) for v in values]
    if all(_is_interned(v) for v in values):
        r = ZERO
        for v in values:
            r = _fadd(r, v)
        return r
    return Surreal._stream(_merge_gen([(v, ZERO, Fraction(1)) for v in values]))


def nf_mul(x, y):
    x, y = lift(x), lift(y)
    if _is_interned(x) and _is_interned(y):
        return _fmul(x, y)
    for a, b in ((x, y), (y, x)):
        if _is_interned(a) and len(a._terms) == 1:
            e, c = a._terms[0]
            return Surreal._stream(_merge_gen([(b, e, c)]))
        if _is_interned(a) and not a._terms:
            return ZERO
    return Surreal._stream(_mul_gen(x, y))


def scale(x, e, c):
    """x * w^e * c."""
    return nf_mul(x, Surreal.monomial(e, c))


@dataclass(frozen=True)
class AdditiveParts:
    purely_infinite: Surreal
    real: Fraction
    infinitesimal: Surreal


@dataclass(frozen=True)
class MultiplicativeParts:
    exponent: Surreal      # leading monomial is w^exponent
    coefficient: Fraction  # leading coefficient
    tail: Surreal          # infinitesimal epsilon with x = w^a * r * (1 + epsilon)


def additive_decompose(x, budget=DEFAULT_BUDGET):
    """Split x into purely infinite part, rational constant and infinitesimal part."""
    x = lift(x)
    inf = []
    i = 0
    real = Fraction(0)
    while True:
        p = x.position(i)
        if p is None:
            if x._stalled:
                raise Undecided("purely infinite part not settled within budget")
            return AdditiveParts(Surreal._finite(inf), real, ZERO)
        e, c = p
        k = _cmp(e, ZERO)
        if k > 0:
            if c:
                inf.append(p)
                if len(inf) > budget:
                    raise Undecided("purely infinite part exceeds the budget")
            i += 1
            continue
        if k == 0:
            real = c
            i += 1
        break
    if _is_interned(x):
        small = Surreal._finite(x._terms[i:])
    else:
        small = Surreal._stream(_drop_zero_lead(_raw_iter(x, i)))
    return AdditiveParts(Surreal._finite(inf), real, small)


def _drop_zero_lead(it):
    started = False
    for e, c in it:
        if c or started:
            started = True
            yield e, c


def multiplicative_decompose(x):
    """x = w^a * r * (1 + eps) with eps infinitesimal."""
    x = lift(x)
    t = x.lead()
    if t is None:
        raise ZeroDivisor("zero has no multiplicative decomposition")
    a, r = t
    inv = Surreal.monomial(_fneg(a), 1 / r)
    rest = nf_add(x, Surreal.monomial(a, -r))
    eps = nf_mul(rest, inv)
    if _is_interned(eps):
        return MultiplicativeParts(a, r, eps)
    return MultiplicativeParts(a, r, Surreal._stream(_drop_zero_lead(_raw_iter(eps))))


def geometric(k):
    return Fraction(-1) ** k


def power_series(coef, eps):
    """sum_k coef(k) eps^k for infinitesimal eps."""
    eps = lift(eps)
    t = eps.lead()
    if t is None:
        c0 = coef(0)
        return Surreal.constant(c0 or 0)
    if _cmp(t[0], ZERO) >= 0:
        raise UnsupportedDomain("power series need an infinitesimal argument")
    eps = _stripped(eps)
    return Surreal._stream(_series_gen(coef, eps))


def nf_invert(x):
    x = lift(x)
    parts = multiplicative_decompose(x)
    m = Surreal.monomial(_fneg(parts.exponent), 1 / parts.coefficient)
    if _is_interned(parts.tail) and not parts.tail._terms:
        return m
    return nf_mul(m, power_series(geometric, parts.tail))


def _long_div(x, y):
    ye, yc = y._terms[0]
    r = x
    while r._terms:
        e, c = r._terms[0]
        qe, qc = _fadd(e, _fneg(ye)), c / yc
        yield qe, qc
        r = _fadd(r, _fscale(y, qe, -qc))


def nf_div(x, y):
    x, y = lift(x), lift(y)
    if y.lead() is None:
        raise ZeroDivisor("division by zero")
    if _is_interned(y) and len(y._terms) == 1:
        e, c = y._terms[0]
        return nf_mul(x, Surreal.monomial(_fneg(e), 1 / c))
    if _is_interned(x) and _is_interned(y):
        return Surreal._stream(_long_div(x, y))
    return nf_mul(x, nf_invert(y))


def nf_pow(x, n):
    x = lift(x)
    if n < 0:
        return nf_invert(nf_pow(x, -n))
    r, b = ONE, x
    while n:
        if n & 1:
            r = nf_mul(r, b)
        n >>= 1
        if n:
            b = nf_mul(b, b)
    return r


def omega_map(a):
    """The monomial w^a (a must be finite)."""
    return Surreal.monomial(a, 1)


def _rational_root(q, n):
    def iroot(m):
        if m < 0:
            raise IrrationalCoefficient("negative")
        r = round(m ** (1.0 / n)) if m < 2 ** 1000 else _newton_root(m, n)
        for c in (r - 1, r, r + 1):
            if c >= 0 and c ** n == m:
                return c
        raise IrrationalCoefficient(f"{q} has no rational {n}-th root")

    return Fraction(iroot(q.numerator), iroot(q.denominator))


def _newton_root(m, n):
    x = 1 << (m.bit_length() // n + 1)
    while True:
        y = ((n - 1) * x + m // x ** (n - 1)) // n
        if y >= x:
            return x
        x = y


def binomial(p):
    """Coefficients of (1 + t)^p."""
    cache = [Fraction(1)]

    def coef(k):
        while len(cache) <= k:
            j = len(cache) - 1
            cache.append(cache[-1] * (p - j) / (j + 1))
        return cache[k]

    return coef


def nth_root(x, n):
    """The positive n-th root (odd n also accepts negative x)."""
    x = lift(x)
    if n < 1:
        raise ValueError("root index must be positive")
    t = x.lead()
    if t is None:
        return ZERO
    if t[1] < 0:
        if n % 2 == 0:
            raise UnsupportedDomain("even root of a negative value")
        return nf_neg(nth_root(nf_neg(x), n))
    parts = multiplicative_decompose(x)
    r = _rational_root(parts.coefficient, n)
    e = _fscale(parts.exponent, ZERO, Fraction(1, n))
    m = Surreal.monomial(e, r)
    if _is_interned(parts.tail) and not parts.tail._terms:
        return m
    return nf_mul(m, power_series(binomial(Fraction(1, n)), parts.tail))


# -- comparison ------------------------------------------------------------------

def nf_compare(x, y, budget=DEFAULT_BUDGET):
    """Compare term by term, looking at no more than `budget` terms of each."""
    x, y = lift(x), lift(y)
    if _is_interned(x) and _is_interned(y):
        k = _cmp(x, y)
        return Order.LT if k < 0 else Order.GT if k > 0 else Order.EQ
    for i in range(budget):
        tx, ty = x.term(i), y.term(i)
        if tx is None and not x.is_finite() or ty is None and not y.is_finite():
            return Order.UNDECIDED
        if tx is None and ty is None:
            return Order.EQ
        if tx is None:
            return Order.LT if ty[1] > 0 else Order.GT
        if ty is None:
            return Order.GT if tx[1] > 0 else Order.LT
        k = _cmp(tx[0], ty[0])
        if k > 0:
            return Order.GT if tx[1] > 0 else Order.LT
        if k < 0:
            return Order.LT if ty[1] > 0 else Order.GT
        if tx[1] != ty[1]:
            return Order.GT if tx[1] > ty[1] else Order.LT
    if x.more_than(budget) is False and y.more_than(budget) is False:
        return Order.EQ
    return Order.UNDECIDED


def agree(x, y, depth=DEFAULT_BUDGET):
    """True when x - y has no nonzero coefficient among its first `depth`
    positions.  For finite x, y this is exact equality."""
    x, y = lift(x), lift(y)
    if _is_interned(x) and _is_interned(y):
        return x is y
    d = nf_add(x, nf_neg(y))
    for i in range(depth):
        p = d.position(i)
        if p is None:
            if d._stalled:
                raise Undecided("difference stalled")
            return True
        if p[1]:
            return False
    return True


def archimedean_relate(x, y):
    x, y = lift(x), lift(y)
    tx, ty = x.lead(), y.lead()
    if tx is None or ty is None:
        raise ZeroDivisor("zero has no archimedean class")
    k = _cmp(tx[0], ty[0])
    if k < 0:
        return Relation.PREC
    if k > 0:
        return Relation.SUCC
    return Relation.SIM if tx[1] == ty[1] else Relation.ASYMP_EQ


def leading_monomial(x):
    t = lift(x).lead()
    if t is None:
        raise ZeroDivisor("zero has no leading monomial")
    return Surreal.monomial(t[0], 1)


def is_infinitesimal(x):
    t = lift(x).lead()
    return t is None or _cmp(t[0], ZERO) < 0


def is_infinite(x):
    t = lift(x).lead()
    return t is not None and _cmp(t[0], ZERO) > 0


def exp_cmp(a, b):
    """Three-way comparison for finite values (exposed for other modules)."""
    return _cmp(lift(a), lift(b))
