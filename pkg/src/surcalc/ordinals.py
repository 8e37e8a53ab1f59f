"""Ordinals below epsilon_1 in Cantor normal form, with natural (Hessenberg)
sum and product.  epsilon_0 is available as an atom."""

import re
from functools import total_ordering

from .errors import UnsupportedOrdinal, ParseError


@total_ordering
class Ordinal:
    """Sum of w^e * c with strictly decreasing exponents e and positive integer c."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        if isinstance(terms, int):
            if terms < 0:
                raise UnsupportedOrdinal("ordinals are non-negative")
            terms = ((ZERO, terms),) if terms else ()
        norm = {}
        for e, c in terms:
            if not isinstance(e, Ordinal):
                e = Ordinal(e)
            if not isinstance(c, int) or c < 0:
                raise UnsupportedOrdinal(f"bad coefficient {c!r}")
            if c:
                norm[e] = norm.get(e, 0) + c
        self.terms = tuple(sorted(norm.items(), key=lambda t: _Key(t[0]), reverse=True))
        if self.terms == ((EPS0, 1),) and EPS0 is not None:
            raise UnsupportedOrdinal("use Ordinal.EPS0 for epsilon_0")

    @staticmethod
    def epsilon(k=0):
        if k != 0:
            raise UnsupportedOrdinal(f"epsilon_{k} is beyond the supported range")
        return EPS0

    def __hash__(self):
        if self is EPS0:
            return hash("eps0")
        return hash(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) == 0

    def __lt__(self, other):
        if isinstance(other, int):
            other = Ordinal(other)
        return compare(self, other) < 0

    def __add__(self, other):
        return natural_sum(self, other)

    __radd__ = __add__

    def __mul__(self, other):
        return natural_product(self, other)

    __rmul__ = __mul__

    def is_finite(self):
        return self is not EPS0 and all(e is ZERO or e == ZERO for e, _ in self.terms)

    def __int__(self):
        if not self.is_finite():
            raise ValueError("infinite ordinal")
        return self.terms[0][1] if self.terms else 0

    def __repr__(self):
        return f"Ordinal({self})"

    def __str__(self):
        if self is EPS0:
            return "eps0"
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == ZERO:
                parts.append(str(c))
                continue
            if e == ONE:
                base = "w"
            elif e is EPS0:
                base = "eps0"
            else:
                s = str(e)
                base = "w^" + (s if re.fullmatch(r"\d+|w", s) else f"({s})")
            parts.append(base if c == 1 else f"{base}*{c}")
        return " + ".join(parts)


class _Key:
    __slots__ = ("o",)

    def __init__(self, o):
        self.o = o

    def __lt__(self, other):
        return compare(self.o, other.o) < 0

    def __eq__(self, other):
        return compare(self.o, other.o) == 0


def _terms(a):
    return ((a, 1),) if a is EPS0 else a.terms


def compare(a, b):
    if a is b:
        return 0
    ta, tb = _terms(a), _terms(b)
    for i in range(max(len(ta), len(tb))):
        if i >= len(ta):
            return -1
        if i >= len(tb):
            return 1
        (ea, ca), (eb, cb) = ta[i], tb[i]
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    return 0


ZERO = None
ONE = None
EPS0 = None

ZERO = Ordinal(())
ONE = Ordinal(((ZERO, 1),))
EPS0 = object.__new__(Ordinal)
EPS0.terms = ()  # never read directly; _terms() supplies ((EPS0, 1),)
OMEGA = Ordinal(((ONE, 1),))
Ordinal.EPS0 = EPS0
Ordinal.OMEGA = OMEGA


def _lift(a):
    return Ordinal(a) if isinstance(a, int) else a


def _make(terms):
    terms = list(terms)
    norm = {}
    for e, c in terms:
        norm[e] = norm.get(e, 0) + c
    if len(norm) == 1:
        (e, c), = norm.items()
        if e is EPS0 and c == 1:
            return EPS0
    return Ordinal(norm.items())


def natural_sum(a, b):
    a, b = _lift(a), _lift(b)
    return _make(_terms(a) + _terms(b))


def natural_product(a, b):
    a, b = _lift(a), _lift(b)
    return _make((natural_sum(ea, eb), ca * cb) for ea, ca in _terms(a) for eb, cb in _terms(b))


def omega_pow(a):
    return _make([(_lift(a), 1)])


def ordinal_sum(a, b):
    raise UnsupportedOrdinal("only the natural (commutative) sum is provided")


def embed(a):
    """The same ordinal as a surreal normal form."""
    from .series import Surreal, EPS0 as S_EPS0
    a = _lift(a)
    if a is EPS0:
        return S_EPS0
    return Surreal.from_terms([(embed(e), c) for e, c in a.terms])


_TOKEN = re.compile(r"\s*(?:(\d+)|(eps0|w|omega)|(\^|\*|\+|\(|\)))")


def parse_ordinal(text):
    """Read text like ``w^2*3 + w + 4``, ``w^w`` or ``eps0``."""
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", pos)
        kind = "num" if m.group(1) else "name" if m.group(2) else m.group(3)
        toks.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    i = 0

    def peek():
        return toks[i][0]

    def take(kind):
        nonlocal i
        t = toks[i]
        if t[0] != kind:
            raise ParseError(f"expected {kind}", t[2])
        i += 1
        return t

    def sum_():
        r = product()
        while peek() == "+":
            take("+")
            r = natural_sum(r, product())
        return r

    def product():
        r = power()
        while peek() == "*":
            take("*")
            r = natural_product(r, power())
        return r

    def power():
        base = atom()
        if peek() == "^":
            take("^")
            if base != OMEGA:
                raise UnsupportedOrdinal("only w may be raised to a power")
            return omega_pow(power())
        return base

    def atom():
        kind, val, off = toks[i]
        if kind == "num":
            take("num")
            return Ordinal(int(val))
        if kind == "name":
            take("name")
            return EPS0 if val == "eps0" else OMEGA
        if kind == "(":
            take("(")
            r = sum_()
            take(")")
            return r
        raise ParseError("expected an ordinal", off)

    r = sum_()
    take("end")
    return r
