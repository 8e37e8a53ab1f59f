"""Dyadic rationals and their sign-sequence encoding.

A dyadic is stored as ``num / 2**exp`` in lowest terms.  Sign sequences
follow the binary tree walk: ``"+-"`` is 1/2, ``"--+"`` is -3/2.
"""

from fractions import Fraction
from functools import total_ordering

from .errors import SignFormatError


@total_ordering
class Dyadic:
    __slots__ = ("num", "exp")

    def __init__(self, num=0, exp=0):
        if isinstance(num, Dyadic):
            num, exp = num.num, num.exp
        elif isinstance(num, Fraction):
            if exp:
                raise TypeError("exp given with a Fraction")
            num, exp = _from_fraction(num)
        elif not isinstance(num, int):
            raise TypeError(f"cannot make a dyadic from {num!r}")
        if exp < 0:
            num, exp = num << -exp, 0
        while exp and not num & 1:
            num >>= 1
            exp -= 1
        if num == 0:
            exp = 0
        self.num = num
        self.exp = exp

    @classmethod
    def parse(cls, text):
        """Read ``p``, ``p/q`` (q a power of two) or ``p/2^k``."""
        text = text.strip()
        if "/2^" in text:
            p, k = text.split("/2^")
            return cls(int(p), int(k))
        return cls(Fraction(text))

    def to_fraction(self):
        return Fraction(self.num, 1 << self.exp)

    def __repr__(self):
        return f"Dyadic({self})"

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def __hash__(self):
        return hash(self.to_fraction())

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.num == other.num and self.exp == other.exp
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        e = max(self.exp, other.exp)
        return self.num << (e - self.exp) < other.num << (e - other.exp)

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        e = max(self.exp, other.exp)
        return Dyadic((self.num << (e - self.exp)) + (other.num << (e - other.exp)), e)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Dyadic(self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def is_integer(self):
        return self.exp == 0

    @property
    def birthday(self):
        return len(encode_sign(self))


def _coerce(x):
    if isinstance(x, Dyadic):
        return x
    if isinstance(x, int):
        return Dyadic(x)
    if isinstance(x, Fraction):
        return Dyadic(x)
    return None


def _from_fraction(q):
    d = q.denominator
    if d & (d - 1):
        raise ValueError(f"{q} is not dyadic")
    return q.numerator, d.bit_length() - 1


def dyadic_add(a, b):
    return Dyadic(a) + Dyadic(b)


def dyadic_neg(a):
    return -Dyadic(a)


def dyadic_mul(a, b):
    return Dyadic(a) * Dyadic(b)


def _walk(lo, hi):
    """Next node of the tree walk strictly between lo and hi (None = unbounded)."""
    if lo is None and hi is None:
        return Fraction(0)
    if hi is None:
        return lo + 1
    if lo is None:
        return hi - 1
    return (lo + hi) / 2


def encode_sign(d):
    target = Dyadic(d).to_fraction()
    lo = hi = None
    cur = Fraction(0)
    out = []
    while cur != target:
        if target > cur:
            out.append("+")
            lo = cur
        else:
            out.append("-")
            hi = cur
        cur = _walk(lo, hi)
    return "".join(out)


def decode_sign(seq):
    lo = hi = None
    cur = Fraction(0)
    for i, c in enumerate(seq):
        if c == "+":
            lo = cur
        elif c == "-":
            hi = cur
        else:
            raise SignFormatError(f"bad sign {c!r} at position {i}")
        cur = _walk(lo, hi)
    return Dyadic(cur)


_RANK = {"-": -1, "+": 1}


def compare_lex(s, t):
    """Lexicographic order with '-' < (end of sequence) < '+'."""
    for seq in (s, t):
        bad = set(seq) - {"+", "-"}
        if bad:
            raise SignFormatError(f"bad sign {sorted(bad)[0]!r}")
    for i in range(max(len(s), len(t))):
        a = _RANK[s[i]] if i < len(s) else 0
        b = _RANK[t[i]] if i < len(t) else 0
        if a != b:
            return -1 if a < b else 1
    return 0


def is_simpler(s, t):
    """True when s is a proper initial segment of t."""
    return len(s) < len(t) and t.startswith(s)
