"""Conway cuts over dyadics and the recursive (genetic) arithmetic."""

from dataclasses import dataclass

from .dyadic import Dyadic, encode_sign, _walk
from .errors import CutViolation


def _dy(x):
    return x if isinstance(x, Dyadic) else Dyadic(x)


@dataclass(frozen=True)
class CutExpr:
    left: tuple
    right: tuple

    def __init__(self, left=(), right=()):
        left = tuple(sorted({_dy(x) for x in left}))
        right = tuple(sorted({_dy(x) for x in right}))
        if left and right and left[-1] >= right[0]:
            raise CutViolation(f"left option {left[-1]} is not below right option {right[0]}")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def value(self):
        return simplest_between(self.left, self.right)

    def __str__(self):
        return "{%s | %s}" % (", ".join(map(str, self.left)), ", ".join(map(str, self.right)))


def simplest_between(left, right):
    """The earliest-born dyadic strictly above `left` and strictly below `right`."""
    left = [_dy(x) for x in left]
    right = [_dy(x) for x in right]
    lo = max(left) if left else None
    hi = min(right) if right else None
    if lo is not None and hi is not None and lo >= hi:
        raise CutViolation(f"left option {lo} is not below right option {hi}")
    lo = lo.to_fraction() if lo is not None else None
    hi = hi.to_fraction() if hi is not None else None
    # walk down the tree from 0, tracking the interval already passed
    a = b = None
    cur = _walk(a, b)
    while True:
        if lo is not None and cur <= lo:
            a = cur
        elif hi is not None and cur >= hi:
            b = cur
        else:
            return Dyadic(cur)
        cur = _walk(a, b)


def canonical_cut(d):
    """Options are the tree ancestors of d, split by side."""
    d = _dy(d)
    left, right = [], []
    a = b = None
    target = d.to_fraction()
    cur = _walk(a, b)
    while cur != target:
        if cur < target:
            left.append(Dyadic(cur))
            a = cur
        else:
            right.append(Dyadic(cur))
            b = cur
        cur = _walk(a, b)
    return CutExpr(left, right)


def is_cofinal(fine, coarse):
    """Every left option of `coarse` is met or beaten by one of `fine`,
    and every right option of `coarse` by one of `fine` from below."""
    for a in coarse.left:
        if not any(a <= x for x in fine.left):
            return False
    for b in coarse.right:
        if not any(y <= b for y in fine.right):
            return False
    return True


class _Memo:
    """Dictionary cache with an optional size cap (oldest entries dropped)."""

    def __init__(self, limit=None):
        self.limit = limit
        self.data = {}
        self.hits = self.misses = 0

    def get(self, key):
        r = self.data.get(key)
        if r is None:
            self.misses += 1
        else:
            self.hits += 1
        return r

    def put(self, key, value):
        if self.limit is not None and len(self.data) >= self.limit:
            for k in list(self.data)[: max(1, self.limit // 2)]:
                del self.data[k]
        self.data[key] = value


_CUTS = _Memo()
_NEG = _Memo()
_ADD = _Memo()
_MUL = _Memo()
_LEQ = _Memo()


def set_cache_limit(limit=None):
    """Cap each genetic memo table at `limit` entries (None means unbounded)."""
    for m in (_CUTS, _NEG, _ADD, _MUL, _LEQ):
        m.limit = limit
        m.data.clear()


def cache_info():
    return {name: (len(m.data), m.hits, m.misses)
            for name, m in [("cut", _CUTS), ("neg", _NEG), ("add", _ADD), ("mul", _MUL), ("leq", _LEQ)]}


def _cut(d):
    c = _CUTS.get(d)
    if c is None:
        c = canonical_cut(d)
        _CUTS.put(d, c)
    return c


def genetic_leq(a, b):
    """a <= b  iff  no left option of a is >= b and no right option of b is <= a."""
    a, b = _dy(a), _dy(b)
    key = (a, b)
    r = _LEQ.get(key)
    if r is None:
        r = not any(genetic_leq(b, x) for x in _cut(a).left) and \
            not any(genetic_leq(y, a) for y in _cut(b).right)
        _LEQ.put(key, r)
    return r


def genetic_neg(a):
    a = _dy(a)
    r = _NEG.get(a)
    if r is None:
        c = _cut(a)
        r = simplest_between([genetic_neg(x) for x in c.right], [genetic_neg(x) for x in c.left])
        _NEG.put(a, r)
    return r


def genetic_add(a, b):
    a, b = _dy(a), _dy(b)
    if (b.exp, b.num) < (a.exp, a.num):
        a, b = b, a
    key = (a, b)
    r = _ADD.get(key)
    if r is None:
        ca, cb = _cut(a), _cut(b)
        left = [genetic_add(x, b) for x in ca.left] + [genetic_add(a, y) for y in cb.left]
        right = [genetic_add(x, b) for x in ca.right] + [genetic_add(a, y) for y in cb.right]
        r = simplest_between(left, right)
        _ADD.put(key, r)
    return r


def _sub(x, y):
    return genetic_add(x, genetic_neg(y))


def genetic_mul(a, b):
    a, b = _dy(a), _dy(b)
    if (b.exp, b.num) < (a.exp, a.num):
        a, b = b, a
    key = (a, b)
    r = _MUL.get(key)
    if r is None:
        ca, cb = _cut(a), _cut(b)

        def opt(x, y):
            # x*b + a*y - x*y
            return _sub(genetic_add(genetic_mul(x, b), genetic_mul(a, y)), genetic_mul(x, y))

        left = [opt(x, y) for x in ca.left for y in cb.left] + \
               [opt(x, y) for x in ca.right for y in cb.right]
        right = [opt(x, y) for x in ca.left for y in cb.right] + \
                [opt(x, y) for x in ca.right for y in cb.left]
        r = simplest_between(left, right)
        _MUL.put(key, r)
    return r


def birthday(d):
    return len(encode_sign(_dy(d)))
