"""Independent oracles and seeded samplers for tests.

The dyadic oracles below deliberately avoid the library's own tree walk and
cut code: they enumerate the tree level by level with plain Fractions.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .dyadic import Dyadic

MAX_ENUM_BIRTHDAY = 16


def _levels(max_birthday):
    """Numbers born on each day, built from the previous day's sorted list:
    day n adds one new number beyond each end and one in every gap."""
    day = [Fraction(0)]
    yield day
    allnums = [Fraction(0)]
    for _ in range(max_birthday):
        new = [allnums[0] - 1, allnums[-1] + 1]
        new += [(a + b) / 2 for a, b in zip(allnums, allnums[1:])]
        allnums = sorted(allnums + new)
        yield sorted(new)


def enumerate_dyadics(max_birthday):
    """All dyadics of birthday <= max_birthday in increasing order."""
    if not 0 <= max_birthday <= MAX_ENUM_BIRTHDAY:
        raise ValueError(f"max_birthday must lie in 0..{MAX_ENUM_BIRTHDAY}")
    out = []
    for day in _levels(max_birthday):
        out.extend(day)
    return [Dyadic(q) for q in sorted(out)]


def dyadics_by_birthday(max_birthday):
    return [[Dyadic(q) for q in day] for day in _levels(max_birthday)]


def tree_search_simplest(left, right, max_depth=MAX_ENUM_BIRTHDAY):
    """Breadth-first search for the earliest-born dyadic in the gap."""
    lo = max((Fraction(x.num, 1 << x.exp) for x in map(Dyadic, left)), default=None)
    hi = min((Fraction(x.num, 1 << x.exp) for x in map(Dyadic, right)), default=None)
    for day in _levels(max_depth):
        for q in day:
            if (lo is None or q > lo) and (hi is None or q < hi):
                return Dyadic(q)
    return None


# -- fragment sampler -------------------------------------------------------------

@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    max_terms: int = 3
    max_exponent_depth: int = 2
    coefficient_bound: int = 5
    constant_free: bool = False
    exp_safe: bool = False


_RATIONAL_BASES = [Fraction(x) for x in (-3, -2, -1, 0, 1, 2, 3)] + \
    [Fraction(-3, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(1, 3), Fraction(3, 2)]


class FragmentSampler:
    """Draws normal forms sum w^{a_i} r_i whose exponents are
    a = sum w^{b_j} s_j, with every b_j chosen where log and d are closed."""

    def __init__(self, config=SamplerConfig()):
        from .series import OMEGA, Surreal
        self.config = config
        self.rng = random.Random(config.seed)
        bases = [Surreal.constant(q) for q in _RATIONAL_BASES]
        if config.max_exponent_depth >= 2:
            bases += [Surreal.monomial(-1, 1), Surreal.monomial(-1, Fraction(1, 2)),
                      Surreal.from_terms([(0, -1), (-1, 1)]), OMEGA]
        if config.max_exponent_depth >= 3:
            bases += [Surreal.from_terms([(1, 1), (0, 1)]), Surreal.monomial(1, 2),
                      Surreal.monomial(2, 1)]
        from .series import _exp_key
        self.bases = sorted(set(bases), key=_exp_key)

    def coef(self):
        b = self.config.coefficient_bound
        while True:
            q = Fraction(self.rng.randint(-b, b), self.rng.choice((1, 1, 2, 3)))
            if q:
                return q

    def exponent(self):
        from .series import Surreal, ZERO, _cmp
        rng = self.rng
        k = rng.choice((1, 1, 1, 2))
        bs = rng.sample(self.bases, k)
        a = Surreal.from_terms((b, self.coef()) for b in bs)
        if self.config.exp_safe and _cmp(a, ZERO) > 0:
            lead_b = a._terms[0][0]
            if _cmp(lead_b, ZERO) < 0:
                # an infinitesimal positive exponent must be a single w^-k * t
                t = Fraction(rng.randint(1, 6), rng.choice((1, 2, 3)))
                a = Surreal.monomial(-rng.randint(1, 3), t)
        return a

    def sample(self):
        from .series import ONE, Surreal, ZERO
        rng = self.rng
        n = rng.randint(1, self.config.max_terms)
        exps = {}
        for _ in range(n):
            if not self.config.constant_free and rng.random() < 0.25:
                a = ZERO
            else:
                a = self.exponent()
                if a is ZERO and self.config.constant_free:
                    continue
            exps[a] = self.coef()
        if not exps:
            exps[ONE] = self.coef()
        return Surreal.from_terms(exps.items())

    def nonconstant(self):
        while True:
            x = self.sample()
            if not x.is_real():
                return x


def sample_fragment(config=SamplerConfig()):
    return FragmentSampler(config).sample()


def sample_many(config, count):
    s = FragmentSampler(config)
    return [s.sample() for _ in range(count)]
