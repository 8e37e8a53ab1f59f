"""The derivation d with d(w) = 1.

On the ladder log_n(w) = w^(w^-n):
    d(log_n w) = 1 / (w * log w * ... * log_{n-1} w).
Every other monomial is reduced through its logarithm,
    d(w^a) = w^a * d(log w^a) = w^a * sum_j s_j d(w^{h(b_j)}),
and d extends termwise (strong additivity).  Terms of d(x) come out in the
same order as the terms of x because x < y implies d(x) < d(y) for
non-constant monomials.
"""

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NoProgress, Undecided, UnsupportedDomain
from .explog import exp_nf, h_map, log_level
from .series import (DEFAULT_BUDGET, EPS0, ONE, ZERO, Surreal, _cmp, _fadd,
                     _fmul, _fneg, _fscale, _is_interned, _lazy_sum_gen, agree,
                     is_infinite, is_infinitesimal, lift, nf_add, nf_div,
                     nf_mul)

_D = {}


@dataclass(frozen=True)
class DerivationResult:
    value: Surreal
    budget_used: int
    exact: bool


def ladder_exponent(n):
    """Exponent of w * log w * ... * log_{n-1} w, i.e. sum_{k<n} w^-k."""
    return Surreal.from_terms((-k, 1) for k in range(n))


def d_log_atomic(level):
    """d(lambda_n) in closed form.  Negative levels are log_n(w); positive
    levels are exp_n(w) with d(exp_n w) = exp_1(w) * ... * exp_n(w)."""
    from .explog import LogAtomic, lambda_of_level
    n = level.level if isinstance(level, LogAtomic) else int(level)
    if n <= 0:
        return Surreal.monomial(_fneg(ladder_exponent(-n)), 1)
    r = ONE
    for k in range(1, n + 1):
        r = _fmul(r, lambda_of_level(k))
    return r


def d_monomial(a):
    """d(w^a) for a finite exponent a."""
    a = lift(a)
    r = _D.get(a)
    if r is None:
        r = _D[a] = _d_monomial(a, 0)
    return r


def _d_monomial(a, depth):
    if a is ZERO:
        return ZERO
    if a is EPS0:
        raise UnsupportedDomain("the derivation is not available around eps0")
    m = Surreal.monomial(a, 1)
    n = log_level(m)
    if n is not None:
        return d_log_atomic(-n)
    if depth > 64:
        raise UnsupportedDomain("derivation recursion too deep")
    acc = ZERO
    for b, s in a._terms:
        e = h_map(b)
        d = _D.get(e)
        if d is None:
            d = _D[e] = _d_monomial(e, depth + 1)
        acc = _fadd(acc, _fscale(d, ZERO, s))
    return _fmul(m, acc)


def _derive_positions(x):
    i = 0
    while True:
        p = x.position(i)
        if p is None:
            if x._stalled:
                from .series import _Stall
                raise _Stall()
            return
        i += 1
        e, c = p
        if c and e is not ZERO:
            yield _fscale(d_monomial(e), ZERO, c)


def derive(x, budget=DEFAULT_BUDGET):
    x = lift(x)
    if _is_interned(x):
        acc = ZERO
        for e, c in x._terms:
            if e is not ZERO:
                acc = _fadd(acc, _fscale(d_monomial(e), ZERO, c))
        return DerivationResult(acc, len(x._terms), True)
    value = Surreal._stream(_lazy_sum_gen(_derive_positions(x)))
    value = value.collapse(budget)
    used = len(x.known_terms())
    return DerivationResult(value, used, x.is_finite())


def d(x, budget=DEFAULT_BUDGET):
    return derive(x, budget).value


def log_derivative(x, budget=DEFAULT_BUDGET):
    return nf_div(d(x, budget), x)


# -- asymptotic integration ----------------------------------------------------

def _integrate_monomial(e, c, max_k=8):
    """A monomial b with d(b) ~ c * w^e."""
    for k in range(max_k + 1):
        pk = ladder_exponent(k)
        qexp = _fadd(e, pk)
        if qexp is ZERO:
            from .explog import lambda_of_level
            cand = lambda_of_level(-k)
        else:
            ld = _log_derivative_monomial(qexp)
            lexp = ld._terms[0][0]
            cand = Surreal.monomial(_fadd(e, _fneg(lexp)), 1)
        dc = d(cand)
        if not dc._terms:
            continue
        le, lc = dc._terms[0]
        if le is e:
            return _fscale(cand, ZERO, c / lc)
    raise UnsupportedDomain("no asymptotic integral found for this monomial")


def _log_derivative_monomial(a):
    """d(w^a) / w^a."""
    return _fmul(d_monomial(a), Surreal.monomial(_fneg(a), 1))


@dataclass(frozen=True)
class IntegrationResult:
    value: Surreal
    rounds: int
    exact: bool


def integrate(a, budget=DEFAULT_BUDGET, max_rounds=12):
    """Refine b until d(b) = a exactly or the round limit is reached.
    Stream inputs are cut to `budget` terms first."""
    a = lift(a)
    exact = True
    if not _is_interned(a):
        exact = a.more_than(budget) is False
        a = a.truncate(budget)
    b = ZERO
    resid = a
    last = None
    for rnd in range(max_rounds):
        if not resid._terms:
            return IntegrationResult(b, rnd, exact)
        e, c = resid._terms[0]
        if last is not None and _cmp(e, last) >= 0:
            raise NoProgress("residual did not shrink")
        last = e
        b = _fadd(b, _integrate_monomial(e, c))
        resid = _fadd(a, _fneg(d(b)))
    return IntegrationResult(b, max_rounds, exact and not resid._terms)


def asymptotic_integrate(a, budget=DEFAULT_BUDGET, max_rounds=12):
    return integrate(a, budget, max_rounds).value


# -- axiom checks ----------------------------------------------------------------

@dataclass
class AxiomCheck:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexample: str = ""

    def record(self, ok, witness=None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if not self.counterexample and witness is not None:
                self.counterexample = witness


@dataclass
class AxiomReport:
    seed: int
    count: int
    budget: int
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.failed == 0 for c in self.checks)

    def to_text(self):
        rows = [f"{'axiom':<22}{'pass':>6}{'fail':>6}{'skip':>6}"]
        for c in self.checks:
            rows.append(f"{c.name:<22}{c.passed:>6}{c.failed:>6}{c.skipped:>6}")
            if c.counterexample:
                rows.append(f"  counterexample: {c.counterexample}")
        return "\n".join(rows)

    def to_json(self):
        return json.dumps({"seed": self.seed, "count": self.count, "budget": self.budget,
                           "ok": self.ok,
                           "checks": [c.__dict__ for c in self.checks]}, indent=2)


def _show(*xs):
    from .render import to_text
    return " ; ".join(to_text(x, 8) for x in xs)


def check_derivation_axioms(seed=0, count=50, budget=10):
    """Run the derivation laws over seeded samples and tally the outcome."""
    from .oracles import FragmentSampler, SamplerConfig
    sampler = FragmentSampler(SamplerConfig(seed=seed, max_terms=3))
    safe = FragmentSampler(SamplerConfig(seed=seed + 1, max_terms=3,
                                         constant_free=True, exp_safe=True))
    rng = random.Random(seed)
    names = ["constants", "leibniz", "strong_additivity", "exp_compatible",
             "h_positive", "small_derivation", "lhospital"]
    checks = {n: AxiomCheck(n) for n in names}
    for _ in range(count):
        r = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        checks["constants"].record(not d(r)._terms, _show(r))
        x, y = sampler.sample(), sampler.sample()
        lhs = d(nf_mul(x, y))
        rhs = nf_add(nf_mul(x, d(y)), nf_mul(y, d(x)))
        checks["leibniz"].record(lhs is rhs, _show(x, y))
        parts = [sampler.sample() for _ in range(3)]
        total = ZERO
        dsum = ZERO
        for p in parts:
            total = _fadd(total, p)
            dsum = _fadd(dsum, d(p))
        checks["strong_additivity"].record(d(total) is dsum, _show(*parts))
        z = safe.sample()
        ez = exp_nf(z)
        try:
            ok = agree(d(ez, budget), nf_mul(ez, d(z)), budget)
            checks["exp_compatible"].record(ok, _show(z))
        except Undecided:
            checks["exp_compatible"].skipped += 1
        if is_infinite(x) and x.sign() > 0:
            checks["h_positive"].record(d(x).sign() > 0, _show(x))
        else:
            checks["h_positive"].skipped += 1
        if not is_infinite(x):
            checks["small_derivation"].record(is_infinitesimal(d(x)), _show(x))
        else:
            checks["small_derivation"].skipped += 1
        verdict = _lhospital(x, y)
        if verdict is None:
            checks["lhospital"].skipped += 1
        else:
            checks["lhospital"].record(*verdict)
    return AxiomReport(seed, count, budget, list(checks.values()))


def _lhospital(x, y):
    """x < y (infinitely) iff d(x) < d(y), for x, y not of the class of 1."""
    from .series import archimedean_relate, Relation
    for v in (x, y):
        t = v._terms[0] if v._terms else None
        if t is None or t[0] is ZERO:
            return None
    before = archimedean_relate(x, y) is Relation.PREC
    after = archimedean_relate(d(x), d(y)) is Relation.PREC
    return before == after, _show(x, y)
