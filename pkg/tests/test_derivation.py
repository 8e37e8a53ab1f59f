import json
from fractions import Fraction

import pytest

from surcalc.derivation import (asymptotic_integrate, check_derivation_axioms, d, d_log_atomic,
                                derive, integrate, log_derivative)
from surcalc.errors import UnsupportedDomain
from surcalc.explog import LogAtomic, exp_nf, lambda_of_level, log_nf
from surcalc.oracles import FragmentSampler, SamplerConfig
from surcalc.series import EPS0, ONE, OMEGA, ZERO, Relation, Surreal, agree, archimedean_relate, nf_invert

F = Fraction
w = OMEGA


def mono(e, c=1):
    return Surreal.monomial(e, c)


def product_of_logs(n):
    """w * log w * ... * log_{n-1} w, built by multiplication."""
    p = ONE
    x = w
    for _ in range(n):
        p = p * x
        x = log_nf(x)
    return p


def test_ladder_derivatives():
    assert d(w) is ONE
    x = w
    for n in range(1, 6):
        x = log_nf(x)
        assert d(x) == nf_invert(product_of_logs(n))
        assert d(x) is d_log_atomic(-n)


def test_exp_tower_derivatives():
    for n in range(1, 4):
        want = ONE
        for k in range(1, n + 1):
            want = want * lambda_of_level(k)
        assert d(lambda_of_level(n)) is want
        assert d_log_atomic(LogAtomic(n)) is want


def test_simple_rules():
    assert d(w ** 2) is w * 2
    assert d(mono(-1)) is -mono(-2)
    assert d(Surreal.constant(F(7, 3))) is ZERO
    assert log_derivative(w ** 3) == mono(-1, 3)
    with pytest.raises(UnsupportedDomain):
        d(EPS0)


def test_stream_derivative_is_inexact_but_correct():
    x = w * nf_invert(1 - mono(-1))      # w + 1 + w^-1 + ...
    r = derive(x, 10)
    assert not r.exact
    want = Surreal.from_terms([(0, 1)] + [(-k, -(k - 1)) for k in range(2, 12)])
    assert agree(r.value, want, 10)


def test_exp_compatibility():
    s = FragmentSampler(SamplerConfig(seed=3, constant_free=True, exp_safe=True))
    for _ in range(20):
        x = s.sample()
        assert agree(d(exp_nf(x)), exp_nf(x) * d(x), 10)


def test_lhospital_pairs():
    s = FragmentSampler(SamplerConfig(seed=17))
    n = 0
    while n < 60:
        x, y = s.nonconstant(), s.nonconstant()
        if archimedean_relate(x, ONE) is Relation.ASYMP_EQ or \
                archimedean_relate(y, ONE) in (Relation.ASYMP_EQ, Relation.SIM):
            continue
        before = archimedean_relate(x, y) is Relation.PREC
        assert before == (archimedean_relate(d(x), d(y)) is Relation.PREC)
        n += 1


def test_integration_closed_forms():
    assert asymptotic_integrate(1) is w
    assert asymptotic_integrate(mono(-1)) is log_nf(w)
    assert asymptotic_integrate(w) is mono(2, F(1, 2))
    r = integrate(log_nf(w))
    assert r.exact and d(r.value) is log_nf(w)


def test_integration_on_samples():
    s = FragmentSampler(SamplerConfig(seed=13))
    for _ in range(30):
        a = s.nonconstant()
        b = asymptotic_integrate(a)
        assert archimedean_relate(d(b), a) is Relation.SIM


def test_axiom_report():
    rep = check_derivation_axioms(seed=1, count=25, budget=8)
    assert rep.ok, rep.to_text()
    data = json.loads(rep.to_json())
    assert {c["name"] for c in data["checks"]} >= {"leibniz", "h_positive", "lhospital"}
    assert "leibniz" in rep.to_text()
