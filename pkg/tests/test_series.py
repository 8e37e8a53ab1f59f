import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from surcalc.errors import IrrationalCoefficient, MalformedStream, UnsupportedDomain, ZeroDivisor
from surcalc.oracles import FragmentSampler, SamplerConfig
from surcalc.render import from_json, to_json, to_text
from surcalc.series import (EPS0, ONE, OMEGA, ZERO, Order, Relation, Surreal, additive_decompose,
                            agree, archimedean_relate, multiplicative_decompose, nf_compare,
                            nf_invert, nth_root, omega_map, sum_of_stream)

F = Fraction
w = OMEGA


def mono(e, c=1):
    return Surreal.monomial(e, c)


def test_omega_times_its_inverse():
    assert w * (1 / w) is ONE
    assert nf_invert(w) is mono(-1)


def test_negative_powers_multiply():
    for n in range(11):
        for m in range(11):
            assert mono(-n) * mono(-m) is mono(-(n + m))


def test_geometric_inverse():
    x = nf_invert(1 - mono(-1))
    assert x.head(25) == [(Surreal.constant(-k) if k else ZERO, F(1)) for k in range(25)]
    assert x.more_than(25) is True


def test_inverse_times_value_agrees():
    s = FragmentSampler(SamplerConfig(seed=4))
    for _ in range(20):
        x = s.nonconstant()
        assert agree(nf_invert(x) * x, ONE, 12)


def test_exact_division_detects_finite_quotient():
    q = (w * w - 1) / (w - 1)
    assert q.collapse() is w + 1
    with pytest.raises(ZeroDivisor):
        w / 0


def test_decompositions():
    x = w ** 2 * 3 + 5 + mono(-1, 7)
    p = additive_decompose(x)
    assert p.purely_infinite is w ** 2 * 3 and p.real == 5 and p.infinitesimal is mono(-1, 7)
    m = multiplicative_decompose(w ** 2 * 3 + 5)
    assert m.exponent is Surreal.constant(2) and m.coefficient == 3
    assert m.tail is mono(-2, F(5, 3))


def test_archimedean_classes():
    assert archimedean_relate(w + 3, w) is Relation.SIM
    assert archimedean_relate(w * 2, w) is Relation.ASYMP_EQ
    assert archimedean_relate(ONE, w) is Relation.PREC
    assert archimedean_relate(w, mono(-1)) is Relation.SUCC
    with pytest.raises(ZeroDivisor):
        archimedean_relate(ZERO, w)


def test_roots():
    assert nth_root(w * 4, 2) is mono(F(1, 2), 2)
    assert nth_root(-w * 8, 3) is -mono(F(1, 3), 2)
    with pytest.raises(IrrationalCoefficient):
        nth_root(w * 2, 2)
    with pytest.raises(UnsupportedDomain):
        nth_root(-w, 2)
    # binomial coefficients of sqrt(1 + t), checked against the closed form
    r = nth_root(1 + mono(-1), 2)
    for k, (e, c) in enumerate(r.head(12)):
        assert e is Surreal.constant(-k)
        assert c == F((-1) ** (k + 1) * comb(2 * k, k), 4 ** k * (2 * k - 1))
    assert agree(r * r, 1 + mono(-1), 15)


def test_stream_comparison_budget():
    geo = nf_invert(1 - mono(-1))
    partial = Surreal.from_terms((-k, 1) for k in range(21))
    assert nf_compare(geo, partial, 10) is Order.UNDECIDED
    assert nf_compare(geo, partial, 30) is Order.GT
    assert nf_compare(w, mono(-1)) is Order.GT
    assert nf_compare(EPS0, w ** 5) is Order.GT
    assert nf_compare(w, w) is Order.EQ


def test_sum_of_stream():
    s = sum_of_stream(((-k, F(1, 2 ** k)) for k in itertools.count()))
    assert [c for _, c in s.head(5)] == [1, F(1, 2), F(1, 4), F(1, 8), F(1, 16)]
    assert sum_of_stream([]).lead() is None
    bad = sum_of_stream([(1, 1), (2, 1)])
    with pytest.raises(MalformedStream):
        bad.head(2)


def test_text_and_json_round_trip():
    s = FragmentSampler(SamplerConfig(seed=11, max_terms=4, max_exponent_depth=3))
    from surcalc.expr import evaluate, parse
    for _ in range(100):
        x = s.sample()
        assert from_json(to_json(x)) is x
        assert evaluate(parse(to_text(x))) == x
    assert from_json(to_json(EPS0 + 1)) is EPS0 + 1


samples = st.integers(0, 10 ** 6).map(lambda seed: FragmentSampler(SamplerConfig(seed=seed)).sample())


@given(samples, samples, samples)
def test_ring_laws(x, y, z):
    assert x + y is y + x
    assert x * y is y * x
    assert (x + y) + z is x + (y + z)
    assert (x * y) * z is x * (y * z)
    assert x * (y + z) is x * y + x * z
    assert x - x is ZERO
    assert x * 1 is x and x + 0 is x


@given(samples, samples)
def test_order_compatible_with_sum_and_product(x, y):
    if x < y:
        assert x + w < y + w
        assert x * mono(-1) < y * mono(-1)
    assert (x < y) == (y - x > 0)


def test_omega_map_is_a_morphism():
    s = FragmentSampler(SamplerConfig(seed=2))
    for _ in range(50):
        a, b = s.sample(), s.sample()
        assert omega_map(a + b) is omega_map(a) * omega_map(b)
        assert (a < b) == (omega_map(a) < omega_map(b))


def test_agree_detects_deliberate_errors():
    s = FragmentSampler(SamplerConfig(seed=30, constant_free=True, exp_safe=True))
    from surcalc.explog import exp_nf
    for _ in range(10):
        x, y = s.sample(), s.sample()
        good = exp_nf(x) * exp_nf(y)
        assert agree(exp_nf(x + y), good, 12)
        k = min(2, len(good.head(3)) - 1)
        e, c = good.term(k)
        assert not agree(exp_nf(x + y), good + mono(e, c), 12)
        assert not agree(exp_nf(x + y), good * 2, 12)


def test_stream_shared_between_threads():
    from concurrent.futures import ThreadPoolExecutor
    geo = nf_invert(1 - mono(-1)) * nf_invert(1 - mono(-2))
    with ThreadPoolExecutor(8) as pool:
        heads = list(pool.map(lambda n: geo.head(n), [30] * 16))
    assert all(h == heads[0] for h in heads)
    # coefficient of w^-k counts the ways to write k as a sum of 1s and 2s
    assert [c for _, c in heads[0][:8]] == [1, 1, 2, 2, 3, 3, 4, 4]
