from fractions import Fraction
from math import factorial

import pytest

from surcalc.errors import LevelOutOfBound, TranscendentalConstant, UnsupportedDomain
from surcalc.explog import (LogAtomic, exp_nf, g_genetic, g_map, h_map, is_log_atomic,
                            lambda_of_level, log_nf, same_explog_class, same_level,
                            taylor_exp_infinitesimal, taylor_log_unit)
from surcalc.oracles import FragmentSampler, SamplerConfig, enumerate_dyadics
from surcalc.series import EPS0, ONE, OMEGA, ZERO, Surreal, agree, omega_map

F = Fraction
w = OMEGA


def mono(e, c=1):
    return Surreal.monomial(e, c)


def test_worked_values():
    assert exp_nf(w) is omega_map(w)
    assert exp_nf(EPS0) is omega_map(omega_map(EPS0 + 1))
    assert log_nf(omega_map(w)) is w
    assert log_nf(w) is omega_map(mono(-1))
    assert log_nf(w ** 2) is omega_map(mono(-1)) * 2
    assert log_nf(ONE) is ZERO


def test_g_and_h_on_named_points():
    assert g_map(w) is w and g_map(1) is ONE
    assert g_map(EPS0) is EPS0 + 1
    assert h_map(EPS0 + 1) is EPS0
    assert g_map(mono(-1)) is ZERO
    assert g_map(mono(-2, F(1, 2))) is Surreal.constant(F(-3, 2))
    assert g_map(mono(-1, 3)) is mono(-1, 2)
    for b in [0, -1, F(-5, 2), mono(-1, F(1, 3)), -1 + mono(-1, 4), w, F(1, 2)]:
        b = Surreal.from_terms([(0, b)]) if not isinstance(b, Surreal) else b
        assert g_map(h_map(b)) is b
    with pytest.raises(UnsupportedDomain):
        g_map(mono(-2) + mono(-3))
    with pytest.raises(UnsupportedDomain):
        h_map(EPS0 - 1)


def test_g_from_cuts_matches_closed_form():
    for d in enumerate_dyadics(7):
        if d > 0:
            assert g_genetic(d) == d
            assert g_map(d.to_fraction()) is Surreal.constant(d.to_fraction())


def test_taylor_coefficients():
    t = taylor_exp_infinitesimal(mono(-1))
    assert [c for _, c in t.head(15)] == [F(1, factorial(k)) for k in range(15)]
    m = taylor_log_unit(1 + mono(-1))
    assert [c for _, c in m.head(15)] == [F((-1) ** (k + 1), k) for k in range(1, 16)]
    with pytest.raises(UnsupportedDomain):
        taylor_exp_infinitesimal(w)


def test_exact_mode_refuses_transcendentals():
    with pytest.raises(TranscendentalConstant):
        exp_nf(Surreal.constant(1))
    with pytest.raises(TranscendentalConstant):
        log_nf(w * 2)
    with pytest.raises(UnsupportedDomain):
        log_nf(-w)


def test_numeric_mode_is_display_only():
    v = exp_nf(w + 1, numeric=True)
    assert v.exact is exp_nf(w)
    from mpmath import iv
    iv.prec = 64
    assert v.factor.a <= iv.e.b and iv.e.a <= v.factor.b
    assert v.factor.delta < 1e-15
    assert "w^w" in str(v)


def test_exp_log_inverse_on_samples():
    s = FragmentSampler(SamplerConfig(seed=21, constant_free=True, exp_safe=True))
    for _ in range(25):
        x, y = s.sample(), s.sample()
        assert agree(log_nf(exp_nf(x)), x, 12)
        assert agree(exp_nf(x + y), exp_nf(x) * exp_nf(y), 12)


def test_exp_is_order_preserving():
    s = FragmentSampler(SamplerConfig(seed=8, constant_free=True, exp_safe=True))
    for _ in range(40):
        x, y = s.sample(), s.sample()
        if x is y:
            continue
        assert (x < y) == (exp_nf(x) < exp_nf(y))


def test_ladder():
    for n in range(-5, 6):
        assert exp_nf(lambda_of_level(n)) is lambda_of_level(n + 1)
        assert is_log_atomic(lambda_of_level(n))
    assert lambda_of_level(-1) is log_nf(w)
    assert str(LogAtomic(3)) == "exp_3(w)" and str(LogAtomic(-2)) == "log_2(w)"
    with pytest.raises(LevelOutOfBound):
        lambda_of_level(40)


def test_log_atomic_recognition():
    assert is_log_atomic(w) and is_log_atomic(EPS0)
    assert not is_log_atomic(w + 1)
    assert not is_log_atomic(w ** 2)
    assert not is_log_atomic(omega_map(mono(F(1, 2))))


def test_levels_and_classes():
    ew = exp_nf(w)
    assert same_level(w, w ** 2)
    assert not same_level(w, ew)
    assert same_level(ew, exp_nf(w * 2))
    assert same_explog_class(w, ew)
    assert same_explog_class(w, w ** 2)
