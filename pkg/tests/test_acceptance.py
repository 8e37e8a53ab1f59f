"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline;
they are also summarized at the end of the session.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from surcalc.cuts import genetic_add, genetic_mul, simplest_between
from surcalc.derivation import asymptotic_integrate, d
from surcalc.dyadic import decode_sign, encode_sign
from surcalc.explog import exp_nf, is_log_atomic, lambda_of_level, log_nf
from surcalc.oracles import (FragmentSampler, SamplerConfig, enumerate_dyadics,
                             tree_search_simplest)
from surcalc.series import (EPS0, ONE, OMEGA, ZERO, Relation, Surreal, _fadd, agree,
                            archimedean_relate, is_infinite, is_infinitesimal, nf_invert,
                            omega_map)

GOLDEN = Path(__file__).parent / "golden" / "paper_examples.tsv"
RESULTS = {}


@pytest.fixture
def verdict(request, capsys):
    def emit(n, ok, detail=""):
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        RESULTS[n] = line
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return emit


def mono(e, c=1):
    return Surreal.monomial(e, c)


def test_c01_genetic_arithmetic(verdict):
    t = time.perf_counter()
    six, five = enumerate_dyadics(6), enumerate_dyadics(5)
    bad = [(a, b) for a in six for b in six if genetic_add(a, b) != a + b]
    bad += [(a, b) for a in five for b in five if genetic_mul(a, b) != a * b]
    dt = time.perf_counter() - t
    verdict(1, not bad and dt < 60,
            f"{len(six)**2} sums, {len(five)**2} products, {len(bad)} mismatches, {dt:.1f}s")


def test_c02_simplest_between_oracle(verdict):
    t = time.perf_counter()
    rng = random.Random(2)
    pool = enumerate_dyadics(8)
    bad = 0
    for _ in range(1000):
        k = rng.randint(0, 4)
        opts = sorted(rng.sample(pool, k + 1))
        cut = rng.randint(0, len(opts))
        left, right = opts[:cut], opts[cut:]
        if left and right and left[-1] >= right[0]:
            right = right[1:]
        if simplest_between(left, right) != tree_search_simplest(left, right):
            bad += 1
    dt = time.perf_counter() - t
    verdict(2, bad == 0 and dt < 10, f"1000 cuts, {bad} mismatches, {dt:.1f}s")


def test_c03_omega_times_inverse(verdict):
    verdict(3, OMEGA * (1 / OMEGA) is ONE, "w * (1/w) = 1")


def test_c04_negative_powers(verdict):
    bad = [(n, m) for n in range(11) for m in range(11)
           if mono(-n) * mono(-m) is not mono(-(n + m))]
    verdict(4, not bad, f"121 products, {len(bad)} mismatches")


def test_c05_geometric_inverse(verdict):
    x = nf_invert(1 - mono(-1))
    head = x.head(25)
    ok = len(head) == 25 and all(e is Surreal.constant(-k) and c == 1
                                 for k, (e, c) in enumerate(head))
    verdict(5, ok, "first 25 terms are w^-n * 1")


def test_c06_exp_of_omega_and_eps0(verdict):
    ok = exp_nf(OMEGA) is omega_map(OMEGA) and exp_nf(EPS0) is omega_map(omega_map(EPS0 + 1))
    verdict(6, ok, "exp(w) = w^w, exp(eps0) = w^(w^(eps0 + 1))")


def test_c07_exp_log_laws(verdict):
    t = time.perf_counter()
    s = FragmentSampler(SamplerConfig(seed=7, constant_free=True, exp_safe=True))
    bad = 0
    for _ in range(100):
        x, y = s.sample(), s.sample()
        if not agree(log_nf(exp_nf(x)), x, 12):
            bad += 1
        if not agree(exp_nf(x + y), exp_nf(x) * exp_nf(y), 12):
            bad += 1
    dt = time.perf_counter() - t
    verdict(7, bad == 0 and dt < 120, f"100 samples, {bad} failures, {dt:.1f}s")


def test_c08_derivation_laws(verdict):
    problems = []
    if d(OMEGA) is not ONE:
        problems.append("d(w)")
    x, prod = OMEGA, ONE
    for n in range(1, 6):
        prod = prod * x
        x = log_nf(x)
        if d(x) != nf_invert(prod):
            problems.append(f"d(log_{n} w)")
    s = FragmentSampler(SamplerConfig(seed=8))
    for _ in range(200):
        a, b = s.sample(), s.sample()
        if not agree(d(a * b), a * d(b) + b * d(a), 10):
            problems.append("leibniz")
        parts = [s.sample() for _ in range(4)]
        total = ZERO
        dsum = ZERO
        for p in parts:
            total = _fadd(total, p)
            dsum = _fadd(dsum, d(p))
        if not agree(d(total), dsum, 10):
            problems.append("strong additivity")
    infinite = small = 0
    while infinite < 200 or small < 200:
        a = s.sample()
        if is_infinite(a) and a > 0 and infinite < 200:
            infinite += 1
            if not d(a) > 0:
                problems.append("H-positivity")
        elif not is_infinite(a) and small < 200:
            small += 1
            if not is_infinitesimal(d(a)):
                problems.append("small derivation")
    verdict(8, not problems, f"ladder n<=5, 200 pairs, 200+200 samples; {problems[:3]}")


def test_c09_lhospital(verdict):
    s = FragmentSampler(SamplerConfig(seed=9))
    pairs = bad = 0
    while pairs < 200:
        x, y = s.nonconstant(), s.nonconstant()
        if any(archimedean_relate(v, ONE) in (Relation.ASYMP_EQ, Relation.SIM) for v in (x, y)):
            continue
        pairs += 1
        if (archimedean_relate(x, y) is Relation.PREC) != \
                (archimedean_relate(d(x), d(y)) is Relation.PREC):
            bad += 1
    verdict(9, bad == 0, f"200 pairs, {bad} violations")


def test_c10_asymptotic_integration(verdict):
    s = FragmentSampler(SamplerConfig(seed=10))
    bad = 0
    for _ in range(50):
        a = s.nonconstant()
        if archimedean_relate(d(asymptotic_integrate(a)), a) is not Relation.SIM:
            bad += 1
    closed = (asymptotic_integrate(1) is OMEGA
              and asymptotic_integrate(mono(-1)) is log_nf(OMEGA)
              and asymptotic_integrate(OMEGA) is mono(2, Fraction(1, 2)))
    verdict(10, bad == 0 and closed, f"50 samples, {bad} failures; closed forms {closed}")


def test_c11_ladder(verdict):
    ok = all(exp_nf(lambda_of_level(n)) is lambda_of_level(n + 1) for n in range(-5, 6))
    atomic = all(is_log_atomic(lambda_of_level(n)) for n in range(-5, 7))
    verdict(11, ok and atomic and not is_log_atomic(OMEGA + 1),
            "lambda_{n+1} = exp(lambda_n) for -5..5; recognition")


def _batch(lines, *flags):
    proc = subprocess.run([sys.executable, "-m", "surcalc.cli", "eval", "-", *flags],
                          input="\n".join(lines) + "\n", capture_output=True, text=True)
    return proc.returncode, proc.stdout.splitlines()


def test_c12_cli_golden_corpus(verdict):
    rows = [line.split("\t") for line in GOLDEN.read_text().splitlines()
            if line and not line.startswith("#")]
    mismatches = []
    for depth in sorted({r[1] for r in rows}):
        batch = [r for r in rows if r[1] == depth]
        code, out = _batch([r[0] for r in batch], "--depth", depth)
        mismatches += [(r[0], got) for r, got in zip(batch, out) if got != r[2]]
        if code != 0 or len(out) != len(batch):
            mismatches.append(("exit", code))
    dyadics = enumerate_dyadics(8)
    code, signs = _batch([str(x) for x in dyadics], "--format", "sign")
    round_trip = code == 0 and len(signs) == len(dyadics) and all(
        s == encode_sign(x) and decode_sign(s) == x for s, x in zip(signs, dyadics))
    verdict(12, not mismatches and round_trip,
            f"{len(rows)} golden lines, {len(mismatches)} mismatches; "
            f"sign round trip over {len(dyadics)} dyadics {round_trip}")


def teardown_module(module):
    if RESULTS:
        print("\nacceptance summary")
        for n in sorted(RESULTS):
            print(RESULTS[n])
