"""
The derivation and asymptotic integration
=========================================

d(w) = 1, and on the ladder d(log_n w) = 1 / (w log w ... log_{n-1} w).
Every other monomial is differentiated through its logarithm.  The laws of
a derivation are then checked on random samples.
"""

from surcalc.derivation import asymptotic_integrate, check_derivation_axioms, d
from surcalc.explog import exp_nf, log_nf
from surcalc.render import to_text
from surcalc.series import OMEGA, Surreal

w = OMEGA

x = w
for n in range(4):
    print(f"d({to_text(x)}) = {to_text(d(x))}")
    x = log_nf(x)

print("d(exp(exp(w))) =", to_text(d(exp_nf(exp_nf(w)))))
print("d(w^3 + 1/w)   =", to_text(d(w ** 3 + Surreal.monomial(-1))))

# An asymptotic integral b has d(b) ~ a; for these inputs it is exact.
for a in [Surreal.constant(1), Surreal.monomial(-1), w, log_nf(w)]:
    b = asymptotic_integrate(a)
    print(f"integral of {to_text(a)} = {to_text(b)}")

print(check_derivation_axioms(seed=0, count=30, budget=8).to_text())
