"""
Exponentials, logarithms and the log-atomic ladder
==================================================

exp sends a purely infinite sum of monomials to a single monomial, and log
goes back.  Iterating from w gives the ladder of log-atomic numbers
... < log log w < log w < w < exp w < exp exp w < ...
"""

from surcalc.explog import exp_nf, is_log_atomic, lambda_of_level, log_nf, same_level
from surcalc.render import to_text
from surcalc.series import EPS0, OMEGA, Surreal

w = OMEGA

print("exp(w)      =", to_text(exp_nf(w)))
print("exp(eps0)   =", to_text(exp_nf(EPS0)))
print("log(w^2)    =", to_text(log_nf(w ** 2)))

for n in range(-3, 4):
    lam = lambda_of_level(n)
    print(f"lambda_{n:<2} = {to_text(lam):<24} log-atomic: {is_log_atomic(lam)}")

# An infinitesimal exponent goes through the Taylor series; log undoes it.
x = w + Surreal.monomial(-1)
ex = exp_nf(x)
print("exp(w + 1/w) =", to_text(ex, 6))
# The tail cancels position by position, which no finite budget can certify,
# so the round trip shows the truncation marker after w + w^-1.
print("log of that  =", to_text(log_nf(ex), 4))

# w and w^2 live on the same level; w and exp(w) do not.
print(same_level(w, w ** 2), same_level(w, exp_nf(w)))
