"""
Dyadics, sign sequences and the simplest number in a gap
========================================================

Every dyadic rational sits at a node of the binary tree rooted at 0.  Its
sign sequence records the walk from the root, and a cut {L | R} names the
earliest-born node strictly between L and R.
"""

from fractions import Fraction

from surcalc.cuts import canonical_cut, genetic_add, genetic_mul, simplest_between
from surcalc.dyadic import Dyadic, encode_sign
from surcalc.oracles import dyadics_by_birthday

# The first four days of the tree, one line per day.
for day, nums in enumerate(dyadics_by_birthday(3)):
    print(day, "  ".join(f"{d}:{encode_sign(d) or '()'}" for d in nums))

# A cut resolves to the simplest number between its options, not the midpoint.
print(simplest_between([Fraction(1, 2)], [Fraction(7, 8)]))   # 3/4
print(simplest_between([-2], [Fraction(1, 2), 1, 2]))          # 0

# Each dyadic is the value of the cut formed by its tree ancestors, and the
# recursive sum and product over those cuts reproduce ordinary arithmetic.
x, y = Dyadic(Fraction(3, 4)), Dyadic(Fraction(-5, 2))
print(canonical_cut(x))
print(genetic_add(x, y), x + y)
print(genetic_mul(x, y), x * y)
