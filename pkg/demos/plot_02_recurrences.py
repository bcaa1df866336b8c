"""
Divide-and-conquer recurrences
==============================

Every family also satisfies a recurrence that splits on the parity of n.
"""
from dcgf import FamilySpec, build_series
from dcgf.recurrence import AffineRule, DCRecurrence, eval_recurrence, family_recurrence, oracle_bit_stats

###############################################################################
# The recurrence attached to a family reproduces its series.

spec = FamilySpec.t5(1, [1])
rec = family_recurrence(spec)
print(rec)
a = eval_recurrence(rec, 32)
print(a)
print("same as series:", a == build_series(spec, 32).tolist())

###############################################################################
# Custom recurrences: a(2n) = -a(n), a(2n+1) = a(n) + 1.

norgard = DCRecurrence({0: 0}, AffineRule(coeff=-1, min_n=1), AffineRule(coeff=1, const=1))
print(eval_recurrence(norgard, 16))
print(eval_recurrence(norgard, 16, method="memo"))

###############################################################################
# Digit statistics of n.

for n in (6, 12, 37):
    print(n, bin(n), oracle_bit_stats(n))
