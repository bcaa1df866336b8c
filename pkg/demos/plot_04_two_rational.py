"""
Linear representations
======================

u_n = lam . A[bit] ... A[bit] . gamma over the binary digits of n.
"""
from dcgf import FamilySpec
from dcgf.recurrence import eval_recurrence, family_recurrence
from dcgf.tworational import eval_linear_rep, rep_for_affine, rep_ones_count

rep = rep_ones_count()
print(rep)
print([eval_linear_rep(rep, n) for n in range(16)])

###############################################################################
# Affine digit recurrences a(2n+b) = alpha a(n) + (c or d).

rep = rep_for_affine(4, 0, 1)
values = [eval_linear_rep(rep, n) for n in range(16)]
print(values)
print(values == eval_recurrence(family_recurrence(FamilySpec.t4(4, 0, 1)), 16))
