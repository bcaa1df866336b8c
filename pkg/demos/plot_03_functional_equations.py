"""
Functional equations in z and z^2
=================================

Check sum_k c_k(z) F(z^(2^k)) = b(z) to a given order.
"""
from dcgf import FamilySpec, build_series
from dcgf.mahler import (
    check_equation,
    equation_for_family,
    format_equation,
    ones_count_identity,
    thue_morse_equation,
    two_pow_e0_equation,
    two_pow_e0_series,
)
from dcgf.series import TruncatedSeries

###############################################################################
# The ones count with denominators cleared.

eq = ones_count_identity()
print(format_equation(eq))
F = build_series(FamilySpec.named("OnesCount"), 256)
print(check_equation(eq, F))

###############################################################################
# Thue-Morse satisfies a homogeneous equation.

T = build_series(FamilySpec.named("ThueMorse"), 256)
print(check_equation(thue_morse_equation(), T))

###############################################################################
# The series of 2^(number of zero bits) and its equation.

G = two_pow_e0_series(256)
print(G.tolist()[:16])
print(check_equation(two_pow_e0_equation(), G))

###############################################################################
# A single wrong coefficient is located exactly.

bad = G.tolist()
bad[100] += 1
print(check_equation(two_pow_e0_equation(), TruncatedSeries(bad)))

###############################################################################
# Every family comes with its own equation.

spec = FamilySpec.t4(3, 0, 1)
print(format_equation(equation_for_family(spec)))
print(check_equation(equation_for_family(spec), build_series(spec, 300)))
