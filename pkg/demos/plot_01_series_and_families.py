"""
Truncated series and the six families
=====================================

Exact integer power series modulo z^N, and the built-in families.
"""
from dcgf import FamilySpec, build_series
from dcgf.series import RationalFunction, expand, mul, substitute_power

###############################################################################
# A rational function with denominator constant term 1 expands exactly.

r = RationalFunction.from_lists([1], [1, -1, -1])
fib = expand(r, 12)
print("1/(1-z-z^2):", fib.tolist())

###############################################################################
# Substituting z -> z^2 spreads coefficients out.

print("F(z^2):", substitute_power(fib, 2).tolist())
print("F(z)^2:", mul(fib, fib).tolist())

###############################################################################
# The families. T3 with c=2 counts odd entries in rows of Pascal's triangle.

for spec in [
    FamilySpec.t1(1),
    FamilySpec.t2(2),
    FamilySpec.t3(2),
    FamilySpec.t4(2, 0, 1),
    FamilySpec.t5(1, [1]),
    FamilySpec.t6([1, 1]),
]:
    coeffs = build_series(spec, 16, t6_convention="regularized").tolist()
    print(f"{str(spec):24s}", coeffs)

###############################################################################
# Named sequences map onto the numbered families.

ones = FamilySpec.named("OnesCount")
print(ones, "->", ones.theorem_equivalent())
print(build_series(ones, 16).tolist())
