"""
Expression language
===================

Write generating functions as text and expand them.
"""
from dcgf import FamilySpec
from dcgf.dsl import evaluate, family_text, parse, to_text
from dcgf.errors import DSLSyntaxError

text = "prod(k){ 1 + 2*z^(2^k) }"
print(evaluate(text, 16).tolist())

###############################################################################
# Mix rational parts and loops.

text = "1/(1 - z) * sum(k){ z^(2^k) / (1 + z^(2^k)) }"
print(evaluate(text, 16).tolist())
print(to_text(parse(text)))

###############################################################################
# The text for a family.

spec = FamilySpec.t4(-1, 1, 1)
print(family_text(spec))
print(evaluate(family_text(spec), 16).tolist())

###############################################################################
# Errors point at the offending token.

try:
    parse("sum(k){ z^(2^j) }")
except DSLSyntaxError as err:
    print(err)
