"""
Classifying sequences
=====================

Search a box of family parameters for exact matches.
"""
from dcgf.fit import SearchBounds, SequenceSample, classify
from dcgf.io_oeis import load_fixture, load_manifest

###############################################################################
# Bundled b-file prefixes and what generates them.

for f in load_manifest()[:5]:
    print(f.anumber, f.spec, "shift", f.shift, "-", f.description)

###############################################################################
# The ruler sequence starts at n = 1, so it aligns at family index 1.

report = classify(load_fixture("A001511").head(64))
print(f"searched {report.searched} specs")
for m in report.matches:
    print(" ", m)

###############################################################################
# Sequences outside the families give nothing.

s = [0]
for n in range(1, 64):
    s.append(-s[n // 2] if n % 2 == 0 else s[n // 2] + 1)
print(classify(SequenceSample(0, tuple(s)), SearchBounds(alpha=3)).matches)
