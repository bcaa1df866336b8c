"""Regenerate the vendored b-file prefixes from first-principles oracles.

None of these oracles touch the dcgf package: each one computes its sequence
from digits, a search, or the OEIS-style definition.  Run from the
repository root:

    python tools/make_fixtures.py            # rewrite src/dcgf/data/bfiles
    python tools/make_fixtures.py --check    # exit 1 if anything differs
"""
import argparse
import json
import sys
from collections import deque
from pathlib import Path

TERMS = 200
OUT = Path(__file__).resolve().parent.parent / "src" / "dcgf" / "data" / "bfiles"


def bits(n):
    # OEIS writes 0 as "0"
    return bin(n)[2:]


def v2(n):
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k


def a001511(n):
    return v2(n) + 1


def a038712(n):
    return n ^ (n - 1)


def a035263(n):
    return (v2(n) + 1) % 2


def a006519(n):
    return 2 ** v2(n)


def a001316(n):
    return 2 ** bits(n).count("1")


def a048883(n):
    return 3 ** bits(n).count("1")


def a000120(n):
    return bits(n).count("1")


def a023416(n):
    return bits(n).count("0")


def a070939(n):
    return len(bits(n))


def a037861(n):
    return bits(n).count("0") - bits(n).count("1")


def _min_steps_from_one(limit):
    """BFS from 1 with moves x -> 2x and x -> x - 1."""
    cap = 4 * limit + 4
    dist = {1: 0}
    queue = deque([1])
    while queue:
        x = queue.popleft()
        for y in (2 * x, x - 1):
            if 1 <= y <= cap and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


_STEPS = _min_steps_from_one(TERMS + 2)


def a061313(n):
    return _STEPS[n]


def a000027(n):
    return n


def a035327(n):
    return int("".join("1" if b == "0" else "0" for b in bits(n)), 2)


def a003817(n):
    acc = 0
    for i in range(n + 1):
        acc |= i
    return acc


def a065359(n):
    return sum((-1) ** j * int(b) for j, b in enumerate(reversed(bits(n))))


def a083905(n):
    # alternating count of zero digits, weight (-1)^position from the right
    if n == 0:
        return 0
    return sum((-1) ** j for j, b in enumerate(reversed(bits(n))) if b == "0")


def a030300(n):
    # runs of 1s and 0s with lengths 1, 2, 4, 8, ...
    out, value, run = [], 1, 1
    while len(out) <= n:
        out += [value] * run
        value, run = 1 - value, 2 * run
    return out[n]


def _ternary_no_two(count):
    out, m = [], 0
    while len(out) < count:
        x, ok = m, True
        while x:
            if x % 3 == 2:
                ok = False
                break
            x //= 3
        if ok:
            out.append(m)
        m += 1
    return out


_NO_TWO = _ternary_no_two(TERMS + 2)


def a005836(n):
    return _NO_TWO[n - 1]


def _moser(count):
    vals = set()
    for mask in range(1 << 12):
        vals.add(sum(4 ** j for j in range(12) if mask >> j & 1))
    return sorted(vals)[:count]


_MOSER = _moser(TERMS + 2)


def a000695(n):
    return _MOSER[n]


def _stern(count):
    s = [0, 1]
    for n in range(2, count):
        s.append(s[n // 2] if n % 2 == 0 else s[n // 2] + s[n // 2 + 1])
    return s


_STERN = _stern(TERMS + 2)


def a002487(n):
    return _STERN[n]


def _a005590(count):
    a = [0, 1]
    for n in range(2, count):
        a.append(a[n // 2] if n % 2 == 0 else a[n // 2 + 1] - a[n // 2])
    return a


_A005590 = _a005590(TERMS + 2)


def a005590(n):
    return _A005590[n]


def _odd_pascal_cumulative(count):
    row, out, total = [1], [0], 0
    for _ in range(count):
        total += sum(row)
        out.append(total)
        row = [1] + [(row[i] + row[i + 1]) % 2 for i in range(len(row) - 1)] + [1]
    return out


_A006046 = _odd_pascal_cumulative(TERMS + 2)


def a006046(n):
    return _A006046[n]


def norgard(n):
    """Per Norgard's infinity sequence from its defining recurrence."""
    if n == 0:
        return 0
    return -norgard(n // 2) if n % 2 == 0 else norgard(n // 2) + 1


# anumber, oracle, OEIS offset, family, shift, compare_from, description, note
TABLE = [
    ("A001511", a001511, 1, {"kind": "T1", "c": 1}, 0, 1, "v2(n)+1, ruler sequence", ""),
    ("A038712", a038712, 1, {"kind": "T1", "c": 2}, 0, 1, "n XOR (n-1)", ""),
    ("A035263", a035263, 1, {"kind": "T1", "c": -1}, 0, 1, "first Feigenbaum symbolic sequence", ""),
    ("A006519", a006519, 1, {"kind": "T2", "c": 2}, 0, 1, "highest power of 2 dividing n", ""),
    ("A001316", a001316, 0, {"kind": "T3", "c": 2}, 0, 0, "Gould's sequence 2^e1(n)", ""),
    ("A048883", a048883, 0, {"kind": "T3", "c": 3}, 0, 0, "3^e1(n)", ""),
    ("A000120", a000120, 0, {"kind": "T4", "alpha": 1, "c": 0, "d": 1}, 0, 0, "ones count e1(n)", ""),
    ("A023416", a023416, 0, {"kind": "T4", "alpha": 1, "c": 1, "d": 0}, 0, 1, "zeros count e0(n)",
     "OEIS counts the digit of '0', a(0)=1; the family has a_0=0"),
    ("A070939", a070939, 0, {"kind": "T4", "alpha": 1, "c": 1, "d": 1}, 0, 1, "binary length",
     "OEIS length(0)=1; the family has a_0=0"),
    ("A037861", a037861, 0, {"kind": "T4", "alpha": 1, "c": 1, "d": -1}, 0, 1, "e0(n)-e1(n)",
     "OEIS a(0)=1 from the digit '0'; the family has a_0=0"),
    ("A061313", a061313, 1, {"kind": "T4", "alpha": 1, "c": 2, "d": 1}, -1, 1,
     "fewest x->2x, x->x-1 steps from 1 to n", "family index is n-1"),
    ("A000027", a000027, 1, {"kind": "T4", "alpha": 2, "c": 0, "d": 1}, 0, 1, "natural numbers", ""),
    ("A035327", a035327, 0, {"kind": "T4", "alpha": 2, "c": 1, "d": 0}, 0, 1, "interchange 0s and 1s",
     "OEIS complements the digit '0', a(0)=1; the family has a_0=0"),
    ("A003817", a003817, 0, {"kind": "T4", "alpha": 2, "c": 1, "d": 1}, 0, 0, "a(n-1) OR n", ""),
    ("A065359", a065359, 0, {"kind": "T4", "alpha": -1, "c": 0, "d": 1}, 0, 0, "alternating bit sum", ""),
    ("A083905", a083905, 0, {"kind": "T4", "alpha": -1, "c": 1, "d": 0}, 0, 0,
     "alternating count of zero digits", "not cross-checked against OEIS (built offline)"),
    ("A030300", a030300, 0, {"kind": "T4", "alpha": -1, "c": 1, "d": 1}, 1, 0,
     "runs of lengths 1,2,4,8,...", "family index is n+1"),
    ("A005836", a005836, 1, {"kind": "T4", "alpha": 3, "c": 0, "d": 1}, -1, 1, "ternary has no digit 2",
     "family index is n-1"),
    ("A000695", a000695, 0, {"kind": "T4", "alpha": 4, "c": 0, "d": 1}, 0, 0, "Moser-de Bruijn sequence", ""),
    ("A002487", a002487, 0, {"kind": "T5", "c": 1, "tail": [1]}, -1, 1, "Stern's diatomic sequence",
     "the product starts at s(1); family index is n-1"),
    ("A005590", a005590, 0, {"kind": "T5", "c": 1, "tail": [-1]}, -1, 1, "a fractal sequence",
     "family index is n-1"),
    ("A006046", a006046, 0, {"kind": "T5", "c": 3, "tail": [2]}, -1, 1, "odd entries in Pascal rows 0..n-1",
     "family index is n-1"),
]

NEGATIVE = [("A004718", norgard, 0, "Per Norgard's infinity sequence")]


def render(oracle, offset):
    return "".join(f"{n} {oracle(n)}\n" for n in range(offset, offset + TERMS))


def build():
    files = {}
    manifest = {"terms": TERMS, "fixtures": [], "negative": []}
    for anum, oracle, offset, family, shift, start, desc, note in TABLE:
        files[f"b{anum[1:]}.txt"] = render(oracle, offset)
        manifest["fixtures"].append({
            "anumber": anum,
            "description": desc,
            "oeis_offset": offset,
            "family": family,
            "shift": shift,
            "compare_from": start,
            "note": note,
        })
    for anum, oracle, offset, desc in NEGATIVE:
        files[f"b{anum[1:]}.txt"] = render(oracle, offset)
        manifest["negative"].append({"anumber": anum, "description": desc, "oeis_offset": offset})
    files["manifest.json"] = json.dumps(manifest, indent=2) + "\n"
    return files


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args(argv)
    files = build()
    if args.check:
        stale = [n for n, t in files.items() if not (OUT / n).is_file() or (OUT / n).read_text() != t]
        for n in stale:
            print(f"stale: {n}")
        return 1 if stale else 0
    OUT.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (OUT / name).write_text(text)
    print(f"wrote {len(files)} files to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
