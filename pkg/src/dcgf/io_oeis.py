"""OEIS b-files: reading, writing, comparison, and the bundled fixtures."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .errors import BFileError
from .families import FamilySpec
from .fit import SequenceSample

__all__ = [
    "parse_bfile",
    "format_bfile",
    "read_bfile",
    "Comparison",
    "compare",
    "Fixture",
    "load_manifest",
    "load_fixture",
]


def parse_bfile(text: str) -> SequenceSample:
    """Parse ``index value`` lines; blank lines and ``#`` comments are skipped.

    >>> parse_bfile("1 1\\n2 2\\n3 1\\n")
    SequenceSample(offset=1, values=(1, 2, 1))
    """
    offset = None
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"expected 'index value', got {line!r}", lineno)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"not an integer pair: {line!r}", lineno) from None
        if offset is None:
            offset = index
        expected = offset + len(values)
        if index != expected:
            raise BFileError(f"gap at index {expected} (next index is {index})", lineno)
        values.append(value)
    if offset is None:
        raise BFileError("no data lines")
    return SequenceSample(offset, tuple(values))


def format_bfile(sample: SequenceSample) -> str:
    return "".join(f"{sample.offset + j} {v}\n" for j, v in enumerate(sample.values))


def read_bfile(path) -> SequenceSample:
    with open(path, encoding="utf-8") as fh:
        return parse_bfile(fh.read())


@dataclass(frozen=True)
class Comparison:
    passed: bool
    overlap: int
    start: int  # first index of the overlap
    index: int | None = None
    expected: int | None = None  # value in the sample
    actual: int | None = None  # value in the generated sequence

    def __bool__(self):
        return self.passed

    def __str__(self):
        if self.passed:
            return f"PASS ({self.overlap} terms from index {self.start})"
        return f"FAIL at index {self.index}: expected {self.expected}, got {self.actual}"


def compare(sample: SequenceSample, generated, generated_offset: int = 0) -> Comparison:
    """Compare ``sample`` with ``generated[j] = g(generated_offset + j)`` where they overlap."""
    generated = list(generated)
    lo = max(sample.offset, generated_offset)
    hi = min(sample.stop, generated_offset + len(generated))
    if hi <= lo:
        raise ValueError("sample and generated sequence do not overlap")
    for n in range(lo, hi):
        s = sample.values[n - sample.offset]
        g = generated[n - generated_offset]
        if s != g:
            return Comparison(False, hi - lo, lo, n, s, g)
    return Comparison(True, hi - lo, lo)


# bundled fixtures


@dataclass(frozen=True)
class Fixture:
    """A vendored b-file prefix and how it relates to a family.

    ``family[n + shift]`` should equal the sequence at ``n`` for every
    ``n >= compare_from``.
    """

    anumber: str
    spec: FamilySpec
    shift: int
    compare_from: int
    description: str
    note: str = ""

    @property
    def filename(self) -> str:
        return f"b{self.anumber[1:]}.txt"


def _spec_from_json(d) -> FamilySpec:
    return FamilySpec(d["kind"], c=d.get("c", 0), alpha=d.get("alpha", 0), d=d.get("d", 0), tail=tuple(d.get("tail", ())))


def _data():
    return resources.files("dcgf") / "data"


def load_manifest() -> list:
    raw = json.loads((_data() / "bfiles" / "manifest.json").read_text(encoding="utf-8"))
    return [
        Fixture(
            anumber=e["anumber"],
            spec=_spec_from_json(e["family"]),
            shift=e["shift"],
            compare_from=e["compare_from"],
            description=e["description"],
            note=e.get("note", ""),
        )
        for e in raw["fixtures"]
    ]


def load_fixture(anumber: str) -> SequenceSample:
    name = f"b{anumber.upper().lstrip('A')}.txt"
    path = _data() / "bfiles" / name
    if not path.is_file():
        raise FileNotFoundError(f"no bundled b-file for {anumber}")
    return parse_bfile(path.read_text(encoding="utf-8"))


def fixture_path(name: str):
    """Filesystem path of a bundled data file, e.g. ``"bfiles/b001511.txt"``."""
    return _data() / name
