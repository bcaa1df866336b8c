"""Fit integer sequences to the families T1 to T6 by exhaustive search.

Every family specification inside a small parameter box is evaluated with
its recurrence and compared with the sample at three alignments.  All exact
matches are reported, in a fixed order, and each one is re-checked against
the generating function before it is returned.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import SampleTooShortError
from .families import THEOREM_KINDS, T6_CONVENTION, FamilySpec, Kind, build_series
from .recurrence import eval_recurrence, family_recurrence

__all__ = ["SequenceSample", "SearchBounds", "Match", "FitReport", "classify", "candidates", "MIN_SAMPLE"]

MIN_SAMPLE = 8


@dataclass(frozen=True)
class SequenceSample:
    """Consecutive terms ``values[j] = s(offset + j)``."""

    offset: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not self.values:
            raise ValueError("a sample needs at least one value")

    def __len__(self):
        return len(self.values)

    @property
    def stop(self) -> int:
        return self.offset + len(self.values)

    def head(self, count: int) -> SequenceSample:
        return SequenceSample(self.offset, self.values[:count])

    def from_index(self, index: int) -> SequenceSample:
        """Drop the terms before ``index``."""
        if not self.offset <= index < self.stop:
            raise ValueError(f"index {index} outside sample range")
        return SequenceSample(index, self.values[index - self.offset:])


@dataclass(frozen=True)
class SearchBounds:
    """Parameter box: ``|c| <= c``, ``|alpha| <= alpha``, ``|d| <= d``, tails of
    length ``<= max_depth`` with entries ``|c_i| <= tail``.

    ``alpha`` defaults to 4 so the Moser-de Bruijn sequence is inside the box.
    """

    c: int = 3
    alpha: int = 4
    d: int = 3
    max_depth: int = 2
    tail: int = 2
    kinds: tuple = THEOREM_KINDS

    def __post_init__(self):
        object.__setattr__(self, "kinds", tuple(Kind(k) for k in self.kinds))
        if min(self.c, self.alpha, self.d, self.max_depth, self.tail) < 0:
            raise ValueError("search bounds must be nonnegative")


def _tails(depth_max, bound):
    rng = range(-bound, bound + 1)
    for D in range(1, depth_max + 1):
        for tail in itertools.product(rng, repeat=D):
            if tail[-1] != 0:
                yield tail


def candidates(bounds: SearchBounds) -> list:
    """All valid specifications in the box, in canonical order."""
    cs = [c for c in range(-bounds.c, bounds.c + 1)]
    nonzero_c = [c for c in cs if c]
    alphas = [a for a in range(-bounds.alpha, bounds.alpha + 1) if a]
    ds = range(-bounds.d, bounds.d + 1)
    out = []
    for kind in bounds.kinds:
        if kind in (Kind.T1, Kind.T2, Kind.T3):
            out += [FamilySpec(kind, c=c) for c in nonzero_c]
        elif kind is Kind.T4:
            out += [FamilySpec.t4(a, c, d) for a in alphas for c in cs for d in ds]
        elif kind is Kind.T5:
            out += [FamilySpec.t5(c, t) for c in cs for t in sorted(_tails(bounds.max_depth, bounds.tail))]
        elif kind is Kind.T6:
            out += [FamilySpec.t6(t) for t in sorted(_tails(bounds.max_depth, bounds.tail))]
    return out


@dataclass(frozen=True)
class Match:
    spec: FamilySpec
    alignment: int  # family index aligned with the first sample value
    length: int

    def __str__(self):
        return f"{self.spec} align={self.alignment} len={self.length}"


@dataclass(frozen=True)
class FitReport:
    matches: tuple
    bounds: SearchBounds
    searched: int = 0
    sample_offset: int = 0

    def __bool__(self):
        return bool(self.matches)

    def specs(self) -> list:
        return [m.spec for m in self.matches]


def _series_agrees(spec, sample, start) -> bool:
    """Independent check of a match through the generating function."""
    order = max(start + len(sample), 2)
    coeffs = build_series(spec, order, t6_convention=T6_CONVENTION)
    return tuple(coeffs[start:start + len(sample)]) == sample.values


def classify(sample: SequenceSample, bounds: SearchBounds | None = None) -> FitReport:
    """Every family in ``bounds`` that reproduces ``sample`` exactly.

    The first sample value may sit at family index ``offset - 1``,
    ``offset`` or ``offset + 1`` (never negative), which absorbs the usual
    0/1 offset conventions.
    """
    bounds = bounds or SearchBounds()
    if len(sample) < MIN_SAMPLE:
        raise SampleTooShortError(
            f"sample too short: {len(sample)} terms, need at least {MIN_SAMPLE}"
        )
    specs = candidates(bounds)
    if not specs:
        raise ValueError("empty search box: no valid family specification")
    starts = [s for s in (sample.offset - 1, sample.offset, sample.offset + 1) if s >= 0]
    n = len(sample)
    order = starts[-1] + n
    matches = []
    for spec in specs:
        a = eval_recurrence(family_recurrence(spec), order)
        for start in starts:
            if tuple(a[start:start + n]) == sample.values:
                if not _series_agrees(spec, sample, start):
                    raise RuntimeError(f"recurrence and generating function disagree for {spec} at start {start}")
                matches.append(Match(spec, start, n))
    matches.sort(key=lambda m: (m.spec.sort_key(), m.alignment))
    return FitReport(tuple(matches), bounds, len(specs), sample.offset)
