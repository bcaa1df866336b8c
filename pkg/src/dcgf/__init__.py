"""Exact tools for elementary divide-and-conquer generating functions.

Build the six families T1 to T6 as truncated power series, evaluate their
parity-split recurrences, check functional equations in F(z), F(z^2), ...,
evaluate 2-rational representations, and fit integer sequences to the
families.
"""
from .families import FamilySpec, Kind, build_series
from .fit import SearchBounds, SequenceSample, classify
from .mahler import MahlerEquation, check_equation, equation_for_family
from .recurrence import (
    AffineRule,
    DCRecurrence,
    LinearRecurrence,
    eval_linear,
    eval_recurrence,
    family_recurrence,
    oracle_bit_stats,
)
from .series import Polynomial, RationalFunction, TruncatedSeries, expand
from .tworational import LinearRepresentation, eval_linear_rep, rep_for_affine

__version__ = "0.1.0"
