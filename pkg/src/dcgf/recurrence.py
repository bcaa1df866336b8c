"""Parity-split recurrences and binary digit statistics.

A :class:`DCRecurrence` computes ``a_{2n}`` and ``a_{2n+1}`` from ``a_n``, a
few earlier values ``a_{n-i}`` (zero for negative indices), a constant and
optionally a term of an auxiliary linear recurrence ``b``.  That is the
affine shape every family T1 to T6 uses.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import UncoveredIndexError
from .families import FamilySpec, Kind
from .series import Polynomial, RationalFunction, expand

__all__ = [
    "AffineRule",
    "LinearRecurrence",
    "DCRecurrence",
    "eval_recurrence",
    "eval_linear",
    "family_recurrence",
    "BitStats",
    "oracle_bit_stats",
    "e0",
    "e1",
    "v2",
    "bit_length",
]


@dataclass(frozen=True)
class AffineRule:
    """``a_{2n+parity} = coeff*a_n + sum(lags[i-1]*a_{n-i}) + const + aux_weight*b_{2n+parity}``.

    The rule is applied for ``n >= min_n``.
    """

    coeff: int = 0
    lags: tuple = ()
    const: int = 0
    aux_weight: int = 0
    min_n: int = 0

    def __post_init__(self):
        object.__setattr__(self, "lags", tuple(int(x) for x in self.lags))


@dataclass(frozen=True)
class LinearRecurrence:
    """``b_n = sum(coeffs[i-1] * b_{n-i})`` with ``b_0..b_{D-1}`` given by ``init``."""

    coeffs: tuple
    init: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(x) for x in self.coeffs))
        object.__setattr__(self, "init", tuple(int(x) for x in self.init))
        if not self.coeffs:
            raise ValueError("a linear recurrence needs at least one coefficient")
        if len(self.init) != len(self.coeffs):
            raise ValueError(
                f"need {len(self.coeffs)} initial values, got {len(self.init)}"
            )


@dataclass(frozen=True)
class DCRecurrence:
    base: dict = field(default_factory=dict)
    even: AffineRule = AffineRule(min_n=1)
    odd: AffineRule = AffineRule()
    aux: LinearRecurrence | None = None

    def __post_init__(self):
        if self.even.min_n < 1:
            # at n = 0 the even rule would define a_0 in terms of itself
            raise ValueError("the even rule must start at n >= 1")
        if (self.even.aux_weight or self.odd.aux_weight) and self.aux is None:
            raise ValueError("rules reference b but no auxiliary recurrence is given")

    def rule_for(self, index: int):
        """The rule defining ``a_index``, or None if it comes from ``base``."""
        n, parity = divmod(index, 2)
        rule = self.odd if parity else self.even
        by_rule = n >= rule.min_n
        in_base = index in self.base
        if by_rule and in_base:
            raise ValueError(f"index {index} is covered by both a base value and a rule")
        if not (by_rule or in_base):
            raise UncoveredIndexError(index)
        return rule if by_rule else None


def eval_linear(lr: LinearRecurrence, order: int) -> list:
    if order < 1:
        raise ValueError("order must be at least 1")
    b = list(lr.init[:order])
    D = len(lr.coeffs)
    for n in range(len(b), order):
        b.append(sum(lr.coeffs[i - 1] * b[n - i] for i in range(1, D + 1)))
    return b


def _apply(rule: AffineRule, index: int, get, b) -> int:
    n = index >> 1
    value = rule.coeff * get(n) if rule.coeff else 0
    for i, q in enumerate(rule.lags, start=1):
        if q and n - i >= 0:
            value += q * get(n - i)
    value += rule.const
    if rule.aux_weight:
        value += rule.aux_weight * b[index]
    return value


def eval_recurrence(rec: DCRecurrence, order: int, method: str = "bottom_up") -> list:
    """First ``order`` terms of ``rec``.

    ``method`` is ``"bottom_up"`` (fill a table in index order) or ``"memo"``
    (top-down with a memo table); both give identical results.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    b = eval_linear(rec.aux, order) if rec.aux is not None else None

    if method == "bottom_up":
        a = [0] * order
        for index in range(order):
            rule = rec.rule_for(index)
            a[index] = rec.base[index] if rule is None else _apply(rule, index, a.__getitem__, b)
        return a

    if method == "memo":
        memo = {}

        def get(index):
            if index not in memo:
                rule = rec.rule_for(index)
                memo[index] = rec.base[index] if rule is None else _apply(rule, index, get, b)
            return memo[index]

        # walk downwards so recursion depth stays logarithmic
        return [get(index) for index in reversed(range(order))][::-1]

    raise ValueError(f"unknown evaluation method {method!r}")


def family_recurrence(spec: FamilySpec) -> DCRecurrence:
    """The recurrence whose solution is the coefficient sequence of ``spec``.

    Index conventions: T3 and T5 start from ``a_0 = 1`` (the constant term of
    the product); every other family from ``a_0 = 0``.  The even rule is used
    for ``n >= 1``.  For T6, ``b`` is the expansion of ``1/(1 - sum c_i z^i)``.
    """
    spec.validate()
    s = spec.theorem_equivalent()
    kind, c = s.kind, s.c
    if kind is Kind.T1:
        return DCRecurrence({0: 0}, AffineRule(coeff=c, const=1, min_n=1), AffineRule(const=1))
    if kind is Kind.T2:
        return DCRecurrence({0: 0}, AffineRule(coeff=c, min_n=1), AffineRule(const=1))
    if kind is Kind.T3:
        return DCRecurrence({0: 1}, AffineRule(coeff=1, min_n=1), AffineRule(coeff=c))
    if kind is Kind.T4:
        return DCRecurrence(
            {0: 0},
            AffineRule(coeff=s.alpha, const=c, min_n=1),
            AffineRule(coeff=s.alpha, const=s.d),
        )
    if kind is Kind.T5:
        return DCRecurrence({0: 1}, AffineRule(coeff=1, lags=s.tail, min_n=1), AffineRule(coeff=c))
    if kind is Kind.T6:
        D = len(s.tail)
        den = Polynomial((1,) + tuple(-ci for ci in s.tail))
        init = expand(RationalFunction(Polynomial((1,)), den), D).tolist()
        return DCRecurrence(
            {0: 0},
            AffineRule(coeff=1, aux_weight=1, min_n=1),
            AffineRule(aux_weight=1),
            LinearRecurrence(s.tail, init),
        )
    raise ValueError(f"no recurrence for kind {kind}")


# binary digit statistics, computed straight from the definitions


def bit_length(n: int) -> int:
    """Length of the binary expansion; 0 has the empty expansion."""
    return n.bit_length()


def e1(n: int) -> int:
    return bin(n).count("1")


def e0(n: int) -> int:
    return n.bit_length() - e1(n)


def v2(n: int) -> int:
    if n <= 0:
        raise ValueError("v2 is defined only for n >= 1")
    return (n & -n).bit_length() - 1


class BitStats(NamedTuple):
    e0: int
    e1: int
    v2: int | None
    len: int


def oracle_bit_stats(n: int, *, need_v2: bool = True) -> BitStats:
    """Zeros, ones, 2-adic valuation and length of ``n`` in binary.

    ``v2(0)`` is undefined, so ``n = 0`` raises unless ``need_v2=False``,
    in which case the v2 field is None.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0 and need_v2:
        raise ValueError("v2(0) is undefined; pass need_v2=False")
    return BitStats(e0(n), e1(n), v2(n) if n else None, bit_length(n))
