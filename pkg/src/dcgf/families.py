"""The six elementary divide-and-conquer families and a few named series.

Each family is a sum or product over ``k >= 0`` of a rational function of
``z**(2**k)``.  Modulo ``z**N`` only the terms with ``k <= ceil(log2 N)``
can contribute, because every later term has valuation at least ``N``.

T6 needs a convention at ``z**0``: each summand ``1/(1 - sum c_i z**(2**k i))``
contributes 1 there, so the literal sum diverges.  We subtract 1 from every
summand (``a_0 = 0``) and callers must opt in with
``t6_convention="regularized"``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InvalidSpecError
from .series import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    add,
    expand,
    mul,
    mul_rational,
)

__all__ = ["Kind", "FamilySpec", "build_series", "tower_bound", "T6_CONVENTION"]

T6_CONVENTION = "regularized"


class Kind(str, enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    ONES_COUNT = "OnesCount"
    ZEROS_COUNT = "ZerosCount"
    THUE_MORSE = "ThueMorse"
    RULER_PLUS_ONE = "RulerPlusOne"

    def __str__(self):
        return self.value


THEOREM_KINDS = (Kind.T1, Kind.T2, Kind.T3, Kind.T4, Kind.T5, Kind.T6)


@dataclass(frozen=True)
class FamilySpec:
    """Parameters selecting one generating function.

    Only the fields a kind uses are meaningful: ``c`` for T1, T2, T3, T5;
    ``alpha``, ``c``, ``d`` for T4; ``tail`` (c_1..c_D) for T5 and T6.
    Constraints are checked on construction.
    """

    kind: Kind
    c: int = 0
    alpha: int = 0
    d: int = 0
    tail: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "tail", tuple(int(x) for x in self.tail))
        self.validate()

    def validate(self):
        k = self.kind
        if k in (Kind.T1, Kind.T2, Kind.T3) and self.c == 0:
            raise InvalidSpecError(f"{k} requires |c|>0, got c={self.c}")
        if k is Kind.T4 and self.alpha == 0:
            raise InvalidSpecError(f"T4 requires |alpha|>0, got alpha={self.alpha}")
        if k in (Kind.T5, Kind.T6):
            if not self.tail:
                raise InvalidSpecError(f"{k} requires a tail c_1..c_D with D >= 1")
            if self.tail[-1] == 0:
                raise InvalidSpecError(f"{k} requires c_D != 0, got tail={list(self.tail)}")
        elif self.tail:
            raise InvalidSpecError(f"{k} takes no tail coefficients")

    # convenience constructors
    @classmethod
    def t1(cls, c):
        return cls(Kind.T1, c=c)

    @classmethod
    def t2(cls, c):
        return cls(Kind.T2, c=c)

    @classmethod
    def t3(cls, c):
        return cls(Kind.T3, c=c)

    @classmethod
    def t4(cls, alpha, c, d):
        return cls(Kind.T4, alpha=alpha, c=c, d=d)

    @classmethod
    def t5(cls, c, tail):
        return cls(Kind.T5, c=c, tail=tuple(tail))

    @classmethod
    def t6(cls, tail):
        return cls(Kind.T6, tail=tuple(tail))

    @classmethod
    def named(cls, kind):
        return cls(Kind(kind))

    def theorem_equivalent(self) -> FamilySpec:
        """Map a named series to the family T1 to T6 that generates it."""
        k = self.kind
        if k is Kind.ONES_COUNT:
            return FamilySpec.t4(1, 0, 1)
        if k is Kind.ZEROS_COUNT:
            return FamilySpec.t4(1, 1, 0)
        if k is Kind.THUE_MORSE:
            return FamilySpec.t3(-1)
        if k is Kind.RULER_PLUS_ONE:
            return FamilySpec.t1(1)
        return self

    def params(self) -> tuple:
        """The parameters that matter for this kind, as (name, value) pairs."""
        k = self.kind
        if k in (Kind.T1, Kind.T2, Kind.T3):
            return (("c", self.c),)
        if k is Kind.T4:
            return (("alpha", self.alpha), ("c", self.c), ("d", self.d))
        if k is Kind.T5:
            return (("c", self.c), ("tail", self.tail))
        if k is Kind.T6:
            return (("tail", self.tail),)
        return ()

    def sort_key(self):
        """Kind first, then the parameters in the order :meth:`params` lists them."""
        return (list(Kind).index(self.kind), tuple(v for _, v in self.params()))

    def __str__(self):
        parts = [str(self.kind)]
        for name, value in self.params():
            if name == "tail":
                value = ",".join(str(v) for v in value)
            parts.append(f"{name}={value}")
        return " ".join(parts)


def tower_bound(order: int) -> int:
    """Largest ``k`` needed modulo ``z**order``: ``ceil(log2(order))``."""
    return max(order - 1, 0).bit_length()


def _z(e: int, coeff: int = 1) -> Polynomial:
    return Polynomial.monomial(e, coeff)


_ONE = Polynomial((1,))


def build_series(spec: FamilySpec, order: int, *, t6_convention: str | None = None) -> TruncatedSeries:
    """Truncation to ``order`` of the generating function selected by ``spec``.

    >>> build_series(FamilySpec.t1(1), 9).tolist()
    [0, 1, 2, 1, 3, 1, 2, 1, 4]
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    spec.validate()
    kind = spec.kind
    if kind is Kind.T6 and t6_convention != T6_CONVENTION:
        raise InvalidSpecError(
            "T6 diverges at z^0; pass t6_convention='regularized' to subtract 1 from each summand"
        )
    K = tower_bound(order)
    towers = [1 << k for k in range(K + 1)]
    c, alpha, d, tail = spec.c, spec.alpha, spec.d, spec.tail

    if kind is Kind.RULER_PLUS_ONE:
        kind, c = Kind.T1, 1

    if kind in (Kind.T1, Kind.T2):
        total = TruncatedSeries.zero(order)
        for k, m in enumerate(towers):
            den = _ONE - _z(m) if kind is Kind.T1 else _ONE - _z(2 * m)
            total = add(total, expand(RationalFunction(_z(m, c ** k), den), order))
        return total

    if kind in (Kind.T3, Kind.T5, Kind.THUE_MORSE):
        total = TruncatedSeries.one(order)
        for m in towers:
            if kind is Kind.THUE_MORSE:
                factor = Polynomial.from_terms({0: 1, m: -1})
            else:
                terms = {0: 1, m: c}
                terms.update((2 * m * i, ci) for i, ci in enumerate(tail, start=1))
                factor = Polynomial.from_terms(terms)
            total = mul(total, factor.to_series(order))
        return total

    if kind in (Kind.T4, Kind.ONES_COUNT, Kind.ZEROS_COUNT):
        if kind is Kind.ONES_COUNT:
            alpha, c, d = 1, 0, 1
        elif kind is Kind.ZEROS_COUNT:
            alpha, c, d = 1, 1, 0
        inner = TruncatedSeries.zero(order)
        for k, m in enumerate(towers):
            w = alpha ** k
            num = _z(m, w * d) + _z(2 * m, w * c)
            inner = add(inner, expand(RationalFunction(num, _ONE + _z(m)), order))
        return mul_rational(inner, RationalFunction(_ONE, _ONE - _z(1)))

    if kind is Kind.T6:
        total = TruncatedSeries.zero(order)
        for m in towers:
            terms = {0: 1}
            terms.update((m * i, -ci) for i, ci in enumerate(tail, start=1))
            den = Polynomial.from_terms(terms)
            term = expand(RationalFunction(_ONE, den), order)
            total = add(total, term - TruncatedSeries.one(order))
        return total

    raise InvalidSpecError(f"unknown family kind {kind!r}")
