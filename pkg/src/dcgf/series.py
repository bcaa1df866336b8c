"""Exact truncated power series, integer polynomials and rational functions.

Everything here works over Python integers, so no coefficient is ever
rounded.  A :class:`TruncatedSeries` of order ``N`` stands for a power series
modulo ``z**N``.  Binary operations on series of different orders return a
series of the smaller order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Sequence

from .errors import NonUnitDenominatorError

__all__ = [
    "Polynomial",
    "RationalFunction",
    "TruncatedSeries",
    "expand",
    "add",
    "sub",
    "mul",
    "substitute_power",
    "mul_rational",
]


def _nonzero(coeffs: Sequence[int]):
    return [(i, c) for i, c in enumerate(coeffs) if c]


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial, coefficient of ``z**i`` at position ``i``.

    Trailing zeros are trimmed on construction, so the zero polynomial has
    an empty coefficient tuple and equality is structural.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> Polynomial:
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls((0,) * exponent + (coeff,))

    @classmethod
    def constant(cls, value: int) -> Polynomial:
        return cls((value,))

    @classmethod
    def from_terms(cls, terms: dict) -> Polynomial:
        """Build from ``{exponent: coeff}``; repeated exponents are not possible."""
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for e, c in terms.items():
            out[e] += c
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def constant_term(self) -> int:
        return self[0]

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __add__(self, other: Polynomial) -> Polynomial:
        return Polynomial(tuple(map(sum, zip_longest(self.coeffs, other.coeffs, fillvalue=0))))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(tuple(other * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        rhs = _nonzero(other.coeffs)
        for i, a in _nonzero(self.coeffs):
            for j, b in rhs:
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Polynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift_down(self, v: int) -> Polynomial:
        """Divide by ``z**v``; the low ``v`` coefficients must be zero."""
        if any(self.coeffs[:v]):
            raise ValueError(f"polynomial is not divisible by z^{v}")
        return Polynomial(self.coeffs[v:])

    def compose_power(self, m: int) -> Polynomial:
        """Return ``p(z**m)``."""
        if m < 1:
            raise ValueError("m must be positive")
        out = [0] * (m * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return Polynomial(tuple(out))

    def to_series(self, order: int) -> TruncatedSeries:
        cs = list(self.coeffs[:order])
        return TruncatedSeries(cs + [0] * (order - len(cs)))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"


@dataclass(frozen=True)
class RationalFunction:
    """``num / den`` with integer polynomial numerator and denominator.

    Expansion into a power series needs ``den(0)`` to be +1 or -1; that is
    checked by :func:`expand`, not on construction, so intermediate results
    may be built freely.
    """

    num: Polynomial
    den: Polynomial = Polynomial((1,))

    def __post_init__(self):
        if not isinstance(self.num, Polynomial):
            object.__setattr__(self, "num", Polynomial(tuple(self.num)))
        if not isinstance(self.den, Polynomial):
            object.__setattr__(self, "den", Polynomial(tuple(self.den)))
        if self.den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    @classmethod
    def from_lists(cls, num: Iterable[int], den: Iterable[int] = (1,)) -> RationalFunction:
        return cls(Polynomial(tuple(num)), Polynomial(tuple(den)))

    def has_unit_denominator(self) -> bool:
        return self.den.constant_term in (1, -1)

    def reduced(self) -> RationalFunction:
        """Cancel the common power of ``z`` and make ``den(0)`` positive."""
        num, den = self.num, self.den
        vd = den.valuation()
        vn = num.valuation()
        if vd:
            v = vd if vn is None else min(vd, vn)
            num, den = num.shift_down(v) if not num.is_zero() else num, den.shift_down(v)
        if den.constant_term < 0:
            num, den = -num, -den
        return RationalFunction(num, den)

    def __add__(self, other: RationalFunction) -> RationalFunction:
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: RationalFunction) -> RationalFunction:
        return self + (-other)

    def __mul__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: RationalFunction) -> RationalFunction:
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, e: int) -> RationalFunction:
        return RationalFunction(self.num ** e, self.den ** e)

    def __repr__(self):
        return f"RationalFunction({list(self.num.coeffs)} / {list(self.den.coeffs)})"


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series modulo ``z**order`` with exact integer coefficients."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        if not cs:
            raise ValueError("a truncated series needs order >= 1")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls((0,) * order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls((1,) + (0,) * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} series to {order}")
        return TruncatedSeries(self.coeffs[:order])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all are zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def scale(self, k: int) -> TruncatedSeries:
        return TruncatedSeries(tuple(k * c for c in self.coeffs))

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__

    def tolist(self) -> list:
        return list(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)})"


def expand(rf: RationalFunction, order: int) -> TruncatedSeries:
    """Expand ``rf`` as an integer power series modulo ``z**order``.

    Solves ``num = den * s`` term by term; this stays in the integers because
    ``den(0)`` is a unit.

    >>> expand(RationalFunction.from_lists([0, 1], [1, 1]), 5).tolist()
    [0, 1, -1, 1, -1]
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    d0 = rf.den.constant_term
    if d0 not in (1, -1):
        raise NonUnitDenominatorError(
            f"denominator constant term is {d0}; expected +1 or -1"
        )
    tail = [(j, c) for j, c in _nonzero(rf.den.coeffs) if j > 0 and j < order]
    s = [0] * order
    for n in range(order):
        acc = rf.num[n]
        for j, c in tail:
            if j > n:
                break
            acc -= c * s[n - j]
        s[n] = acc * d0  # d0 is its own inverse
    return TruncatedSeries(s)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(a.coeffs[i] + b.coeffs[i] for i in range(n)))


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(a.coeffs[i] - b.coeffs[i] for i in range(n)))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Truncated Cauchy product.

    Loops over the nonzero terms of the sparser factor, which keeps products
    with tower factors like ``1 + c*z**(2**k)`` linear in the order.
    """
    n = min(a.order, b.order)
    xs, ys = a.coeffs[:n], b.coeffs[:n]
    nx, ny = _nonzero(xs), _nonzero(ys)
    if len(nx) > len(ny):
        nx, ny, xs, ys = ny, nx, ys, xs
    out = [0] * n
    for i, c in nx:
        out[i:] = [o + c * y for o, y in zip(out[i:], ys)]
    return TruncatedSeries(out)


def substitute_power(a: TruncatedSeries, m: int) -> TruncatedSeries:
    """Return ``a(z**m)`` at the same order."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    n = a.order
    out = [0] * n
    for i in range(0, (n - 1) // m + 1):
        out[i * m] = a.coeffs[i]
    return TruncatedSeries(out)


def mul_rational(a: TruncatedSeries, rf: RationalFunction) -> TruncatedSeries:
    """Multiply by a rational function without forming a dense product.

    Multiplies by the numerator, then divides by the denominator with the
    same recurrence :func:`expand` uses.
    """
    n = a.order
    d0 = rf.den.constant_term
    if d0 not in (1, -1):
        raise NonUnitDenominatorError(
            f"denominator constant term is {d0}; expected +1 or -1"
        )
    t = [0] * n
    for i, c in _nonzero(rf.num.coeffs):
        if i >= n:
            break
        t[i:] = [o + c * y for o, y in zip(t[i:], a.coeffs)]
    tail = [(j, c) for j, c in _nonzero(rf.den.coeffs) if 0 < j < n]
    s = [0] * n
    for k in range(n):
        acc = t[k]
        for j, c in tail:
            if j > k:
                break
            acc -= c * s[k - j]
        s[k] = acc * d0
    return TruncatedSeries(s)
