"""Functional equations in F(z), F(z^2), F(z^4), ... and their verification.

An equation ``c_0(z)F(z) + c_1(z)F(z^2) + ... + c_D(z)F(z^(2^D)) = b(z)`` is
stored with polynomial ``c_k`` and a rational right-hand side whose
denominator has a unit constant term, so checking it against a truncated
series never needs series division.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DCGFError, NonUnitDenominatorError
from .families import FamilySpec, Kind
from .recurrence import e0
from .series import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    expand,
    mul_rational,
    sub,
    substitute_power,
)

__all__ = [
    "MahlerEquation",
    "EquationCheck",
    "check_equation",
    "equation_for_family",
    "ones_count_identity",
    "thue_morse_equation",
    "two_pow_e0_equation",
    "two_pow_e0_series",
    "parse_equation",
    "format_equation",
    "EquationFormatError",
]


class EquationFormatError(DCGFError, ValueError):
    pass


def _poly(*coeffs) -> Polynomial:
    return Polynomial(tuple(coeffs))


@dataclass(frozen=True)
class MahlerEquation:
    coeff_polys: tuple
    rhs: RationalFunction = RationalFunction(Polynomial())

    def __post_init__(self):
        polys = tuple(p if isinstance(p, Polynomial) else Polynomial(tuple(p)) for p in self.coeff_polys)
        object.__setattr__(self, "coeff_polys", polys)
        if len(polys) < 2:
            raise ValueError("an equation needs c_0 and at least c_1 (depth >= 1)")
        if all(p.is_zero() for p in polys):
            raise ValueError("coefficient polynomials are all zero")
        if not self.rhs.has_unit_denominator():
            raise NonUnitDenominatorError("right-hand side denominator must have constant term +1 or -1")

    @property
    def depth(self) -> int:
        return len(self.coeff_polys) - 1

    @property
    def max_degree(self) -> int:
        return max(p.degree for p in self.coeff_polys)

    def is_homogeneous(self) -> bool:
        return self.rhs.num.is_zero()

    def scaled(self, p: Polynomial) -> MahlerEquation:
        """The same equation multiplied through by the polynomial ``p``."""
        if p.is_zero():
            raise ValueError("cannot scale an equation by zero")
        return MahlerEquation(
            tuple(p * c for c in self.coeff_polys),
            RationalFunction(p * self.rhs.num, self.rhs.den),
        )

    def lhs(self, F: TruncatedSeries) -> TruncatedSeries:
        """``sum_k c_k(z) F(z^(2^k))`` modulo ``z**F.order``."""
        total = TruncatedSeries.zero(F.order)
        for k, ck in enumerate(self.coeff_polys):
            if ck.is_zero():
                continue
            total = total + mul_rational(substitute_power(F, 1 << k), RationalFunction(ck))
        return total


@dataclass(frozen=True)
class EquationCheck:
    passed: bool
    verified_order: int
    exponent: int | None = None
    residual: int | None = None

    def __bool__(self):
        return self.passed

    def __str__(self):
        if self.passed:
            return f"PASS (verified to order {self.verified_order})"
        return (
            f"FAIL at z^{self.exponent}: residual {self.residual} "
            f"(checked to order {self.verified_order})"
        )


def check_equation(eq: MahlerEquation, F: TruncatedSeries) -> EquationCheck:
    """Check ``eq`` coefficient by coefficient against ``F``.

    The window is shortened by the largest ``c_k`` degree, and the reported
    ``verified_order`` says exactly how far the identity was confirmed.
    """
    if F.order < 2:
        raise ValueError("series order must be at least 2")
    window = F.order - max(eq.max_degree, 0)
    if window < 1:
        raise ValueError(
            f"series order {F.order} too small for coefficient degree {eq.max_degree}"
        )
    residual = sub(eq.lhs(F), expand(eq.rhs, F.order)).truncate(window)
    v = residual.valuation()
    if v is None:
        return EquationCheck(True, window)
    return EquationCheck(False, window, v, residual[v])


def equation_for_family(spec: FamilySpec) -> MahlerEquation:
    """Equation obtained by splitting off the ``k = 0`` term of the sum or product.

    T6 uses the regularized convention (each summand minus 1).
    """
    spec.validate()
    s = spec.theorem_equivalent()
    kind, c = s.kind, s.c
    if kind is Kind.T1:
        # F = z/(1-z) + c F(z^2), times (1-z)
        return MahlerEquation((_poly(1, -1), _poly(-c, c)), RationalFunction(_poly(0, 1)))
    if kind is Kind.T2:
        # F = z/(1-z^2) + c F(z^2), times (1-z^2)
        return MahlerEquation((_poly(1, 0, -1), _poly(-c, 0, c)), RationalFunction(_poly(0, 1)))
    if kind is Kind.T3:
        return MahlerEquation((_poly(1), _poly(-1, -c)))
    if kind is Kind.T4:
        # (1-z)F = (dz + cz^2)/(1+z) + alpha (1-z^2) F(z^2)
        a = s.alpha
        return MahlerEquation(
            (_poly(1, -1), _poly(-a, 0, a)),
            RationalFunction(_poly(0, s.d, c), _poly(1, 1)),
        )
    if kind is Kind.T5:
        terms = {0: 1, 1: c}
        terms.update((2 * i, ci) for i, ci in enumerate(s.tail, start=1))
        return MahlerEquation((_poly(1), -Polynomial.from_terms(terms)))
    if kind is Kind.T6:
        # F - F(z^2) = 1/(1 - sum c_i z^i) - 1
        tail = _poly(0, *s.tail)
        return MahlerEquation((_poly(1), _poly(-1)), RationalFunction(tail, _poly(1) - tail))
    raise ValueError(f"no functional equation for kind {kind}")


def ones_count_identity() -> MahlerEquation:
    """``(1-z^2)F(z^2) - (1-z)F(z) = -z/(1+z)`` for the ones-count series."""
    return MahlerEquation((_poly(-1, 1), _poly(1, 0, -1)), RationalFunction(_poly(0, -1), _poly(1, 1)))


def thue_morse_equation() -> MahlerEquation:
    """``T(z) - (1-z)T(z^2) = 0``, the Thue-Morse equation with denominators cleared."""
    return MahlerEquation((_poly(1), _poly(-1, 1)))


def two_pow_e0_equation() -> MahlerEquation:
    """``(z+2)F(z^2) - F(z) = 1`` for ``F = sum 2^e0(i) z^i``."""
    return MahlerEquation((_poly(-1), _poly(2, 1)), RationalFunction(_poly(1)))


def two_pow_e0_series(order: int) -> TruncatedSeries:
    """``sum 2^e0(i) z^i`` straight from the digit counts (``e0(0) = 0``)."""
    return TruncatedSeries(tuple(2 ** e0(i) for i in range(order)))


# Equation files:
#
#   # comment
#   depth 1
#   c0: -1 1
#   c1: 1 0 -1
#   rhs: 0 -1 / 1 1
#
# Coefficient lists are constant term first.  "rhs" defaults to 0 and its
# denominator to 1.


def _ints(text, lineno):
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise EquationFormatError(f"line {lineno}: expected integers, got {text.strip()!r}") from None


def parse_equation(text: str) -> MahlerEquation:
    depth = None
    polys = {}
    rhs = RationalFunction(Polynomial())
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("depth"):
            vals = _ints(line[len("depth"):], lineno)
            if len(vals) != 1 or vals[0] < 1:
                raise EquationFormatError(f"line {lineno}: depth must be one integer >= 1")
            depth = vals[0]
            continue
        key, sep, body = line.partition(":")
        if not sep:
            raise EquationFormatError(f"line {lineno}: expected 'key: values'")
        key = key.strip()
        if key == "rhs":
            num, _, den = body.partition("/")
            try:
                rhs = RationalFunction(
                    Polynomial(tuple(_ints(num, lineno))),
                    Polynomial(tuple(_ints(den, lineno) if den.strip() else [1])),
                )
            except ZeroDivisionError:
                raise EquationFormatError(f"line {lineno}: zero denominator") from None
        elif key.startswith("c") and key[1:].isdigit():
            polys[int(key[1:])] = Polynomial(tuple(_ints(body, lineno)))
        else:
            raise EquationFormatError(f"line {lineno}: unknown key {key!r}")
    if depth is None:
        raise EquationFormatError("missing 'depth' line")
    extra = [k for k in polys if k > depth]
    if extra:
        raise EquationFormatError(f"coefficient c{max(extra)} exceeds depth {depth}")
    try:
        return MahlerEquation(tuple(polys.get(k, Polynomial()) for k in range(depth + 1)), rhs)
    except ValueError as exc:
        raise EquationFormatError(str(exc)) from None


def format_equation(eq: MahlerEquation) -> str:
    def row(p):
        return " ".join(str(c) for c in p.coeffs) or "0"

    lines = [f"depth {eq.depth}"]
    lines += [f"c{k}: {row(p)}" for k, p in enumerate(eq.coeff_polys)]
    lines.append(f"rhs: {row(eq.rhs.num)} / {row(eq.rhs.den)}")
    return "\n".join(lines) + "\n"
