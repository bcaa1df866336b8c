"""2-rational sequences: ``u_n = lambda . A[n_l] ... A[n_0] . gamma``.

``n_l ... n_0`` is the binary expansion of ``n`` without leading zeros, so
``u_0 = lambda . gamma`` (empty product).
"""
from __future__ import annotations

from dataclasses import dataclass
from operator import mul

__all__ = [
    "LinearRepresentation",
    "eval_linear_rep",
    "rep_for_affine",
    "rep_ones_count",
    "binary_digits",
]


def _matrix(rows):
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class LinearRepresentation:
    lam: tuple
    A0: tuple
    A1: tuple
    gamma: tuple

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))
        object.__setattr__(self, "gamma", tuple(int(x) for x in self.gamma))
        object.__setattr__(self, "A0", _matrix(self.A0))
        object.__setattr__(self, "A1", _matrix(self.A1))
        n = len(self.lam)
        if n < 1:
            raise ValueError("dimension must be at least 1")
        if len(self.gamma) != n:
            raise ValueError(f"gamma has length {len(self.gamma)}, expected {n}")
        for name in ("A0", "A1"):
            m = getattr(self, name)
            if len(m) != n or any(len(row) != n for row in m):
                raise ValueError(f"{name} must be {n}x{n}")

    @property
    def dim(self) -> int:
        return len(self.lam)


def binary_digits(n: int) -> list:
    """Bits of ``n`` from least to most significant; empty for 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [int(b) for b in reversed(bin(n)[2:])] if n else []


def _matvec(M, v):
    return tuple([sum(map(mul, row, v)) for row in M])


def eval_linear_rep(rep: LinearRepresentation, n: int) -> int:
    """Value at ``n``, multiplying from the right so each step is matrix-vector."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    v = rep.gamma
    A0, A1 = rep.A0, rep.A1
    while n:
        v = _matvec(A1 if n & 1 else A0, v)
        n >>= 1
    return sum(map(mul, rep.lam, v))


def rep_for_affine(alpha: int, c: int, d: int) -> LinearRepresentation:
    """Representation of ``a_0 = 0, a_{2n} = alpha a_n + c, a_{2n+1} = alpha a_n + d``.

    Reading bits from the most significant end, the state row ``(1, a)``
    maps to ``(1, alpha*a + c_bit)`` under ``A_bit = [[1, c_bit], [0, alpha]]``
    acting on the right.  Padding with leading zero bits is not neutral when
    ``c != 0``, which is why evaluation uses exactly the significant bits.
    """
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    return LinearRepresentation(
        lam=(1, 0),
        A0=((1, c), (0, alpha)),
        A1=((1, d), (0, alpha)),
        gamma=(0, 1),
    )


def rep_ones_count() -> LinearRepresentation:
    """Two-dimensional representation of the binary ones count."""
    return LinearRepresentation(lam=(0, 1), A0=((1, 0), (0, 1)), A1=((1, 0), (1, 1)), gamma=(1, 0))
