"""Random expressions in the restricted grammar, for property tests."""
import random


def _elementary(rng):
    e = rng.randint(1, 4)
    sign = rng.choice("+-")
    a, b = rng.randint(0, 3), rng.randint(1, 3)
    return rng.choice([
        f"({a} {sign} {b}*z^{e})",
        f"1/(1 {sign} z^{e})",
        f"(1 + z)^{rng.randint(0, 3)}",
        f"z^{e}/(1 - {b}*z)",
    ])


def _loop(rng):
    c = rng.randint(-3, 3)
    m = rng.randint(1, 3)
    s = rng.randint(0, 1)
    sign = rng.choice("+-")
    return rng.choice([
        f"sum(k){{ ({c})^k * z^(2^k*{m}) / (1 {sign} z^(2^(k+{s}))) }}",
        f"sum(k){{ ({c})^(k+{s}) * z^(2^(k+{s})) }}",
        f"prod(k){{ 1 {sign} {abs(c)}*z^(2^k*{m}) }}",
        f"prod(k){{ (1 + z^(2^k))^{rng.randint(1, 2)} }}",
    ])


def random_expression(rng: random.Random, depth: int = 2) -> str:
    if depth == 0 or rng.random() < 0.3:
        return _loop(rng) if rng.random() < 0.6 else _elementary(rng)
    op = rng.choice("+-*")
    return f"({random_expression(rng, depth - 1)} {op} {random_expression(rng, depth - 1)})"
