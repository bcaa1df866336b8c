"""Independent reference computations used as test oracles.

Nothing here imports the package under test.
"""


def popcount(n):
    return bin(n).count("1")


def zeros(n):
    return n.bit_length() - popcount(n)


def v2(n):
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k


def long_division(num, den, order):
    """Power series of num/den by schoolbook long division (den[0] == +-1)."""
    rem = list(num) + [0] * order
    out = []
    for n in range(order):
        q = rem[n] // den[0]
        out.append(q)
        for j, dj in enumerate(den):
            if n + j < len(rem):
                rem[n + j] -= q * dj
    return out


def naive_product(a, b, order):
    out = [0] * order
    for i, x in enumerate(a[:order]):
        for j, y in enumerate(b[:order]):
            if i + j < order:
                out[i + j] += x * y
    return out


def general_recurrence(base, even, odd, b=None):
    """Closure computing a_n by plain recursion from affine rule tuples.

    ``even``/``odd`` are (coeff, lags, const, aux_weight, min_n).
    """
    memo = {}

    def a(n):
        if n < 0:
            return 0
        if n in memo:
            return memo[n]
        m, parity = divmod(n, 2)
        coeff, lags, const, w, min_n = odd if parity else even
        if m >= min_n:
            value = coeff * a(m) + sum(q * a(m - i) for i, q in enumerate(lags, 1)) + const
            if w:
                value += w * b[n]
        else:
            value = base[n]
        memo[n] = value
        return value

    return a


def norgard(n):
    if n == 0:
        return 0
    return -norgard(n // 2) if n % 2 == 0 else norgard(n // 2) + 1


def affine_digits(alpha, c, d, n):
    """T4 value from the bits of n: sum over bits j of alpha^j * (c or d)."""
    if n == 0:
        return 0
    s = bin(n)[2:][::-1]
    return sum(alpha ** j * (d if b == "1" else c) for j, b in enumerate(s))
