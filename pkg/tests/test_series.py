import pytest
from hypothesis import given, settings, strategies as st

from dcgf.errors import NonUnitDenominatorError
from dcgf.series import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    add,
    expand,
    mul,
    mul_rational,
    substitute_power,
)

from oracles import long_division, naive_product


def rf(num, den=(1,)):
    return RationalFunction.from_lists(num, den)


def S(*cs):
    return TruncatedSeries(cs)


class TestExpand:
    def test_geometric(self):
        assert expand(rf([1], [1, -1]), 5).tolist() == [1, 1, 1, 1, 1]

    def test_alternating(self):
        assert expand(rf([0, 1], [1, 1]), 5).tolist() == [0, 1, -1, 1, -1]

    def test_long_division_oracle(self):
        expected = long_division([0, 1, 2], [1, 1], 6)
        assert expected == [0, 1, 1, -1, 1, -1]
        got = expand(rf([0, 1, 2], [1, 1]), 6)
        assert got.tolist() == expected
        # multiply back by the denominator
        assert mul(got, S(1, 1, 0, 0, 0, 0)).tolist() == [0, 1, 2, 0, 0, 0]

    def test_minus_one_constant_term(self):
        assert expand(rf([1], [-1, 1]), 4).tolist() == [-1, -1, -1, -1]

    @pytest.mark.parametrize("den", [[2, 1], [0, 1], [3]])
    def test_rejects_non_unit_denominator(self, den):
        with pytest.raises(NonUnitDenominatorError):
            expand(rf([1], den), 4)


def test_add_examples():
    assert add(S(1, 2), S(0, 1)).tolist() == [1, 3]
    F = S(3, -1, 4)
    assert add(F, TruncatedSeries.zero(3)) == F
    g = rf([1], [1, -1])
    assert add(expand(g, 4), expand(-g, 4)).tolist() == [0, 0, 0, 0]


def test_add_order_mismatch_takes_minimum():
    assert add(S(1, 1, 1), S(1, 1)).order == 2
    assert mul(S(1, 1, 1), S(1, 1)).order == 2


def test_mul_examples():
    assert mul(S(1, 1, 1, 1), S(1, -1, 0, 0)).tolist() == [1, 0, 0, 0]
    F = S(5, 0, -2, 7)
    assert mul(F, TruncatedSeries.one(4)) == F
    g = expand(rf([1], [1, -1]), 6)
    assert mul(g, g).tolist() == [n + 1 for n in range(6)]


def test_substitute_power_examples():
    F = S(4, 5, 6)
    assert substitute_power(F, 1) == F
    assert substitute_power(S(1, 1, 1, 1, 1, 1), 2).tolist() == [1, 0, 1, 0, 1, 0]
    got = substitute_power(expand(rf([0, 1], [1, -1]), 8), 4)
    # direct definition: result[4i] = a[i]
    src = expand(rf([0, 1], [1, -1]), 8).tolist()
    expected = [src[i // 4] if i % 4 == 0 else 0 for i in range(8)]
    assert got.tolist() == expected == [0, 0, 0, 0, 1, 0, 0, 0]


def test_mul_rational_examples():
    a = S(3, 1, 4, 1)
    assert mul_rational(a, rf([1])) == a
    assert mul_rational(S(0, 1, 0, 1), rf([1], [1, -1])).tolist() == [0, 1, 1, 2]
    assert mul_rational(expand(rf([0, 1], [1, 1]), 6), rf([1, 1])).tolist() == [0, 1, 0, 0, 0, 0]


def test_polynomial_canonical_zero():
    assert Polynomial((0, 0)).coeffs == ()
    assert Polynomial().degree == -1
    assert Polynomial((1, 2, 0)).degree == 1


def test_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rf([1], [0])


def test_reduced_cancels_z_power():
    r = (rf([0, 1, 2]) / rf([0, 1])).reduced()
    assert r == rf([1, 2])
    assert rf([1], [-1, 1]).reduced() == rf([-1], [1, -1])


small = st.integers(-5, 5)


def series_of(order):
    return st.lists(small, min_size=order, max_size=order).map(TruncatedSeries)


@st.composite
def triples(draw):
    n = draw(st.integers(1, 64))
    return draw(series_of(n)), draw(series_of(n)), draw(series_of(n))


@settings(max_examples=60, deadline=None)
@given(triples())
def test_ring_laws(abc):
    a, b, c = abc
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@settings(max_examples=60, deadline=None)
@given(triples())
def test_mul_matches_naive(abc):
    a, b, _ = abc
    assert mul(a, b).tolist() == naive_product(a.tolist(), b.tolist(), a.order)


@st.composite
def unit_rationals(draw):
    num = draw(st.lists(small, max_size=6))
    den = [draw(st.sampled_from([1, -1]))] + draw(st.lists(small, max_size=5))
    return rf(num, den), draw(st.integers(1, 40))


@settings(max_examples=80, deadline=None)
@given(unit_rationals())
def test_expand_times_denominator_is_numerator(case):
    r, n = case
    s = expand(r, n)
    assert all(isinstance(c, int) for c in s)
    back = mul(s, r.den.to_series(n))
    assert back == r.num.to_series(n)
    assert s.tolist() == long_division(list(r.num.coeffs), list(r.den.coeffs), n)


@settings(max_examples=60, deadline=None)
@given(unit_rationals(), st.integers(1, 40))
def test_mul_rational_is_mul_by_expansion(case, n):
    r, _ = case
    a = expand(rf([1, 2, -1], [1, 1]), n)
    assert mul_rational(a, r) == mul(a, expand(r, n))


@given(st.integers(1, 50).flatmap(series_of))
def test_substitute_power_composes(a):
    assert substitute_power(substitute_power(a, 2), 2) == substitute_power(a, 4)
