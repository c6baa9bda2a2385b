import math
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sga.exactlog import cmp_cubed_log, cmp_linear_log, compare_linear_log, log2_bracket, log_ratio_bracket


@pytest.mark.parametrize("a,ell,k", [(6, 50, 3), (4, 6, 3), (3, 8, 1)])
def test_linear_examples(a, ell, k):
    assert cmp_linear_log(a, ell, k) is True


def test_linear_boundary():
    assert cmp_linear_log(3, 8, 1) and not cmp_linear_log(4, 8, 1)
    r = compare_linear_log(6, 50, 3)
    assert (r.lhs, r.rhs_base, r.rhs_multiplier, bool(r)) == (6, 50, 3, True)
    with pytest.raises(ValueError):
        cmp_linear_log(1, 1, 1)


@given(st.integers(0, 200), st.integers(2, 10**6), st.integers(1, 5))
def test_linear_agrees_with_float_when_margin_is_clear(a, ell, k):
    margin = k * math.log2(ell) - a
    if abs(margin) > 1e-6:
        assert cmp_linear_log(a, ell, k) == (margin > 0)


@pytest.mark.parametrize("s,ell", [(6, 50), (8, 4), (30, 1080)])
def test_cubed_examples(s, ell):
    assert cmp_cubed_log(s, ell).verdict


def test_cubed_powers_of_two():
    for e in range(1, 65):
        for s in range(max(1, e**3 - 3), e**3 + 2):
            assert cmp_cubed_log(s, 1 << e).verdict == (s <= e**3)


def test_cubed_near_threshold():
    # log2(50)^3 ~ 179.6
    assert cmp_cubed_log(179, 50).verdict and not cmp_cubed_log(180, 50).verdict
    res = cmp_cubed_log(179, 50)
    assert res.lo ** 3 >= 179 and res.lo <= res.hi


@given(st.integers(2, 10**12).filter(lambda x: x & (x - 1)), st.integers(4, 60))
@settings(max_examples=300)
def test_bracket_contains_log(x, bits):
    lo, hi = log2_bracket(x, bits)
    assert hi - lo <= Fraction(1, 2**bits)
    with localcontext() as ctx:
        ctx.prec = 80
        true = Decimal(x).ln() / Decimal(2).ln()
        assert Decimal(lo.numerator) / Decimal(lo.denominator) <= true <= Decimal(hi.numerator) / Decimal(hi.denominator)


def test_bracket_power_of_two():
    assert log2_bracket(1024) == (10, 10)
    assert log2_bracket(1) == (0, 0)


def test_ratio_bracket():
    lo, hi = log_ratio_bracket(60, 5)
    assert hi - lo <= Fraction(1, 10**4)
    assert lo <= Fraction(math.log(60) / math.log(5)) <= hi or abs(float(lo) - math.log(60) / math.log(5)) < 1e-9
