from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from transversals.scalars import (
    SqrtExt,
    format_scalar,
    parse_scalar,
    quadratic_roots_exact,
    rat,
    rational_sqrt,
    sign,
    sqrt_enclosure,
)


def test_parse_decimal_and_fraction():
    assert parse_scalar("1.25") == rat(5, 4)
    assert parse_scalar("5/4") == rat(5, 4)
    assert parse_scalar("-3") == rat(-3)
    assert parse_scalar(7) == rat(7)
    assert parse_scalar("0.000") == 0


def test_parse_rejects_floats_and_junk():
    with pytest.raises(ValueError):
        parse_scalar(0.1)
    with pytest.raises(ValueError):
        parse_scalar("abc")
    with pytest.raises(ValueError):
        parse_scalar(True)


def test_format_round_trip():
    for s in ("5/4", "-3", "0", "22/7"):
        assert format_scalar(parse_scalar(s)) == s


def test_rational_sqrt():
    assert rational_sqrt(rat(9, 4)) == rat(3, 2)
    assert rational_sqrt(rat(2)) is None
    assert rational_sqrt(rat(0)) == 0
    assert rational_sqrt(rat(-4)) is None


@given(st.integers(1, 10**6), st.integers(1, 10**4))
def test_sqrt_enclosure_brackets(num, den):
    x = rat(num, den)
    lo, hi = sqrt_enclosure(x, rat(1, 2**40))
    assert lo * lo <= x <= hi * hi
    assert hi - lo <= rat(1, 2**40)


class TestSqrtExt:
    def test_known_value(self):
        # 1 + sqrt(2) ~ 2.414: between 2 and 3
        x = SqrtExt(1, 1, 2)
        assert x > 2 and x < 3
        assert sign(x) == 1
        assert sign(-x) == -1

    def test_field_ops_against_floats(self):
        import math

        a = SqrtExt(rat(1, 3), rat(2, 5), 7)
        b = SqrtExt(rat(-2), rat(1, 2), 7)

        def approx(e):
            return float(Fraction(int(e.u.numerator), int(e.u.denominator))) + float(
                Fraction(int(e.v.numerator), int(e.v.denominator))
            ) * math.sqrt(7)

        for expr, ref in (
            (a + b, approx(a) + approx(b)),
            (a - b, approx(a) - approx(b)),
            (a * b, approx(a) * approx(b)),
            (a / b, approx(a) / approx(b)),
        ):
            assert abs(approx(expr) - ref) < 1e-9

    def test_mixing_with_rationals(self):
        a = SqrtExt(0, 1, 5)
        assert a + rat(1, 2) == SqrtExt(rat(1, 2), 1, 5)
        assert rat(1, 2) + a == SqrtExt(rat(1, 2), 1, 5)
        assert 2 * a == SqrtExt(0, 2, 5)
        assert (rat(1) / a) * a == 1

    def test_opposite_sign_comparison(self):
        # 3 - sqrt(8) > 0, 3 - sqrt(10) < 0
        assert sign(SqrtExt(3, -1, 8)) == 1
        assert sign(SqrtExt(3, -1, 10)) == -1
        assert sign(SqrtExt(-3, 1, 8)) == -1
        assert sign(SqrtExt(-3, 1, 10)) == 1

    def test_enclosure(self):
        x = SqrtExt(1, 1, 2)  # 1 + sqrt(2)
        lo, hi = x.enclosure(rat(1, 2**32))
        assert hi - lo <= rat(1, 2**32)
        assert lo <= x <= hi  # exact comparison against the surd itself


def test_quadratic_roots_rational():
    kind, lo, hi = quadratic_roots_exact(rat(1), rat(-3), rat(2))
    assert (kind, lo, hi) == ("two", 1, 2)
    assert quadratic_roots_exact(rat(0), rat(2), rat(-4)) == ("one", 2)
    assert quadratic_roots_exact(rat(1), rat(0), rat(1)) == ("none",)
    assert quadratic_roots_exact(rat(0), rat(0), rat(0)) == ("all",)


def test_quadratic_roots_irrational_ordering():
    kind, lo, hi, delta = quadratic_roots_exact(rat(1), rat(0), rat(-2))
    assert kind == "two_irrational" and delta == 8
    assert lo < 0 < hi
    assert lo * lo == 2 and hi * hi == 2
    # leading coefficient negative flips the +/- root assignment
    kind, lo, hi, _ = quadratic_roots_exact(rat(-1), rat(0), rat(2))
    assert lo < hi and lo * lo == 2
