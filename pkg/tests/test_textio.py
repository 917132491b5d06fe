from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusdegen.errors import ParseError
from torusdegen.scalars import QuadExtScalar
from torusdegen.textio import (
    detect_d,
    parse_int_tuple,
    parse_scalar,
    parse_scalar_tuple,
    parse_tuple_groups,
    split_top_level,
    tokenize,
)


def test_scalar_forms():
    assert parse_scalar("3/2 + 1/2*sqrt(2)") == QuadExtScalar(Fraction(3, 2), Fraction(1, 2))
    assert parse_scalar("-sqrt(3)", 3) == QuadExtScalar(0, -1, 3)
    assert parse_scalar("(1 + sqrt(2))^2") == QuadExtScalar(3, 2)
    assert parse_scalar("0.25") == QuadExtScalar(Fraction(1, 4), 0)
    assert parse_scalar("2 sqrt(2)") == QuadExtScalar(0, 2)


def test_scalar_errors():
    for bad in ("", "1 +", "sqrt(3)", "x", "1 $ 2", "(1"):
        with pytest.raises(ParseError):
            parse_scalar(bad, 2)


def test_tuples():
    assert parse_int_tuple("1,-2") == (1, -2)
    assert parse_scalar_tuple("(1, sqrt(2))") == (QuadExtScalar(1, 0), QuadExtScalar(0, 1))
    assert parse_tuple_groups("(1,0) (0,1)") == ["1,0", "0,1"]
    with pytest.raises(ParseError):
        parse_tuple_groups("(1,0")
    with pytest.raises(ParseError):
        parse_int_tuple("1/2, 1")
    assert split_top_level("a, f(b, c), d") == ["a", "f(b, c)", "d"]
    assert detect_d("1 + sqrt(5)") == 5
    assert tokenize("x^2")[0] == ("id", "x")


@settings(max_examples=200, deadline=None)
@given(st.fractions(min_value=-20, max_value=20, max_denominator=9),
       st.fractions(min_value=-20, max_value=20, max_denominator=9))
def test_print_parse_round_trip(a, b):
    x = QuadExtScalar(a, b, 2)
    assert parse_scalar(str(x), 2) == x
