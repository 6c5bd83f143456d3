import pytest
from hypothesis import given, strategies as st

from oddnh.onh import ONHElement, random_element
from oddnh.skewpoly import SkewPoly
from oddnh.textfmt import (ParseError, format_combination, format_onh, format_partition, format_poly,
                           parse_combination, parse_element, parse_onh, parse_partition, parse_poly)


def test_reorders_with_sign():
    assert format_poly(parse_poly("x2*x1")) == "-x1*x2"


def test_pbw_normalization():
    xi = parse_element("d[2,1]*x1")
    assert isinstance(xi, ONHElement)
    assert xi == ONHElement.one(2) - ONHElement.x(2, 2) * ONHElement.dd(1, 2)


def test_error_offset():
    with pytest.raises(ParseError) as err:
        parse_poly("x1^")
    assert "offset 3" in str(err.value)


@pytest.mark.parametrize("text", ["x0", "x1 +", "2**x1", "d[1,1]", "x1^-1"])
def test_rejects(text):
    with pytest.raises(ParseError):
        parse_element(text)


def test_unknown_generator_for_fixed_n():
    with pytest.raises(ParseError):
        parse_poly("x3", 2)


def test_partitions_and_combinations():
    assert parse_partition("2,1") == parse_partition("[2,1]") == (2, 1)
    assert format_partition(()) == "[]"
    comb = {(2,): 1, (1, 1): 1}
    assert format_combination(comb) == "+1*[2] +1*[1,1]"
    assert parse_combination(format_combination(comb)) == comb


exps = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(lambda t: SkewPoly(3, t))


@given(polys)
def test_poly_round_trip(f):
    assert parse_poly(format_poly(f), 3) == f


@given(st.integers(0, 10_000))
def test_onh_round_trip(seed):
    import random
    xi = random_element(3, random.Random(seed), terms=3, max_exp=2)
    assert parse_onh(format_onh(xi), 3) == xi
