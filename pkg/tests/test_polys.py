from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from findom.fields import QQ
from findom.polys import GroebnerBasis, format_poly, parse_poly, pmul, psub

NAMES = "ABCD"


def P(text):
    return parse_poly(text, NAMES, QQ)


def test_parse_and_format_round_trip():
    p = P("3/2*A^2*B - C + 1")
    assert p == {(2, 1, 0, 0): Fraction(3, 2), (0, 0, 1, 0): Fraction(-1),
                 (0, 0, 0, 0): Fraction(1)}
    assert P(format_poly(p, NAMES, QQ)) == p


def test_parse_rejects_unknown_variable_and_negative_exponent():
    with pytest.raises(ValueError):
        P("A*E")
    with pytest.raises(ValueError):
        P("A^-1")
    assert parse_poly("t^-1 + t", "t", QQ, allow_negative=True) == {(-1,): 1, (1,): 1}


def test_abcd_relation_normal_forms():
    gb = GroebnerBasis([P("A*B + C*D - 1")], 4)
    assert gb.normal_form(P("A*B")) == P("1 - C*D")
    assert gb.normal_form(P("A^2*B^2 + 2*A*B*C*D + C^2*D^2")) == P("1")
    assert not gb.is_one()


def test_unit_ideal_is_detected():
    assert GroebnerBasis([P("A - 1"), P("A")], 4).is_one()


def test_buchberger_closes_s_pairs():
    # x^2 - y, x y - 1: the basis must contain y^2 - x (lex x > y)
    names = "xy"
    gb = GroebnerBasis([parse_poly("x^2 - y", names, QQ), parse_poly("x*y - 1", names, QQ)], 2)
    assert gb.normal_form(parse_poly("y^2 - x", names, QQ)) == {}
    assert gb.normal_form(parse_poly("y^3", names, QQ)) == {(0, 0): 1}


small_poly = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 4), st.integers(-3, 3).filter(bool), max_size=4)


@settings(max_examples=60, deadline=None)
@given(small_poly, small_poly)
def test_ideal_membership_of_multiples(f, g):
    """f * rel reduces to 0, and normal forms only depend on the class mod rel."""
    rel = P("A*B + C*D - 1")
    gb = GroebnerBasis([rel], 4)
    f = {m: Fraction(c) for m, c in f.items()}
    g = {m: Fraction(c) for m, c in g.items()}
    assert gb.normal_form(pmul(f, rel)) == {}
    h = psub(g, pmul(f, rel))
    assert gb.normal_form(h) == gb.normal_form(g)
