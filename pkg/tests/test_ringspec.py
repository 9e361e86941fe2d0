import pytest
from hypothesis import given
from hypothesis import strategies as st

from annideal.ringspec import Product, QuotientPoly, RingSpecError, Zn, format_poly, parse_ring_spec


def test_zn():
    assert parse_ring_spec("Z6") == Zn(6)


def test_product():
    assert parse_ring_spec("Z2 x Z4") == Product((Zn(2), Zn(4)))


def test_product_order_is_positional():
    assert parse_ring_spec("Z2 x Z4") != parse_ring_spec("Z4 x Z2")


def test_quotient():
    # x^2 -> (0, 0, 1); 2x -> (0, 2)
    assert parse_ring_spec("Z4[x]/(x^2, 2x)") == QuotientPoly(Zn(4), ((0, 0, 1), (0, 2)))


@pytest.mark.parametrize("text", ["Z12", "Z2 x Z3 x Z5", "Z2[x]/(x^2+x+1)", "Z4[x]/(x^2, 2x)"])
def test_valid_examples_roundtrip(text):
    spec = parse_ring_spec(text)
    assert parse_ring_spec(str(spec)) == spec


def test_whitespace_insensitive():
    assert parse_ring_spec("  Z2xZ4 ") == parse_ring_spec("Z2 x Z4")
    assert parse_ring_spec("Z4 [ x ] / ( x ^ 2 , 2 * x )") == parse_ring_spec("Z4[x]/(x^2, 2x)")


def test_poly_terms():
    spec = parse_ring_spec("Z5[x]/(x^3 - 2*x + 1)")
    assert spec.relators == ((1, -2, 0, 1),)
    with pytest.raises(RingSpecError):
        parse_ring_spec("Z3[x]/(2*x^3 - x + 1)")
    # 2 = -1 mod 3 is not 1, so that one is not monic; the x^3 relator is
    spec = parse_ring_spec("Z3[x]/(2x^3+1, x^3)")
    assert len(spec.relators) == 2


def test_monic_after_reduction():
    # 5x^2 = x^2 mod 4
    parse_ring_spec("Z4[x]/(5x^2+2)")


@pytest.mark.parametrize("text, fragment, pos", [
    ("Z0", "at least 2", 1),
    ("Z1", "at least 2", 1),
    ("Z4[y]/(y^2)", "variable must be 'x'", 3),
    ("Z4[x]/(x^2+y)", "variable must be 'x'", 11),
    ("Z4[x]/(2x)", "monic", 6),
    ("Z4[x]/(x^2", "unbalanced", 6),
    ("Z4)", "unbalanced", 2),
    ("Q5", "expected 'Z'", 0),
    ("Z", "expected a number", 1),
    ("Z2 x", "expected 'Z'", 4),
    ("Z2 Z3", "unexpected character", 3),
    ("Z4[x]/(x^0)", "exponent", 9),
])
def test_errors_have_positions(text, fragment, pos):
    with pytest.raises(RingSpecError) as exc:
        parse_ring_spec(text)
    assert fragment in str(exc.value)
    assert exc.value.pos == pos


@pytest.mark.parametrize("text", ["", "   "])
def test_empty(text):
    with pytest.raises(RingSpecError):
        parse_ring_spec(text)


def test_format_poly():
    assert format_poly((1, 1, 1)) == "x^2+x+1"
    assert format_poly((0, 2)) == "2x"
    assert format_poly((1, -1, 0, 2)) == "2x^3-x+1"
    assert format_poly(()) == "0"


moduli = st.integers(min_value=2, max_value=50)
coeff_lists = st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=4)


@st.composite
def quotient_specs(draw):
    n = draw(moduli)
    deg = draw(st.integers(min_value=1, max_value=3))
    lower = draw(st.lists(st.integers(min_value=-5, max_value=5), min_size=deg, max_size=deg))
    monic = tuple(lower) + (1,)
    others = draw(st.lists(coeff_lists, max_size=2))
    rels = [monic] + [tuple(o) for o in others]
    rels = [tuple(c for c in r) for r in rels]
    return Zn(n), rels


@given(st.lists(moduli, min_size=1, max_size=4))
def test_product_roundtrip(ns):
    text = " x ".join(f"Z{n}" for n in ns)
    spec = parse_ring_spec(text)
    assert str(spec) == text


@given(quotient_specs())
def test_quotient_roundtrip(args):
    base, rels = args
    text = f"{base}[x]/(" + ", ".join(format_poly(r) for r in rels) + ")"
    spec = parse_ring_spec(text)
    assert parse_ring_spec(str(spec)) == spec
    assert spec.base == base
