from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from onesided_gb.poly import (
    IllegalMultiplicationError,
    Polynomial,
    PolyParseError,
    TagMismatchError,
    ZeroPolynomialError,
    add,
    format_poly,
    is_monic,
    leading,
    make_monic,
    mul_scalar_and_words,
    parse_poly,
)
from onesided_gb.words import Alphabet, Deglex, Tag, compare

AB = Alphabet(("x", "y"))
ORDER = Deglex(AB)


def P(text, alphabet=AB):
    return parse_poly(text, alphabet)


def w(text):
    return tuple(text.split())


def test_add_examples():
    assert not add(P("<| x x"), P("- <| x x"))
    assert add(P("x x x - x x"), P("x x")) == P("x x x")
    assert add(P("<| y x x + <| x x"), P("<| x x")) == P("<| y x x + 2 <| x x")


def test_add_tag_mismatch():
    with pytest.raises(TagMismatchError):
        P("x") + P("<| x")
    with pytest.raises(TagMismatchError):
        P("<| x") + P("x |>")
    # zero is neutral whatever the tag
    assert P("<| x") + Polynomial.zero() == P("<| x")


def test_mul_examples():
    f1 = P("<| x y x + <| y x + 2 <| y")
    got = mul_scalar_and_words(8, (), f1, w("x y y y"))
    assert got == P("8 <| x y x x y y y + 8 <| y x x y y y + 16 <| y x y y y")
    f3 = P("x x y - 3 y x")
    got = mul_scalar_and_words(1, w("x y"), f3, w("y y"), Tag.LEFT)
    assert got == P("<| x y x x y y y - 3 <| x y y x y y")
    assert not mul_scalar_and_words(0, w("x"), f3, w("y"))


def test_mul_blocked_by_tags():
    with pytest.raises(IllegalMultiplicationError):
        mul_scalar_and_words(1, w("x"), P("<| y"), ())
    with pytest.raises(IllegalMultiplicationError):
        mul_scalar_and_words(1, (), P("<| y"), (), Tag.LEFT)
    with pytest.raises(IllegalMultiplicationError):
        mul_scalar_and_words(1, (), P("y |>"), w("x"))
    assert mul_scalar_and_words(2, w("x"), P("y |>"), ()) == P("2 x y |>")
    assert mul_scalar_and_words(1, (), P("y"), w("x"), Tag.RIGHT) == P("y x |>")


def test_leading_examples():
    lead = leading(P("<| x y x + <| y x + 2 <| y"), ORDER)
    assert (lead.term, lead.coefficient, lead.tag) == (w("x y x"), 1, Tag.LEFT)
    assert leading(P("x x x - x x"), ORDER).term == w("x x x")
    lead = leading(P("5 <| y"), ORDER)
    assert (lead.term, lead.coefficient) == (w("y"), 5)
    with pytest.raises(ZeroPolynomialError):
        leading(Polynomial.zero(), ORDER)


def test_make_monic_examples():
    assert make_monic(P("3 x x y - 9 y x"), ORDER) == P("x x y - 3 y x")
    assert make_monic(P("<| x"), ORDER) == P("<| x")
    es = Alphabet(("e", "s"))
    assert make_monic(P("-1/2 <| s e", es), Deglex(es)) == P("<| s e", es)
    assert is_monic(P("x - 2 y"), ORDER) is False
    with pytest.raises(ZeroPolynomialError):
        make_monic(Polynomial.zero(), ORDER)


def test_right_tagged_order_uses_reversed_words():
    # under reversed-word deglex, x y ranks above y x
    p = P("y x |> + x y |>")
    assert leading(p, ORDER).term == w("x y")


def test_parse_examples():
    assert P("<| x y x + <| y x + 2 <| y").terms == {w("x y x"): 1, w("y x"): 1, w("y"): 2}
    assert P("x x x - x x") == Polynomial({w("x x x"): 1, w("x x"): -1})
    assert not P("0")
    assert P("1/3 x - -2 y") == Polynomial({w("x"): Fraction(1, 3), w("y"): 2})


def test_parse_empty_word_and_constants():
    mono = Alphabet(("x",), allows_empty_word=True)
    assert P("x - 1", mono) == Polynomial({w("x"): 1, (): -1})
    assert P("1 |>", mono) == Polynomial({(): 1}, Tag.RIGHT)
    assert P("<| 1", mono).tag is Tag.LEFT
    with pytest.raises(PolyParseError):
        P("x - 1")


@pytest.mark.parametrize("text", ["", "x +", "+ + x", "x y z", "<| x + y", "x |> + y",
                                  "<| x |>", "x 2 y", "2 3 x", "x <| y", "1/0 x"])
def test_parse_errors(text):
    with pytest.raises(PolyParseError):
        P(text)


def test_parse_error_has_position():
    with pytest.raises(PolyParseError) as info:
        P("x + z")
    assert info.value.position == 4


def test_zero_symbol_terms_vanish():
    ab = Alphabet(("x", "o"), zero_symbol="o")
    assert P("x o x + x", ab) == P("x", ab)
    assert not P("o", ab)


def test_format_examples():
    assert format_poly(P("x x - x x x"), ORDER) == "- x x x + x x"
    assert format_poly(P("- 2 x + y"), ORDER) == "y - 2 x"
    assert format_poly(P("3/4 <| y"), ORDER) == "3/4 <| y"
    assert format_poly(Polynomial.zero()) == "0"


tags = st.sampled_from([Tag.NONE, Tag.LEFT, Tag.RIGHT])
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
words = st.lists(st.sampled_from(["x", "y"]), min_size=1, max_size=4).map(tuple)


@st.composite
def polys(draw, tag=None):
    t = draw(tags) if tag is None else tag
    return Polynomial(draw(st.dictionaries(words, coeffs, max_size=5)), t)


@given(tags.flatmap(lambda t: st.tuples(polys(t), polys(t), polys(t))))
def test_add_commutative_associative(triple):
    a, b, c = triple
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)


@given(polys(Tag.NONE), polys(Tag.NONE), words, words, coeffs)
def test_mul_distributes(a, b, u, v, k):
    lhs = mul_scalar_and_words(k, u, a + b, v)
    assert lhs == mul_scalar_and_words(k, u, a, v) + mul_scalar_and_words(k, u, b, v)


@given(polys())
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p, ORDER), AB) == p


@given(polys())
def test_leading_is_brute_force_max(p):
    if not p:
        return
    lead = leading(p, ORDER).term
    for word in p.terms:
        base = (lambda z: z[::-1]) if p.tag is Tag.RIGHT else (lambda z: z)
        assert compare(ORDER, base(word), base(lead)) <= 0
