from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unirank3.arith import Rational, rat
from unirank3.segments import (
    EMPTY,
    Multisegment,
    NotIntegralLength,
    contragredient,
    delta_product_irreducible,
    gl_is_unitarizable,
    is_ladder,
    label_contragredient,
    langlands,
    linked,
    make_segment,
    ms,
    mw_involution,
    parse_gl_label,
    parse_multisegment,
    parse_segment,
    precedes,
    zelevinsky,
)

S = make_segment


def test_make_segment_basic():
    assert str(S(0, 2)) == "[0,2]"
    assert str(S("1/2", "3/2")) == "[1/2,3/2]"
    assert S(1, 0) is EMPTY
    with pytest.raises(NotIntegralLength):
        S(0, "1/2")


def test_segment_accessors():
    s = S(-1, 2)
    assert s.length == 4
    assert s.center == Rational(1, 2)
    assert s.points() == [rat(-1), rat(0), rat(1), rat(2)]
    assert s.contains(S(0, 1))
    assert not S(0, 1).contains(s)


def test_linked_and_precedes():
    assert linked(S(0, 1), S(1, 2))
    assert precedes(S(0, 1), S(1, 2))
    assert not precedes(S(1, 2), S(0, 1))
    assert not linked(S(0, 2), S(1, 1))  # containment
    assert not linked(S(0, 0), S(2, 2))  # gap
    assert not linked(S(0, 1), S("1/2", "3/2"))  # different lattice


def test_contragredient():
    assert contragredient(S(0, 1)) == S(-1, 0)
    assert contragredient(S("-1/2", "1/2")) == S("-1/2", "1/2")
    assert contragredient(EMPTY) is EMPTY


def test_mw_examples():
    assert mw_involution(ms(S(0))) == ms(S(0))
    assert mw_involution(ms(S(0, 1))) == ms(S(0), S(1))
    assert mw_involution(ms(S(0), S(1))) == ms(S(0, 1))


def test_zelevinsky_vs_langlands():
    assert zelevinsky(S(0, 1)).ms == ms(S(0), S(1))
    assert langlands(S(0, 1)).ms == ms(S(0, 1))


def test_delta_product_irreducible():
    assert not delta_product_irreducible([S(0, 1), S(1, 2)])
    assert delta_product_irreducible([S(0, 2), S(1, 1)])
    assert delta_product_irreducible([S(0)])


def test_is_ladder():
    assert is_ladder(ms(S(1, 2), S(0, 1)))
    assert not is_ladder(ms(S(0, 2), S(1, 1)))


segments_st = st.builds(
    lambda twice_b, n: S(Rational(twice_b, 2), Rational(twice_b, 2) + n),
    st.integers(-6, 6),
    st.integers(0, 3),
)
multisegments_st = st.builds(lambda segs: ms(*segs), st.lists(segments_st, max_size=5))


@given(multisegments_st)
@settings(max_examples=200)
def test_mw_is_involution(a):
    assert mw_involution(mw_involution(a)) == a


@given(multisegments_st)
@settings(max_examples=200)
def test_mw_preserves_support(a):
    assert Counter(a.exponents()) == Counter(mw_involution(a).exponents())


@given(segments_st)
def test_mw_singleton_rule(s):
    assert mw_involution(ms(s)) == ms(*[S(x) for x in s.points()])


@given(multisegments_st)
@settings(max_examples=200)
def test_mw_commutes_with_contragredient(a):
    flipped = Multisegment.of(*[contragredient(s) for s in a])
    assert mw_involution(flipped) == Multisegment.of(
        *[contragredient(s) for s in mw_involution(a)]
    )


def test_gl_unitarizable_examples():
    assert gl_is_unitarizable(parse_gl_label("L{[-1/2,1/2]}"))
    assert gl_is_unitarizable(parse_gl_label("L{[-1/2],[1/2]}"))
    assert not gl_is_unitarizable(parse_gl_label("L{[-7/10],[7/10]}"))
    assert not gl_is_unitarizable(parse_gl_label("L{[1]}"))
    assert gl_is_unitarizable(parse_gl_label("L{}"))


@given(multisegments_st)
@settings(max_examples=100)
def test_gl_unitarizable_contragredient_invariant(a):
    label = langlands(a)
    assert gl_is_unitarizable(label) == gl_is_unitarizable(label_contragredient(label))


def test_parsing_round_trips():
    for text in ("[0,2]", "[1/2,3/2]", "[-3]", "[]"):
        seg = parse_segment(text)
        if seg is EMPTY:
            continue
        assert parse_segment(str(seg)) == seg
    a = parse_multisegment("{[0,1],[2],[-1/2,1/2]}")
    assert parse_multisegment(str(a)) == a
    label = parse_gl_label("L{[0,1],[1,2]}")
    assert parse_gl_label(str(label)) == label
    assert parse_gl_label("Z{[0,1]}") == langlands(ms(S(0), S(1)))
