"""Catalogued composition series, unitarity flags and duality maps for
inductions with up to three exponents on one cuspidal line.

Each case covers one exponent pattern relative to the reducibility point;
entries carry the class label, its multiplicity in the full induced
representation, and whether it is unitarizable.  Cases with complete=False
list all classes but leave some multiplicities (hence the total length) open.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .arith import Rational, rat
from .classical import (
    CUSP,
    ClassicalLabel,
    CuspPlusMinus,
    NotInDualityTable,
    LineConfig,
    SegType,
    StronglyPositive,
    TauInd,
    TemperedInd,
    classical,
    tempered_class,
)
from .glring import ProductKey, gl_delta, gl_label, product_key
from .segments import Segment, langlands, make_segment, ms

__all__ = [
    "NotACataloguedCase",
    "CaseEntry",
    "CaseData",
    "case_for",
    "all_cases",
    "dual_of",
    "identities",
]

HALF = Rational(1, 2)


class NotACataloguedCase(ValueError):
    """Exponent pattern outside the catalogued families."""


@dataclass(frozen=True)
class CaseEntry:
    label: ClassicalLabel
    mult: int
    unit: bool


@dataclass(frozen=True)
class CaseData:
    name: str
    alpha: Rational
    exponents: tuple[Rational, ...]
    entries: tuple[CaseEntry, ...]
    duals: tuple[tuple[ClassicalLabel, ClassicalLabel], ...]
    length: Optional[int]
    complete: bool = True

    def labels(self) -> list[ClassicalLabel]:
        return [e.label for e in self.entries]


def _S(b, e=None) -> Segment:
    return make_segment(b, e)


def _L(segs, t=CUSP) -> ClassicalLabel:
    return classical(list(segs), t)


def _T(t) -> ClassicalLabel:
    return tempered_class(t)


def _sp(*segs) -> StronglyPositive:
    return StronglyPositive(tuple(segs))


def _case(name, a, exps, rows, duals, length, complete=True) -> CaseData:
    entries = tuple(CaseEntry(lab, m, u) for lab, m, u in rows)
    return CaseData(name, a, tuple(exps), entries, tuple(duals), length, complete)


# --- rank one ---------------------------------------------------------------


def _one_generic(a: Rational) -> CaseData:
    l1 = _L([_S(a)])
    l2 = _T(_sp(_S(a)))
    return _case("one-generic", a, (a,), [(l1, 1, True), (l2, 1, True)], [(l1, l2)], 2)


def _one_zero(a: Rational) -> CaseData:
    p = _T(CuspPlusMinus(Rational(0), +1))
    m = _T(CuspPlusMinus(Rational(0), -1))
    return _case("one-zero", a, (a,), [(p, 1, True), (m, 1, True)], [(p, m)], 2)


# --- rank two ---------------------------------------------------------------


def _two_step_generic(a: Rational) -> CaseData:
    l1 = _L([_S(a), _S(a + 1)])
    l2 = _T(_sp(_S(a, a + 1)))
    l3 = _L([_S(a + 1)], _sp(_S(a)))
    l4 = _L([_S(a, a + 1)])
    rows = [(l1, 1, True), (l2, 1, True), (l3, 1, False), (l4, 1, False)]
    return _case("two-step-generic", a, (a, a + 1), rows, [(l1, l2), (l3, l4)], 4)


def _two_step_zero(a: Rational) -> CaseData:
    ep = CuspPlusMinus(Rational(0), +1)
    em = CuspPlusMinus(Rational(0), -1)
    l1 = _L([_S(1)], ep)
    l2 = _L([_S(1)], em)
    s_m = _T(SegType(_S(0, 1), -1))
    s_p = _T(SegType(_S(0, 1), +1))
    l0 = _L([_S(0, 1)])
    rows = [(l1, 1, True), (l2, 1, True), (s_p, 1, True), (s_m, 1, True), (l0, 2, True)]
    return _case("two-step-zero", a, (rat(0), rat(1)), rows, [(l1, s_m), (l2, s_p), (l0, l0)], 6)


def _two_equal_generic(a: Rational) -> CaseData:
    l1 = _L([_S(a), _S(a)])
    l2 = _L([_S(a)], _sp(_S(a)))
    return _case("two-equal-generic", a, (a, a), [(l1, 1, False), (l2, 1, False)], [(l1, l2)], 2)


def _two_equal_half(a: Rational) -> CaseData:
    dp = _T(SegType(_S(-HALF, HALF), +1))
    dm = _T(SegType(_S(-HALF, HALF), -1))
    l1 = _L([_S(HALF), _S(HALF)])
    l2 = _L([_S(HALF)], _sp(_S(HALF)))
    rows = [(dp, 1, True), (dm, 1, True), (l1, 1, True), (l2, 1, True)]
    return _case("two-equal-half", a, (HALF, HALF), rows, [(dp, l1), (dm, l2)], 4)


def _two_equal_zero(a: Rational) -> CaseData:
    p = _T(TemperedInd((_S(0),), CuspPlusMinus(Rational(0), +1)))
    m = _T(TemperedInd((_S(0),), CuspPlusMinus(Rational(0), -1)))
    return _case("two-equal-zero", a, (rat(0), rat(0)), [(p, 1, True), (m, 1, True)], [(p, m)], 2)


def _two_down_generic(a: Rational) -> CaseData:
    l1 = _T(_sp(_S(a - 1), _S(a)))
    l2 = _L([_S(a - 1, a)])
    l3 = _L([_S(a - 1), _S(a)])
    l4 = _L([_S(a - 1)], _sp(_S(a)))
    rows = [(l1, 1, True), (l2, 1, True), (l3, 1, True), (l4, 1, True)]
    return _case("two-down-generic", a, (a - 1, a), rows, [(l1, l2), (l3, l4)], 4)


def _two_down_one(a: Rational) -> CaseData:
    tp = _T(TauInd(_S(0), +1, _sp(_S(1))))
    tm = _T(TauInd(_S(0), -1, _sp(_S(1))))
    l1 = _L([_S(1)], TemperedInd((_S(0),), CUSP))
    l2 = _L([_S(0, 1)])
    rows = [(tp, 1, True), (tm, 1, True), (l1, 1, True), (l2, 1, True)]
    return _case("two-down-one", a, (rat(0), rat(1)), rows, [(tp, l1), (tm, l2)], 4)


# --- rank three -------------------------------------------------------------


def _three_chain_generic(a: Rational) -> CaseData:
    u1 = _T(_sp(_S(a, a + 2)))
    u2 = _L([_S(a), _S(a + 1), _S(a + 2)])
    n1 = _L([_S(a + 1), _S(a + 2)], _sp(_S(a)))
    n2 = _L([_S(a, a + 2)])
    n3 = _L([_S(a + 2), _S(a, a + 1)])
    n4 = _L([_S(a + 1, a + 2)], _sp(_S(a)))
    n5 = _L([_S(a), _S(a + 1, a + 2)])
    n6 = _L([_S(a + 2)], _sp(_S(a, a + 1)))
    rows = [(u1, 1, True), (u2, 1, True)] + [(x, 1, False) for x in (n1, n2, n3, n4, n5, n6)]
    duals = [(u1, u2), (n1, n2), (n3, n4), (n5, n6)]
    return _case("three-chain-generic", a, (a, a + 1, a + 2), rows, duals, 8)


def _three_chain_zero(a: Rational) -> CaseData:
    ep = CuspPlusMinus(Rational(0), +1)
    em = CuspPlusMinus(Rational(0), -1)
    sp2 = _T(SegType(_S(0, 2), +1))
    sm2 = _T(SegType(_S(0, 2), -1))
    lp = _L([_S(1), _S(2)], em)
    lm = _L([_S(1), _S(2)], ep)
    a1 = _L([_S(2)], SegType(_S(0, 1), +1))
    a2 = _L([_S(1, 2)], em)
    b1 = _L([_S(2)], SegType(_S(0, 1), -1))
    b2 = _L([_S(1, 2)], ep)
    c1 = _L([_S(2), _S(0, 1)])
    c2 = _L([_S(0, 2)])
    rows = [
        (sp2, 1, True),
        (sm2, 1, True),
        (lp, 1, True),
        (lm, 1, True),
        (a1, 1, False),
        (a2, 1, False),
        (b1, 1, False),
        (b2, 1, False),
        (c1, 2, False),
        (c2, 2, False),
    ]
    duals = [(sp2, lp), (sm2, lm), (a1, a2), (b1, b2), (c1, c2)]
    return _case("three-chain-zero", a, (rat(0), rat(1), rat(2)), rows, duals, 12)


def _three_topdouble_generic(a: Rational) -> CaseData:
    l1 = _L([_S(a + 1), _S(a + 1), _S(a)])
    l2 = _L([_S(a + 1)], _sp(_S(a, a + 1)))
    l3 = _L([_S(a + 1), _S(a + 1)], _sp(_S(a)))
    l4 = _L([_S(a + 1), _S(a, a + 1)])
    rows = [(x, 1, False) for x in (l1, l2, l3, l4)]
    return _case("three-topdouble-generic", a, (a, a + 1, a + 1), rows, [(l1, l2), (l3, l4)], 4)


def _three_topdouble_zero(a: Rational) -> CaseData:
    ep = CuspPlusMinus(Rational(0), +1)
    em = CuspPlusMinus(Rational(0), -1)
    p1 = _L([_S(1), _S(1)], ep)
    p2 = _T(SegType(_S(-1, 1), -1))
    q1 = _L([_S(1), _S(1)], em)
    q2 = _T(SegType(_S(-1, 1), +1))
    r1 = _L([_S(1)], SegType(_S(0, 1), +1))
    r2 = _L([_S(1)], SegType(_S(0, 1), -1))
    sd = _L([_S(1), _S(0, 1)])
    rows = [
        (p1, 1, True),
        (p2, 1, True),
        (q1, 1, True),
        (q2, 1, True),
        (r1, 1, True),
        (r2, 1, True),
        (sd, 1, False),
    ]
    duals = [(p1, p2), (q1, q2), (r1, r2), (sd, sd)]
    return _case("three-topdouble-zero", a, (rat(0), rat(1), rat(1)), rows, duals, None, complete=False)


def _three_basedouble_generic(a: Rational) -> CaseData:
    l1 = _L([_S(a), _S(a), _S(a + 1)])
    l2 = _L([_S(a)], _sp(_S(a, a + 1)))
    l3 = _L([_S(a), _S(a + 1)], _sp(_S(a)))
    l4 = _L([_S(a), _S(a, a + 1)])
    sd = _L([_S(a, a + 1)], _sp(_S(a)))
    rows = [(x, 1, False) for x in (l1, l2, l3, l4, sd)]
    return _case(
        "three-basedouble-generic", a, (a, a, a + 1), rows, [(l1, l2), (l3, l4), (sd, sd)], None, complete=False
    )


def _three_basedouble_half(a: Rational) -> CaseData:
    th = Rational(3, 2)
    u1 = _L([_S(th), _S(HALF), _S(HALF)])
    u2 = _T(SegType(_S(-HALF, th), +1))
    u3 = _L([_S(-HALF, th)])
    u4 = _L([_S(HALF, th)], _sp(_S(HALF)))
    u5 = _L([_S(th), _S(HALF)], _sp(_S(HALF)))
    u6 = _T(SegType(_S(-HALF, th), -1))
    u7 = _L([_S(HALF)], _sp(_S(HALF, th)))
    u8 = _L([_S(th)], SegType(_S(-HALF, HALF), -1))
    n1 = _L([_S(HALF, th), _S(HALF)])
    n2 = _L([_S(th)], SegType(_S(-HALF, HALF), +1))
    rows = [(x, 1, True) for x in (u1, u2, u3, u4, u5, u6, u7, u8)] + [(n1, 1, False), (n2, 1, False)]
    duals = [(u1, u2), (u3, u4), (u5, u6), (u7, u8), (n1, n2)]
    return _case("three-basedouble-half", a, (HALF, HALF, th), rows, duals, 10)


def _three_basedouble_zero(a: Rational) -> CaseData:
    ep = CuspPlusMinus(Rational(0), +1)
    em = CuspPlusMinus(Rational(0), -1)
    i1 = _T(TemperedInd((_S(0),), SegType(_S(0, 1), +1)))
    i2 = _L([_S(1)], TemperedInd((_S(0),), em))
    i3 = _T(TemperedInd((_S(0),), SegType(_S(0, 1), -1)))
    i4 = _L([_S(1)], TemperedInd((_S(0),), ep))
    m1 = _L([_S(0, 1)], ep)
    m2 = _L([_S(0, 1)], em)
    rows = [(i1, 1, True), (i2, 1, True), (i3, 1, True), (i4, 1, True), (m1, 2, True), (m2, 2, True)]
    return _case(
        "three-basedouble-zero", a, (rat(0), rat(0), rat(1)), rows, [(i1, i2), (i3, i4), (m1, m2)], 8
    )


def _three_triple_generic(a: Rational) -> CaseData:
    l1 = _L([_S(a), _S(a)], _sp(_S(a)))
    l2 = _L([_S(a), _S(a), _S(a)])
    return _case("three-triple-generic", a, (a, a, a), [(l1, 1, False), (l2, 1, False)], [(l1, l2)], 2)


def _three_triple_half(a: Rational) -> CaseData:
    i1 = _T(TemperedInd((_S(-HALF, HALF),), _sp(_S(HALF))))
    i2 = _L([_S(HALF), _S(HALF), _S(HALF)])
    sd = _L([_S(HALF)], SegType(_S(-HALF, HALF), +1))
    m1 = _L([_S(HALF)], SegType(_S(-HALF, HALF), -1))
    m2 = _L([_S(HALF), _S(HALF)], _sp(_S(HALF)))
    rows = [(i1, 1, True), (i2, 1, True), (sd, 2, True), (m1, 1, True), (m2, 1, True)]
    return _case("three-triple-half", a, (HALF, HALF, HALF), rows, [(i1, i2), (sd, sd), (m1, m2)], 6)


def _three_triple_zero(a: Rational) -> CaseData:
    p = _T(TemperedInd((_S(0), _S(0)), CuspPlusMinus(Rational(0), +1)))
    m = _T(TemperedInd((_S(0), _S(0)), CuspPlusMinus(Rational(0), -1)))
    return _case("three-triple-zero", a, (rat(0), rat(0), rat(0)), [(p, 1, True), (m, 1, True)], [(p, m)], 2)


def _three_straddle_generic(a: Rational) -> CaseData:
    u1 = _T(_sp(_S(a - 1), _S(a, a + 1)))
    u2 = _L([_S(a + 1), _S(a - 1, a)])
    u3 = _L([_S(a - 1)], _sp(_S(a, a + 1)))
    u4 = _L([_S(a + 1), _S(a), _S(a - 1)])
    n1 = _L([_S(a + 1)], _sp(_S(a - 1), _S(a)))
    n2 = _L([_S(a - 1, a + 1)])
    n3 = _L([_S(a + 1), _S(a - 1)], _sp(_S(a)))
    n4 = _L([_S(a, a + 1), _S(a - 1)])
    rows = [(x, 1, True) for x in (u1, u2, u3, u4)] + [(x, 1, False) for x in (n1, n2, n3, n4)]
    return _case(
        "three-straddle-generic", a, (a - 1, a, a + 1), rows, [(u1, u2), (u3, u4), (n1, n2), (n3, n4)], 8
    )


def _three_straddle_one(a: Rational) -> CaseData:
    tind = TemperedInd((_S(0),), CUSP)
    u1 = _T(TauInd(_S(0), +1, _sp(_S(1, 2))))
    u2 = _L([_S(1), _S(2)], tind)
    u3 = _T(TauInd(_S(0), -1, _sp(_S(1, 2))))
    u4 = _L([_S(2), _S(0, 1)])
    n1 = _L([_S(2)], TauInd(_S(0), -1, _sp(_S(1))))
    n2 = _L([_S(0, 2)])
    n3 = _L([_S(2)], TauInd(_S(0), +1, _sp(_S(1))))
    n4 = _L([_S(1, 2)], tind)
    rows = [(x, 1, True) for x in (u1, u2, u3, u4)] + [(x, 1, False) for x in (n1, n2, n3, n4)]
    return _case(
        "three-straddle-one", a, (rat(0), rat(1), rat(2)), rows, [(u1, u2), (u3, u4), (n1, n2), (n3, n4)], 8
    )


def _three_lowdouble_generic(a: Rational) -> CaseData:
    n1 = _L([_S(a)], _sp(_S(a - 1), _S(a)))
    n2 = _L([_S(a), _S(a - 1, a)])
    n3 = _L([_S(a - 1, a)], _sp(_S(a)))
    n4 = _L([_S(a), _S(a - 1), _S(a)])
    sd = _L([_S(a), _S(a - 1)], _sp(_S(a)))
    rows = [(n1, 1, False), (n2, 1, False), (n3, 1, False), (n4, 1, False), (sd, 1, True)]
    return _case(
        "three-lowdouble-generic", a, (a - 1, a, a), rows, [(n1, n2), (n3, n4), (sd, sd)], None, complete=False
    )


def _three_lowdouble_one(a: Rational) -> CaseData:
    tind = TemperedInd((_S(0),), CUSP)
    tp = TauInd(_S(0), +1, _sp(_S(1)))
    tm = TauInd(_S(0), -1, _sp(_S(1)))
    l1 = _L([_S(0, 1), _S(1)])
    l3 = _L([_S(0, 1)], _sp(_S(1)))
    l2 = _L([_S(1), _S(1)], tind)
    l6 = _T(SegType(_S(-1, 1), +1))
    l4 = _L([_S(1)], tp)
    l5 = _L([_S(1)], tm)
    l7 = _T(SegType(_S(-1, 1), -1))
    rows = [(x, 1, True) for x in (l1, l2, l3, l4, l5, l6, l7)]
    return _case(
        "three-lowdouble-one",
        a,
        (rat(0), rat(1), rat(1)),
        rows,
        [(l1, l3), (l2, l6), (l4, l4), (l5, l7)],
        None,
        complete=False,
    )


def _three_deepdouble_generic(a: Rational) -> CaseData:
    l1 = _L([_S(a - 1)], _sp(_S(a - 1), _S(a)))
    l2 = _L([_S(a - 1), _S(a - 1, a)])
    l3 = _L([_S(a - 1), _S(a - 1)], _sp(_S(a)))
    l4 = _L([_S(a - 1), _S(a - 1), _S(a)])
    rows = [(x, 1, False) for x in (l1, l2, l3, l4)]
    return _case("three-deepdouble-generic", a, (a - 1, a - 1, a), rows, [(l1, l2), (l3, l4)], 4)


def _three_deepdouble_threehalves(a: Rational) -> CaseData:
    th = Rational(3, 2)
    u1 = _L([_S(HALF)], _sp(_S(HALF), _S(th)))
    u2 = _L([_S(HALF, th), _S(HALF)])
    u3 = _L([_S(-HALF, th)])
    u4 = _T(TauInd(_S(-HALF, HALF), +1, _sp(_S(th))))
    u5 = _L([_S(HALF), _S(HALF), _S(th)])
    u6 = _L([_S(HALF), _S(HALF)], _sp(_S(th)))
    u7 = _L([_S(th)], TemperedInd((_S(-HALF, HALF),), CUSP))
    u8 = _T(TauInd(_S(-HALF, HALF), -1, _sp(_S(th))))
    rows = [(x, 1, True) for x in (u1, u2, u3, u4, u5, u6, u7, u8)]
    return _case(
        "three-deepdouble-threehalves",
        a,
        (HALF, HALF, th),
        rows,
        [(u1, u2), (u3, u4), (u5, u6), (u7, u8)],
        8,
    )


def _three_deepdouble_one(a: Rational) -> CaseData:
    tp = TauInd(_S(0), +1, _sp(_S(1)))
    tm = TauInd(_S(0), -1, _sp(_S(1)))
    c1 = _L([_S(0, 1)], TemperedInd((_S(0),), CUSP))
    c2 = _L([_S(1)], TemperedInd((_S(0), _S(0)), CUSP))
    c3 = _T(TemperedInd((_S(0),), tp))
    c4 = _T(TemperedInd((_S(0),), tm))
    rows = [(x, 1, True) for x in (c1, c2, c3, c4)]
    return _case(
        "three-deepdouble-one", a, (rat(0), rat(0), rat(1)), rows, [(c3, c2), (c4, c1)], None, complete=False
    )


def _three_ladder_generic(a: Rational) -> CaseData:
    u1 = _L([_S(a), _S(a - 1), _S(a - 2)])
    u2 = _L([_S(a - 1), _S(a - 2)], _sp(_S(a)))
    u3 = _L([_S(a), _S(a - 2, a - 1)])
    u4 = _L([_S(a - 2, a - 1)], _sp(_S(a)))
    u5 = _L([_S(a - 1, a), _S(a - 2)])
    u6 = _L([_S(a - 2)], _sp(_S(a - 1), _S(a)))
    u7 = _L([_S(a - 2, a)])
    u8 = _T(_sp(_S(a - 2), _S(a - 1), _S(a)))
    rows = [(x, 1, True) for x in (u1, u2, u3, u4, u5, u6, u7, u8)]
    return _case(
        "three-ladder-generic", a, (a - 2, a - 1, a), rows, [(u1, u2), (u3, u4), (u5, u6), (u7, u8)], 8
    )


def _three_ladder_two(a: Rational) -> CaseData:
    tind = TemperedInd((_S(0),), CUSP)
    u1 = _L([_S(2), _S(0, 1)])
    u2 = _L([_S(0, 1)], _sp(_S(2)))
    u3 = _L([_S(0, 2)])
    u4 = _T(TauInd(_S(0), -1, _sp(_S(1), _S(2))))
    u5 = _L([_S(1), _S(2)], tind)
    u6 = _L([_S(1)], TemperedInd((_S(0),), _sp(_S(2))))
    u7 = _L([_S(1, 2)], tind)
    u8 = _T(TauInd(_S(0), +1, _sp(_S(1), _S(2))))
    rows = [(x, 1, True) for x in (u1, u2, u3, u4, u5, u6, u7, u8)]
    return _case(
        "three-ladder-two", a, (rat(0), rat(1), rat(2)), rows, [(u1, u2), (u3, u4), (u5, u6), (u7, u8)], 8
    )


# --- dispatch ---------------------------------------------------------------


def case_for(exponents, cfg: LineConfig) -> CaseData:
    a = cfg.alpha
    exps = tuple(sorted(rat(x) for x in exponents))
    if len(exps) > 3:
        raise NotACataloguedCase(f"at most three exponents are catalogued, got {len(exps)}")
    off = tuple(x - a for x in exps)
    builders: dict[tuple, list[tuple[Callable[[Rational], bool], Callable[[Rational], CaseData]]]] = {
        (0,): [(lambda t: t >= HALF, _one_generic), (lambda t: t == 0, _one_zero)],
        (0, 1): [(lambda t: t >= HALF, _two_step_generic), (lambda t: t == 0, _two_step_zero)],
        (0, 0): [
            (lambda t: t >= 1, _two_equal_generic),
            (lambda t: t == HALF, _two_equal_half),
            (lambda t: t == 0, _two_equal_zero),
        ],
        (-1, 0): [(lambda t: t >= Rational(3, 2), _two_down_generic), (lambda t: t == 1, _two_down_one)],
        (0, 1, 2): [(lambda t: t >= HALF, _three_chain_generic), (lambda t: t == 0, _three_chain_zero)],
        (0, 1, 1): [(lambda t: t >= HALF, _three_topdouble_generic), (lambda t: t == 0, _three_topdouble_zero)],
        (0, 0, 1): [
            (lambda t: t >= 1, _three_basedouble_generic),
            (lambda t: t == HALF, _three_basedouble_half),
            (lambda t: t == 0, _three_basedouble_zero),
        ],
        (0, 0, 0): [
            (lambda t: t >= 1, _three_triple_generic),
            (lambda t: t == HALF, _three_triple_half),
            (lambda t: t == 0, _three_triple_zero),
        ],
        (-1, 0, 1): [(lambda t: t >= Rational(3, 2), _three_straddle_generic), (lambda t: t == 1, _three_straddle_one)],
        (-1, 0, 0): [(lambda t: t >= Rational(3, 2), _three_lowdouble_generic), (lambda t: t == 1, _three_lowdouble_one)],
        (-1, -1, 0): [
            (lambda t: t >= 2, _three_deepdouble_generic),
            (lambda t: t == Rational(3, 2), _three_deepdouble_threehalves),
            (lambda t: t == 1, _three_deepdouble_one),
        ],
        (-2, -1, 0): [(lambda t: t >= Rational(5, 2), _three_ladder_generic), (lambda t: t == 2, _three_ladder_two)],
    }
    if len(exps) == 0:
        sigma = tempered_class(CUSP)
        return _case("rank-zero", a, (), [(sigma, 1, True)], [(sigma, sigma)], 1)
    for guard, build in builders.get(off, []):
        if guard(a):
            return build(a)
    raise NotACataloguedCase(f"exponents {exps} at alpha={a} are not catalogued")


_PATTERNS = [
    (0,),
    (0, 1),
    (0, 0),
    (-1, 0),
    (0, 1, 2),
    (0, 1, 1),
    (0, 0, 1),
    (0, 0, 0),
    (-1, 0, 1),
    (-1, 0, 0),
    (-1, -1, 0),
    (-2, -1, 0),
]


def all_cases(cfg: LineConfig) -> list[CaseData]:
    out = []
    for off in _PATTERNS:
        exps = [cfg.alpha + k for k in off]
        if any(x < 0 for x in exps):
            continue
        try:
            out.append(case_for(exps, cfg))
        except NotACataloguedCase:
            continue
    return out


def dual_of(label, cfg: LineConfig):
    if not isinstance(label, ClassicalLabel):
        label = tempered_class(label)
    for case in all_cases(cfg):
        for x, y in case.duals:
            if label == x:
                return y
            if label == y:
                return x
    raise NotInDualityTable(f"{label} at alpha={cfg.alpha}")


# --- catalogued induction identities ---------------------------------------


def _key(*factors) -> ProductKey:
    return product_key(list(factors))


def identities(cfg: LineConfig) -> dict:
    """Exact composition series of specific induced representations.

    Keys are (product key, classical base label); values list the classes
    with multiplicities.  Identities that only hold at particular alpha are
    included only there.
    """
    a = cfg.alpha
    out: dict = {}

    def put(key, base, pieces):
        if not isinstance(base, ClassicalLabel):
            base = tempered_class(base)
        out[(key, base)] = tuple((p, 1) if not isinstance(p, tuple) else p for p in pieces)

    sp = _sp

    if a >= 1:
        # products around the (a, a+1) block
        put(_key(_S(a, a + 1)), sp(_S(a)), [_L([_S(a, a + 1)], sp(_S(a))), _L([_S(a)], sp(_S(a, a + 1)))])
        put(_key(_S(a)), sp(_S(a)), [_L([_S(a)], sp(_S(a)))])
        put(_key(_S(a)), _L([_S(a)]), [_L([_S(a), _S(a)])])
        put(_key(_S(a)), _L([_S(a, a + 1)]), [_L([_S(a), _S(a, a + 1)])])
        put(_key(_S(a)), _L([_S(a + 1)], sp(_S(a))), [_L([_S(a), _S(a + 1)], sp(_S(a)))])
        put(_key(_S(a)), _L([_S(a), _S(a + 1)]), [_L([_S(a), _S(a), _S(a + 1)])])
        put(_key(_S(a)), _L([_S(a), _S(a)]), [_L([_S(a), _S(a), _S(a)])])
        put(_key(_S(a)), _L([_S(a)], sp(_S(a))), [_L([_S(a), _S(a)], sp(_S(a)))])
        put(_key(_S(a + 1)), _L([_S(a, a + 1)]), [_L([_S(a + 1), _S(a, a + 1)])])
        put(_key(_S(a + 1)), _L([_S(a + 1)], sp(_S(a))), [_L([_S(a + 1), _S(a + 1)], sp(_S(a)))])
        put(_key(_S(a + 1)), _L([_S(a), _S(a + 1)]), [_L([_S(a + 1), _S(a + 1), _S(a)])])
        put(_key(_S(a + 1)), sp(_S(a, a + 1)), [_L([_S(a + 1)], sp(_S(a, a + 1)))])
    if a >= Rational(3, 2):
        # straddling and low-double identities
        put(_key(_S(a - 1, a)), sp(_S(a)), [_L([_S(a - 1, a)], sp(_S(a)))])
        put(
            _key(langlands(ms(_S(a - 1), _S(a)))),
            sp(_S(a)),
            [_L([_S(a), _S(a - 1)], sp(_S(a))), _L([_S(a)], sp(_S(a - 1), _S(a)))],
        )
        put(
            _key(_S(a - 1, a)),
            _L([_S(a)]),
            [_L([_S(a - 1, a), _S(a)]), _L([_S(a), _S(a - 1)], sp(_S(a)))],
        )
        put(
            _key(_S(a - 1)),
            _L([_S(a - 1)], sp(_S(a))),
            [_L([_S(a - 1), _S(a - 1)], sp(_S(a)))],
        )
        put(
            _key(_S(a)),
            _L([_S(a - 1)], sp(_S(a))),
            [_L([_S(a), _S(a - 1)], sp(_S(a))), _L([_S(a - 1, a)], sp(_S(a)))],
        )
        put(
            _key(_S(a)),
            _L([_S(a - 1), _S(a)]),
            [_L([_S(a), _S(a - 1), _S(a)]), _L([_S(a), _S(a - 1)], sp(_S(a)))],
        )
        put(
            _key(_S(a - 1)),
            _L([_S(a, a + 1)]),
            [_L([_S(a, a + 1), _S(a - 1)]), _L([_S(a - 1, a + 1)])],
        )
        put(_key(_S(a - 1)), _L([_S(a - 1, a)]), [_L([_S(a - 1), _S(a - 1, a)])])
        put(_key(_S(a - 1)), sp(_S(a - 1), _S(a)), [_L([_S(a - 1)], sp(_S(a - 1), _S(a)))])
        put(_key(_S(a - 1)), _L([_S(a - 1), _S(a)]), [_L([_S(a - 1), _S(a - 1), _S(a)])])
    if a == 1:
        tind = TemperedInd((_S(0),), CUSP)
        tp = TauInd(_S(0), +1, sp(_S(1)))
        tm = TauInd(_S(0), -1, sp(_S(1)))
        put(_key(_S(0)), _L([_S(1)]), [_L([_S(1)], tind), _L([_S(0, 1)])])
        put(_key(_S(0)), sp(_S(1)), [_T(tp), _T(tm)])
        put(_key(langlands(ms(_S(0), _S(1)))), CUSP, [_L([_S(1)], tind), _T(tm)])
        put(_key(_S(0)), sp(_S(1, 2)), [_T(TauInd(_S(0), +1, sp(_S(1, 2)))), _T(TauInd(_S(0), -1, sp(_S(1, 2))))])
        put(_key(_S(0)), _L([_S(0, 1)]), [_L([_S(0, 1)], tind)])
        put(_key(_S(0)), _L([_S(1)], tind), [_L([_S(1)], TemperedInd((_S(0), _S(0)), CUSP))])
        put(_key(_S(0)), tp, [_T(TemperedInd((_S(0),), tp))])
        put(_key(_S(0)), tm, [_T(TemperedInd((_S(0),), tm))])
    if a == HALF:
        th = Rational(3, 2)
        dplus = SegType(_S(-HALF, HALF), +1)
        dminus = SegType(_S(-HALF, HALF), -1)
        put(_key(_S(HALF, th)), _L([_S(HALF)]), [_L([_S(HALF, th), _S(HALF)]), _T(SegType(_S(-HALF, th), -1))])
        put(_key(_S(HALF)), sp(_S(HALF, th)), [_L([_S(HALF)], sp(_S(HALF, th))), _T(SegType(_S(-HALF, th), +1))])
        put(
            _key(_S(HALF)),
            _L([_S(HALF), _S(th)]),
            [_L([_S(th)], dminus), _L([_S(th), _S(HALF), _S(HALF)])],
        )
        put(_key(_S(HALF)), sp(_S(HALF)), [_T(dplus), _L([_S(HALF)], sp(_S(HALF)))])
        put(_key(_S(HALF)), _L([_S(HALF)]), [_T(dminus), _L([_S(HALF), _S(HALF)])])
        put(_key(_S(HALF)), dplus, [_L([_S(HALF)], dplus), _T(TemperedInd((_S(-HALF, HALF),), sp(_S(HALF))))])
        put(_key(_S(HALF)), dminus, [_L([_S(HALF)], dminus)])
        put(_key(_S(HALF)), _L([_S(HALF), _S(HALF)]), [_L([_S(HALF), _S(HALF), _S(HALF)]), _L([_S(HALF)], dplus)])
        put(_key(_S(HALF)), _L([_S(HALF)], sp(_S(HALF))), [_L([_S(HALF), _S(HALF)], sp(_S(HALF)))])
    if a == 0:
        ep = CuspPlusMinus(Rational(0), +1)
        em = CuspPlusMinus(Rational(0), -1)
        put(_key(_S(2)), SegType(_S(0, 1), +1), [_L([_S(2)], SegType(_S(0, 1), +1)), _T(SegType(_S(0, 2), +1))])
        put(_key(_S(2)), SegType(_S(0, 1), -1), [_L([_S(2)], SegType(_S(0, 1), -1)), _T(SegType(_S(0, 2), -1))])
        put(_key(_S(2)), _L([_S(1)], ep), [_L([_S(1), _S(2)], ep), _L([_S(1, 2)], ep)])
        put(_key(_S(2)), _L([_S(1)], em), [_L([_S(1), _S(2)], em), _L([_S(1, 2)], em)])
        put(
            _key(_S(1, 2)),
            ep,
            [_L([_S(1, 2)], ep), _L([_S(0, 2)]), _T(SegType(_S(0, 2), +1))],
        )
        put(
            _key(_S(1, 2)),
            em,
            [_L([_S(1, 2)], em), _L([_S(0, 2)]), _T(SegType(_S(0, 2), -1))],
        )
        put(_key(_S(2)), _L([_S(0, 1)]), [_L([_S(2), _S(0, 1)]), _L([_S(0, 2)])])
        put(_key(_S(0)), _L([_S(0, 1)]), [_L([_S(0, 1)], ep), _L([_S(0, 1)], em)])
        put(_key(_S(0)), ep, [_T(TemperedInd((_S(0),), ep))])
        put(_key(_S(0)), em, [_T(TemperedInd((_S(0),), em))])
        put(_key(_S(0)), TemperedInd((_S(0),), ep), [_T(TemperedInd((_S(0), _S(0)), ep))])
        put(_key(_S(0)), TemperedInd((_S(0),), em), [_T(TemperedInd((_S(0), _S(0)), em))])
    return out
