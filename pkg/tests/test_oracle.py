import random

import pytest

from unirank3.arith import Rational
from unirank3.glring import chain_count, gl_label, multiply, product_key
from unirank3.oracle import (
    CuspidalChain,
    Undecidable,
    UnknownSuite,
    chain_multiplicity,
    suite_names,
    verify_suite,
)
from unirank3.segments import langlands, make_segment, ms

S = make_segment


def test_frozen_chain_examples():
    delta = langlands(S(0, 1))
    assert chain_multiplicity(delta, (1, 0)) == 1
    assert chain_multiplicity(delta, (0, 1)) == 0
    zeta = langlands(ms(S(0), S(1)))
    assert chain_multiplicity(zeta, (0, 1)) == 1
    assert chain_multiplicity(zeta, (1, 0)) == 0
    lam = gl_label(langlands(ms(S(0), S(1))))
    lam = lam + gl_label(langlands(S(0, 1)))  # standard module of {[0],[1]}
    assert chain_multiplicity(lam, (0, 1)) == 1
    assert chain_multiplicity(lam, (1, 0)) == 1


def test_identical_words_count_multiply():
    e = multiply(gl_label(langlands(S(0))), gl_label(langlands(S(0))))
    assert chain_multiplicity(e, (Rational(0), Rational(0))) == 2


def test_cuspidal_chain_wrapper():
    chain = CuspidalChain((Rational(1), Rational(0)))
    assert chain_multiplicity(langlands(S(0, 1)), chain) == 1


def test_rank_mismatch_is_zero():
    assert chain_multiplicity(langlands(S(0, 1)), (0,)) == 0


def test_undecidable_label():
    bad = langlands(ms(S(0, 1), S(1, 2), S(2, 3)))
    with pytest.raises(Undecidable):
        chain_multiplicity(bad, (1, 0, 2, 1, 3, 2))


def test_dual_route_against_ring_counts():
    rng = random.Random(7)
    pool = [S(Rational(b, 2), Rational(b, 2) + n) for b in range(-4, 5) for n in range(3)]
    for _ in range(60):
        segs = rng.sample(pool, rng.randint(1, 3))
        key = product_key(segs)
        exps = sorted((x for s in segs for x in s.points()), reverse=True)
        rng.shuffle(exps)
        chain = tuple(exps)
        elem = None
        for s in segs:
            nxt = gl_label(langlands(s))
            elem = nxt if elem is None else multiply(elem, nxt)
        assert chain_multiplicity(elem, chain) == chain_count(key, chain)


def test_suite_registry():
    assert suite_names() == [
        "coassoc",
        "hopf-compat",
        "jm-sp-specialization",
        "mseg-closed-vs-composed",
        "uuvodu-consistency",
    ]
    with pytest.raises(UnknownSuite):
        verify_suite("nope")


def test_small_suite_report_shape():
    report = verify_suite("mseg-closed-vs-composed", 3)
    assert report.passed and report.checked > 0
    doc = report.to_json_dict()
    assert set(doc) == {"suite", "passed", "checked", "counterexample"}
