import pytest

from unirank3._tables import all_cases
from unirank3.arith import rat
from unirank3.classical import (
    CUSP,
    LineConfig,
    StronglyPositive,
    ass_dual,
    bounds_check,
    class_rank,
    classical,
    classical_text,
    jord_rho,
    lt_reducibility,
    parse_classical,
    segment_constituents,
    tempered_class,
)
from unirank3.segments import langlands, make_segment

S = make_segment


def test_line_config_validation():
    LineConfig(rat("1/2"))
    with pytest.raises(ValueError):
        LineConfig(rat("-1"))
    with pytest.raises(ValueError):
        LineConfig(rat("1/3"))


def test_lt_reducibility_rank_one(configs):
    cfg = configs["1"]
    assert lt_reducibility(langlands(S(1)), cfg) is True
    assert lt_reducibility(langlands(S(2)), cfg) is False


def test_segment_constituents_shapes(configs):
    # symmetric segment through the reducibility point: two tempered pieces
    got = [classical_text(c) for c in segment_constituents(S(-1, 1), configs["1"])]
    assert got == ["d([-1,1]+;s)", "d([-1,1]-;s)"]
    # strictly positive segment at the edge: sq-integrable piece plus L-quotient
    got = [classical_text(c) for c in segment_constituents(S(1, 2), configs["1"])]
    assert got == ["d_sp([1,2];s)", "L([1,2]; s)"]
    # alpha=0 symmetric-end case has three pieces
    got = [classical_text(c) for c in segment_constituents(S(0, 1), configs["0"])]
    assert got == ["d([0,1]+;s)", "d([0,1]-;s)", "L([0,1]; s)"]


def test_jord_rho_values(configs):
    cfg = configs["2"]
    assert sorted(jord_rho(tempered_class(CUSP), cfg)) == [1, 3]
    sp = classical((), StronglyPositive((S(1), S(2))))
    assert sorted(jord_rho(sp, cfg)) == [3, 5]


def test_bounds_check(configs):
    cfg = configs["2"]
    assert bounds_check((rat(2), rat(3), rat(4)), cfg)
    assert not bounds_check((rat(4), rat(5), rat(6)), cfg)
    assert bounds_check((rat(0), rat(1), rat(2)), configs["0"])


def test_class_rank():
    assert class_rank(tempered_class(CUSP)) == 0
    assert class_rank(parse_classical("L([1,3];s)")) == 3
    assert class_rank(parse_classical("d_sp([1],[2];s)")) == 2


def test_ass_dual_example(configs):
    label = parse_classical("L([1,3];s)")
    dual = ass_dual(label, configs["2"])
    assert classical_text(dual) == "L([3]; d_sp([1],[2];s))"
    assert ass_dual(dual, configs["2"]) == label


def test_parse_print_round_trip_on_catalogue(configs):
    for cfg in configs.values():
        for case in all_cases(cfg):
            for entry in case.entries:
                text = classical_text(entry.label)
                assert parse_classical(text) == entry.label, text
