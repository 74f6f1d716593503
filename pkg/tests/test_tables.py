import pytest

from unirank3._tables import NotACataloguedCase, all_cases, case_for
from unirank3.arith import rat
from unirank3.classical import LineConfig, StronglyPositive, classical
from unirank3.segments import make_segment

S = make_segment


def test_case_for_unknown_pattern():
    cfg = LineConfig(rat(2))
    with pytest.raises(NotACataloguedCase):
        case_for((rat(1), rat(5)), cfg)


def test_entries_well_formed(configs):
    for cfg in configs.values():
        for case in all_cases(cfg):
            labels = case.labels()
            assert len(set(labels)) == len(labels), case.name
            for entry in case.entries:
                assert entry.mult >= 1
            if case.length is not None:
                assert case.length >= sum(e.mult for e in case.entries) or not case.complete
                assert case.length == sum(e.mult for e in case.entries) or case.length > 0


def test_dual_pairs_stay_inside_case(configs):
    for cfg in configs.values():
        for case in all_cases(cfg):
            labels = set(case.labels())
            flags = {e.label: e.unit for e in case.entries}
            for x, y in case.duals:
                assert x in labels and y in labels, case.name
                assert flags[x] == flags[y], case.name


def test_rank2_counts():
    # one step up from the reducibility point: 4 classes, 2 unitarizable
    for a_ in ("1", "3/2", "2", "5/2"):
        a = rat(a_)
        case = case_for((a, a + 1), LineConfig(a))
        assert len(case.entries) == 4
        assert sum(e.unit for e in case.entries) == 2
    # one step down: 4 classes, all unitarizable
    for a_ in ("3/2", "2", "5/2"):
        a = rat(a_)
        case = case_for((a - 1, a), LineConfig(a))
        assert len(case.entries) == 4
        assert all(e.unit for e in case.entries)


def test_regime_coherence_three_chain():
    # the (a, a+1, a+2) table is uniform in a above the low thresholds
    shapes = []
    for a_ in ("2", "5/2", "7/2"):
        a = rat(a_)
        case = case_for((a, a + 1, a + 2), LineConfig(a))
        shapes.append(
            (
                len(case.entries),
                tuple(e.mult for e in case.entries),
                tuple(e.unit for e in case.entries),
                len(case.duals),
                case.length,
            )
        )
    assert shapes[0] == shapes[1] == shapes[2]


def test_distinguished_low_double_class_is_unitarizable():
    for a_ in ("3/2", "2", "5/2"):
        a = rat(a_)
        case = case_for((a - 1, a, a), LineConfig(a))
        want = classical([S(a), S(a - 1)], StronglyPositive((S(a),)))
        flags = {e.label: e.unit for e in case.entries}
        assert flags[want] is True
