"""Unitarizability classification for rank at most three.

Three layers: full enumeration for the catalogued integral cases, region
predicates for arbitrary exponents on a single line, and the mixed-line
reduction that classifies each cuspidal line independently and takes the
conjunction of the verdicts.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .arith import Rational, rat
from ._tables import CaseData, NotACataloguedCase, case_for
from .classical import ClassicalLabel, LineConfig, bounds_check, classical_text

__all__ = [
    "ALL",
    "SOME",
    "NONE",
    "RankExceeded",
    "NotACataloguedCase",
    "QueryLine",
    "ExponentQuery",
    "ReportEntry",
    "ClassificationReport",
    "max_rank",
    "classify_region",
    "enumerate_case",
    "jantzen_classify",
    "weakly_real_check",
]

ALL = "AllUnitarizable"
SOME = "SomeUnitarizable"
NONE = "NoneUnitarizable"


class RankExceeded(ValueError):
    """More exponents than the supported generalized rank."""


def max_rank() -> int:
    """Supported rank cap; UNIRANK3_MAX_RANK can only lower it."""
    raw = os.environ.get("UNIRANK3_MAX_RANK")
    if raw is None:
        return 3
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"UNIRANK3_MAX_RANK must be an integer: {raw!r}") from exc
    return min(3, cap)


@dataclass(frozen=True)
class QueryLine:
    config: LineConfig
    exponents: tuple[Rational, ...]
    selfcontragredient: bool = True

    def __post_init__(self) -> None:
        exps = tuple(sorted(Rational(abs(rat(x))) for x in self.exponents))
        object.__setattr__(self, "exponents", exps)


@dataclass(frozen=True)
class ExponentQuery:
    lines: tuple[QueryLine, ...]

    @classmethod
    def single(cls, alpha, exponents) -> "ExponentQuery":
        return cls((QueryLine(LineConfig(rat(alpha)), tuple(exponents)),))

    @property
    def total_rank(self) -> int:
        return sum(len(line.exponents) for line in self.lines)


@dataclass(frozen=True)
class ReportEntry:
    label: ClassicalLabel
    mult: int
    unitarizable: bool
    dual_of: Optional[int]  # index of the dual entry; None when self-dual

    def to_json_dict(self) -> dict:
        return {
            "label": classical_text(self.label),
            "mult": self.mult,
            "unitarizable": self.unitarizable,
            "dual_of": self.dual_of,
        }


@dataclass(frozen=True)
class ClassificationReport:
    verdict: str
    subquotients: tuple[ReportEntry, ...] = ()
    length: Optional[int] = None
    provenance: str = ""
    complete: bool = True

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "subquotients": [e.to_json_dict() for e in self.subquotients],
            "length": self.length,
            "provenance": self.provenance,
            "complete": self.complete,
        }


def _aggregate(case: CaseData) -> str:
    flags = [e.unit for e in case.entries]
    if all(flags):
        return ALL if case.complete else SOME
    if any(flags):
        return SOME
    return NONE


def _case_report(case: CaseData) -> ClassificationReport:
    labels = [e.label for e in case.entries]
    partner = {}
    for x, y in case.duals:
        partner[x] = y
        partner[y] = x
    entries = []
    for i, e in enumerate(case.entries):
        dual = partner.get(e.label, e.label)
        j = labels.index(dual) if dual in labels else None
        entries.append(ReportEntry(e.label, e.mult, e.unit, None if j == i else j))
    length = case.length
    if length is None:
        length = sum(e.mult for e in case.entries)
    return ClassificationReport(
        verdict=_aggregate(case),
        subquotients=tuple(entries),
        length=length,
        provenance=f"case:{case.name}",
        complete=case.complete,
    )


def enumerate_case(alpha, exponents) -> ClassificationReport:
    """Full composition series with flags for a catalogued exponent pattern."""
    cfg = LineConfig(rat(alpha))
    exps = tuple(sorted(Rational(abs(rat(x))) for x in exponents))
    if len(exps) > max_rank():
        raise RankExceeded(f"{len(exps)} exponents exceed the rank cap")
    return _case_report(case_for(exps, cfg))


# --- region predicates -------------------------------------------------------


def _region_rank2(x1, x2, a) -> tuple[str, str]:
    if a >= 1:
        if x1 + x2 <= 1:
            return ALL, "region:x1+x2<=1"
        if x1 + 1 <= x2 <= a:
            return ALL, "region:x1+1<=x2<=alpha"
        if (x1, x2) == (a, a + 1):
            return SOME, "region:(alpha,alpha+1)"
        return NONE, "region:outside"
    if a == Rational(1, 2):
        if x2 <= a:
            return ALL, "region:x<=1/2"
        if (x1, x2) == (a, a + 1):
            return SOME, "region:(1/2,3/2)"
        return NONE, "region:outside"
    # a == 0
    if x1 + x2 <= 1:
        return ALL, "region:x1+x2<=1"
    return NONE, "region:outside"


def _region_rank3_large(x1, x2, x3, a) -> tuple[str, str]:
    # a >= 3/2
    if x2 + x3 <= 1:
        return ALL, "region:a"
    if x1 + x2 <= 1 and x2 + 1 <= x3 <= a:
        return ALL, "region:b"
    if x1 + x2 <= 1 and 1 - x1 <= x3 <= 1 + x1:
        return ALL, "region:c"
    if x1 + 1 <= x2 and x2 + 1 <= x3 <= a:
        return ALL, "region:d"
    if (x1, x2, x3) == (a, a + 1, a + 2):
        return SOME, "region:(alpha,alpha+1,alpha+2)"
    if (x2, x3) == (a, a + 1) and x1 <= a - 1:
        return SOME, "region:(x1,alpha,alpha+1)"
    if (x1, x2, x3) == (a - 1, a, a):
        return SOME, "region:(alpha-1,alpha,alpha)"
    return NONE, "region:outside"


def _region_rank3_one(x1, x2, x3) -> tuple[str, str]:
    if x2 + x3 <= 1:
        return ALL, "region:a"
    if x1 + x2 <= 1 and 1 - x1 <= x3 <= 1:
        return ALL, "region:b"
    if (x1, x2, x3) == (1, 2, 3):
        return SOME, "region:(1,2,3)"
    if (x1, x2, x3) == (0, 1, 2):
        return SOME, "region:(0,1,2)"
    return NONE, "region:outside"


def _region_rank3_half(x1, x2, x3) -> tuple[str, str]:
    h = Rational(1, 2)
    if x3 <= h:
        return ALL, "region:x<=1/2"
    if (x1, x2, x3) == (h, h + 1, h + 2):
        return SOME, "region:(1/2,3/2,5/2)"
    if (x2, x3) == (h, h + 1) and x1 <= h:
        return SOME, "family:(x,1/2,3/2)"
    if (x1, x2) == (h, h) and h < x3 <= h + 1:
        return SOME, "family:(1/2,1/2,x)"
    # {|x-1/2|, 1/2, x+1/2} for 0 <= x <= 1
    if h in (x1, x2, x3):
        rest = sorted([x1, x2, x3])
        rest.remove(h)
        p, q = rest
        x = q - h
        if 0 <= x <= 1 and abs(x - h) == p:
            return SOME, "family:(|x-1/2|,1/2,x+1/2)"
    # {|x-1|, x, 1+x} for 0 <= x <= 1/2
    x = x3 - 1
    if 0 <= x <= h and sorted([abs(x - 1), x]) == [x1, x2]:
        return SOME, "family:(|x-1|,x,1+x)"
    return NONE, "region:outside"


def _region_rank3_zero(x1, x2, x3) -> tuple[str, str]:
    if x1 > 0:
        return NONE, "region:x1>0"
    if x2 + x3 <= 1:
        return ALL, "region:x2+x3<=1"
    if (x1, x2, x3) == (0, 1, 2):
        return SOME, "region:(0,1,2)"
    if x3 == 1 and x2 <= 1:
        return SOME, "family:(0,x,1)"
    return NONE, "region:outside"


def classify_region(q: ExponentQuery) -> ClassificationReport:
    """Verdict for one line of exponents from the published region maps."""
    if len(q.lines) != 1:
        raise ValueError("classify_region expects a single-line query")
    line = q.lines[0]
    cfg, exps = line.config, line.exponents
    if len(exps) > max_rank():
        raise RankExceeded(f"{len(exps)} exponents exceed the rank cap")
    a = cfg.alpha
    # exact lattice matches defer to the catalogued tables
    try:
        return _case_report(case_for(exps, cfg))
    except NotACataloguedCase:
        pass
    if len(exps) == 0:
        return ClassificationReport(ALL, provenance="rank-zero")
    if not bounds_check(exps, cfg):
        return ClassificationReport(NONE, provenance="bounds:violated")
    if len(exps) == 1:
        if exps[0] <= a:
            return ClassificationReport(ALL, provenance="region:x<=alpha")
        return ClassificationReport(NONE, provenance="region:x>alpha")
    if len(exps) == 2:
        verdict, tag = _region_rank2(exps[0], exps[1], a)
    else:
        x1, x2, x3 = exps
        if a >= Rational(3, 2):
            verdict, tag = _region_rank3_large(x1, x2, x3, a)
        elif a == 1:
            verdict, tag = _region_rank3_one(x1, x2, x3)
        elif a == Rational(1, 2):
            verdict, tag = _region_rank3_half(x1, x2, x3)
        else:
            verdict, tag = _region_rank3_zero(x1, x2, x3)
    return ClassificationReport(verdict, provenance=tag)


# --- mixed-line reduction ----------------------------------------------------


def jantzen_classify(q: ExponentQuery) -> ClassificationReport:
    """Per-line classification combined by conjunction of the verdicts."""
    if q.total_rank > max_rank():
        raise RankExceeded(f"total rank {q.total_rank} exceeds the rank cap")
    verdicts = []
    tags = []
    for line in q.lines:
        report = classify_region(ExponentQuery((line,)))
        verdicts.append(report.verdict)
        tags.append(f"{line.config.line_name}@{line.config.alpha}:{report.verdict}")
    if any(v == NONE for v in verdicts):
        verdict = NONE
    elif all(v == ALL for v in verdicts):
        verdict = ALL
    else:
        verdict = SOME
    return ClassificationReport(verdict, provenance="jantzen[" + ";".join(tags) + "]")


def weakly_real_check(q: ExponentQuery) -> bool:
    """All lines declared selfcontragredient (exponents are rational, so real)."""
    return all(line.selfcontragredient for line in q.lines)
