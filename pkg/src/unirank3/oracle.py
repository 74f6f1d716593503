"""Brute-force verification independent of the production formula code.

chain_multiplicity recounts full-flag cuspidal chains by explicit shuffle
enumeration, without the dynamic-programming path used by the ring module.
verify_suite runs the exhaustive identity suites backing the worked values
frozen into the test fixtures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .arith import Rational, rat
from .classical import ClassicalLabel, LineConfig, RSElement, tempered_class
from .glring import (
    GLElement,
    GLTensor,
    ProductKey,
    comult,
    gl_delta,
    gl_label,
    m_star,
    m_star_delta_closed,
    multiply,
    product_key,
    tensor_unit,
)
from .jacquet import (
    generalized_steinberg_restriction,
    gl_basis_normalize,
    expand,
    mu_star,
    mu_star_induced,
    restriction_segment_pm,
)
from .segments import EMPTY, GLIrrLabel, Segment, make_segment

__all__ = [
    "Undecidable",
    "UnknownSuite",
    "CuspidalChain",
    "chain_multiplicity",
    "SuiteReport",
    "verify_suite",
    "suite_names",
]


class Undecidable(ValueError):
    """A label resisted the implemented brute-force decompositions."""


class UnknownSuite(KeyError):
    """No registered property suite under that name."""


@dataclass(frozen=True)
class CuspidalChain:
    exponents: tuple[Rational, ...]
    classical_tail: Optional[ClassicalLabel] = None


def _delta_word(segment: Segment) -> tuple[Rational, ...]:
    return tuple(reversed(segment.points()))


def _interleavings(words: list[tuple[Rational, ...]], target: tuple[Rational, ...]) -> int:
    """Count interleavings of the words spelling the target, by recursion."""
    if not target:
        return 1 if all(not w for w in words) else 0
    total = 0
    head, rest = target[0], target[1:]
    for i, w in enumerate(words):
        if w and w[0] == head:
            total += _interleavings(words[:i] + [w[1:]] + words[i + 1 :], rest)
    return total


def _label_delta_terms(label: GLIrrLabel) -> list[tuple[int, list[Segment]]]:
    """Signed delta-product expansions of one irreducible label."""
    from .segments import delta_product_irreducible

    segs = list(label.ms)
    if len(segs) == 1 or delta_product_irreducible(segs):
        return [(1, segs)]
    if len(segs) == 2:
        s1, s2 = segs
        lo, hi = min(s1.begin, s2.begin), max(s1.end, s2.end)
        a, b = max(s1.begin, s2.begin), min(s1.end, s2.end)
        if a > b + 1 or (s1.begin - s2.begin).denominator != 1:
            return [(1, segs)]  # unlinked: plain product
        if s1.contains(s2) or s2.contains(s1):
            return [(1, segs)]
        union = make_segment(lo, hi)
        inter = make_segment(a, b)
        out = [(1, segs), (-1, [union] + ([inter] if inter is not EMPTY else []))]
        return out
    raise Undecidable(f"no brute-force expansion for {label}")


def _key_delta_terms(key: ProductKey) -> list[tuple[int, list[Segment]]]:
    terms: list[tuple[int, list[Segment]]] = [(1, [])]
    for label in key:
        expanded = []
        for sign, segs in terms:
            for s2, extra in _label_delta_terms(label):
                expanded.append((sign * s2, segs + extra))
        terms = expanded
    return terms


def chain_multiplicity(e, chain) -> int:
    """Exact multiplicity of the ordered cuspidal chain in the flag expansion."""
    if isinstance(chain, CuspidalChain):
        exps = tuple(rat(x) for x in chain.exponents)
        tail = chain.classical_tail
    else:
        exps = tuple(rat(x) for x in chain)
        tail = None
    if isinstance(e, (GLIrrLabel,)):
        e = gl_label(e)
    if isinstance(e, GLElement):
        items = [((key, None), c) for key, c in e]
    elif isinstance(e, RSElement):
        items = list(e)
    else:
        raise TypeError(f"not an expandable element: {e!r}")
    total = 0
    for (key, cl), c in items:
        if tail is not None and cl != tail:
            continue
        if sum(s.length for lab in key for s in lab.ms) != len(exps):
            continue
        for sign, segs in _key_delta_terms(key):
            words = [list(_delta_word(s)) for s in segs]
            total += c * sign * _interleavings([tuple(w) for w in words], exps)
    return total


# --- property suites ---------------------------------------------------------


@dataclass(frozen=True)
class SuiteReport:
    name: str
    passed: bool
    checked: int
    counterexample: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


def _window_segments(bound: int) -> list[Segment]:
    out = []
    for twice_b in range(-4, 7):
        b = Rational(twice_b, 2)
        for n in range(bound):
            e = b + n
            if e <= Rational(7, 2):
                out.append(make_segment(b, e))
    return out


def _suite_coassoc(bound: int) -> SuiteReport:
    """(comult x 1) o comult == (1 x comult) o comult on delta elements."""
    checked = 0
    for seg in _window_segments(bound):
        t = comult(gl_delta(seg))
        lhs: dict = {}
        rhs: dict = {}
        for (k1, k2), c in t:
            for (a, b), c2 in comult(GLElement({k1: 1})):
                lhs[(a, b, k2)] = lhs.get((a, b, k2), 0) + c * c2
            for (a, b), c2 in comult(GLElement({k2: 1})):
                rhs[(k1, a, b)] = rhs.get((k1, a, b), 0) + c * c2
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = {k: v for k, v in rhs.items() if v}
        checked += 1
        if lhs != rhs:
            return SuiteReport("coassoc", False, checked, str(seg))
    return SuiteReport("coassoc", True, checked)


def _suite_hopf_compat(bound: int) -> SuiteReport:
    """m*(x.y) == m*(x).m*(y) for pairs of delta elements."""
    segs = [s for s in _window_segments(bound) if s.length <= bound]
    checked = 0
    for s1, s2 in itertools.combinations_with_replacement(segs, 2):
        if s1.length + s2.length > bound:
            continue
        if (s1.begin - s2.begin).denominator != 1:
            continue
        lhs = m_star(multiply(gl_delta(s1), gl_delta(s2)))
        rhs = m_star(gl_delta(s1)) * m_star(gl_delta(s2))
        checked += 1
        if dict(iter(lhs)) != dict(iter(rhs)):
            return SuiteReport("hopf-compat", False, checked, f"{s1} {s2}")
    return SuiteReport("hopf-compat", True, checked)


def _suite_mseg(bound: int) -> SuiteReport:
    """Closed-form twisted restriction of a delta vs the composed definition."""
    checked = 0
    for seg in _window_segments(bound):
        lhs = m_star_delta_closed(seg)
        rhs = m_star(gl_delta(seg))
        checked += 1
        if dict(iter(lhs)) != dict(iter(rhs)):
            return SuiteReport("mseg-closed-vs-composed", False, checked, str(seg))
    return SuiteReport("mseg-closed-vs-composed", True, checked)


def _suite_uuvodu(bound: int) -> SuiteReport:
    """Constituent restrictions of a segment induction sum to the induced one."""
    from .classical import CUSP, segment_constituents

    checked = 0
    for twice_a in (0, 1, 2, 3, 4):
        a = Rational(twice_a, 2)
        cfg = LineConfig(a)
        sigma = tempered_class(CUSP)
        one = RSElement({(product_key([]), sigma): 1})
        b = -a
        while b <= a + 3:
            e = b
            while e <= a + 3:
                seg = make_segment(b, e)
                lhs = RSElement({})
                for piece in segment_constituents(seg, cfg):
                    lhs += mu_star(piece, cfg)
                rhs = mu_star_induced(m_star(gl_delta(seg)), one)
                l = dict(iter(gl_basis_normalize(expand(lhs, cfg))))
                r = dict(iter(gl_basis_normalize(expand(rhs, cfg))))
                checked += 1
                if {k: v for k, v in l.items() if v} != {k: v for k, v in r.items() if v}:
                    return SuiteReport("uuvodu-consistency", False, checked, f"alpha={a} {seg}")
                e += 1
            b += 1
    return SuiteReport("uuvodu-consistency", True, checked)


def _suite_sp_specialization(bound: int) -> SuiteReport:
    """Segment restriction at the strongly positive edge matches the chain formula."""
    checked = 0
    for twice_a in (1, 2, 3, 4, 5):
        a = Rational(twice_a, 2)
        cfg = LineConfig(a)
        for n in range(bound):
            seg = make_segment(a, a + n)
            lhs = dict(iter(generalized_steinberg_restriction(seg, cfg)))
            rhs = dict(iter(restriction_segment_pm(seg, +1, cfg)))
            checked += 1
            if lhs != rhs:
                return SuiteReport("jm-sp-specialization", False, checked, f"alpha={a} {seg}")
    return SuiteReport("jm-sp-specialization", True, checked)


_SUITES = {
    "coassoc": _suite_coassoc,
    "hopf-compat": _suite_hopf_compat,
    "mseg-closed-vs-composed": _suite_mseg,
    "uuvodu-consistency": _suite_uuvodu,
    "jm-sp-specialization": _suite_sp_specialization,
}


def suite_names() -> list[str]:
    return sorted(_SUITES)


def verify_suite(name: str, size_bound: int = 4) -> SuiteReport:
    try:
        run = _SUITES[name]
    except KeyError:
        raise UnknownSuite(name) from None
    return run(size_bound)
