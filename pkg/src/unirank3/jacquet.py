"""Twisted Jacquet restriction over the classical tower.

The central object is mu_star: the restriction of an irreducible class to
(general-linear part) (x) (smaller classical part), computed from closed
formulas for segment pieces plus a table of worked low-rank restrictions.
On top of it sit a multiplicity engine with interval bounds and the
non-unitarity certificate comparing a forced lower bound against the
computed multiplicity of a distinguished Jacquet term.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .arith import Rational
from .classical import (
    CUSP,
    ClassicalLabel,
    Cusp,
    CuspPlusMinus,
    Induced,
    LineConfig,
    NoFormulaAvailable,
    RSElement,
    SegType,
    StronglyPositive,
    TauInd,
    TemperedInd,
    classical,
    d_up_and_du,
    resolve_delta_pm,
    resolve_l_alpha,
    lt_reducibility,
    segment_constituents,
    tempered_class,
)
from .glring import (
    GLElement,
    GLTensor,
    ProductKey,
    chain_count,
    gl_delta,
    gl_label,
    gl_unit,
    m_star,
    m_star_gl,
    m_star_gl_ladder,
    ladder_delta_expansion,
    product_key,
    tensor_unit,
)
from .segments import (
    EMPTY,
    GLIrrLabel,
    Multisegment,
    Segment,
    contragredient,
    delta_product_irreducible,
    label_contragredient,
    langlands,
    make_segment,
    ms,
)

__all__ = [
    "JacquetTerm",
    "Bounds",
    "mu_star",
    "mu_star_induced",
    "m_star_key",
    "s_gl",
    "expand",
    "gl_basis_normalize",
    "induced_of",
    "multiplicity",
    "mult_in_key",
    "nonunit_certificate",
    "restriction_segment_pm",
    "restriction_segment_quotient",
    "generalized_steinberg_restriction",
]

SIGMA = tempered_class(CUSP)


@dataclass(frozen=True)
class JacquetTerm:
    """One basis term (product key) (x) (classical class) to look for."""

    key: ProductKey
    classical: object


@dataclass(frozen=True)
class Bounds:
    """Interval of possible multiplicities; upper None means unbounded."""

    lower: int
    upper: Optional[int]

    def __post_init__(self) -> None:
        if self.upper is not None and self.upper < self.lower:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")


def _as_interval(v) -> tuple[int, Optional[int]]:
    if isinstance(v, Bounds):
        return v.lower, v.upper
    return v, v


def _pack(lo: int, hi: Optional[int]) -> Union[int, Bounds]:
    return lo if hi == lo else Bounds(lo, hi)


# --- assembling induced classical slots -------------------------------------


def induced_of(key, base):
    """y x| base as a classical slot, flattening nested formal inductions."""
    k = product_key(key)
    if isinstance(base, Induced):
        k = product_key(k + base.key)
        base = base.base
    if not isinstance(base, (ClassicalLabel, Induced)):
        base = tempered_class(base)
    if not k:
        return base
    return Induced(k, base)


def _rs(key_factors, cl, coeff: int = 1) -> RSElement:
    if cl is None:
        return RSElement()
    if not isinstance(cl, (ClassicalLabel, Induced)):
        cl = tempered_class(cl)
    return RSElement({(product_key(key_factors), cl): coeff})


def _one_it(label) -> RSElement:
    return _rs([], label)


# --- twisted general-linear restriction of product keys ---------------------


def _m_star_factor(label: GLIrrLabel) -> GLTensor:
    if label.is_delta:
        return m_star(gl_delta(label.segment))
    if delta_product_irreducible(label.ms):
        out = tensor_unit()
        for s in label.ms:
            out = out * m_star(gl_delta(s))
        return out
    out = GLTensor()
    for sign, factors in ladder_delta_expansion(label):
        t = tensor_unit()
        for s in factors:
            t = t * m_star(gl_delta(s))
        out += t.scale(sign)
    return out


def m_star_key(key: ProductKey) -> GLTensor:
    """Full twisted restriction of the product named by the key."""
    out = tensor_unit()
    for label in key:
        out = out * _m_star_factor(label)
    return out


def _m_star_gl_factor(label: GLIrrLabel) -> GLElement:
    if label.is_delta:
        return m_star_gl(gl_delta(label.segment))
    if delta_product_irreducible(label.ms):
        out = gl_unit()
        for s in label.ms:
            out = out * m_star_gl(gl_delta(s))
        return out
    return m_star_gl_ladder(label)


def mu_star_induced(tensor: GLTensor, base_elem: RSElement) -> RSElement:
    """M*(pi) x| mu*(base): restriction of a formal induction pi x| base."""
    out: dict = {}
    for (g, y), c1 in tensor:
        for (x, cl), c2 in base_elem:
            key = product_key(g + x)
            slot = induced_of(y, cl)
            k = (key, slot)
            out[k] = out.get(k, 0) + c1 * c2
    return RSElement(out)


# --- closed restriction formulas --------------------------------------------


def restriction_segment_pm(segment: Segment, sign: int, cfg: LineConfig) -> RSElement:
    """mu* of the plus/minus square-integrable piece of a segment induction."""
    a = cfg.alpha
    b, d = segment.begin, segment.end
    c = Rational(-b)
    out = RSElement()
    # square-integrable inner pieces; beyond i = c only one-sided segments
    # contribute, and the resolver drops the rest
    top = max(c, Rational(d - 1))
    i = Rational(-c - 1)
    while i <= top:
        j = Rational(i + 1)
        while j <= d:
            inner = resolve_delta_pm(make_segment(i + 1, j), sign, cfg)
            if inner is not None:
                out += _rs([make_segment(-i, c), make_segment(j + 1, d)], inner)
            j = Rational(j + 1)
        i = Rational(i + 1)
    # Langlands-type inner pieces, center strictly negative
    i = Rational(-c - 1)
    while i <= d:
        j = Rational(i + 1)
        while j <= c:
            if i + j < -1:
                inner = resolve_l_alpha(make_segment(i + 1, j), cfg)
                if inner is not None:
                    out += _rs([make_segment(-i, c), make_segment(j + 1, d)], inner)
            j = Rational(j + 1)
        i = Rational(i + 1)
    # cuspidal stratum; the cutoff depends on the sign
    lim = Rational(a - 1) if sign > 0 else Rational(-a - 1)
    i = Rational(-c - 1)
    while i <= lim:
        out += _rs([make_segment(-i, c), make_segment(i + 1, d)], SIGMA)
        i = Rational(i + 1)
    return out


def restriction_segment_quotient(segment: Segment, cfg: LineConfig) -> RSElement:
    """mu* of the Langlands-type constituent of a reducible segment induction.

    The general-linear parts are irreducible two-segment labels, not formal
    delta products.
    """
    a = cfg.alpha
    b, d = segment.begin, segment.end
    c = Rational(-b)
    out = RSElement()
    i = Rational(-c - 1)
    while i <= d:
        j = Rational(i + 1)
        while j <= d:
            if i + j >= 0:
                inner = resolve_l_alpha(make_segment(i + 1, j), cfg)
                if inner is not None:
                    gl = Multisegment.of(make_segment(-i, c), make_segment(j + 1, d))
                    factors = [langlands(gl)] if len(gl) else []
                    out += _rs(factors, inner)
            j = Rational(j + 1)
        i = Rational(i + 1)
    i = Rational(a)
    while i <= d:
        gl = Multisegment.of(make_segment(-i, c), make_segment(i + 1, d))
        factors = [langlands(gl)] if len(gl) else []
        out += _rs(factors, SIGMA)
        i = Rational(i + 1)
    return out


def generalized_steinberg_restriction(segment: Segment, cfg: LineConfig) -> RSElement:
    """mu* of the strongly positive piece of [alpha, alpha+n]."""
    a = cfg.alpha
    if segment.begin != a:
        raise NoFormulaAvailable(f"segment must start at alpha: {segment}")
    out = RSElement()
    k = -1
    n = segment.length - 1
    while k <= n:
        head = make_segment(a + k + 1, a + n)
        if k < 0:
            inner = SIGMA
        else:
            inner = tempered_class(StronglyPositive((make_segment(a, a + k),)))
        out += _rs([head], inner)
        k += 1
    return out


# --- worked low-rank restrictions -------------------------------------------


def _S(b, e=None) -> Segment:
    return make_segment(b, e)


def _lab(*segs) -> GLIrrLabel:
    return langlands(Multisegment.of(*segs))


@lru_cache(maxsize=None)
def _display_table(cfg: LineConfig) -> dict:
    a = cfg.alpha
    table: dict = {}

    def put(label, *terms):
        elem = _one_it(label)
        for t in terms:
            coeff, factors, cl = (1, t[0], t[1]) if len(t) == 2 else t
            elem += _rs(factors, cl, coeff)
        table[label] = elem

    sp = lambda *segs: StronglyPositive(tuple(segs))

    if a >= Rational(1, 2):
        # Langlands quotient one step above a rank-one square-integrable piece
        put(
            classical([_S(a + 1)], sp(_S(a))),
            ([_S(-a - 1)], tempered_class(sp(_S(a)))),
            ([_S(a)], classical([_S(a + 1)])),
            ([_S(a), _S(-a - 1)], SIGMA),
            ([_lab(_S(a), _S(a + 1))], SIGMA),
        )
    if a >= Rational(3, 2):
        put(
            tempered_class(sp(_S(a - 1), _S(a))),
            ([_S(a - 1)], tempered_class(sp(_S(a)))),
            ([_lab(_S(a - 1), _S(a))], SIGMA),
        )
        put(
            classical([_S(a - 1)], sp(_S(a))),
            ([_S(a)], classical([_S(a - 1)])),
            ([_S(1 - a)], tempered_class(sp(_S(a)))),
            ([_S(1 - a), _S(a)], SIGMA),
            ([_S(a - 1, a)], SIGMA),
        )
        put(
            classical([_S(a - 1), _S(a)]),
            ([_S(-a)], classical([_S(a - 1)])),
            ([_S(a - 1)], classical([_S(a)])),
            ([_S(a - 1), _S(-a)], SIGMA),
            ([_lab(_S(-a), _S(1 - a))], SIGMA),
        )
        put(
            classical([_S(a - 1), _S(a)], sp(_S(a))),
            ([_S(-a)], classical([_S(a - 1)], sp(_S(a)))),
            ([_S(a)], classical([_S(a - 1), _S(a)])),
            ([_S(-a), _S(a)], classical([_S(a - 1)])),
            ([_lab(_S(-a), _S(1 - a))], tempered_class(sp(_S(a)))),
            ([_S(a - 1, a)], classical([_S(a)])),
            ([_lab(_S(-a), _S(1 - a)), _S(a)], SIGMA),
            ([_S(-a), _S(a - 1, a)], SIGMA),
        )
    if a == 1:
        tind = tempered_class(TemperedInd((_S(0),), CUSP))
        put(
            classical([_S(1)], TemperedInd((_S(0),), CUSP)),
            ([_S(-1)], tind),
            ([_S(0)], classical([_S(1)])),
            (2, [_lab(_S(-1), _S(0))], SIGMA),
            ([_S(-1, 0)], SIGMA),
        )
    if a == Rational(1, 2):
        h = Rational(1, 2)
        put(
            classical([_S(h), _S(h)]),
            ([_S(-h)], induced_of([_S(h)], SIGMA)),
            ([_S(-h)], classical([_S(h)])),
            ([_lab(_S(-h), _S(h))], SIGMA),
            ([_S(-h), _S(-h)], SIGMA),
        )
        put(
            classical([_S(h)], sp(_S(h))),
            ([_S(-h)], tempered_class(sp(_S(h)))),
            ([_lab(_S(-h), _S(h))], SIGMA),
        )
        th = Rational(3, 2)
        put(
            classical([_S(h, th), _S(h)]),
            ([_S(-h)], induced_of([_S(th)], classical([_S(h)]))),
            ([_S(th)], classical([_S(h), _S(h)])),
            ([_S(-h)], induced_of([_S(h, th)], SIGMA)),
            (2, [_S(-h), _S(th)], classical([_S(h)])),
            ([_S(-th, -h)], classical([_S(h)])),
            ([_S(-h), _S(-h)], classical([_S(th)])),
            ([_S(-h), _S(th)], tempered_class(sp(_S(h)))),
            ([_lab(_S(-h), _S(h, th))], SIGMA),
            ([_S(-h), _S(-h), _S(th)], SIGMA),
            ([_S(-h), _S(-th, -h)], SIGMA),
        )
    if a == 0:
        for eps in (+1, -1):
            cpm = tempered_class(CuspPlusMinus(Rational(0), eps))
            put(
                classical([_S(1)], CuspPlusMinus(Rational(0), eps)),
                ([_S(-1)], cpm),
                ([_lab(_S(-1), _S(0))], SIGMA),
            )
            put(
                classical([_S(2)], SegType(_S(0, 1), eps)),
                ([_S(-2)], tempered_class(SegType(_S(0, 1), eps))),
                ([_S(1)], induced_of([_S(2)], cpm)),
                ([_lab(_S(1), _S(2))], cpm),
                ([_S(-2), _S(1)], cpm),
                ([_S(0, 1)], classical([_S(2)])),
                ([_lab(_S(2), _S(0, 1))], SIGMA),
                ([_S(-2), _S(0, 1)], SIGMA),
            )
            put(
                classical([_S(1, 2)], CuspPlusMinus(Rational(0), eps)),
                ([_S(2)], classical([_S(1)], CuspPlusMinus(Rational(0), eps))),
                ([_S(-1)], induced_of([_S(2)], cpm)),
                ([_S(-2, -1)], cpm),
                ([_S(2), _S(-1)], cpm),
                ([_lab(_S(-1), _S(0))], classical([_S(2)])),
                ([_lab(_S(-2, -1), _S(0))], SIGMA),
                ([_S(2), _lab(_S(-1), _S(0))], SIGMA),
            )
    return table


# --- mu_star dispatch --------------------------------------------------------


@lru_cache(maxsize=None)
def mu_star(label, cfg: LineConfig) -> RSElement:
    """Full twisted Jacquet restriction of an irreducible (or formal) class."""
    if isinstance(label, Induced):
        return mu_star_induced(m_star_key(label.key), mu_star(label.base, cfg))
    if not isinstance(label, ClassicalLabel):
        label = tempered_class(label)
    if label.special_l_alpha is not None:
        raise NoFormulaAvailable(f"formal piece has no closed restriction: {label}")
    table = _display_table(cfg)
    if label in table:
        return table[label]
    t = label.tempered
    dms = label.langlands_d
    if not len(dms):
        return _mu_star_tempered(t, cfg)
    if isinstance(t, Cusp) and len(dms) == 1:
        s0 = dms.segments[0]
        if s0.contains_point(cfg.alpha) or s0.contains_point(-cfg.alpha):
            return restriction_segment_quotient(s0, cfg)
        # the class is the whole (irreducible) induction
        elem = mu_star_induced(m_star(gl_delta(s0)), _one_it(SIGMA))
        return expand(elem, cfg)
    comp = _complement_over_sp(label, cfg)
    if comp is not None:
        return comp
    raise NoFormulaAvailable(f"no closed restriction formula for {label}")


def _complement_over_sp(label: ClassicalLabel, cfg: LineConfig) -> Optional[RSElement]:
    """mu* of the non-Langlands piece of a strictly positive segment induction.

    For 0 < b < alpha <= d the induction delta([b,d]) x| sigma has exactly two
    pieces, so the restriction of the complement is the full restriction minus
    the Langlands one (the Jacquet functor is exact).
    """
    a = cfg.alpha
    t = label.tempered
    if not (
        isinstance(t, StronglyPositive)
        and len(t.segments) == 1
        and t.segments[0].begin == a
        and len(label.langlands_d) == 1
    ):
        return None
    head = label.langlands_d.segments[0]
    if head.end != a - 1 or not (0 < head.begin < a):
        return None
    glued = make_segment(head.begin, t.segments[0].end)
    full = mu_star_induced(m_star(gl_delta(glued)), _one_it(SIGMA))
    return expand(full, cfg) - mu_star(classical([glued]), cfg)


def _mu_star_tempered(t, cfg: LineConfig) -> RSElement:
    if isinstance(t, Cusp):
        return _one_it(SIGMA)
    if isinstance(t, CuspPlusMinus):
        return _one_it(tempered_class(t)) + _rs([_S(0)], SIGMA)
    if isinstance(t, SegType):
        return restriction_segment_pm(t.segment, t.sign, cfg)
    if isinstance(t, StronglyPositive):
        if len(t.segments) == 1:
            return generalized_steinberg_restriction(t.segments[0], cfg)
        raise NoFormulaAvailable(f"no closed restriction formula for {t}")
    if isinstance(t, TauInd):
        return _mu_star_tau(t, cfg)
    if isinstance(t, TemperedInd):
        elem = mu_star_induced(
            m_star_key(product_key(t.segments)), mu_star(tempered_class(t.base), cfg)
        )
        return expand(elem, cfg)
    raise NoFormulaAvailable(f"no closed restriction formula for {t}")


def _mu_star_tau(t: TauInd, cfg: LineConfig) -> RSElement:
    a = cfg.alpha
    alias = (
        t.segment.center == 0
        and isinstance(t.base, StronglyPositive)
        and len(t.base.segments) == 1
        and t.base.segments[0].begin == a
        and a == t.segment.end + 1
    )
    if t.sign > 0:
        if alias:
            # the tau names the plus piece of the glued segment induction
            glued = make_segment(t.segment.begin, t.base.segments[0].end)
            return restriction_segment_pm(glued, +1, cfg)
        raise NoFormulaAvailable(f"no closed restriction formula for {t}")
    plus = mu_star(tempered_class(TauInd(t.segment, +1, t.base)), cfg)
    full = mu_star_induced(
        m_star(gl_delta(t.segment)), mu_star(tempered_class(t.base), cfg)
    )
    return full - plus


# --- expansion of formal induced slots --------------------------------------


def _flip_factor(label: GLIrrLabel) -> GLIrrLabel:
    total = sum(label.exponents(), Rational(0))
    return label_contragredient(label) if total < 0 else label


def _flip_key(key: ProductKey) -> ProductKey:
    return product_key([_flip_factor(l) for l in key])


def _resolve_induced(ind: Induced, cfg: LineConfig):
    """Exact composition series of a formal induced slot, if catalogued."""
    from ._tables import identities

    key = _flip_key(ind.key)
    base = ind.base
    if not isinstance(base, ClassicalLabel):
        base = tempered_class(base)
    hit = identities(cfg).get((key, base))
    if hit is not None:
        return list(hit)
    if len(key) == 1 and key[0].is_delta and base == SIGMA:
        return [(x, 1) for x in segment_constituents(key[0].segment, cfg)]
    return None


def expand(elem: RSElement, cfg: LineConfig) -> RSElement:
    """Rewrite resolvable induced slots into sums of irreducible classes."""
    for _ in range(20):
        out: dict = {}
        changed = False
        for (key, cl), c in elem:
            if isinstance(cl, Induced):
                rep = _resolve_induced(cl, cfg)
                if rep is not None:
                    changed = True
                    for piece, m in rep:
                        k = (key, piece)
                        out[k] = out.get(k, 0) + c * m
                    continue
            out[(key, cl)] = out.get((key, cl), 0) + c
        elem = RSElement(out)
        if not changed:
            break
    return elem


def _key_irreducible_expansion(key: ProductKey) -> GLElement:
    """Rewrite a product key in the irreducible basis (split linked deltas)."""
    from .glring import two_segment_decompose
    from .segments import linked

    out = GLElement()
    work: list[tuple[int, ProductKey]] = [(1, key)]
    fuel = 1000
    while work:
        fuel -= 1
        if fuel < 0:
            raise RuntimeError("key expansion did not terminate")
        c, k = work.pop()
        labels = list(k)
        hit = None
        for i, j in itertools.combinations(range(len(labels)), 2):
            if (
                labels[i].is_delta
                and labels[j].is_delta
                and linked(labels[i].segment, labels[j].segment)
            ):
                hit = (i, j)
                break
        if hit is None:
            out += GLElement({product_key(labels): c})
            continue
        i, j = hit
        rest = [l for t, l in enumerate(labels) if t not in (i, j)]
        for kk, cc in two_segment_decompose(labels[i].segment, labels[j].segment):
            work.append((c * cc, product_key(rest + list(kk))))
    return out


def gl_basis_normalize(elem: RSElement) -> RSElement:
    """Rewrite every general-linear key in the irreducible basis."""
    out: dict = {}
    for (key, cl), c in elem:
        for k, cc in _key_irreducible_expansion(key):
            t = (k, cl)
            out[t] = out.get(t, 0) + c * cc
    return RSElement(out)


# --- sigma-stratum (general-linear budget) ----------------------------------


@lru_cache(maxsize=None)
def s_gl(label, cfg: LineConfig) -> GLElement:
    """General-linear parts of the terms of mu_star lying over the base cusp."""
    if isinstance(label, Induced):
        out = s_gl(label.base, cfg)
        for f in label.key:
            out = out * _m_star_gl_factor(f)
        return out
    if not isinstance(label, ClassicalLabel):
        label = tempered_class(label)
    if label == SIGMA:
        return gl_unit()
    out = GLElement()
    for (key, cl), c in mu_star(label, cfg):
        if cl == SIGMA:
            out += GLElement({key: c})
    return out


# --- multiplicity engine -----------------------------------------------------


def _signed_support(key: ProductKey) -> Counter:
    out: Counter = Counter()
    for label in key:
        out.update(label.exponents())
    return out


def _abs_support(label) -> Counter:
    out: Counter = Counter()
    if isinstance(label, (Cusp,)):
        return out
    if isinstance(label, CuspPlusMinus):
        out[abs(label.exponent)] += 1
        return out
    if isinstance(label, SegType):
        out.update(abs(x) for x in label.segment.points())
        return out
    if isinstance(label, StronglyPositive):
        for s in label.segments:
            out.update(abs(x) for x in s.points())
        return out
    if isinstance(label, TauInd):
        out.update(abs(x) for x in label.segment.points())
        out.update(_abs_support(label.base))
        return out
    if isinstance(label, TemperedInd):
        for s in label.segments:
            out.update(abs(x) for x in s.points())
        out.update(_abs_support(label.base))
        return out
    if isinstance(label, ClassicalLabel):
        out.update(abs(x) for x in label.langlands_d.exponents())
        if label.special_l_alpha is not None:
            out.update(abs(x) for x in label.special_l_alpha.points())
        out.update(_abs_support(label.tempered))
        return out
    if isinstance(label, Induced):
        for l in label.key:
            out.update(abs(x) for x in l.exponents())
        out.update(_abs_support(label.base))
        return out
    raise TypeError(f"not a classical label: {label!r}")


def mult_in_key(target_key: ProductKey, key: ProductKey) -> Union[int, Bounds]:
    """Multiplicity of the target label in the product named by the key."""
    if key == target_key and len(target_key) == 1:
        return 1
    if len(target_key) != 1:
        return 1 if key == target_key else Bounds(0, None)
    tgt = target_key[0]
    if tgt.is_delta:
        s = tgt.segment
        if _signed_support(key) != Counter(s.points()):
            return 0
        return chain_count(key, tuple(reversed(s.points())))
    if _signed_support(key) != Counter(tgt.exponents()):
        return 0
    return Bounds(0, None)


def _chain_eval(elem: GLElement, chain) -> int:
    return sum(c * chain_count(k, chain) for k, c in elem)


def _mult_cl(target, cl, cfg: LineConfig, fuel: int) -> tuple[int, Optional[int]]:
    if cl == target:
        return (1, 1)
    if isinstance(cl, ClassicalLabel):
        if cl.special_l_alpha is not None or (
            isinstance(target, ClassicalLabel) and target.special_l_alpha is not None
        ):
            return (0, None) if _abs_support(cl) == _abs_support(target) else (0, 0)
        return (0, 0)
    assert isinstance(cl, Induced)
    if _abs_support(cl) != _abs_support(target):
        return (0, 0)
    key = _flip_key(cl.key)
    base = cl.base
    if not isinstance(base, ClassicalLabel):
        base = tempered_class(base)
    # an irreducibly induced base is the same element as its standard module
    if (
        base.special_l_alpha is None
        and len(base.langlands_d)
        and base.tempered == SIGMA.tempered
        and lt_reducibility(langlands(base.langlands_d), cfg) is False
    ):
        key = product_key(list(key) + [langlands(s) for s in base.langlands_d])
        base = SIGMA
    if not key:
        return _mult_cl(target, base, cfg, fuel)
    # exact catalogued decompositions
    rep = _resolve_induced(Induced(key, base), cfg)
    if rep is not None:
        lo = hi = 0
        for piece, m in rep:
            plo, phi = _mult_cl(target, piece, cfg, fuel - 1)
            lo += m * plo
            hi = None if (hi is None or phi is None) else hi + m * phi
        return (lo, hi)
    intervals = [(0, None)]
    if fuel > 0:
        split = _linked_pair_split(key, base, cfg)
        if split is not None:
            lo = hi = 0
            for slot in split:
                plo, phi = _mult_cl(target, slot, cfg, fuel - 1)
                lo += plo
                hi = None if (hi is None or phi is None) else hi + phi
            intervals.append((lo, hi))
    bplc = _standard_module_mult(target, key, base)
    if bplc is not None:
        intervals.append(bplc)
    upper = _chain_upper_bound(target, cl, cfg)
    if upper is not None:
        intervals.append((0, upper))
    catalogued = _catalogued_interval(target, cl, cfg)
    if catalogued is not None:
        intervals.append(catalogued)
    lo = max(iv[0] for iv in intervals)
    his = [iv[1] for iv in intervals if iv[1] is not None]
    hi = min(his) if his else None
    if hi is not None and hi < lo:
        raise RuntimeError(f"inconsistent multiplicity bounds for {target} in {cl}")
    return (lo, hi)


def _catalogued_interval(target, cl, cfg: LineConfig):
    """Upper bound from the full induced module of the cuspidal support.

    Every induced element sits below the full induction of its exponents,
    whose composition series is catalogued for the low-rank families.
    """
    from ._tables import NotACataloguedCase, case_for

    exps = tuple(sorted(_abs_support(cl).elements()))
    if len(exps) > 3:
        return None
    try:
        case = case_for(exps, cfg)
    except NotACataloguedCase:
        return None
    for entry in case.entries:
        if entry.label == target:
            return (0, entry.mult)
    return (0, 0) if case.complete else None


def _linked_pair_split(key: ProductKey, base, cfg: LineConfig):
    """Replace one linked delta pair by its two-piece expansion, if any."""
    from .segments import linked

    # labels with pairwise unlinked segments are plain products of deltas
    labels: list[GLIrrLabel] = []
    for label in key:
        if not label.is_delta and delta_product_irreducible(label.ms):
            labels.extend(langlands(s) for s in label.ms)
        else:
            labels.append(label)
    for i, j in itertools.combinations(range(len(labels)), 2):
        if not (labels[i].is_delta and labels[j].is_delta):
            continue
        s1, s2 = labels[i].segment, labels[j].segment
        for t1 in (s1, contragredient(s1)):
            if linked(t1, s2):
                rest = [l for k, l in enumerate(labels) if k not in (i, j)]
                union = make_segment(min(t1.begin, s2.begin), max(t1.end, s2.end))
                inter = make_segment(max(t1.begin, s2.begin), min(t1.end, s2.end))
                glued = induced_of(rest + [union, inter], base)
                merged = induced_of(rest + [langlands(ms(t1, s2))], base)
                return [merged, glued]
    return None


def _standard_module_mult(target, key: ProductKey, base):
    """Exactly one copy of the quotient inside its own standard module."""
    if not isinstance(target, ClassicalLabel) or target.special_l_alpha is not None:
        return None
    segs: list[Segment] = []
    for label in key:
        if not delta_product_irreducible(label.ms):
            return None
        segs.extend(label.ms.segments)
    if not delta_product_irreducible(segs):
        return None
    pos, zero = d_up_and_du(Multisegment.of(*segs))
    if len(zero):
        return None
    if pos == target.langlands_d and base == tempered_class(target.tempered):
        return (1, 1)
    return None


def _chain_upper_bound(target, cl: Induced, cfg: LineConfig) -> Optional[int]:
    try:
        sgt = s_gl(target, cfg)
        sgp = s_gl(cl, cfg)
    except NoFormulaAvailable:
        return None
    if not sgt.terms:
        return None
    chains = set()
    for k in sgt.terms:
        exps = tuple(_signed_support(k).elements())
        if len(exps) <= 7:
            chains.update(itertools.permutations(exps))
    best = None
    for ch in chains:
        mt = _chain_eval(sgt, ch)
        if mt <= 0:
            continue
        mp = _chain_eval(sgp, ch)
        cand = mp // mt
        best = cand if best is None else min(best, cand)
    return best


def multiplicity(target: JacquetTerm, elem: RSElement, cfg: LineConfig) -> Union[int, Bounds]:
    """Multiplicity of the target Jacquet term in the element, with bounds."""
    neg_inf = object()
    lo_t: object = 0
    hi_t: Optional[int] = 0
    for (key, cl), c in elem:
        glo, ghi = _as_interval(mult_in_key(target.key, key))
        if glo == 0 and ghi == 0:
            continue
        clo, chi = _mult_cl(target.classical, cl, cfg, fuel=6)
        if clo == 0 and chi == 0:
            continue
        tlo = glo * clo
        thi = None if (ghi is None or chi is None) else ghi * chi
        if c >= 0:
            if lo_t is not neg_inf:
                lo_t = lo_t + c * tlo
            hi_t = None if (hi_t is None or thi is None) else hi_t + c * thi
        else:
            lo_t = neg_inf if thi is None else (lo_t if lo_t is neg_inf else lo_t + c * thi)
            if hi_t is not None:
                hi_t = hi_t + c * tlo
    lo = 0 if lo_t is neg_inf else max(0, lo_t)
    if hi_t is not None and hi_t < lo:
        raise RuntimeError(f"inconsistent multiplicity bounds for {target}")
    return _pack(lo, hi_t)


# --- non-unitarity certificates ---------------------------------------------


def _u_segment(u) -> Segment:
    if isinstance(u, Segment):
        return u
    if isinstance(u, GLIrrLabel) and u.is_delta:
        return u.segment
    raise TypeError(f"the distinguished factor must be one segment: {u!r}")


def nonunit_certificate(u, pi, lower_bound: int, cfg: LineConfig) -> bool:
    """True when the computed Jacquet multiplicity rules out the forced one.

    The forced lower bound comes from assuming unitarity; the certificate
    fires when the computed multiplicity of delta(u) (x) pi inside
    mu*(delta(u) x| pi) stays strictly below it, or matches it exactly while
    indirect terms also contribute.
    """
    useg = _u_segment(u)
    target = JacquetTerm(product_key([useg]), pi)
    try:
        mu_pi = mu_star(pi, cfg)
    except NoFormulaAvailable:
        return _abstract_support_certificate(useg, pi, lower_bound, cfg)
    elem = mu_star_induced(m_star(gl_delta(useg)), mu_pi)
    m = multiplicity(target, elem, cfg)
    lo, hi = _as_interval(m)
    if hi is None:
        return False
    if hi < lower_bound:
        return True
    if hi == lower_bound and lo == hi:
        return _has_indirect_contribution(target, elem, cfg)
    return False


def _has_indirect_contribution(target: JacquetTerm, elem: RSElement, cfg: LineConfig) -> bool:
    for (key, cl), c in elem:
        if c <= 0 or cl == target.classical:
            continue
        glo, _ = _as_interval(mult_in_key(target.key, key))
        if glo <= 0:
            continue
        clo, _ = _mult_cl(target.classical, cl, cfg, fuel=6)
        if clo > 0:
            return True
    return False


def _abstract_support_certificate(useg: Segment, pi, lower_bound: int, cfg: LineConfig) -> bool:
    """Bound the Jacquet multiplicity from the cuspidal support alone.

    When mu*(pi) has no closed form, every restriction term of pi still draws
    its exponents from the support of pi.  If no term of M*(delta(u)) with a
    nonempty inner part can be completed to the distinguished general-linear
    part from those exponents, only the direct pairings with 1 (x) pi remain.
    """
    u_label = langlands(Multisegment.of(useg))
    u_signed = Counter(useg.points())
    pi_abs = _abs_support(pi)
    direct = 0
    for (g, y), c in m_star(gl_delta(useg)):
        if not y:
            direct += c * _as_interval(mult_in_key((u_label,), g))[0]
            continue
        g_signed = _signed_support(g)
        if g_signed - u_signed:
            continue  # the general-linear part cannot close up to delta(u)
        needed = u_signed - g_signed
        if not needed:
            continue  # ranks cannot match with a nonempty inner part
        if not Counter(abs(x) for x in needed.elements()) - pi_abs:
            return False  # cannot rule this pairing out
    return direct < lower_bound
