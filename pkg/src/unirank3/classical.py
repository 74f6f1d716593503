"""Labels and basic invariants for irreducible representations over a
classical group, relative to one cuspidal line with reducibility point alpha.

A class is written as a Langlands datum (multisegment with positive centers)
over a tempered part; tempered parts are built from the cuspidal base, the
plus/minus pieces of segment inductions, strongly positive pieces, and
irreducible full inductions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .arith import Rational, rat, rat_text
from .glring import ProductKey, product_key
from .segments import (
    EMPTY,
    Multisegment,
    Segment,
    contragredient,
    is_ladder,
    linked,
    make_segment,
    ms,
    parse_segment,
    _split_top_level,
)

__all__ = [
    "RankMismatch",
    "UndecidableTemperedComponent",
    "NoFormulaAvailable",
    "NotInDualityTable",
    "LineConfig",
    "Cusp",
    "CUSP",
    "SegType",
    "StronglyPositive",
    "TauInd",
    "CuspPlusMinus",
    "TemperedInd",
    "ClassicalLabel",
    "Induced",
    "RSElement",
    "classical",
    "tempered_class",
    "e_exponent",
    "class_rank",
    "d_up_and_du",
    "langlands_order_leq",
    "segment_constituents",
    "resolve_delta_pm",
    "resolve_l_alpha",
    "cjm_subquotients",
    "lt_reducibility",
    "jord_rho",
    "distinguished_multiplicity",
    "ass_dual",
    "bounds_check",
    "classical_text",
    "parse_classical",
]


class RankMismatch(ValueError):
    """Comparison of classes of different rank."""


class UndecidableTemperedComponent(ValueError):
    """Tempered decomposition has too many critical blocks to name."""


class NoFormulaAvailable(ValueError):
    """No closed Jordan-block or Jacquet formula for this class."""


class NotInDualityTable(KeyError):
    """Class is outside the catalogued duality tables."""


@dataclass(frozen=True)
class LineConfig:
    """One cuspidal line with its reducibility point alpha (in (1/2)Z>=0)."""

    alpha: Rational
    line_name: str = "s"

    def __post_init__(self) -> None:
        a = rat(self.alpha)
        object.__setattr__(self, "alpha", Rational(a))
        if a < 0 or a.denominator not in (1, 2):
            raise ValueError(f"alpha must be a nonnegative half-integer: {a}")

    @property
    def half_integral(self) -> bool:
        return self.alpha.denominator == 2


def _sgn_text(sign: int) -> str:
    return "+" if sign > 0 else "-"


@dataclass(frozen=True)
class Cusp:
    def __str__(self) -> str:
        return "s"


CUSP = Cusp()


@dataclass(frozen=True)
class SegType:
    """Plus/minus square-integrable piece of a segment induction."""

    segment: Segment
    sign: int

    def __str__(self) -> str:
        return f"d({self.segment}{_sgn_text(self.sign)};s)"


@dataclass(frozen=True)
class StronglyPositive:
    segments: tuple[Segment, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(sorted(self.segments)))

    def __str__(self) -> str:
        return "d_sp(" + ",".join(str(s) for s in self.segments) + ";s)"


@dataclass(frozen=True)
class TauInd:
    """Plus/minus tempered piece of a symmetric segment over a bigger base."""

    segment: Segment
    sign: int
    base: "TemperedLabel"

    def __str__(self) -> str:
        return f"tau({self.segment}{_sgn_text(self.sign)}; {self.base})"


@dataclass(frozen=True)
class CuspPlusMinus:
    """The two pieces of a cuspidal exponent-zero induction (alpha = 0)."""

    exponent: Rational
    sign: int

    def __str__(self) -> str:
        return f"s({rat_text(self.exponent)}){_sgn_text(self.sign)}"


@dataclass(frozen=True)
class TemperedInd:
    """Irreducible full induction of deltas over a tempered base."""

    segments: tuple[Segment, ...]
    base: "TemperedLabel"

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(sorted(self.segments)))

    def __str__(self) -> str:
        return "ind(" + ",".join(str(s) for s in self.segments) + f";{self.base})"


TemperedLabel = Union[Cusp, SegType, StronglyPositive, TauInd, CuspPlusMinus, TemperedInd]


@dataclass(frozen=True)
class ClassicalLabel:
    """Langlands datum (positive centers) over a tempered part.

    special_l_alpha carries a formal Langlands-type piece of a segment
    induction whose resolution is deferred.
    """

    langlands_d: Multisegment
    tempered: TemperedLabel = CUSP
    special_l_alpha: Optional[Segment] = None

    def __post_init__(self) -> None:
        for s in self.langlands_d:
            if not s.center > 0:
                raise ValueError(f"Langlands datum needs positive centers: {s}")

    def __str__(self) -> str:
        if self.special_l_alpha is not None:
            return f"L_alpha({self.special_l_alpha};s)"
        if not len(self.langlands_d):
            return str(self.tempered)
        segs = ",".join(str(s) for s in self.langlands_d)
        return f"L({segs}; {self.tempered})"


@dataclass(frozen=True)
class Induced:
    """Formal (not yet decomposed) induction of a product key over a class."""

    key: ProductKey
    base: object

    def __str__(self) -> str:
        gl = "x".join(str(l) for l in self.key) if self.key else "1"
        return f"Ind({gl}; {self.base})"


def classical(d=(), tempered: TemperedLabel = CUSP, special=None) -> ClassicalLabel:
    if isinstance(d, Multisegment):
        dd = d
    else:
        dd = Multisegment.of(*d)
    return ClassicalLabel(dd, tempered, special)


def tempered_class(t: TemperedLabel) -> ClassicalLabel:
    return ClassicalLabel(Multisegment(()), t)


# --- basic invariants -------------------------------------------------------


def class_rank(label) -> int:
    """Number of line exponents absorbed by the class."""
    if isinstance(label, Cusp):
        return 0
    if isinstance(label, CuspPlusMinus):
        return 1
    if isinstance(label, SegType):
        return label.segment.length
    if isinstance(label, StronglyPositive):
        return sum(s.length for s in label.segments)
    if isinstance(label, (TauInd,)):
        return label.segment.length + class_rank(label.base)
    if isinstance(label, TemperedInd):
        return sum(s.length for s in label.segments) + class_rank(label.base)
    if isinstance(label, ClassicalLabel):
        r = sum(s.length for s in label.langlands_d) + class_rank(label.tempered)
        if label.special_l_alpha is not None:
            r += label.special_l_alpha.length
        return r
    if isinstance(label, Induced):
        return sum(sum(s.length for s in l.ms) for l in label.key) + class_rank(label.base)
    raise TypeError(f"not a classical label: {label!r}")


def e_exponent(label) -> tuple[Rational, ...]:
    """Exponent vector of the Langlands datum, sorted decreasingly."""
    out: list[Rational] = []
    if isinstance(label, ClassicalLabel):
        out.extend(label.langlands_d.exponents())
        if label.special_l_alpha is not None:
            out.extend(label.special_l_alpha.points())
    elif isinstance(label, Induced):
        for l in label.key:
            out.extend(l.exponents())
        out.extend(e_exponent(label.base))
    # tempered parts contribute nothing
    return tuple(sorted(out, reverse=True))


def d_up_and_du(a: Multisegment) -> tuple[Multisegment, Multisegment]:
    """Split into (positive-center part, center-zero part), flipping negatives."""
    pos, zero = [], []
    for s in a:
        if s.center > 0:
            pos.append(s)
        elif s.center < 0:
            pos.append(contragredient(s))
        else:
            zero.append(s)
    return Multisegment.of(*pos), Multisegment.of(*zero)


def langlands_order_leq(a, b) -> bool:
    """Closure-order comparison via partial sums of padded exponent vectors."""
    ra, rb = class_rank(a), class_rank(b)
    if ra != rb:
        raise RankMismatch(f"rank {ra} vs {rb}")
    ea = list(e_exponent(a)) + [Rational(0)] * (ra - len(e_exponent(a)))
    eb = list(e_exponent(b)) + [Rational(0)] * (rb - len(e_exponent(b)))
    sa = sb = Rational(0)
    for xa, xb in zip(ea, eb):
        sa, sb = Rational(sa + xa), Rational(sb + xb)
        if sa > sb:
            return False
    return True


# --- Jordan blocks ----------------------------------------------------------


def jord_rho(label, cfg: LineConfig) -> frozenset[int]:
    """Jordan blocks on the line, for the base and strongly positive classes."""
    a = cfg.alpha
    frac = a - int(a)  # alpha - floor(alpha)
    low = int(2 * frac) + 1
    top = int(2 * a) - 1
    base = set(range(low, top + 1, 2))
    if isinstance(label, Cusp):
        return frozenset(base)
    if isinstance(label, ClassicalLabel) and not len(label.langlands_d) and label.special_l_alpha is None:
        return jord_rho(label.tempered, cfg)
    if isinstance(label, StronglyPositive):
        removed = []
        added = []
        for s in label.segments:
            removed.append(int(2 * s.begin) - 1)
            added.append(int(2 * s.end) + 1)
        if len(set(removed)) != len(removed) or len(set(added)) != len(added):
            raise NoFormulaAvailable(f"colliding blocks for {label}")
        out = set(base)
        for r in removed:
            if r not in out:
                raise NoFormulaAvailable(f"block {r} missing from the base for {label}")
            out.remove(r)
        for x in added:
            if x in out:
                raise NoFormulaAvailable(f"block {x} collides for {label}")
            out.add(x)
        return frozenset(out)
    raise NoFormulaAvailable(f"no Jordan-block formula for {label}")


# --- segment inductions -----------------------------------------------------


def _canonical(segment: Segment) -> Segment:
    return contragredient(segment) if segment.center < 0 else segment


def _meets_alpha(segment: Segment, cfg: LineConfig) -> bool:
    return segment.contains_point(cfg.alpha) or segment.contains_point(-cfg.alpha)


def lt_reducibility(label, cfg: LineConfig):
    """Reducibility of label x| sigma: True, False, or None when undecided."""
    from .segments import GLIrrLabel

    if isinstance(label, Segment):
        from .segments import langlands

        label = langlands(ms(label))
    assert isinstance(label, GLIrrLabel)
    a = cfg.alpha
    if label.is_delta:
        return _meets_alpha(label.segment, cfg)
    pts = set(label.exponents())
    if any(p == a or p == -a for p in pts):
        return True
    if all((p - a).denominator != 1 and (p + a).denominator != 1 for p in pts):
        # off the critical lattice entirely: pure general-linear behaviour
        return _gl_side_reducible(label)
    if is_ladder(label.ms) or a <= 1:
        return _gl_side_reducible(label)
    return None


def _gl_side_reducible(label) -> bool:
    # only cross-factor linkage with a contragredient forces reducibility
    segs = list(label.ms.segments)
    duals = [contragredient(s) for s in segs]
    return any(
        linked(s, t) for i, s in enumerate(segs) for j, t in enumerate(duals) if i != j
    )


def resolve_delta_pm(segment: Segment, sign: int, cfg: LineConfig):
    """Name the plus/minus piece of a segment induction; None when it vanishes."""
    segment = _canonical(segment)
    a = cfg.alpha
    if segment is EMPTY:
        return tempered_class(CUSP)
    if a == 0 and segment.begin == segment.end == 0:
        return tempered_class(CuspPlusMinus(Rational(0), sign))
    b, d = segment.begin, segment.end
    c = Rational(-b)
    if not _meets_alpha(segment, cfg):
        # irreducible induction: the plus piece is everything or nothing
        if sign < 0:
            return None
        if -a < b and d < a:
            if segment.center == 0:
                return tempered_class(TemperedInd((segment,), CUSP))
            return classical([segment])
        return None
    if b > 0:
        # strictly positive segment through alpha
        if sign < 0:
            return None
        if b == a:
            return tempered_class(StronglyPositive((segment,)))
        head = make_segment(b, a - 1)
        return classical(
            [head] if head is not EMPTY else [], StronglyPositive((make_segment(a, d),))
        )
    if c < a <= d and a == c + 1:
        # the plus piece degenerates to a tempered tau; the minus one vanishes
        if sign < 0:
            return None
        inner = make_segment(-c, c)
        base = StronglyPositive((make_segment(a, d),))
        if inner is EMPTY:
            return tempered_class(base)
        return tempered_class(TauInd(inner, +1, base))
    if sign < 0 and not (segment.contains_point(a) and segment.contains_point(-a)):
        # a one-sided segment has no minus piece
        return None
    return tempered_class(SegType(segment, sign))


def resolve_l_alpha(segment: Segment, cfg: LineConfig):
    """The Langlands-type piece of a segment induction; None when it is zero."""
    segment = _canonical(segment)
    a = cfg.alpha
    if segment is EMPTY:
        return tempered_class(CUSP)
    if not _meets_alpha(segment, cfg):
        # irreducible induction: the piece is everything or nothing
        if -a < segment.begin and segment.end < a:
            return None
        if segment.center == 0:
            return tempered_class(TemperedInd((segment,), CUSP))
        return classical([segment])
    if segment.center == 0 and _meets_alpha(segment, cfg):
        # no Langlands-type constituent here; keep the formal piece
        return ClassicalLabel(Multisegment(()), CUSP, special_l_alpha=segment)
    return classical([segment])


def cjm_subquotients(segment: Segment, base: TemperedLabel, cfg: LineConfig) -> list[TemperedLabel]:
    """Tempered pieces of delta(segment) x| base at a unitary-axis point."""
    segment = _canonical(segment)
    a = cfg.alpha
    if isinstance(base, Cusp):
        if a == 0 and segment.begin == segment.end == 0:
            return [CuspPlusMinus(Rational(0), +1), CuspPlusMinus(Rational(0), -1)]
        r = 1 if _meets_alpha(segment, cfg) else 0
        if r == 0:
            return [TemperedInd((segment,), base)]
        return [SegType(segment, +1), SegType(segment, -1)]
    jord = jord_rho(base, cfg)
    crit = [x for x in segment.points() if x >= 0 and int(2 * x) + 1 not in jord]
    r = len(crit)
    if r == 0:
        return [TemperedInd((segment,), base)]
    if r == 1:
        return [TauInd(segment, +1, base), TauInd(segment, -1, base)]
    raise UndecidableTemperedComponent(f"{segment} over {base}: {r} critical blocks")


def segment_constituents(segment: Segment, cfg: LineConfig) -> list[ClassicalLabel]:
    """Composition series of delta(segment) x| sigma (multiplicity one)."""
    a = cfg.alpha
    if segment is EMPTY:
        return [tempered_class(CUSP)]
    segment = _canonical(segment)
    b, d = segment.begin, segment.end
    meets = _meets_alpha(segment, cfg)
    if not meets:
        if segment.center == 0:
            return [tempered_class(TemperedInd((segment,), CUSP))]
        return [classical([segment])]
    if b == a and a > 0:
        return [tempered_class(StronglyPositive((segment,))), classical([segment])]
    if 0 < b < a:
        return [
            classical([segment]),
            classical(
                [make_segment(b, a - 1)] if a - 1 >= b else [],
                StronglyPositive((make_segment(a, d),)),
            ),
        ]
    # canonical [-c, d] with c >= 0
    c = Rational(-b)
    out: list[ClassicalLabel] = []
    plus = resolve_delta_pm(segment, +1, cfg)
    if plus is not None:
        out.append(plus)
    if c == d or (segment.contains_point(a) and segment.contains_point(-a)):
        minus = resolve_delta_pm(segment, -1, cfg)
        if minus is not None:
            out.append(minus)
    if c != d:
        out.append(classical([segment]))
    return out


# --- misc invariants --------------------------------------------------------


def distinguished_multiplicity(exponents, cfg: LineConfig) -> int:
    """Multiplicity bound 2^(number of zero exponents); one off the integers."""
    if cfg.half_integral:
        return 1
    zeros = sum(1 for x in exponents if rat(x) == 0)
    return 2**zeros


def bounds_check(exponents, cfg: LineConfig) -> bool:
    """Necessary growth conditions on the exponents exceeding alpha."""
    a = cfg.alpha
    exps = [abs(rat(x)) for x in exponents]
    exceed = sorted({x for x in exps if x > a})
    for x, y in zip(exceed, exceed[1:]):
        if y - x > 1:
            return False
    inside = [x for x in exps if x <= a]
    if inside:
        top = max(inside)
        if exceed and exceed[0] - top > 1:
            return False
        for i, x in enumerate(exceed, start=1):
            if x > top + i:
                return False
        return True
    if not exceed:
        return True
    if a >= Rational(1, 2):
        return False
    for i, x in enumerate(exceed, start=1):
        if x > Rational(2 * i - 1, 2):
            return False
    return True


def ass_dual(label, cfg: LineConfig):
    """Duality involution on the catalogued classes (table driven)."""
    from . import _tables

    return _tables.dual_of(label, cfg)


# --- the ring module over the classical tower -------------------------------


class RSElement:
    """Integer combination of (product key, classical part) pairs."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def __eq__(self, other) -> bool:
        return isinstance(other, RSElement) and self.terms == other.terms

    def __add__(self, other: "RSElement") -> "RSElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return RSElement(out)

    def __sub__(self, other: "RSElement") -> "RSElement":
        return self + other.scale(-1)

    def scale(self, n: int) -> "RSElement":
        return RSElement({k: n * c for k, c in self.terms.items()})

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (key, cl), c in sorted(self.terms.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]))):
            gl = "x".join(str(l) for l in key) if key else "1"
            body = f"{gl} (x) {cl}"
            parts.append(body if c == 1 else f"{c}*[{body}]")
        return " + ".join(parts)

    __repr__ = __str__


def rs_term(key, cl, coeff: int = 1) -> RSElement:
    return RSElement({(product_key(key), cl): coeff})


# --- text forms -------------------------------------------------------------


def classical_text(label) -> str:
    return str(label)


def _split_head(text: str) -> tuple[str, str]:
    """Split at the first top-level ';' into (head, rest)."""
    parts = _split_top_level(text, ";")
    if len(parts) < 2:
        raise ValueError(f"missing base part: {text!r}")
    return parts[0], ";".join(parts[1:])


def _parse_signed_segment(text: str) -> tuple[Segment, int]:
    text = text.strip()
    sign = +1
    if text.endswith("+"):
        text = text[:-1]
    elif text.endswith("-"):
        sign = -1
        text = text[:-1]
    return parse_segment(text), sign


def parse_tempered(text: str) -> TemperedLabel:
    text = text.strip()
    if text == "s":
        return CUSP
    if text.startswith("d_sp(") and text.endswith(")"):
        body, base = _split_head(text[5:-1])
        if base.strip() != "s":
            raise ValueError(f"strongly positive base must be s: {text!r}")
        segs = [parse_segment(p) for p in _split_top_level(body)]
        return StronglyPositive(tuple(segs))
    if text.startswith("d(") and text.endswith(")"):
        body, base = _split_head(text[2:-1])
        if base.strip() != "s":
            raise ValueError(f"segment piece base must be s: {text!r}")
        segment, sign = _parse_signed_segment(body)
        return SegType(segment, sign)
    if text.startswith("tau(") and text.endswith(")"):
        body, base = _split_head(text[4:-1])
        segment, sign = _parse_signed_segment(body)
        return TauInd(segment, sign, parse_tempered(base))
    if text.startswith("ind(") and text.endswith(")"):
        body, base = _split_head(text[4:-1])
        segs = [parse_segment(p) for p in _split_top_level(body)]
        return TemperedInd(tuple(segs), parse_tempered(base))
    if text.startswith("s(") and (text.endswith("+") or text.endswith("-")):
        sign = +1 if text.endswith("+") else -1
        inner = text[2:-2]
        return CuspPlusMinus(rat(inner), sign)
    raise ValueError(f"bad tempered label: {text!r}")


def parse_classical(text: str) -> ClassicalLabel:
    text = text.strip()
    if text.startswith("L_alpha(") and text.endswith(")"):
        body, base = _split_head(text[8:-1])
        if base.strip() != "s":
            raise ValueError(f"formal piece base must be s: {text!r}")
        return ClassicalLabel(Multisegment(()), CUSP, special_l_alpha=parse_segment(body))
    if text.startswith("L(") and text.endswith(")"):
        body, base = _split_head(text[2:-1])
        segs = [parse_segment(p) for p in _split_top_level(body)]
        return classical(segs, parse_tempered(base))
    return tempered_class(parse_tempered(text))
