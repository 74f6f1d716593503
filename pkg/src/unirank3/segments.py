"""Segments, multisegments and irreducible general-linear labels.

A segment is a finite run ``[b, b+1, ..., e]`` of half-integers.  Multisegments
are multisets of segments; they index the two standard bases of the
general-linear Grothendieck ring via Langlands (L) and Zelevinsky (Z) labels,
exchanged by the MW involution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .arith import RangeExceeded, Rational, rat, rat_text

__all__ = [
    "NotIntegralLength",
    "Segment",
    "EMPTY",
    "make_segment",
    "seg",
    "seg_or_empty",
    "contragredient",
    "linked",
    "precedes",
    "Multisegment",
    "ms",
    "mw_involution",
    "GLIrrLabel",
    "langlands",
    "zelevinsky",
    "label_contragredient",
    "delta_product_irreducible",
    "is_ladder",
    "gl_is_unitarizable",
    "parse_segment",
    "parse_multisegment",
    "parse_gl_label",
]


class NotIntegralLength(ValueError):
    """Raised when segment endpoints do not differ by a nonnegative integer."""


class _EmptySegment:
    """Distinguished empty segment (unit for concatenation-style operations)."""

    _instance: Optional["_EmptySegment"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "EMPTY"

    def __str__(self) -> str:
        return "[]"

    def __bool__(self) -> bool:
        return False


EMPTY = _EmptySegment()


@dataclass(frozen=True, order=True)
class Segment:
    begin: Rational
    end: Rational

    @property
    def length(self) -> int:
        return int(self.end - self.begin) + 1

    @property
    def center(self) -> Rational:
        return Rational(self.begin + self.end, 2)

    def points(self) -> list[Rational]:
        return [Rational(self.begin + i) for i in range(self.length)]

    def contains(self, other: "Segment") -> bool:
        return self.begin <= other.begin and other.end <= self.end

    def contains_point(self, x) -> bool:
        x = rat(x)
        return self.begin <= x <= self.end and (x - self.begin).denominator == 1

    def shift(self, t) -> "Segment":
        t = rat(t)
        return Segment(Rational(self.begin + t), Rational(self.end + t))

    def __str__(self) -> str:
        if self.begin == self.end:
            return f"[{rat_text(self.begin)}]"
        return f"[{rat_text(self.begin)},{rat_text(self.end)}]"


def make_segment(begin, end=None):
    """Build a segment; ``end - begin`` must be a nonnegative integer.

    ``end == begin - 1`` yields the distinguished EMPTY segment; anything
    non-integral raises NotIntegralLength.
    """
    b = rat(begin)
    e = rat(end) if end is not None else b
    diff = e - b
    if diff.denominator != 1:
        raise NotIntegralLength(f"segment [{b},{e}] has non-integral length")
    if diff < 0:
        return EMPTY
    if max(abs(b), abs(e)) > 500:
        raise RangeExceeded(f"segment [{b},{e}] leaves the supported window")
    return Segment(Rational(b), Rational(e))


# terse aliases used heavily by formula code
seg = make_segment


def seg_or_empty(begin, end):
    return make_segment(begin, end)


def contragredient(segment: Segment) -> Segment:
    """[b,e] -> [-e,-b]."""
    if segment is EMPTY:
        return EMPTY
    return Segment(Rational(-segment.end), Rational(-segment.begin))


def linked(s1: Segment, s2: Segment) -> bool:
    """True iff the union is a segment and neither contains the other."""
    if s1 is EMPTY or s2 is EMPTY:
        return False
    if (s1.begin - s2.begin).denominator != 1:
        return False
    lo = min(s1.begin, s2.begin)
    hi = max(s1.end, s2.end)
    # union is a segment iff they overlap or abut
    if max(s1.begin, s2.begin) > min(s1.end, s2.end) + 1:
        return False
    union_is_one = True  # guaranteed by the line above
    del lo, hi, union_is_one
    return not (s1.contains(s2) or s2.contains(s1))


def precedes(s1: Segment, s2: Segment) -> bool:
    """s1 precedes s2: linked with s1 starting strictly first."""
    return linked(s1, s2) and s1.begin < s2.begin


@dataclass(frozen=True, order=True)
class Multisegment:
    segments: tuple[Segment, ...]

    def __post_init__(self) -> None:
        cleaned = tuple(sorted(s for s in self.segments if s is not EMPTY))
        object.__setattr__(self, "segments", cleaned)

    @classmethod
    def of(cls, *segments) -> "Multisegment":
        out = []
        for s in segments:
            if s is EMPTY:
                continue
            if isinstance(s, Multisegment):
                out.extend(s.segments)
            elif isinstance(s, Segment):
                out.append(s)
            else:
                raise TypeError(f"not a segment: {s!r}")
        return cls(tuple(out))

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __add__(self, other: "Multisegment") -> "Multisegment":
        return Multisegment(self.segments + other.segments)

    def exponents(self) -> list[Rational]:
        out: list[Rational] = []
        for s in self.segments:
            out.extend(s.points())
        return sorted(out)

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.segments) + "}"


def ms(*segments) -> Multisegment:
    return Multisegment.of(*segments)


def mw_involution(a: Multisegment) -> Multisegment:
    """MW involution exchanging the two standard label conventions.

    Repeatedly extract the maximal descending chain of segment ends: take the
    largest end (tie-break: largest begin), then at each step the segment
    ending one lower whose begin is strictly smaller than the previous pick
    (again largest begin among candidates).  The visited ends form one dual
    segment; the chosen segments are shortened by one from the top.
    """
    pool = list(a.segments)
    result: list[Segment] = []
    while pool:
        top = max(s.end for s in pool)
        chain: list[int] = []
        prev_begin = None
        cur_end = top
        while True:
            candidates = [
                i
                for i, s in enumerate(pool)
                if s.end == cur_end and (prev_begin is None or s.begin < prev_begin) and i not in chain
            ]
            if not candidates:
                break
            pick = max(candidates, key=lambda i: pool[i].begin)
            chain.append(pick)
            prev_begin = pool[pick].begin
            cur_end = Rational(cur_end - 1)
        k = len(chain)
        result.append(Segment(Rational(top - k + 1), Rational(top)))
        new_pool = []
        chain_set = set(chain)
        for i, s in enumerate(pool):
            if i in chain_set:
                shortened = make_segment(s.begin, s.end - 1)
                if shortened is not EMPTY:
                    new_pool.append(shortened)
            else:
                new_pool.append(s)
        pool = new_pool
    return Multisegment(tuple(result))


@dataclass(frozen=True, order=True)
class GLIrrLabel:
    """Irreducible general-linear label in the Langlands convention."""

    ms: Multisegment

    def __str__(self) -> str:
        return "L{" + ",".join(str(s) for s in self.ms) + "}"

    def exponents(self) -> list[Rational]:
        return self.ms.exponents()

    @property
    def is_delta(self) -> bool:
        return len(self.ms) == 1

    @property
    def segment(self) -> Segment:
        if not self.is_delta:
            raise ValueError(f"{self} is not a single-segment label")
        return self.ms.segments[0]


def langlands(a) -> GLIrrLabel:
    if isinstance(a, Segment):
        a = Multisegment.of(a)
    return GLIrrLabel(a)


def zelevinsky(a) -> GLIrrLabel:
    """Z(a) = L(a^t): the Zelevinsky label is stored via the MW transpose."""
    if isinstance(a, Segment):
        a = Multisegment.of(a)
    return GLIrrLabel(mw_involution(a))


def label_contragredient(label: GLIrrLabel) -> GLIrrLabel:
    return GLIrrLabel(Multisegment.of(*[contragredient(s) for s in label.ms]))


def delta_product_irreducible(segments: Iterable[Segment]) -> bool:
    """True iff the product of the essentially sq-integrable factors is irreducible."""
    segs = [s for s in segments if s is not EMPTY]
    return all(not linked(s1, s2) for s1, s2 in itertools.combinations(segs, 2))


def is_ladder(a: Multisegment) -> bool:
    """Strictly decreasing begins and ends (in some order)."""
    segs = sorted(a.segments, key=lambda s: (s.begin, s.end), reverse=True)
    if len(segs) <= 1:
        return True
    for s1, s2 in zip(segs, segs[1:]):
        if not (s1.begin > s2.begin and s1.end > s2.end):
            return False
        if (s1.begin - s2.begin).denominator != 1:
            return False
    return True


def _speh_pairing(blocks: list[tuple[int, int, Rational]]) -> bool:
    """Group shifted Speh blocks: center 0 free, mirror pairs need |c| < 1/2."""
    from collections import Counter

    pos = Counter()
    for length, n, c in blocks:
        if c == 0:
            continue
        if abs(c) >= Rational(1, 2):
            return False
        pos[(length, n, abs(c))] += 1 if c > 0 else -1
    return all(v == 0 for v in pos.values())


def gl_is_unitarizable(label: GLIrrLabel) -> bool:
    """Unitarity test by partition into shifted Speh blocks.

    A block is a set of equal-length segments with consecutive begins; its
    shift is the mean center.  The label is unitarizable iff some partition
    of its multisegment into blocks can be grouped into shift-0 blocks and
    mirror pairs of equal shape with shift strictly inside (0, 1/2).
    """
    segs = sorted(label.ms.segments, key=lambda s: (s.length, s.begin, s.end))
    if len(segs) > 8:
        raise ValueError("unitarity search supports at most 8 segments")

    def search(pool: tuple[Segment, ...], blocks: list[tuple[int, int, Rational]]) -> bool:
        if not pool:
            return _speh_pairing(blocks)
        # block containing the minimal segment must start its begin-run there
        first = pool[0]
        rest = list(pool[1:])
        n = 1
        while True:
            shift = Rational(first.center + Rational(n - 1, 2))
            if search(tuple(rest), blocks + [(first.length, n, shift)]):
                return True
            # extend the block by the next begin in the run, if present
            target = first.shift(n)
            if target not in rest:
                return False
            rest.remove(target)
            n += 1

    return search(tuple(segs), [])


# --- text parsing -----------------------------------------------------------


def parse_segment(text: str):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"bad segment: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return EMPTY
    parts = [p.strip() for p in inner.split(",")]
    if len(parts) == 1:
        return make_segment(rat(parts[0]))
    if len(parts) == 2:
        return make_segment(rat(parts[0]), rat(parts[1]))
    raise ValueError(f"bad segment: {text!r}")


def _split_top_level(text: str, sep: str = ",") -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "[{(":
            depth += 1
        elif ch in "]})":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur or parts:
        parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def parse_multisegment(text: str) -> Multisegment:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"bad multisegment: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return Multisegment(())
    return Multisegment.of(*[parse_segment(p) for p in _split_top_level(inner)])


def parse_gl_label(text: str) -> GLIrrLabel:
    text = text.strip()
    if text.startswith("L"):
        return langlands(parse_multisegment(text[1:]))
    if text.startswith("Z"):
        return zelevinsky(parse_multisegment(text[1:]))
    raise ValueError(f"bad GL label: {text!r}")
