"""The general-linear Grothendieck ring and its comultiplication maps.

Elements are integer combinations of product keys: canonical tuples of
irreducible labels whose formal product names a (possibly virtual) class.
The module provides multiplication, the two standard comultiplications, the
twisted restriction operator used over classical groups, and a signed
descending-chain count that extracts single-segment multiplicities.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Union

from .arith import Rational
from .segments import (
    EMPTY,
    GLIrrLabel,
    Multisegment,
    Segment,
    contragredient,
    delta_product_irreducible,
    is_ladder,
    label_contragredient,
    langlands,
    linked,
    make_segment,
    zelevinsky,
)

__all__ = [
    "NotStandardBasis",
    "NotLadder",
    "ProductKey",
    "product_key",
    "GLElement",
    "GLTensor",
    "gl_unit",
    "gl_delta",
    "gl_label",
    "multiply",
    "contragredient_element",
    "contragredient_key",
    "comult_delta",
    "comult_zeta",
    "comult",
    "m_star",
    "m_star_delta_closed",
    "m_star_gl",
    "m_star_gl_ladder",
    "two_segment_decompose",
    "ladder_delta_expansion",
    "chain_count",
]


class NotStandardBasis(ValueError):
    """Comultiplication requested on a factor with no product expansion."""


class NotLadder(ValueError):
    """Determinant-style expansion requested for a non-ladder label."""


ProductKey = tuple[GLIrrLabel, ...]

Factor = Union[GLIrrLabel, Segment]


def _as_label(f: Factor) -> GLIrrLabel | None:
    if f is EMPTY:
        return None
    if isinstance(f, Segment):
        return langlands(Multisegment.of(f))
    if isinstance(f, GLIrrLabel):
        return f if len(f.ms) else None
    raise TypeError(f"not a GL factor: {f!r}")


def product_key(factors: Iterable[Factor]) -> ProductKey:
    """Canonical key for a formal product of irreducible labels.

    Labels whose multisegment is pairwise unlinked split into their segment
    factors; afterwards a key consisting only of pairwise-unlinked segments
    merges back into a single label.  Either way the key names the same
    irreducible pieces, just in one fixed form.
    """
    labs: list[GLIrrLabel] = []
    for f in factors:
        lab = _as_label(f)
        if lab is None:
            continue
        if len(lab.ms) > 1 and delta_product_irreducible(lab.ms):
            labs.extend(langlands(Multisegment.of(s)) for s in lab.ms)
        else:
            labs.append(lab)
    if (
        len(labs) > 1
        and all(l.is_delta for l in labs)
        and delta_product_irreducible([l.segment for l in labs])
    ):
        labs = [langlands(Multisegment.of(*[l.segment for l in labs]))]
    return tuple(sorted(labs))


class GLElement:
    """Integer combination of product keys."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[ProductKey, int] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def __eq__(self, other) -> bool:
        return isinstance(other, GLElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "GLElement") -> "GLElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return GLElement(out)

    def __sub__(self, other: "GLElement") -> "GLElement":
        return self + other.scale(-1)

    def scale(self, n: int) -> "GLElement":
        return GLElement({k: n * c for k, c in self.terms.items()})

    def __mul__(self, other: "GLElement") -> "GLElement":
        out: dict[ProductKey, int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = product_key(k1 + k2)
                out[k] = out.get(k, 0) + c1 * c2
        return GLElement(out)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items()):
            body = "x".join(str(l) for l in k) if k else "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)

    __repr__ = __str__


def gl_unit() -> GLElement:
    return GLElement({(): 1})


def gl_delta(segment) -> GLElement:
    if segment is EMPTY:
        return gl_unit()
    return GLElement({product_key([segment]): 1})


def gl_label(label: GLIrrLabel) -> GLElement:
    return GLElement({product_key([label]): 1})


def multiply(x: GLElement, y: GLElement) -> GLElement:
    return x * y


def contragredient_key(key: ProductKey) -> ProductKey:
    return product_key([label_contragredient(l) for l in key])


def contragredient_element(x: GLElement) -> GLElement:
    out: dict[ProductKey, int] = {}
    for k, c in x.terms.items():
        kk = contragredient_key(k)
        out[kk] = out.get(kk, 0) + c
    return GLElement(out)


class GLTensor:
    """Integer combination of pairs of product keys."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[ProductKey, ProductKey], int] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def __eq__(self, other) -> bool:
        return isinstance(other, GLTensor) and self.terms == other.terms

    def __add__(self, other: "GLTensor") -> "GLTensor":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return GLTensor(out)

    def __sub__(self, other: "GLTensor") -> "GLTensor":
        return self + other.scale(-1)

    def scale(self, n: int) -> "GLTensor":
        return GLTensor({k: n * c for k, c in self.terms.items()})

    def __mul__(self, other: "GLTensor") -> "GLTensor":
        out: dict[tuple[ProductKey, ProductKey], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (product_key(a1 + a2), product_key(b1 + b2))
                out[k] = out.get(k, 0) + c1 * c2
        return GLTensor(out)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def flip(self) -> "GLTensor":
        out: dict[tuple[ProductKey, ProductKey], int] = {}
        for (a, b), c in self.terms.items():
            out[(b, a)] = out.get((b, a), 0) + c
        return GLTensor(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            la = "x".join(str(l) for l in a) if a else "1"
            lb = "x".join(str(l) for l in b) if b else "1"
            body = f"{la} (x) {lb}"
            parts.append(body if c == 1 else f"{c}*[{body}]")
        return " + ".join(parts)

    __repr__ = __str__


def tensor_unit() -> GLTensor:
    return GLTensor({((), ()): 1})


def comult_delta(segment) -> GLTensor:
    """m*(delta([b,e])) = sum_i delta([i+1,e]) (x) delta([b,i])."""
    if segment is EMPTY:
        return tensor_unit()
    out = GLTensor()
    b, e = segment.begin, segment.end
    i = Rational(b - 1)
    while i <= e:
        left = product_key([make_segment(i + 1, e)]) if i < e else ()
        right = product_key([make_segment(b, i)]) if i >= b else ()
        out += GLTensor({(left, right): 1})
        i = Rational(i + 1)
    return out


def comult_zeta(segment) -> GLTensor:
    """m*(zeta([b,e])) = sum_i zeta([b,i]) (x) zeta([i+1,e])."""
    if segment is EMPTY:
        return tensor_unit()
    out = GLTensor()
    b, e = segment.begin, segment.end
    i = Rational(b - 1)
    while i <= e:
        left = product_key([zelevinsky(Multisegment.of(make_segment(b, i)))]) if i >= b else ()
        right = product_key([zelevinsky(Multisegment.of(make_segment(i + 1, e)))]) if i < e else ()
        out += GLTensor({(left, right): 1})
        i = Rational(i + 1)
    return out


def _comult_factor(label: GLIrrLabel) -> GLTensor:
    if label.is_delta:
        return comult_delta(label.segment)
    if delta_product_irreducible(label.ms):
        out = tensor_unit()
        for s in label.ms:
            out = out * comult_delta(s)
        return out
    raise NotStandardBasis(f"no product expansion for {label}")


def comult(x: GLElement) -> GLTensor:
    """Multiplicative comultiplication; factors must expand into deltas."""
    out = GLTensor()
    for key, c in x.terms.items():
        term = tensor_unit()
        for label in key:
            term = term * _comult_factor(label)
        out += term.scale(c)
    return out


def m_star(x: GLElement) -> GLTensor:
    """Twisted restriction: (m (x) 1) o (check (x) m*) o flip o m*."""
    out = GLTensor()
    for (k1, k2), c in comult(x).terms.items():
        # after the flip, the contragredient hits k2 and m* reexpands k1
        left0 = contragredient_key(k2)
        inner = comult(GLElement({k1: 1}))
        for (k1a, k1b), c2 in inner.terms.items():
            k = (product_key(left0 + k1a), k1b)
            out += GLTensor({k: c * c2})
    return out


def m_star_delta_closed(segment) -> GLTensor:
    """Closed form of m_star(delta([b,e])): a double sum over i <= j."""
    if segment is EMPTY:
        return tensor_unit()
    out = GLTensor()
    b, e = segment.begin, segment.end
    i = Rational(b - 1)
    while i <= e:
        j = i
        while j <= e:
            left = product_key(
                [make_segment(-i, -b), make_segment(j + 1, e)]
                if i >= b
                else [make_segment(j + 1, e)]
            )
            right = product_key([make_segment(i + 1, j)]) if j > i else ()
            out += GLTensor({(left, right): 1})
            j = Rational(j + 1)
        i = Rational(i + 1)
    return out


def m_star_gl(x: GLElement) -> GLElement:
    """m o (check (x) id) o flip o m*: the GL part of the twisted restriction."""
    out = GLElement()
    for (k1, k2), c in comult(x).terms.items():
        key = product_key(contragredient_key(k2) + k1)
        out += GLElement({key: c})
    return out


def ladder_delta_expansion(label: GLIrrLabel) -> list[tuple[int, tuple[Segment, ...]]]:
    """Signed expansion of a ladder label into formal delta products.

    With segments [a_i, b_i] sorted by decreasing begin, the label equals the
    determinant-style alternating sum over permutations w of the products
    delta([a_{w(i)}, b_i]); a permuted segment of length 0 drops out as the
    unit and negative length kills the term.
    """
    segs = sorted(label.ms.segments, key=lambda s: (s.begin, s.end), reverse=True)
    if not is_ladder(label.ms):
        raise NotLadder(f"{label} is not a ladder")
    begins = [s.begin for s in segs]
    ends = [s.end for s in segs]
    n = len(segs)
    out: list[tuple[int, tuple[Segment, ...]]] = []
    for w in itertools.permutations(range(n)):
        sign = 1
        seen = list(w)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        factors: list[Segment] = []
        dead = False
        for i in range(n):
            diff = ends[i] - begins[w[i]]
            if diff < -1:
                dead = True
                break
            if diff == -1:
                continue
            factors.append(make_segment(begins[w[i]], ends[i]))
        if not dead:
            out.append((sign, tuple(factors)))
    return out


def m_star_gl_ladder(label: GLIrrLabel) -> GLElement:
    """GL twisted restriction of a ladder label via its delta expansion."""
    if label.is_delta:
        return m_star_gl(gl_delta(label.segment))
    out = GLElement()
    for sign, factors in ladder_delta_expansion(label):
        term = gl_unit()
        for s in factors:
            term = term * m_star_gl(gl_delta(s))
        out += term.scale(sign)
    return out


def two_segment_decompose(s1: Segment, s2: Segment) -> GLElement:
    """delta(s1) x delta(s2) as a sum of irreducible keys."""
    if s1 is EMPTY:
        return gl_delta(s2)
    if s2 is EMPTY:
        return gl_delta(s1)
    if not linked(s1, s2):
        return gl_delta(s1) * gl_delta(s2)
    union = make_segment(min(s1.begin, s2.begin), max(s1.end, s2.end))
    inter = make_segment(max(s1.begin, s2.begin), min(s1.end, s2.end))
    glued = gl_delta(union) * gl_delta(inter)
    return gl_label(langlands(Multisegment.of(s1, s2))) + glued


def _key_delta_expansion(key: ProductKey) -> list[tuple[int, tuple[Segment, ...]]]:
    expansions = []
    for label in key:
        if label.is_delta:
            expansions.append([(1, (label.segment,))])
        elif delta_product_irreducible(label.ms):
            expansions.append([(1, tuple(label.ms.segments))])
        else:
            expansions.append(ladder_delta_expansion(label))
    out: list[tuple[int, tuple[Segment, ...]]] = [(1, ())]
    for exp in expansions:
        out = [(s1 * s2, f1 + f2) for s1, f1 in out for s2, f2 in exp]
    return out


def _word(segment: Segment) -> tuple[Rational, ...]:
    return tuple(reversed(segment.points()))


def _shuffle_count(words: tuple[tuple[Rational, ...], ...], target: tuple[Rational, ...]) -> int:
    if sum(len(w) for w in words) != len(target):
        return 0

    @lru_cache(maxsize=None)
    def go(pos: tuple[int, ...]) -> int:
        done = sum(pos)
        if done == len(target):
            return 1
        t = target[done]
        total = 0
        for k, w in enumerate(words):
            p = pos[k]
            if p < len(w) and w[p] == t:
                total += go(pos[:k] + (p + 1,) + pos[k + 1 :])
        return total

    return go((0,) * len(words))


def chain_count(key: ProductKey, chain: tuple) -> int:
    """Signed number of shuffles of the key's delta words onto the chain.

    The chain is an ordered word of exponents; for a strictly descending
    chain this is exactly the multiplicity of the corresponding one-segment
    label in the product named by the key.
    """
    target = tuple(Rational(c) for c in chain)
    total = 0
    for sign, factors in _key_delta_expansion(key):
        words = tuple(_word(s) for s in factors)
        total += sign * _shuffle_count(words, target)
    return total
