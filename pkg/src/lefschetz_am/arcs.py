"""Isotopy classes of arcs between punctures of the (m+1)-punctured disc.

An arc is the image of a straight chord under a braid.  Its isotopy class is
determined by its half-twist, an element of Br_{m+1} conjugate to a standard
generator, so arcs are compared through the normal form of that half-twist.
"""

from __future__ import annotations

import dataclasses
import enum
import functools
import json
import re
from typing import Optional

from .braid import (
    BraidError,
    BraidWord,
    CanonicalBraid,
    half_twist_word,
    invert,
    multiply,
    normal_form,
    parse_word,
)


class ArcError(ValueError):
    pass


@dataclasses.dataclass(frozen=True, order=True)
class SegmentChord:
    """Straight segment between punctures k < l (indices mod m+1, normalized)."""

    k: int
    l: int

    @classmethod
    def of(cls, k: int, l: int, m: int) -> SegmentChord:
        if not (0 <= k <= m and 0 <= l <= m):
            raise ArcError(f"puncture index out of range 0..{m}: ({k},{l})")
        if k == l:
            raise ArcError("chord endpoints coincide")
        return cls(min(k, l), max(k, l))

    def validate(self, m: int) -> None:
        if not (0 <= self.k < self.l <= m):
            raise ArcError(f"invalid chord ({self.k},{self.l}) for m={m}")

    def endpoints(self) -> frozenset[int]:
        return frozenset((self.k, self.l))

    def __str__(self) -> str:
        return f"({self.k},{self.l})"


def all_chords(m: int) -> list[SegmentChord]:
    return [SegmentChord(k, l) for k in range(m + 1) for l in range(k + 1, m + 1)]


class ChordRelation(enum.Enum):
    DISJOINT = "disjoint"
    SHARED_ENDPOINT = "shared_endpoint"
    CROSSING = "crossing"


def chord_relation(c1: SegmentChord, c2: SegmentChord) -> ChordRelation:
    if c1.endpoints() & c2.endpoints():
        return ChordRelation.SHARED_ENDPOINT
    inside = (c1.k < c2.k < c1.l) != (c1.k < c2.l < c1.l)
    return ChordRelation.CROSSING if inside else ChordRelation.DISJOINT


@functools.lru_cache(maxsize=None)
def chord_twist(m: int, chord: SegmentChord, handedness: int = 1) -> CanonicalBraid:
    chord.validate(m)
    return normal_form(half_twist_word(chord.k, chord.l, m, handedness))


@functools.lru_cache(maxsize=None)
def chord_table(m: int, handedness: int = 1) -> dict[CanonicalBraid, SegmentChord]:
    return {chord_twist(m, c, handedness): c for c in all_chords(m)}


@dataclasses.dataclass(frozen=True)
class Arc:
    m: int
    base: SegmentChord
    conjugator: BraidWord
    handedness: int = 1
    key: CanonicalBraid = dataclasses.field(init=False, compare=False, repr=False)

    def __post_init__(self):
        self.base.validate(self.m)
        if self.conjugator.strands != self.m + 1:
            raise ArcError(
                f"conjugator has {self.conjugator.strands} strands, expected {self.m + 1}")
        c = normal_form(self.conjugator)
        key = c * chord_twist(self.m, self.base, self.handedness) * c.inverse()
        object.__setattr__(self, "key", key)

    def endpoints(self) -> frozenset[int]:
        """Punctures joined by the arc, read off the half-twist's permutation."""
        p = self.key.permutation()
        moved = [x for x, y in enumerate(p) if x != y]
        return frozenset(moved)

    def to_json(self) -> dict:
        return {"base": [self.base.k, self.base.l], "conjugator": list(self.conjugator.letters)}

    def __str__(self) -> str:
        return f'base={self.base.k},{self.base.l}; conj="{self.conjugator}"'


def make_arc(m: int, base: SegmentChord, conjugator: Optional[BraidWord] = None,
             handedness: int = 1) -> Arc:
    if conjugator is None:
        conjugator = BraidWord(m + 1, ())
    return Arc(m, base, conjugator, handedness)


def chord_arc(m: int, k: int, l: int, handedness: int = 1) -> Arc:
    return make_arc(m, SegmentChord(k, l), handedness=handedness)


def half_twist(a: Arc) -> BraidWord:
    """A word for the arc's half-twist: conjugator * t_base * conjugator^-1."""
    t = half_twist_word(a.base.k, a.base.l, a.m, a.handedness)
    return multiply(multiply(a.conjugator, t), invert(a.conjugator))


def apply_braid(b: BraidWord, a: Arc) -> Arc:
    if b.strands != a.m + 1:
        raise ArcError(f"braid has {b.strands} strands, arc lives on {a.m + 1}")
    return Arc(a.m, a.base, multiply(b, a.conjugator), a.handedness)


def is_isotopic(a1: Arc, a2: Arc) -> bool:
    if a1.m != a2.m:
        raise ArcError(f"m mismatch: {a1.m} vs {a2.m}")
    return a1.key == a2.key


def match_segment(a: Arc) -> Optional[SegmentChord]:
    return chord_table(a.m, a.handedness).get(a.key)


def match_key(m: int, key: CanonicalBraid, handedness: int = 1) -> Optional[SegmentChord]:
    return chord_table(m, handedness).get(key)


def is_half_twist_like(key: CanonicalBraid) -> bool:
    """True when the permutation image is a transposition."""
    p = key.permutation()
    return sum(1 for x, y in enumerate(p) if x != y) == 2


# ---------------------------------------------------------------------------
# text and JSON forms

_ARC_TEXT = re.compile(
    r'^\s*base\s*=\s*(-?\d+)\s*,\s*(-?\d+)\s*(?:;\s*conj\s*=\s*"([^"]*)"\s*)?;?\s*$')


def parse_arc(text: str, m: int, handedness: int = 1) -> Arc:
    """Parse ``base=k,l; conj="1 -2 1"``."""
    match = _ARC_TEXT.match(text)
    if not match:
        raise ArcError(f"cannot parse arc {text!r}")
    k, l, conj = int(match.group(1)), int(match.group(2)), match.group(3) or ""
    try:
        word = parse_word(conj, m + 1)
    except BraidError as exc:
        raise ArcError(str(exc)) from exc
    return make_arc(m, SegmentChord.of(k, l, m), word, handedness)


def arc_from_json(data, m: int, handedness: int = 1) -> Arc:
    if isinstance(data, str):
        data = json.loads(data)
    k, l = data["base"]
    word = BraidWord(m + 1, tuple(data.get("conjugator", ())))
    return make_arc(m, SegmentChord.of(k, l, m), word, handedness)
