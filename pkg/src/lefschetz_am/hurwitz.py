"""Hurwitz moves on ordered tuples of vanishing arcs.

A tuple is recorded by the half-twists (g_1, ..., g_r) of its arcs.  The
positive elementary move at position i is

    (..., g_i, g_{i+1}, ...)  ->  (..., g_i g_{i+1} g_i^-1, g_i, ...)

i.e. the (i+1)-st arc is carried along by the twist of the i-th and the two
swap places; the negative move is its inverse.  Both preserve the ordered
product g_1 ... g_r.  Under the mirror convention (handedness -1) the
twists stay positive but the disc is reflected, so the move conjugates by
g_i^-1 and the preserved product is g_r ... g_1.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from collections import deque
from typing import Iterable, Optional, Sequence

from .arcs import (
    Arc,
    ChordRelation,
    SegmentChord,
    all_chords,
    chord_relation,
    chord_twist,
    match_key,
)
from .braid import CanonicalBraid, identity_element


class CapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"orbit exceeds cap of {cap} tuples")
        self.cap = cap


@dataclasses.dataclass(frozen=True)
class VanishingTuple:
    m: int
    keys: tuple[CanonicalBraid, ...]
    handedness: int = 1

    @classmethod
    def from_arcs(cls, arcs: Sequence[Arc]) -> VanishingTuple:
        if not arcs:
            raise ValueError("empty tuple")
        m, h = arcs[0].m, arcs[0].handedness
        if any(a.m != m or a.handedness != h for a in arcs):
            raise ValueError("arcs from different discs or conventions")
        return cls(m, tuple(a.key for a in arcs), h)

    @classmethod
    def from_chords(cls, m: int, chords: Iterable[SegmentChord],
                    handedness: int = 1) -> VanishingTuple:
        return cls(m, tuple(chord_twist(m, c, handedness) for c in chords), handedness)

    def __len__(self) -> int:
        return len(self.keys)

    def chords(self) -> tuple[Optional[SegmentChord], ...]:
        return tuple(match_key(self.m, g, self.handedness) for g in self.keys)

    def to_json(self) -> dict:
        chords = self.chords()
        return {
            "chords": [[c.k, c.l] if c is not None else None for c in chords],
            "half_twists": [str(g) for g in self.keys],
        }


def standard_tuple(m: int, handedness: int = 1) -> VanishingTuple:
    """The A_m chain (delta^{0,1}, delta^{1,2}, ..., delta^{m-1,m})."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return VanishingTuple.from_chords(m, (SegmentChord(j - 1, j) for j in range(1, m + 1)),
                                      handedness)


@functools.lru_cache(maxsize=1 << 16)
def _conj(g: CanonicalBraid, h: CanonicalBraid) -> CanonicalBraid:
    return g * h * g.inverse()


def hurwitz_move(t: VanishingTuple, i: int, direction: int = 1) -> VanishingTuple:
    """Elementary move at position i (1-based, 1 <= i <= r-1)."""
    if not 1 <= i <= len(t) - 1:
        raise ValueError(f"move position {i} out of range 1..{len(t) - 1}")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    keys = list(t.keys)
    a, b = keys[i - 1], keys[i]
    # the mirror convention conjugates by the inverse twist
    h = t.handedness
    if direction == 1:
        keys[i - 1], keys[i] = _conj(a if h == 1 else a.inverse(), b), a
    else:
        keys[i - 1], keys[i] = b, _conj(b.inverse() if h == 1 else b, a)
    return dataclasses.replace(t, keys=tuple(keys))


def apply_moves(t: VanishingTuple, moves: Iterable[tuple[int, int]]) -> VanishingTuple:
    for i, direction in moves:
        t = hurwitz_move(t, i, direction)
    return t


def total_monodromy(t: VanishingTuple) -> CanonicalBraid:
    """Ordered product g_1 ... g_r (reversed under the mirror convention)."""
    out = identity_element(t.m + 1)
    for g in (t.keys if t.handedness == 1 else reversed(t.keys)):
        out = out * g
    return out


def orbit(t: VanishingTuple, cap: int = 10**6) -> list[VanishingTuple]:
    """Breadth-first closure under all elementary moves, in discovery order."""
    if cap < 1:
        raise ValueError("cap must be positive")
    seen = {t.keys}
    found = [t]
    queue = deque([t])
    while queue:
        cur = queue.popleft()
        for i in range(1, len(cur)):
            for direction in (1, -1):
                nxt = hurwitz_move(cur, i, direction)
                if nxt.keys not in seen:
                    seen.add(nxt.keys)
                    if len(seen) > cap:
                        raise CapExceeded(cap)
                    found.append(nxt)
                    queue.append(nxt)
    return found


# ---------------------------------------------------------------------------
# clockwise trees

@dataclasses.dataclass(frozen=True)
class TreeConfig:
    """Chords in tuple order forming a clockwise tree."""

    m: int
    chords: tuple[SegmentChord, ...]


def _offset(m: int, v: int, w: int) -> int:
    return (w - v) % (m + 1)


def is_tree(m: int, chords: Sequence[SegmentChord]) -> bool:
    """Connected and acyclic on its own vertex set."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in chords:
        a, b = find(c.k), find(c.l)
        if a == b:
            return False
        parent[a] = b
    return len({find(x) for x in parent}) == 1


def chords_clockwise_tree(m: int, chords: Sequence[SegmentChord]) -> bool:
    """Non-crossing tree whose chords turn clockwise (in tuple order) at each shared puncture.

    Punctures are labelled counterclockwise, so the direction from v towards w
    turns counterclockwise as the offset (w - v) mod (m+1) grows; clockwise
    order in the tuple means strictly decreasing offsets.  Chord labels are
    already reflected under the mirror convention, so the test is the same.
    """
    if len(set(chords)) != len(chords):
        return False
    for c1, c2 in itertools.combinations(chords, 2):
        if chord_relation(c1, c2) is ChordRelation.CROSSING:
            return False
    if not is_tree(m, chords):
        return False
    incident: dict[int, list[int]] = {}
    for c in chords:
        incident.setdefault(c.k, []).append(_offset(m, c.k, c.l))
        incident.setdefault(c.l, []).append(_offset(m, c.l, c.k))
    for offsets in incident.values():
        if any(a <= b for a, b in zip(offsets, offsets[1:])):
            return False
    return True


def is_clockwise_tree(t: VanishingTuple) -> Optional[TreeConfig]:
    chords = t.chords()
    if any(c is None for c in chords):
        return None
    if not chords_clockwise_tree(t.m, chords):
        return None
    return TreeConfig(t.m, tuple(chords))


def clockwise_tree_tuples(m: int) -> list[tuple[SegmentChord, ...]]:
    """All ordered m-tuples of chords forming a clockwise tree, by direct enumeration."""
    out = []
    for subset in itertools.combinations(all_chords(m), m):
        if not is_tree(m, subset):
            continue
        if any(chord_relation(a, b) is ChordRelation.CROSSING
               for a, b in itertools.combinations(subset, 2)):
            continue
        for order in itertools.permutations(subset):
            if chords_clockwise_tree(m, order):
                out.append(order)
    return out


def cayley_count(m: int) -> int:
    return (m + 1) ** (m - 1)


# ---------------------------------------------------------------------------
# the explicit move sequence turning the chain into a tuple ending in delta^{k,l}

def snake_moves(m: int, k: int, l: int) -> list[tuple[int, int]]:
    """Moves sigma_{m-1}^-1 ... sigma_{k-l+m+1}^-1 (sigma_1 ... sigma_{m-1})^{m-l},
    listed in the order they are applied (rightmost factor first)."""
    if not 0 <= k < l <= m:
        raise ValueError(f"need 0 <= k < l <= m, got ({k},{l})")
    word: list[tuple[int, int]] = []
    word += [(i, -1) for i in range(m - 1, k - l + m, -1)]
    word += [(i, 1) for i in range(1, m)] * (m - l)
    return list(reversed(word))


def snake_chords(m: int, k: int, l: int) -> list[SegmentChord]:
    """Target configuration: chain from l+1 round to k, chain k+1..l, then (k,l)."""
    def chord(a: int, b: int) -> SegmentChord:
        return SegmentChord.of(a % (m + 1), b % (m + 1), m)

    out = [chord(j, j + 1) for j in range(l + 1, m + k + 1)]
    out += [chord(j, j + 1) for j in range(k + 1, l)]
    out.append(chord(k, l))
    return out
