"""
Braid group arithmetic on m+1 strands with a solution of the word problem.

Words are tuples of signed generator indices: ``i`` stands for the Artin
generator sigma_i and ``-i`` for its inverse.  Group elements are compared
through the left-greedy Garside normal form

    Delta^p A_1 ... A_r

where each A_j is a positive permutation braid (neither trivial nor Delta) and
every adjacent pair (A_j, A_{j+1}) is left-weighted.  A permutation braid is
stored as its underlying permutation, a tuple ``p`` with ``p[x]`` the image of
position ``x``; products compose as functions, ``(p*q)[x] = p[q[x]]``, and the
letter sigma_i maps to the transposition of positions i-1 and i.
"""

from __future__ import annotations

import dataclasses
import functools
import re
from typing import Iterable, Sequence

Perm = tuple[int, ...]
Word = tuple[int, ...]


class BraidError(ValueError):
    """Raised for malformed words or mismatched strand counts."""


# ---------------------------------------------------------------------------
# permutations

@functools.lru_cache(maxsize=None)
def identity_perm(n: int) -> Perm:
    return tuple(range(n))


@functools.lru_cache(maxsize=None)
def delta_perm(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def _swap_positions(p: Perm, i: int) -> Perm:
    # p * s_i
    lst = list(p)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def _swap_values(p: Perm, i: int) -> Perm:
    # s_i * p
    return tuple(i if y == i - 1 else i - 1 if y == i else y for y in p)


@functools.lru_cache(maxsize=None)
def right_descents(p: Perm) -> frozenset[int]:
    """Generators i with p = p' * s_i and length(p') < length(p)."""
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


@functools.lru_cache(maxsize=None)
def left_descents(p: Perm) -> frozenset[int]:
    """Generators i with p = s_i * p' and length(p') < length(p)."""
    return right_descents(perm_inverse(p))


@functools.lru_cache(maxsize=None)
def tau(p: Perm) -> Perm:
    """Conjugation by Delta: sigma_i -> sigma_{n-i}."""
    w = delta_perm(len(p))
    return compose(compose(w, p), w)


@functools.lru_cache(maxsize=None)
def perm_word(p: Perm) -> Word:
    """A reduced positive word for the permutation braid ``p``."""
    letters: list[int] = []
    while True:
        desc = right_descents(p)
        if not desc:
            break
        i = min(desc)
        letters.append(i)
        p = _swap_positions(p, i)
    return tuple(reversed(letters))


def word_permutation(letters: Iterable[int], n: int) -> Perm:
    """Image of a braid word in the symmetric group on ``n`` points."""
    p = identity_perm(n)
    for a in letters:
        p = _swap_positions(p, abs(a))
    return p


# ---------------------------------------------------------------------------
# normal forms

def _left_weight(factors: list[Perm]) -> None:
    """Slide letters leftwards until every adjacent pair is left-weighted."""
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            a, b = factors[j], factors[j + 1]
            while True:
                movable = left_descents(b) - right_descents(a)
                if not movable:
                    break
                i = min(movable)
                a = _swap_positions(a, i)
                b = _swap_values(b, i)
                changed = True
            factors[j], factors[j + 1] = a, b


def _normalize(n: int, power: int, factors: Sequence[Perm]) -> CanonicalBraid:
    work = list(factors)
    _left_weight(work)
    top, ident = delta_perm(n), identity_perm(n)
    lo, hi = 0, len(work)
    while lo < hi and work[lo] == top:
        lo += 1
    while lo < hi and work[hi - 1] == ident:
        hi -= 1
    return CanonicalBraid(n, power + lo, tuple(work[lo:hi]))


@dataclasses.dataclass(frozen=True)
class CanonicalBraid:
    """Left normal form Delta^infimum * factors[0] * ... * factors[-1]."""

    strands: int
    infimum: int
    factors: tuple[Perm, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    def permutation(self) -> Perm:
        p = identity_perm(self.strands)
        if self.infimum % 2:
            p = delta_perm(self.strands)
        for f in self.factors:
            p = compose(p, f)
        return p

    def word(self) -> BraidWord:
        """A word representing this element (normal_form(word) == self)."""
        n = self.strands
        dw = perm_word(delta_perm(n))
        if self.infimum >= 0:
            letters = dw * self.infimum
        else:
            letters = tuple(-a for a in reversed(dw)) * (-self.infimum)
        for f in self.factors:
            letters += perm_word(f)
        return BraidWord(n, letters)

    def __mul__(self, other: CanonicalBraid) -> CanonicalBraid:
        if self.strands != other.strands:
            raise BraidError(f"strand mismatch: {self.strands} vs {other.strands}")
        left = self.factors
        if other.infimum % 2:
            left = tuple(tau(f) for f in left)
        return _normalize(self.strands, self.infimum + other.infimum, left + other.factors)

    def inverse(self) -> CanonicalBraid:
        # (Delta^p A_1..A_r)^-1 = A_r^-1 .. A_1^-1 Delta^-p, with
        # A^-1 = Delta^-1 * (Delta A^-1) and Delta A^-1 a permutation braid.
        n = self.strands
        w = delta_perm(n)
        power = 0
        out: list[Perm] = []
        for f in reversed(self.factors):
            out = [tau(g) for g in out]
            power -= 1
            out.append(compose(w, perm_inverse(f)))
        if self.infimum % 2:
            out = [tau(g) for g in out]
        return _normalize(n, power - self.infimum, out)

    def __str__(self) -> str:
        if self.is_identity():
            return "identity"
        parts = []
        if self.infimum:
            parts.append(f"D^{self.infimum}")
        for f in self.factors:
            parts.append("[" + " ".join(str(x) for x in f) + "]")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "infimum": self.infimum,
            "factors": [list(f) for f in self.factors],
        }


@functools.lru_cache(maxsize=None)
def identity_element(n: int) -> CanonicalBraid:
    return CanonicalBraid(n, 0, ())


# ---------------------------------------------------------------------------
# words

@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Word = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BraidError(f"need at least 2 strands, got {self.strands}")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) > self.strands - 1:
                raise BraidError(f"letter {a} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return multiply(self, other)

    def __str__(self) -> str:
        return format_word(self.letters)


def _check_strands(u: BraidWord, v: BraidWord) -> None:
    if u.strands != v.strands:
        raise BraidError(f"strand mismatch: {u.strands} vs {v.strands}")


def multiply(u: BraidWord, v: BraidWord) -> BraidWord:
    _check_strands(u, v)
    return BraidWord(u.strands, u.letters + v.letters)


def invert(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, tuple(-a for a in reversed(u.letters)))


def conjugate(b: BraidWord, g: BraidWord) -> BraidWord:
    """The word b g b^-1."""
    _check_strands(b, g)
    return BraidWord(b.strands, b.letters + g.letters + invert(b).letters)


def mirror(u: BraidWord) -> BraidWord:
    """Image under the automorphism sigma_i -> sigma_i^-1."""
    return BraidWord(u.strands, tuple(-a for a in u.letters))


@functools.lru_cache(maxsize=65536)
def _normal_form_letters(n: int, letters: Word) -> CanonicalBraid:
    w = delta_perm(n)
    power = 0
    factors: list[Perm] = []
    for a in letters:
        i = abs(a)
        if a > 0:
            factors.append(_swap_positions(identity_perm(n), i))
        else:
            # X sigma_i^-1 = Delta^-1 tau(X) (Delta sigma_i^-1)
            factors = [tau(f) for f in factors]
            power -= 1
            factors.append(_swap_positions(w, i))
    return _normalize(n, power, factors)


def normal_form(u: BraidWord) -> CanonicalBraid:
    return _normal_form_letters(u.strands, u.letters)


def equal(u: BraidWord, v: BraidWord) -> bool:
    _check_strands(u, v)
    return normal_form(u) == normal_form(v)


def permutation(u: BraidWord) -> Perm:
    return word_permutation(u.letters, u.strands)


def generator(i: int, strands: int, sign: int = 1) -> BraidWord:
    return BraidWord(strands, (sign * i,))


def half_twist_word(k: int, l: int, m: int, handedness: int = 1) -> BraidWord:
    """Word for the half-twist along the straight chord between punctures k < l.

    Punctures sit at the (m+1)-st roots of unity in counterclockwise order and
    sigma_i twists along the chord (i-1, i).  For handedness +1 the chord (k, l)
    gives sigma_l conjugated by sigma_{k+1} ... sigma_{l-1}; handedness -1 is
    the mirror convention (conjugator letters inverted).
    """
    if handedness not in (1, -1):
        raise BraidError("handedness must be +1 or -1")
    if not (0 <= k < l <= m):
        raise BraidError(f"need 0 <= k < l <= m, got k={k}, l={l}, m={m}")
    c = tuple(handedness * i for i in range(k + 1, l))
    return BraidWord(m + 1, c + (l,) + tuple(-a for a in reversed(c)))


def rotation_word(m: int, handedness: int = 1) -> BraidWord:
    """The braid rotating puncture j to j+1 (mod m+1); conjugates sigma_i to sigma_{i+1}."""
    return BraidWord(m + 1, tuple(handedness * i for i in range(1, m + 1)))


# ---------------------------------------------------------------------------
# text syntax

_TOKEN = re.compile(r"[+-]?\d+")


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed integers, e.g. ``"1 2 -1"``."""
    tokens = text.replace(",", " ").split()
    for tok in tokens:
        if not _TOKEN.fullmatch(tok):
            raise BraidError(f"bad braid letter {tok!r}")
    return BraidWord(strands, tuple(int(t) for t in tokens))


def format_word(letters: Sequence[int]) -> str:
    return " ".join(str(a) for a in letters)
