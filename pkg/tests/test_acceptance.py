"""Acceptance criteria.  Each test prints one ``[ACCEPT n] PASS|FAIL`` line."""

from __future__ import annotations

import itertools
import random
import time

import numpy as np
import pytest

import oracles
from lefschetz_am.arcs import SegmentChord, all_chords, chord_arc, chord_twist, half_twist, make_arc, match_segment
from lefschetz_am.braid import BraidWord, equal, half_twist_word, parse_word
from lefschetz_am.classify import EXOTIC, STANDARD, classify, standard_count
from lefschetz_am.homology import HomologyClass, SignConvention, arc_class
from lefschetz_am.hurwitz import (
    apply_moves,
    clockwise_tree_tuples,
    orbit,
    snake_chords,
    snake_moves,
    standard_tuple,
)
from lefschetz_am.lattice import (
    GeneratorClass,
    ThimbleLattice,
    am_quadratic,
    is_interval_vector,
    self_intersection,
    sigma_for,
)
from lefschetz_am.quiver import (
    QuiverRep,
    complex_barcode,
    decompose,
    direct_sum,
    iterated_twist,
    rank_table,
    reduce,
    rep_from_barcode,
    split_by_degree,
)


@pytest.fixture
def verdict(capsys):
    def emit(n: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[ACCEPT {n}] {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail
    return emit


HANDEDNESS = (1, -1)


def test_1_standard_choice_count(verdict):
    t0 = time.perf_counter()
    ok = True
    for h in HANDEDNESS:
        for m in (2, 3, 4, 5):
            standard = 0
            for c in all_chords(m):
                r = classify(m, 3, chord_arc(m, c.k, c.l, h))
                if r.symplectic.kind == STANDARD and r.symplectic.chord == c:
                    standard += 1
            ok &= standard == standard_count(m) == m * (m + 1) // 2
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1.0
    verdict(1, ok, f"chord arcs standard for m=2..5, both handedness ({elapsed:.3f}s < 1s)")


def test_2_orbit_sizes(verdict):
    t0 = time.perf_counter()
    sizes = {}
    for h in HANDEDNESS:
        for m in (2, 3, 4, 5):
            sizes[(h, m)] = len(orbit(standard_tuple(m, h)))
    elapsed = time.perf_counter() - t0
    expected = {2: 3, 3: 16, 4: 125, 5: 1296}
    ok = all(sizes[(h, m)] == expected[m] for h in HANDEDNESS for m in expected)
    ok &= elapsed < 300
    verdict(2, ok, f"orbit sizes {[sizes[(1, m)] for m in (2, 3, 4, 5)]} ({elapsed:.2f}s < 300s)")


def test_3_orbit_equals_clockwise_trees(verdict):
    ok = True
    for m in (1, 2, 3, 4):
        trees = set(clockwise_tree_tuples(m))
        for h in HANDEDNESS:
            ok &= {t.chords() for t in orbit(standard_tuple(m, h))} == trees
    verdict(3, ok, "BFS orbit = enumerated clockwise trees for m<=4, both handedness")


def test_4_quadratic_form_solutions(verdict):
    t0 = time.perf_counter()
    ok = True
    for m in range(1, 7):
        twos = 0
        for a in itertools.product(range(-3, 4), repeat=m):
            is_two = am_quadratic(a) == 2
            twos += is_two
            if is_two != (is_interval_vector(a) is not None):
                ok = False
        ok &= twos == m * (m + 1)
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 30
    verdict(4, ok, f"q(a)=2 iff +-interval on [-3,3]^m, m<=6 ({elapsed:.2f}s < 30s)")


def test_5_self_intersection_normalization(verdict):
    ok = True
    for n in (3, 5):
        for m in range(1, 7):
            for k in range(m):
                for l in range(k + 1, m + 1):
                    a = HomologyClass(tuple(1 if k <= i < l else 0 for i in range(m)))
                    x = self_intersection(ThimbleLattice(m, n, a), GeneratorClass(a))
                    ok &= x == 2 * sigma_for(n) == 2 * (-1) ** ((n + 1) * (n + 2) // 2)
    verdict(5, ok, "interval classes have x.x = 2 sigma for n=3,5")


def test_6_iterated_twists(verdict):
    t0 = time.perf_counter()
    ok = True
    for m in range(1, 7):
        for k in range(m):
            for l in range(k + 1, m + 1):
                c = reduce(iterated_twist(m, k, l))
                pieces = split_by_degree(c)
                bars = [iv for _, rep in pieces for iv in decompose(rep).intervals()]
                ok &= bars == [(k, l)] and complex_barcode(c).intervals() == [(k, l)]
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 10
    verdict(6, ok, f"iterated twist (k,l) is the single interval (k,l), m<=6 ({elapsed:.2f}s < 10s)")


def _random_word(rng: random.Random, n: int, length: int) -> tuple[int, ...]:
    return tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))


def _rewrite(rng: random.Random, letters: tuple[int, ...], n: int, max_len: int) -> tuple[int, ...]:
    """Apply random braid-group relations, staying within max_len letters."""
    w = list(letters)
    for _ in range(rng.randint(1, 6)):
        choice = rng.random()
        if choice < 0.3 and len(w) + 2 <= max_len:
            i = rng.randint(1, n - 1) * rng.choice((1, -1))
            pos = rng.randint(0, len(w))
            w[pos:pos] = [i, -i]
        elif choice < 0.5:
            for pos in range(len(w) - 1):
                if w[pos] == -w[pos + 1]:
                    del w[pos:pos + 2]
                    break
        elif choice < 0.75:
            for pos in range(len(w) - 1):
                a, b = w[pos], w[pos + 1]
                if abs(abs(a) - abs(b)) >= 2:
                    w[pos], w[pos + 1] = b, a
                    break
        else:
            for pos in range(len(w) - 2):
                a, b, c = w[pos:pos + 3]
                if a == c and a * b > 0 and abs(abs(a) - abs(b)) == 1:
                    w[pos:pos + 3] = [b, a, b]
                    break
    return tuple(w)


def test_7_word_problem_oracle(verdict):
    rng = random.Random(20240607)
    t0 = time.perf_counter()
    agree = total = equal_pairs = 0
    for idx in range(1200):
        n = rng.randint(2, 4)
        u = _random_word(rng, n, rng.randint(0, 10))
        v = _rewrite(rng, u, n, 10) if idx % 2 else _random_word(rng, n, rng.randint(0, 10))
        ours = equal(BraidWord(n, u), BraidWord(n, v))
        ref = oracles.lk_equal(u, v, n)
        agree += ours == ref
        equal_pairs += ref
        total += 1
    elapsed = time.perf_counter() - t0
    ok = agree == total and total >= 1000 and elapsed < 120
    verdict(7, ok, f"{agree}/{total} pairs agree with Lawrence-Krammer "
                   f"({equal_pairs} equal pairs, {elapsed:.1f}s < 120s)")


def test_8_chord_classes_are_intervals(verdict):
    ok = True
    for eps in (1, -1):
        conv = SignConvention(eps)
        for h in HANDEDNESS:
            for m in range(1, 7):
                for c in all_chords(m):
                    ok &= is_interval_vector(arc_class(chord_arc(m, c.k, c.l, h), conv)) == (c.k, c.l)
    verdict(8, ok, "chord arc classes are intervals e_{k+1}+...+e_l for m<=6, both epsilon")


def _random_rep(rng: random.Random) -> QuiverRep:
    m = rng.randint(1, 5)
    dims = [rng.randint(0, 4) for _ in range(m)]
    maps = tuple(np.array([[rng.randint(0, 1) for _ in range(dims[i])] for _ in range(dims[i + 1])],
                          dtype=np.uint8).reshape(dims[i + 1], dims[i]) for i in range(m - 1))
    return QuiverRep(tuple(dims), maps)


def test_9_barcode_correctness(verdict):
    rng = random.Random(99)
    ok = True
    for _ in range(200):
        r = _random_rep(rng)
        s = _random_rep(rng)
        while s.m != r.m:
            s = _random_rep(rng)
        bar = decompose(r)
        ok &= rank_table(rep_from_barcode(r.m, bar)) == rank_table(r)
        ok &= all(v == oracles.gf2_rank(r.composite(a, b).tolist())
                  for (a, b), v in rank_table(r).items())
        ok &= decompose(direct_sum(r, s)) == bar + decompose(s)
    verdict(9, ok, "200 random reps: rank tables reconstructed, decompose additive")


def test_10_exotic_detection(verdict):
    ok = True
    for h in HANDEDNESS:
        conj = parse_word("1 1", 3) if h == 1 else parse_word("-1 -1", 3)
        arc = make_arc(2, SegmentChord(1, 2), conj, h)
        report = classify(2, 3, arc)
        ok &= report.symplectic.kind == EXOTIC and match_segment(arc) is None
        word = half_twist(arc).letters
        for c in all_chords(2):
            ok &= arc.key != chord_twist(2, c, h)
            ok &= not oracles.lk_equal(word, half_twist_word(c.k, c.l, 2, h).letters, 3)
    verdict(10, ok, "fixture sigma1^2 on (1,2): exotic, all 3 chord comparisons fail (NF and LK)")


def test_11_snake_replay(verdict):
    m, k, l = 7, 1, 6
    ok = True
    for h in HANDEDNESS:
        out = apply_moves(standard_tuple(m, h), snake_moves(m, k, l))
        ok &= out.chords() == tuple(snake_chords(m, k, l))
        ok &= out.chords()[-1] == SegmentChord(k, l)
        ok &= all(c is not None for c in out.chords())
    verdict(11, ok, "m=7,(k,l)=(1,6): move sequence yields the target chord tuple")
