"""Representations of the A_m quiver and twisted complexes over the category A_m.

A_m has objects V_1..V_m over Z/2 with hom(V_i, V_i) spanned by the unit e_i,
hom(V_i, V_{i+1}) spanned by f_i in degree 1, and nothing else; the only
nonzero products are the unit laws (so f_{i+1} f_i = 0).

A twisted complex is stored as a list of one-dimensional summands
``(vertex, degree)`` (a basis of the graded spaces W_i) together with a GF(2)
matrix ``d`` where ``d[b, a]`` is the coefficient of the component from
summand a to summand b.  Since every nonzero hom space is one-dimensional the
morphism label is implied by the vertices: same vertex means e, vertex + 1
means f.  Components must have total degree one, i.e. ``deg_b = deg_a + 1``
for e-entries and ``deg_b = deg_a`` for f-entries.
"""

from __future__ import annotations

import dataclasses
import json
from collections import Counter
from typing import Iterable, NamedTuple

import numpy as np

from . import gf2


class QuiverError(ValueError):
    pass


# ---------------------------------------------------------------------------
# quiver representations

@dataclasses.dataclass(frozen=True, eq=False)
class QuiverRep:
    """W_1 -> W_2 -> ... -> W_m; ``maps[i]`` is rho_{i+1}, shape dims[i+1] x dims[i]."""

    dims: tuple[int, ...]
    maps: tuple[np.ndarray, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if any(d < 0 for d in dims):
            raise QuiverError("dimensions must be nonnegative")
        if len(self.maps) != max(len(dims) - 1, 0):
            raise QuiverError(f"need {max(len(dims) - 1, 0)} maps, got {len(self.maps)}")
        maps = []
        for i, rho in enumerate(self.maps):
            rho = gf2.as_gf2(rho).reshape(np.shape(rho)) if np.size(rho) else gf2.zeros(dims[i + 1], dims[i])
            if rho.shape != (dims[i + 1], dims[i]):
                raise QuiverError(
                    f"map {i + 1} has shape {rho.shape}, expected {(dims[i + 1], dims[i])}")
            maps.append(rho)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", tuple(maps))

    @property
    def m(self) -> int:
        return len(self.dims)

    def __eq__(self, other) -> bool:
        return (isinstance(other, QuiverRep) and self.dims == other.dims
                and all(np.array_equal(a, b) for a, b in zip(self.maps, other.maps)))

    def composite(self, a: int, b: int) -> np.ndarray:
        """rho_{b-1} ... rho_a : W_a -> W_b (vertices 1-based, a <= b)."""
        out = gf2.identity(self.dims[a - 1])
        for i in range(a, b):
            out = gf2.matmul(self.maps[i - 1], out)
        return out

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "maps": [rho.astype(int).tolist() for rho in self.maps]}

    @classmethod
    def from_json(cls, data) -> QuiverRep:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            dims = [int(d) for d in data["dims"]]
            raw = data.get("maps", [])
        except (KeyError, TypeError, ValueError) as exc:
            raise QuiverError(f"malformed representation: {exc}") from exc
        maps = []
        for i, rows in enumerate(raw):
            if i + 1 >= len(dims):
                raise QuiverError("too many maps")
            arr = np.array(rows, dtype=np.int64) if rows else np.zeros((0, 0), dtype=np.int64)
            if arr.size == 0:
                arr = np.zeros((dims[i + 1], dims[i]), dtype=np.int64)
            if arr.ndim != 2:
                raise QuiverError(f"map {i + 1} is not a matrix")
            maps.append(arr)
        return cls(tuple(dims), tuple(maps))


def rank_table(rep: QuiverRep) -> dict[tuple[int, int], int]:
    """rank of W_a -> W_b for all 1 <= a <= b <= m."""
    table = {}
    for a in range(1, rep.m + 1):
        acc = gf2.identity(rep.dims[a - 1])
        table[(a, a)] = rep.dims[a - 1]
        for b in range(a + 1, rep.m + 1):
            acc = gf2.matmul(rep.maps[b - 2], acc)
            table[(a, b)] = gf2.rank(acc)
    return table


def interval_rep(m: int, k: int, l: int) -> QuiverRep:
    """C^{k,l}: Z/2 at vertices k < i <= l, identity maps between them."""
    if not 0 <= k < l <= m:
        raise QuiverError(f"need 0 <= k < l <= m, got ({k},{l}) for m={m}")
    dims = tuple(1 if k < i <= l else 0 for i in range(1, m + 1))
    maps = tuple(
        np.ones((dims[i], dims[i - 1]), dtype=np.uint8) for i in range(1, m))
    return QuiverRep(dims, maps)


def direct_sum(*reps: QuiverRep) -> QuiverRep:
    m = reps[0].m
    if any(r.m != m for r in reps):
        raise QuiverError("direct sum of representations of different quivers")
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(m))
    maps = tuple(gf2.block_diag(*(r.maps[i] for r in reps)) for i in range(m - 1))
    return QuiverRep(dims, maps)


# ---------------------------------------------------------------------------
# barcodes

@dataclasses.dataclass(frozen=True, order=True)
class IntervalModule:
    k: int
    l: int
    shift: int = 0

    def vertices(self) -> range:
        return range(self.k + 1, self.l + 1)


@dataclasses.dataclass(frozen=True)
class Barcode:
    """Multiset of interval modules, stored as sorted (interval, multiplicity) pairs."""

    bars: tuple[tuple[IntervalModule, int], ...] = ()

    @classmethod
    def from_counter(cls, counts: Counter) -> Barcode:
        return cls(tuple(sorted((iv, c) for iv, c in counts.items() if c > 0)))

    def counter(self) -> Counter:
        return Counter({iv: c for iv, c in self.bars})

    def __add__(self, other: Barcode) -> Barcode:
        return Barcode.from_counter(self.counter() + other.counter())

    def total(self) -> int:
        return sum(c for _, c in self.bars)

    def intervals(self) -> list[tuple[int, int]]:
        return [(iv.k, iv.l) for iv, c in self.bars for _ in range(c)]

    def to_json(self) -> list[dict]:
        return [{"k": iv.k, "l": iv.l, "shift": iv.shift, "mult": c} for iv, c in self.bars]


def decompose(rep: QuiverRep, shift: int = 0) -> Barcode:
    """Interval multiplicities by inclusion-exclusion on composite ranks."""
    m = rep.m
    table = rank_table(rep)

    def r(a: int, b: int) -> int:
        if a < 1 or b > m:
            return 0
        return table[(a, b)]

    counts: Counter = Counter()
    for k in range(m):
        for l in range(k + 1, m + 1):
            mult = r(k + 1, l) - r(k, l) - r(k + 1, l + 1) + r(k, l + 1)
            if mult < 0:
                raise AssertionError("negative interval multiplicity")
            if mult:
                counts[IntervalModule(k, l, shift)] = mult
    return Barcode.from_counter(counts)


def rep_from_barcode(m: int, barcode: Barcode) -> QuiverRep:
    pieces = [interval_rep(m, iv.k, iv.l) for iv, c in barcode.bars for _ in range(c)]
    if not pieces:
        return QuiverRep((0,) * m, tuple(gf2.zeros(0, 0) for _ in range(m - 1)))
    return direct_sum(*pieces)


# ---------------------------------------------------------------------------
# twisted complexes

Summand = tuple[int, int]  # (vertex, degree)


@dataclasses.dataclass(frozen=True, eq=False)
class TwistedComplex:
    m: int
    summands: tuple[Summand, ...]
    d: np.ndarray

    def __post_init__(self):
        summands = tuple((int(v), int(g)) for v, g in self.summands)
        n = len(summands)
        d = gf2.as_gf2(self.d).reshape((n, n)) if n else gf2.zeros(0, 0)
        object.__setattr__(self, "summands", summands)
        object.__setattr__(self, "d", d)

    @property
    def size(self) -> int:
        return len(self.summands)

    def vertices(self) -> np.ndarray:
        return np.array([v for v, _ in self.summands], dtype=np.int64)

    def degrees(self) -> np.ndarray:
        return np.array([g for _, g in self.summands], dtype=np.int64)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TwistedComplex) and self.m == other.m
                and self.summands == other.summands and np.array_equal(self.d, other.d))

    def shifted(self, s: int) -> TwistedComplex:
        """X[s]: every generator degree lowered by s."""
        return TwistedComplex(self.m, tuple((v, g - s) for v, g in self.summands), self.d)

    def to_json(self) -> dict:
        return {"m": self.m, "summands": [list(s) for s in self.summands],
                "d": self.d.astype(int).tolist()}


def generator_object(m: int, i: int, degree: int = 0) -> TwistedComplex:
    """The object V_i as a one-summand twisted complex."""
    if not 1 <= i <= m:
        raise QuiverError(f"vertex {i} out of range 1..{m}")
    return TwistedComplex(m, ((i, degree),), gf2.zeros(1, 1))


def interval_complex(m: int, k: int, l: int, degree: int = 0) -> TwistedComplex:
    """C^{k,l} as a twisted complex: V_{k+1} -> ... -> V_l joined by f's."""
    if not 0 <= k < l <= m:
        raise QuiverError(f"need 0 <= k < l <= m, got ({k},{l}) for m={m}")
    summands = tuple((i, degree) for i in range(k + 1, l + 1))
    n = len(summands)
    d = gf2.zeros(n, n)
    for a in range(n - 1):
        d[a + 1, a] = 1
    return TwistedComplex(m, summands, d)


def direct_sum_complex(*cs: TwistedComplex) -> TwistedComplex:
    m = cs[0].m
    if any(c.m != m for c in cs):
        raise QuiverError("direct sum over different categories")
    summands = tuple(s for c in cs for s in c.summands)
    return TwistedComplex(m, summands, gf2.block_diag(*(c.d for c in cs)))


def _label_masks(v_target: np.ndarray, v_source: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    diff = v_target[:, None] - v_source[None, :]
    return diff == 0, diff == 1


def _compose(x: np.ndarray, y: np.ndarray, vz: np.ndarray, vy: np.ndarray,
             vx: np.ndarray) -> np.ndarray:
    """Product of labelled matrices Y -> Z after X -> Y, dropping f.f terms."""
    _, xf = _label_masks(vz, vy)
    _, yf = _label_masks(vy, vx)
    full = gf2.matmul(x, y)
    ff = gf2.matmul((x & xf).astype(np.uint8), (y & yf).astype(np.uint8))
    return full ^ ff


class Validation(NamedTuple):
    ok: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def validate(c: TwistedComplex) -> Validation:
    problems: list[str] = []
    v, g = c.vertices(), c.degrees()
    for idx, (vert, _) in enumerate(c.summands):
        if not 1 <= vert <= c.m:
            problems.append(f"summand {idx} sits at vertex {vert}, outside 1..{c.m}")
    if c.d.shape != (c.size, c.size):
        problems.append(f"differential has shape {c.d.shape}, expected {(c.size, c.size)}")
        return Validation(False, tuple(problems))
    same, up = _label_masks(v, v)
    for b, a in zip(*np.nonzero(c.d)):
        src, tgt = c.summands[a], c.summands[b]
        if same[b, a]:
            if g[b] != g[a] + 1:
                problems.append(
                    f"e-entry {a}->{b} (vertex {src[0]}) has degrees {src[1]}->{tgt[1]}; need +1")
        elif up[b, a]:
            if g[b] != g[a]:
                problems.append(
                    f"f-entry {a}->{b} (vertex {src[0]}->{tgt[0]}) has degrees "
                    f"{src[1]}->{tgt[1]}; need equal")
        else:
            problems.append(f"entry {a}->{b} from vertex {src[0]} to vertex {tgt[0]}: no morphism")
    if not problems:
        sq = _compose(c.d, c.d, v, v, v)
        for b, a in zip(*np.nonzero(sq)):
            problems.append(f"d^2 nonzero at {a}->{b}")
    return Validation(not problems, tuple(problems))


def _require_valid(c: TwistedComplex) -> None:
    check = validate(c)
    if not check.ok:
        raise QuiverError("invalid twisted complex: " + "; ".join(check.violations))


def reduce(c: TwistedComplex) -> TwistedComplex:
    """Cancel invertible e-components by Gaussian elimination until none remain."""
    _require_valid(c)
    summands = list(c.summands)
    d = c.d.copy()
    while True:
        v = np.array([s[0] for s in summands], dtype=np.int64)
        same, up = _label_masks(v, v)
        hits = np.argwhere((d == 1) & same)
        if hits.size == 0:
            break
        b, a = (int(x) for x in hits[0])
        col = d[:, a].copy()          # components out of a
        row = d[b, :].copy()          # components into b
        # composite c <- a ~ b <- d vanishes when both legs are f
        zigzag = np.outer(col, row).astype(np.uint8)
        zigzag &= ~(up[:, a][:, None] & up[b, :][None, :])
        d ^= zigzag
        keep = [i for i in range(len(summands)) if i not in (a, b)]
        d = d[np.ix_(keep, keep)]
        summands = [summands[i] for i in keep]
    return TwistedComplex(c.m, tuple(summands), d)


def is_reduced(c: TwistedComplex) -> bool:
    v = c.vertices()
    same, _ = _label_masks(v, v)
    return not np.any((c.d == 1) & same)


def split_by_degree(c: TwistedComplex) -> list[tuple[int, QuiverRep]]:
    """Quiver representations of the graded pieces of a reduced complex."""
    _require_valid(c)
    if not is_reduced(c):
        raise QuiverError("complex still has e-components; reduce it first")
    pieces = []
    for degree in sorted({g for _, g in c.summands}):
        at = {i: [a for a, (v, g) in enumerate(c.summands) if v == i and g == degree]
              for i in range(1, c.m + 1)}
        dims = tuple(len(at[i]) for i in range(1, c.m + 1))
        maps = tuple(c.d[np.ix_(at[i + 1], at[i])] for i in range(1, c.m))
        pieces.append((degree, QuiverRep(dims, maps)))
    return pieces


def complex_barcode(c: TwistedComplex) -> Barcode:
    """Barcode of reduce + split_by_degree + decompose, shifts recorded per degree."""
    total = Barcode()
    for degree, rep in split_by_degree(reduce(c)):
        total = total + decompose(rep, shift=degree)
    return total


# ---------------------------------------------------------------------------
# morphisms, cones, twists

@dataclasses.dataclass(frozen=True, eq=False)
class Morphism:
    """Degree-zero morphism of twisted complexes; ``f[y, x]`` from x in source to y in target."""

    source: TwistedComplex
    target: TwistedComplex
    f: np.ndarray


def check_morphism(phi: Morphism) -> None:
    src, tgt = phi.source, phi.target
    f = gf2.as_gf2(phi.f)
    if f.shape != (tgt.size, src.size):
        raise QuiverError(f"morphism has shape {f.shape}, expected {(tgt.size, src.size)}")
    vs, vt = src.vertices(), tgt.vertices()
    gs, gt = src.degrees(), tgt.degrees()
    same, up = _label_masks(vt, vs)
    for y, x in zip(*np.nonzero(f)):
        if same[y, x]:
            ok = gt[y] == gs[x]
        elif up[y, x]:
            ok = gt[y] == gs[x] - 1
        else:
            raise QuiverError(f"morphism component {x}->{y} has no hom space")
        if not ok:
            raise QuiverError(f"morphism component {x}->{y} is not of degree 0")
    # closedness: d_T f + f d_S = 0
    lhs = _compose(tgt.d, f, vt, vt, vs) ^ _compose(f, src.d, vt, vs, vs)
    if np.any(lhs):
        raise QuiverError("morphism is not closed")


def cone(phi: Morphism) -> TwistedComplex:
    """Cone(source -> target) = source[1] (+) target with f in the lower-left block."""
    check_morphism(phi)
    src, tgt = phi.source, phi.target
    shifted = src.shifted(1)
    n, p = src.size, tgt.size
    d = gf2.zeros(n + p, n + p)
    d[:n, :n] = src.d
    d[n:, n:] = tgt.d
    d[n:, :n] = gf2.as_gf2(phi.f)
    return TwistedComplex(src.m, shifted.summands + tgt.summands, d)


def twist_by_generator(j: int, x: TwistedComplex) -> TwistedComplex:
    """T_{V_j}(X) = Cone(hom(V_j, X) (x) V_j -> X), the evaluation map.

    The model has no top-degree endomorphism of V_j, so T_{V_j}(V_j) is zero
    here; twists are only meaningful on objects not built from V_j alone.
    """
    m = x.m
    if not 1 <= j <= m:
        raise QuiverError(f"vertex {j} out of range 1..{m}")
    vx = x.vertices()
    # chain-level basis of hom(V_j, X): one element per summand at vertex j (e_j)
    # or j+1 (f_j)
    basis = [s for s, (v, _) in enumerate(x.summands) if v in (j, j + 1)]
    hom_deg = [x.summands[s][1] + (1 if x.summands[s][0] == j + 1 else 0) for s in basis]
    nb = len(basis)
    # differential of hom: d_X composed with the basis morphism, zero when f.f
    h = gf2.zeros(nb, nb)
    for ci, s in enumerate(basis):
        for ti, t in enumerate(basis):
            if x.d[t, s] and not (vx[s] == j + 1 and vx[t] == vx[s] + 1):
                h[ti, ci] = 1
    tensor = TwistedComplex(m, tuple((j, deg) for deg in hom_deg), h)
    ev = gf2.zeros(x.size, nb)
    for ci, s in enumerate(basis):
        ev[s, ci] = 1
    return cone(Morphism(tensor, x, ev))


def iterated_twist(m: int, k: int, l: int) -> TwistedComplex:
    """T_{V_{k+1}} ... T_{V_{l-1}}(V_l)."""
    if not 0 <= k < l <= m:
        raise QuiverError(f"need 0 <= k < l <= m, got ({k},{l}) for m={m}")
    x = generator_object(m, l)
    for j in range(l - 1, k, -1):
        x = twist_by_generator(j, x)
    return x


def summand_test(c: TwistedComplex, target: IntervalModule) -> bool:
    """Whether some shift of C^{k,l} is a direct summand of c."""
    _require_valid(c)
    return any((iv.k, iv.l) == (target.k, target.l) for iv, _ in complex_barcode(c).bars)


def barcode_from_json(data: Iterable[dict]) -> Barcode:
    counts: Counter = Counter()
    for item in data:
        counts[IntervalModule(int(item["k"]), int(item["l"]), int(item.get("shift", 0)))] += int(
            item.get("mult", 1))
    return Barcode.from_counter(counts)
