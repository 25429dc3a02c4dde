"""Independent reference implementations used only by the test-suite.

Nothing here is imported by the package.  Each routine solves a problem the
package also solves, by a different route:

* Lawrence-Krammer matrices over Z[q^+-1, t^+-1] (faithful, exact entries),
* the Artin action of the braid group on the free group (faithful),
* brute-force products of Picard-Lefschetz transvections,
* GF(2) ranks by plain row reduction on Python lists.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

# ---------------------------------------------------------------------------
# Laurent polynomials in q, t as {(deg_q, deg_t): coeff}

Poly = dict


def padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


def pmul(a: Poly, b: Poly) -> Poly:
    out: dict = defaultdict(int)
    for (qa, ta), ca in a.items():
        for (qb, tb), cb in b.items():
            out[(qa + qb, ta + tb)] += ca * cb
    return {k: v for k, v in out.items() if v}


def P(*terms) -> Poly:
    """P((c, dq, dt), ...)"""
    out: Poly = {}
    for c, dq, dt in terms:
        out = padd(out, {(dq, dt): c})
    return out


def _lk_generator(i: int, n: int):
    """Matrix of sigma_i in the Lawrence-Krammer representation (Bigelow's form).

    Basis x_{j,k}, 1 <= j < k <= n.  Returns {column_basis: {row_basis: poly}}.
    """
    cols = {}
    for j, k in itertools.combinations(range(1, n + 1), 2):
        if i not in (j - 1, j, k - 1, k):
            img = {(j, k): P((1, 0, 0))}
        elif i == j - 1:
            img = {(i, k): P((1, 1, 0)),
                   (i, j): P((1, 2, 0), (-1, 1, 0)),
                   (j, k): P((1, 0, 0), (-1, 1, 0))}
        elif i == j and i != k - 1:
            img = {(j + 1, k): P((1, 0, 0))}
        elif i == k - 1 and i != j:
            img = {(j, i): P((1, 1, 0)),
                   (j, k): P((1, 0, 0), (-1, 1, 0)),
                   (i, k): P((-1, 2, 1), (1, 1, 1))}
        elif i == k:
            img = {(j, k + 1): P((1, 0, 0))}
        else:  # i == j == k - 1
            img = {(j, k): P((-1, 2, 1))}
        cols[(j, k)] = img
    return cols


def _lk_basis(n):
    return list(itertools.combinations(range(1, n + 1), 2))


def lk_matrix(letters, n: int):
    """Lawrence-Krammer matrix of a word, as a dict {(row, col): poly}."""
    basis = _lk_basis(n)
    mat = {(b, b): P((1, 0, 0)) for b in basis}
    gens = {}
    for a in letters:
        i = abs(a)
        if a not in gens:
            g = _lk_generator(i, n)
            gm = {(r, c): p for c, col in g.items() for r, p in col.items()}
            gens[a] = gm if a > 0 else _invert_lk(gm, i, n)
        mat = _matmul(mat, gens[a], basis)
    return mat


def _matmul(x, y, basis):
    out = {}
    for r in basis:
        for c in basis:
            acc: Poly = {}
            for mid in basis:
                a = x.get((r, mid))
                b = y.get((mid, c))
                if a and b:
                    acc = padd(acc, pmul(a, b))
            if acc:
                out[(r, c)] = acc
    return out


def _invert_lk(gm, i, n):
    # pivots are Laurent units, so Gauss-Jordan stays inside the ring
    return _laurent_inverse(gm, _lk_basis(n))


def _is_unit(p: Poly) -> bool:
    return len(p) == 1 and abs(next(iter(p.values()))) == 1


def _unit_inverse(p: Poly) -> Poly:
    (dq, dt), c = next(iter(p.items()))
    return {(-dq, -dt): c}


def _laurent_inverse(mat, basis):
    """Invert a matrix over Z[q^+-1,t^+-1] by Gauss-Jordan with unit pivots."""
    size = len(basis)
    idx = {b: r for r, b in enumerate(basis)}
    a = [[{} for _ in range(size)] for _ in range(size)]
    for (r, c), p in mat.items():
        a[idx[r]][idx[c]] = dict(p)
    inv = [[({(0, 0): 1} if r == c else {}) for c in range(size)] for r in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if a[r][col] and _is_unit(a[r][col]))
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        u = _unit_inverse(a[col][col])
        a[col] = [pmul(u, x) if x else {} for x in a[col]]
        inv[col] = [pmul(u, x) if x else {} for x in inv[col]]
        for r in range(size):
            if r != col and a[r][col]:
                f = {k: -v for k, v in a[r][col].items()}
                a[r] = [padd(x, pmul(f, y)) if y else x for x, y in zip(a[r], a[col])]
                inv[r] = [padd(x, pmul(f, y)) if y else x for x, y in zip(inv[r], inv[col])]
    return {(basis[r], basis[c]): inv[r][c]
            for r in range(size) for c in range(size) if inv[r][c]}


def lk_equal(u, v, n: int) -> bool:
    return lk_matrix(u, n) == lk_matrix(v, n)


# ---------------------------------------------------------------------------
# Artin action on the free group F_n = <x_1..x_n>

def _free_reduce(w):
    out = []
    for a in w:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def _substitute(word, images):
    out = []
    for a in word:
        img = images[abs(a)]
        out.extend(img if a > 0 else [-b for b in reversed(img)])
    return _free_reduce(out)


def artin_images(letters, n: int):
    """Images of x_1..x_n under the automorphism of the braid word."""
    images = {j: (j,) for j in range(1, n + 1)}
    for a in reversed(letters):
        i = abs(a)
        gen = {j: (j,) for j in range(1, n + 1)}
        if a > 0:
            gen[i] = (i, i + 1, -i)
            gen[i + 1] = (i,)
        else:
            gen[i] = (i + 1,)
            gen[i + 1] = (-(i + 1), i, i + 1)
        images = {j: _substitute(gen[j], images) for j in images}
    return tuple(images[j] for j in range(1, n + 1))


def artin_equal(u, v, n: int) -> bool:
    return artin_images(u, n) == artin_images(v, n)


# ---------------------------------------------------------------------------
# homology: brute-force transvection products

def transvection_apply(letters, x, eps: int):
    """Apply the word's Picard-Lefschetz action to vector x, letter by letter.

    sigma_i acts by y -> y + s (y . e_i) e_i with s = -eps, the pairing being
    e_i . e_{i+1} = eps; the rightmost letter acts first.
    """
    x = list(x)
    m = len(x)

    def dot_with(y, i):  # y . e_i (1-based i)
        acc = 0
        if i - 2 >= 0:
            acc += y[i - 2] * eps      # e_{i-1} . e_i = eps
        if i < m:
            acc += y[i] * -eps         # e_{i+1} . e_i = -eps
        return acc

    for a in reversed(letters):
        i = abs(a)
        s = -eps if a > 0 else eps
        x[i - 1] += s * dot_with(x, i)
    return tuple(x)


# ---------------------------------------------------------------------------
# GF(2)

def gf2_rank(rows):
    rows = [int("".join(str(b & 1) for b in r), 2) if r else 0 for r in rows]
    rank = 0
    while rows:
        pivot = max(rows)
        rows.remove(pivot)
        if pivot == 0:
            continue
        rank += 1
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if (r >> top) & 1 else r for r in rows]
    return rank
