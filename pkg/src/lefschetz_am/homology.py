"""Picard-Lefschetz action of Br_{m+1} on H_n(M_m) = Z^m (n odd).

The basis e_1..e_m is given by the vanishing cycles V_i of the chords
(i-1, i).  Their pairing is tridiagonal and antisymmetric,
``V_i . V_{i+1} = eps`` with ``eps = (-1)^(n(n+1)/2 + 1)``.  The generator
sigma_i acts by the Dehn twist along V_i,

    x  ->  x + (-1)^(n(n+1)/2) (x . V_i) V_i  =  x - eps (x . V_i) V_i,

and a word acts by the product of its letters (rightmost letter first).
"""

from __future__ import annotations

import dataclasses
from typing import Optional, Sequence

import numpy as np

from .arcs import Arc
from .braid import BraidWord


class HomologyError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class SignConvention:
    """Orientation data: ``epsilon = V_i . V_{i+1}`` for the chosen odd ``n``.

    ``n`` may be left unset to work with a bare epsilon (both values are
    exercised by the tests).
    """

    epsilon: int
    n: Optional[int] = None

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise HomologyError("epsilon must be +1 or -1")
        if self.n is not None:
            if self.n % 2 == 0:
                raise HomologyError(
                    f"n={self.n} is even; the diffeomorphism type needs no homology then")
            if self.epsilon != epsilon_for(self.n):
                raise HomologyError(f"epsilon={self.epsilon} inconsistent with n={self.n}")

    @classmethod
    def for_dimension(cls, n: int) -> SignConvention:
        return cls(epsilon_for(n), n)


def epsilon_for(n: int) -> int:
    return (-1) ** (n * (n + 1) // 2 + 1)


@dataclasses.dataclass(frozen=True)
class HomologyClass:
    """Coefficients of [V] in the basis [V_1..V_m], defined up to global sign."""

    coeffs: tuple[int, ...]

    @classmethod
    def normalized(cls, coeffs: Sequence[int]) -> HomologyClass:
        coeffs = tuple(int(c) for c in coeffs)
        for c in coeffs:
            if c:
                if c < 0:
                    coeffs = tuple(-x for x in coeffs)
                break
        return cls(coeffs)

    @property
    def m(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def intersection_matrix(m: int, conv: SignConvention) -> np.ndarray:
    """Matrix B with ``B[i, j] = V_{i+1} . V_{j+1}``."""
    if m < 1:
        raise HomologyError("m must be at least 1")
    b = np.zeros((m, m), dtype=np.int64)
    for i in range(m - 1):
        b[i, i + 1] = conv.epsilon
        b[i + 1, i] = -conv.epsilon
    return b


def _generator_matrix(m: int, i: int, sign: int, conv: SignConvention,
                      handedness: int = 1) -> np.ndarray:
    if not 1 <= i <= m:
        raise HomologyError(f"generator index {i} out of range 1..{m}")
    b = intersection_matrix(m, conv)
    t = np.eye(m, dtype=np.int64)
    # x -> x + s (x^T B e_i) e_i ; sigma_i^-1 uses -s
    s = -conv.epsilon * sign * handedness
    t[i - 1, :] += s * b[:, i - 1]
    return t


def generator_action(i: int, sign: int, x: Sequence[int], conv: SignConvention,
                     handedness: int = 1) -> tuple[int, ...]:
    """Apply sigma_i^sign to a coefficient vector (no sign normalization)."""
    if sign not in (1, -1):
        raise HomologyError("sign must be +1 or -1")
    t = _generator_matrix(len(x), i, sign, conv, handedness)
    return tuple(int(v) for v in t @ np.asarray(x, dtype=np.int64))


def braid_rep(b: BraidWord, conv: SignConvention, handedness: int = 1) -> np.ndarray:
    m = b.strands - 1
    rep = np.eye(m, dtype=np.int64)
    cache: dict[int, np.ndarray] = {}
    for a in b.letters:
        if a not in cache:
            cache[a] = _generator_matrix(m, abs(a), 1 if a > 0 else -1, conv, handedness)
        rep = rep @ cache[a]
    return rep


def chord_vector(m: int, k: int, l: int, conv: SignConvention,
                 handedness: int = 1) -> np.ndarray:
    """Class of the chord (k, l), transported from V_l by sigma_{k+1}..sigma_{l-1}."""
    conj = BraidWord(m + 1, tuple(handedness * i for i in range(k + 1, l)))
    e = np.zeros(m, dtype=np.int64)
    e[l - 1] = 1
    return braid_rep(conj, conv, handedness) @ e


def arc_class(a: Arc, conv: SignConvention) -> HomologyClass:
    base = chord_vector(a.m, a.base.k, a.base.l, conv, a.handedness)
    vec = braid_rep(a.conjugator, conv, a.handedness) @ base
    return HomologyClass.normalized(vec.tolist())


def preserves_form(rep: np.ndarray, conv: SignConvention) -> bool:
    b = intersection_matrix(rep.shape[0], conv)
    return bool(np.array_equal(rep.T @ b @ rep, b))
