"""Intersection arithmetic on the total space E of the fibration.

H_{n+1}(E, M) is spanned by the thimbles Delta_1..Delta_{m+1} with the
non-symmetric linking pairing ``o``; H_{n+1}(E) = Z is generated by
``x = Delta_{m+1} - sum a_i Delta_i`` where ``[V_{m+1}] = sum a_i [V_i]``.
The self-intersection of x decides whether E is diffeomorphic to T*S^{n+1}.
"""

from __future__ import annotations

import dataclasses
from typing import Optional, Sequence

import numpy as np

from .homology import HomologyClass, SignConvention, intersection_matrix


class LatticeError(ValueError):
    pass


def sigma_for(n: int) -> int:
    return (-1) ** ((n + 1) * (n + 2) // 2)


@dataclasses.dataclass(frozen=True)
class ThimbleLattice:
    m: int
    n: int
    a: Optional[HomologyClass] = None

    def __post_init__(self):
        if self.n % 2 == 0:
            raise LatticeError("thimble pairing is only modelled for odd n")
        if self.a is not None and self.a.m != self.m:
            raise LatticeError(f"class has length {self.a.m}, expected {self.m}")

    @property
    def sigma(self) -> int:
        return sigma_for(self.n)

    @property
    def convention(self) -> SignConvention:
        return SignConvention.for_dimension(self.n)

    def cycle_pairing(self) -> np.ndarray:
        """(m+1)x(m+1) matrix of V_i . V_j, the last cycle being sum a_i V_i."""
        b = intersection_matrix(self.m, self.convention)
        full = np.zeros((self.m + 1, self.m + 1), dtype=np.int64)
        full[: self.m, : self.m] = b
        if self.a is not None:
            a = np.asarray(self.a.coeffs, dtype=np.int64)
            full[: self.m, self.m] = b @ a
            full[self.m, : self.m] = a @ b
        return full


@dataclasses.dataclass(frozen=True)
class GeneratorClass:
    a: HomologyClass

    def thimble_coordinates(self) -> tuple[int, ...]:
        return tuple(-c for c in self.a.coeffs) + (1,)


def linking_pairing(lat: ThimbleLattice, i: int, j: int) -> int:
    """Delta_i o Delta_j for 1 <= i, j <= m+1."""
    top = lat.m + 1
    if not (1 <= i <= top and 1 <= j <= top):
        raise LatticeError(f"thimble index out of range 1..{top}")
    if i == j:
        return lat.sigma
    if i > j:
        return 0
    if j == top and lat.a is None:
        raise LatticeError("pairing with the last thimble needs the class of V_{m+1}")
    return (-1) ** (lat.n + 1) * int(lat.cycle_pairing()[i - 1, j - 1])


def pairing(lat: ThimbleLattice, u: Sequence[int], v: Sequence[int]) -> int:
    """Bilinear extension of the linking pairing to thimble coordinates."""
    size = lat.m + 1
    return sum(u[i] * v[j] * linking_pairing(lat, i + 1, j + 1)
               for i in range(size) for j in range(size) if u[i] and v[j])


def self_intersection(lat: ThimbleLattice, x: GeneratorClass) -> int:
    a = x.a.coeffs
    if len(a) != lat.m:
        raise LatticeError(f"class has length {len(a)}, expected {lat.m}")
    adjacent = sum(a[i] * a[i - 1] for i in range(1, len(a)))
    squares = sum(c * c for c in a)
    return lat.sigma * (1 - adjacent + squares)


def am_quadratic(a: Sequence[int]) -> int:
    """2 sum a_i^2 - sum a_i a_{i-1} - sum a_i a_{i+1}, with a_0 = a_{m+1} = 0."""
    a = tuple(a.coeffs) if isinstance(a, HomologyClass) else tuple(a)
    return 2 * sum(c * c for c in a) - 2 * sum(a[i] * a[i + 1] for i in range(len(a) - 1))


def is_interval_vector(a: Sequence[int]) -> Optional[tuple[int, int]]:
    """(k, l) when a = +-(e_{k+1} + ... + e_l), else None."""
    a = tuple(a.coeffs) if isinstance(a, HomologyClass) else tuple(a)
    support = [i for i, c in enumerate(a) if c]
    if not support:
        return None
    sign = a[support[0]]
    if sign not in (1, -1):
        return None
    lo, hi = support[0], support[-1]
    if len(support) != hi - lo + 1 or any(a[i] != sign for i in support):
        return None
    return (lo, hi + 1)


STANDARD_COTANGENT = "standard_cotangent"
DISTINGUISHED_BY_PAIRING = "distinguished_by_pairing"


@dataclasses.dataclass(frozen=True)
class DiffeoVerdict:
    kind: str
    self_intersection: Optional[int] = None

    @property
    def is_standard(self) -> bool:
        return self.kind == STANDARD_COTANGENT

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.self_intersection is not None:
            out["self_intersection"] = self.self_intersection
        return out


def check_dimension(n: int) -> None:
    if n == 1:
        raise LatticeError(
            "n = 1 is excluded: the diffeomorphism criterion fails there because of "
            "the additional obstruction given by the fundamental group at infinity")
    if n < 2:
        raise LatticeError(f"n must be at least 2, got {n}")


def diffeo_type(n: int, a: Optional[HomologyClass]) -> DiffeoVerdict:
    check_dimension(n)
    if n % 2 == 0:
        return DiffeoVerdict(STANDARD_COTANGENT)
    if a is None:
        raise LatticeError("odd n needs the homology class of the last vanishing cycle")
    lat = ThimbleLattice(a.m, n, a)
    selfint = self_intersection(lat, GeneratorClass(a))
    if is_interval_vector(a) is not None:
        return DiffeoVerdict(STANDARD_COTANGENT, selfint)
    return DiffeoVerdict(DISTINGUISHED_BY_PAIRING, selfint)
