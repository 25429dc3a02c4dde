"""Classification of the total space obtained by adding one vanishing cycle.

E is built from the A_m Milnor fibre M by attaching handles along the chain
V_1..V_m and one more Lagrangian sphere V_{m+1} = S_delta.  E is Liouville
isomorphic to T*S^{n+1} exactly when delta is isotopic to a straight chord
between two punctures; otherwise E carries an exotic structure, and for odd n
the homology class of V_{m+1} decides whether E is even diffeomorphic to it.
"""

from __future__ import annotations

import dataclasses
from typing import Optional

from .arcs import Arc, SegmentChord, all_chords, chord_arc, match_segment
from .homology import HomologyClass, SignConvention, arc_class
from .lattice import DiffeoVerdict, LatticeError, check_dimension, diffeo_type

STANDARD = "standard_cotangent"
EXOTIC = "exotic_structure"

PROVENANCE = ("Liouville type decided by the trichotomy theorem for one extra "
              "vanishing cycle over the A_m Milnor fibre: standard iff the arc "
              "is isotopic to a straight chord")


class ClassificationError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class SymplecticVerdict:
    kind: str
    chord: Optional[SegmentChord] = None

    @property
    def is_standard(self) -> bool:
        return self.kind == STANDARD

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.chord is not None:
            out["chord"] = [self.chord.k, self.chord.l]
        return out

    def __str__(self) -> str:
        if self.chord is None:
            return self.kind
        return f"{self.kind} {self.chord}"


@dataclasses.dataclass(frozen=True)
class ClassificationReport:
    m: int
    n: int
    arc: Arc
    half_twist_nf: str
    matched_segment: Optional[SegmentChord]
    homology_class: Optional[HomologyClass]
    self_intersection: Optional[int]
    diffeo: DiffeoVerdict
    symplectic: SymplecticVerdict
    provenance: str = PROVENANCE

    def to_json(self) -> dict:
        seg = self.matched_segment
        return {
            "m": self.m,
            "n": self.n,
            "arc": self.arc.to_json(),
            "handedness": self.arc.handedness,
            "half_twist_nf": self.half_twist_nf,
            "matched_segment": [seg.k, seg.l] if seg is not None else None,
            "homology_class": (self.homology_class.to_json()
                               if self.homology_class is not None else None),
            "self_intersection": self.self_intersection,
            "diffeo": self.diffeo.kind,
            "symplectic": self.symplectic.to_json(),
            "provenance": self.provenance,
        }

    def to_text(self) -> str:
        lines = [
            f"m={self.m} n={self.n}",
            f"arc: {self.arc}",
            f"half-twist: {self.half_twist_nf}",
            f"matched segment: {self.matched_segment or 'none'}",
        ]
        if self.homology_class is not None:
            lines.append(f"homology class: {self.homology_class}")
        if self.self_intersection is not None:
            lines.append(f"self-intersection: {self.self_intersection}")
        lines.append(f"diffeo: {self.diffeo.kind}")
        lines.append(f"symplectic: {self.symplectic}")
        return "\n".join(lines)


def _check_inputs(m: int, n: int, a: Arc) -> None:
    if m < 2:
        raise ClassificationError(f"m must be at least 2, got {m}")
    try:
        check_dimension(n)
    except LatticeError as exc:
        raise ClassificationError(str(exc)) from exc
    if a.m != m:
        raise ClassificationError(f"arc lives on m={a.m}, expected m={m}")


def classify(m: int, n: int, a: Arc) -> ClassificationReport:
    _check_inputs(m, n, a)
    seg = match_segment(a)
    symp = SymplecticVerdict(STANDARD, seg) if seg is not None else SymplecticVerdict(EXOTIC)
    cls: Optional[HomologyClass] = None
    if n % 2 == 1:
        cls = arc_class(a, SignConvention.for_dimension(n))
    diffeo = diffeo_type(n, cls)
    return ClassificationReport(
        m=m,
        n=n,
        arc=a,
        half_twist_nf=str(a.key),
        matched_segment=seg,
        homology_class=cls,
        self_intersection=diffeo.self_intersection,
        diffeo=diffeo,
        symplectic=symp,
    )


def standard_count(m: int) -> int:
    if m < 1:
        raise ClassificationError(f"m must be at least 1, got {m}")
    return m * (m + 1) // 2


def standard_chords(m: int, n: int = 3, handedness: int = 1) -> list[SegmentChord]:
    """Chords whose arcs classify as standard (all of them)."""
    out = []
    for c in all_chords(m):
        report = classify(m, n, chord_arc(m, c.k, c.l, handedness))
        if report.symplectic.is_standard:
            out.append(c)
    return out
