"""Lagrangian spheres, Hurwitz orbits and exotic cotangent bundles over A_m Milnor fibres."""

from .arcs import Arc, SegmentChord, chord_arc, make_arc, match_segment, parse_arc
from .braid import BraidWord, CanonicalBraid, equal, normal_form, parse_word
from .classify import ClassificationReport, classify, standard_count
from .homology import HomologyClass, SignConvention, arc_class
from .hurwitz import (
    CapExceeded,
    VanishingTuple,
    hurwitz_move,
    is_clockwise_tree,
    orbit,
    standard_tuple,
    total_monodromy,
)
from .lattice import ThimbleLattice, am_quadratic, diffeo_type, self_intersection
from .quiver import Barcode, QuiverRep, decompose, iterated_twist

__all__ = [
    "Arc", "SegmentChord", "chord_arc", "make_arc", "match_segment", "parse_arc",
    "BraidWord", "CanonicalBraid", "equal", "normal_form", "parse_word",
    "ClassificationReport", "classify", "standard_count",
    "HomologyClass", "SignConvention", "arc_class",
    "CapExceeded", "VanishingTuple", "hurwitz_move", "is_clockwise_tree", "orbit",
    "standard_tuple", "total_monodromy",
    "ThimbleLattice", "am_quadratic", "diffeo_type", "self_intersection",
    "Barcode", "QuiverRep", "decompose", "iterated_twist",
]
