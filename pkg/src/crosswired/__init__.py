"""Exact finite balls of Diestel-Leader graphs, the groups acting on them,
and certification of the cross-wired-lamplighter structure constants."""

from .dl_graph import (DLVertex, ball, collapse, collapse_correspondence,
                       collapse_vertex, dl_base)
from .engine import (CWLPresentation, IndexCertificate, PairVertex, TreeCoset,
                     VerificationReport, act, bass_serre_ball,
                     certify_transversals, conjugate_presentation,
                     dl_action_ball, double_coset_label, orbit_count,
                     promote_transitive, stabilizer, verify_conditions)
from .graphs import BallGraph, BijectionReport, bfs_ball, check_bijection
from .heisenberg import (HeisenbergElement, LaurentPoly, canon_coset,
                         coset_transversal, factor, phi)
from .horotree import (TreeVertex, base_vertex, confluent, distance,
                       parse_vertex, tree_ball)
from .lamplighter import LamplighterElement, cayley_ball, element_from_dl

from . import dl_graph, engine, graphs, heisenberg, horotree, lamplighter  # noqa: F401

__all__ = [
    "BallGraph", "BijectionReport", "CWLPresentation", "DLVertex",
    "HeisenbergElement", "IndexCertificate", "LamplighterElement",
    "LaurentPoly", "PairVertex", "TreeCoset", "TreeVertex",
    "VerificationReport", "act", "ball", "base_vertex", "bass_serre_ball",
    "bfs_ball", "canon_coset", "cayley_ball", "certify_transversals",
    "check_bijection", "collapse", "collapse_correspondence",
    "collapse_vertex", "confluent", "conjugate_presentation",
    "coset_transversal", "distance", "dl_action_ball", "dl_base",
    "double_coset_label", "element_from_dl", "factor", "orbit_count",
    "parse_vertex", "phi", "promote_transitive", "stabilizer", "tree_ball",
    "verify_conditions",
]

__version__ = "0.1.0"
