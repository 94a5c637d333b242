"""Extremal simplicial complexes: shadow bounds, vertex decomposition, Reisner checks.

A pure d-dimensional complex with n facets is *extremal* when its count of
(d-1)-faces meets the Kruskal-Katona lower bound delta_d(n).  This package
decides extremality, certifies vertex decomposability (extremal complexes
always are; the certificate tree replays the shedding order), brute-forces
shellings at desk scale, and independently verifies Cohen-Macaulayness
through reduced link homology over GF(2) and the rationals.
"""

from .complexes import (
    MAX_VERTICES,
    Face,
    FaceFamily,
    SimplicialComplex,
    make_complex,
)
from .decomposition import (
    DecompositionTree,
    Empty,
    EmptyFace,
    ObstructionStep,
    Point,
    Split,
    Strategy,
    VDReport,
    certify_vd,
    diagnose_certificate,
    find_shelling,
    tree_depth,
    validate_certificate,
)
from .homology import (
    BettiProfile,
    CMReport,
    CoefficientField,
    Violation,
    boundary_matrix,
    rank_gf2,
    rank_rational,
    reduced_betti,
    reisner_cm_check,
)
from .kruskal_katona import (
    CascadeRep,
    CompleteOnSupport,
    Witness,
    WitnessResult,
    cascade_rep,
    colex_rank,
    colex_unrank,
    comb64,
    delta,
    find_witness,
    is_extremal,
    segment,
    segment_avoiding,
    shadow,
    split_by_vertex,
    squashed_cmp,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_VERTICES",
    "Face",
    "FaceFamily",
    "SimplicialComplex",
    "make_complex",
    "DecompositionTree",
    "Empty",
    "EmptyFace",
    "Point",
    "Split",
    "ObstructionStep",
    "Strategy",
    "VDReport",
    "certify_vd",
    "diagnose_certificate",
    "find_shelling",
    "tree_depth",
    "validate_certificate",
    "BettiProfile",
    "CMReport",
    "CoefficientField",
    "Violation",
    "boundary_matrix",
    "rank_gf2",
    "rank_rational",
    "reduced_betti",
    "reisner_cm_check",
    "CascadeRep",
    "CompleteOnSupport",
    "Witness",
    "WitnessResult",
    "cascade_rep",
    "colex_rank",
    "colex_unrank",
    "comb64",
    "delta",
    "find_witness",
    "is_extremal",
    "segment",
    "segment_avoiding",
    "shadow",
    "split_by_vertex",
    "squashed_cmp",
    "__version__",
]
