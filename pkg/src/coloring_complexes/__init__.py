"""Coloring complexes, unipolar complexes and type-B restrictions.

Exact h-vectors by direct face enumeration and by generating-function
formulas in the chromatic or characteristic polynomial, plus the
inequalities a convex ear decomposition imposes on them.
"""

from .arrangements import (
    Hyperplane,
    SignedArrangement,
    char_poly,
    enumerate_subarrangements,
    full_bn,
    graphic,
    point_count,
    rank,
)
from .complexes import (
    ChainFace,
    ComplexSummary,
    SignedBlockFace,
    build_bn_restriction,
    build_coloring_complex,
    build_unipolar_complex,
    double_cone_h,
    f_vector,
    format_face,
    h_from_f,
    reduced_betti,
    summarize,
)
from .core import (
    Polynomial,
    alternating_binomial_transform,
    binomial,
    interpolate,
    poly_eval,
    poly_from_roots,
)
from .graphs import (
    Graph,
    acyclic_orientation_count,
    chromatic_polynomial,
    corpus,
    has_dominating_vertex,
)
from .hseries import (
    HVectorReport,
    extract_bn_h,
    extract_color_h,
    extract_matroid_h,
    extract_unipolar_h,
)
from .macaulay import (
    CedReport,
    MacaulayRep,
    ced_conditions,
    is_m_vector,
    macaulay_bound,
    macaulay_rep,
)
from .verification import verify_bridges, verify_inequalities, verify_paper_examples

__version__ = "0.1.0"
