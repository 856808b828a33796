"""Rook monoid under the Bruhat-Chevalley order.

The package provides the monoid arithmetic, the combinatorial length
function, two independent implementations of the order (sorted-truncation
containment and generator-move closure), covering-relation predicates, an
exact integer linear-algebra oracle for orbit dimensions, and a harness
that cross-checks all of them against each other on whole monoids.
"""

from .elements import (
    OneLine,
    RookMatrix,
    enumerate_elements,
    from_matrix,
    is_permutation,
    load_elements,
    multiply,
    parse_one_line,
    rank,
    read_elements,
    to_matrix,
)
from .length import (
    LengthBreakdown,
    coinversions,
    dim_bx,
    dim_meet,
    dim_xb,
    inversions,
    length,
    length_breakdown,
    star_weight,
)
from .oracle import MatrixSpan, left_span, meet_dim, oracle_length, right_span
from .order import (
    GeneratorMove,
    containment_leq,
    covers_of,
    deodhar_leq,
    deodhar_leq_gamma,
    deodhar_leq_vectors,
    gamma_count,
    generator_moves,
    is_cover_type1,
    is_cover_type2,
    nonincreasing,
    ppr_leq,
    ppr_raises,
    truncate,
)
from .poset import (
    HasseDiagram,
    VerificationReport,
    build_hasse,
    export_dot,
    export_json,
    hasse_from_json,
    interval,
    rank_sizes,
    verify,
)

__version__ = "0.1.0"
