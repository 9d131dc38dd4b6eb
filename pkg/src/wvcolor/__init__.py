"""Exact weighted vertex coloring for four forbidden-subgraph classes:
(P5,dart)-free, (P5,banner)-free, (P5,bull)-free and (fork,bull)-free
graphs, with the decomposition machinery, a brute-force oracle and a
property-test harness for the underlying structure theorems."""

from .engines import (
    Hyperhole,
    Matching,
    bipartite_wvc,
    blossom_max_matching,
    hyperhole_wvc,
    oracle_wvc,
    perfect_wvc,
    triadfree_wvc,
    weighted_hole_wvc,
)
from .errors import (
    ClassMembershipError,
    GraphBuildError,
    GraphFormatError,
    NoSupportedClassError,
    OracleBudgetExceeded,
    PreconditionError,
    StructureViolation,
    WvcError,
)
from .graphs import (
    WeightedColoring,
    WeightedGraph,
    build,
    coloring,
    max_weight_clique,
    validate_coloring,
)
from .decomp import (
    cblock_decompose,
    find_clique_cutset,
    is_prime,
    modular_decompose,
    wvc_by_cblocks,
    wvc_by_modules,
)
from .harness import GenSpec, c5_partition, campaign, check_structure, generate
from .patterns import (
    CATALOG,
    HoleWitness,
    find_c5,
    find_hole_at_least,
    find_induced,
    find_p5,
    has_triad,
    has_triangle,
    hole_neighborhood_class,
    is_free,
)
from .pipelines import (
    P5Context,
    PipelineTrace,
    auto_wvc,
    build_p5_context,
    forkbull_wvc,
    p5banner_wvc,
    p5bull_wvc,
    p5dart_wvc,
    solve,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
