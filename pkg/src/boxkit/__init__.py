"""Certified lower bounds on graph boxicity.

Two bounding methods (minimum interval supergraph / isoperimetric
profiles, and neighborhood expansion) plus spectral bounds for regular
graphs, validated against an exact small-graph oracle and extremal
constructions carrying explicit interval certificates.
"""

from .bitset import bits, full_mask, mask_of, members, popcount
from .errors import BudgetExceededError
from .expansion_bounds import (
    ExpansionCertificate,
    ExpansionProfile,
    best_expansion_bound,
    bipartite_universal_bound,
    certify_expansion_bound,
    co_expansion_table,
    cross_expansion,
    expansion_profile,
    is_bipartite_t_expander,
    is_t_expander,
    t_expander_bound,
    universal_bound,
)
from .families import (
    RandomModelSpec,
    TightFamilyCertificate,
    bipartite_tight_family,
    cobipartite_tight_family,
    complement_cycle,
    complete_multipartite,
    enumerate_graphs,
    isomorphism_class_count,
    petersen,
    sample,
)
from .graphs import (
    BipartiteGraph,
    Graph,
    bipartite_from_edges,
    bipartition,
    closed_neighborhood,
    complement,
    complete_graph,
    cycle,
    degree_summary,
    empty_graph,
    from_edges,
    from_pair_mask,
    induced_subgraph,
    is_complete,
    is_connected,
    open_neighborhood,
    path,
    strong_vertex_boundary,
    universal_vertices,
    vertex_boundary,
)
from .harness import (
    ExperimentConfig,
    ExperimentResult,
    ResultRow,
    emit,
    parse_config,
    run_bounds,
    run_experiment,
)
from .intervals import (
    BoxCertificate,
    IntervalRep,
    Ordering,
    boxicity_exact,
    boxicity_le,
    canonical_supergraph,
    min_interval_supergraph,
    realize,
    verify_box_certificate,
)
from .isoperimetry import (
    IsoProfile,
    iso_profile,
    max_strong_boundary,
    min_boundary,
)
from .reports import BoundReport
from .rng import Xoshiro256StarStar, derive_seed
from .spectral import (
    SpectralSummary,
    adjacency_spectrum,
    bipartite_spectral_bound,
    gram_spectrum,
    random_regular_reference,
    spectral_bound,
    strongly_regular_secondary,
    tanner_bound,
)
from .supergraph_bounds import (
    degree_ratio_bound,
    detect_family_bound,
    family_bound,
    min_supergraph_bound,
    regular_complement_bound,
    strong_boundary_bound,
)

__version__ = "0.1.0"
