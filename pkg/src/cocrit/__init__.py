"""Construction, verification and search for (K_t, K_{1,k})-co-critical graphs."""

__version__ = "0.1.0"

from .arrowing import Arrow, ArrowVerdict, arrows, ramsey_star
from .cocritical import (
    CocriticalReport,
    LemmaAudit,
    Verdict,
    audit_coloring,
    audit_structure,
    hajnal_dichotomy,
    is_Kt_saturated,
    verify_cocritical,
)
from .coloring import (
    Color,
    EdgeColoring,
    PairParams,
    SearchBudget,
    SearchOutcome,
    Status,
    brute_force_critical,
    count_critical,
    enumerate_critical,
    find_critical,
    is_critical,
    max_red_critical,
)
from .constructions import (
    ConstructionPlan,
    JParams,
    build,
    build_J,
    build_t3,
    build_t45,
    circulant_regular,
    epsilon,
    lower_bound_edges,
    regular_bipartite,
    upper_edge_count,
)
from .graph import Graph, contains_clique, is_2connected
from .graph6 import emit_graph6, parse_graph6
from .iso import are_isomorphic, automorphism_group
