"""Weighted cover pebbling on connected graphs.

Standard values and stacking numbers, constructive cover certificates, an
exhaustive oracle, and a small-case search harness for the value-condition
question.
"""

from .errors import *  # noqa: F401,F403
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    build_graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    distance_to_set,
    hypercube,
    induced_subgraph,
    load_graph,
    parse_graph,
    path_graph,
)
from .harness import (
    check_product_identity,
    connected_graphs,
    graph_family,
    search_conjecture,
    value_condition_holds,
)
from .kernels import BACKEND
from .oracle import (
    CoverTable,
    SearchLimits,
    SearchStats,
    check_certificate,
    covers_exact,
    phi_exact,
    verify_certificate,
)
from .pebbling import (
    Move,
    apply_move,
    contains,
    distribution_nodes,
    replay,
    restrict,
    stacking_number,
    standard_value,
)
from .solver import (
    CoverDecision,
    Verdict,
    cover_from_single_node,
    cover_pebbling_number,
    cover_sufficient,
    decide_cover,
    decide_no_surplus,
    normalize_single_source,
    worst_distribution,
)

__version__ = "0.1.0"
