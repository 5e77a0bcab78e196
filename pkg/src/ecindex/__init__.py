"""Eccentric connectivity index: invariants, graph families, bounds, tree
transformations and exhaustive verification at small scale."""

from .bounds import BoundId, BoundReport, check_all_bounds, check_bound
from .enumeration import connected_graphs, free_trees, rank_trees, verify_proposition
from .errors import (
    DisconnectedGraphError,
    DomainError,
    EcIndexError,
    GraphInputError,
    HypothesisError,
    ParseError,
    SizeError,
    UnsupportedFormError,
)
from .families import FamilySpec, a_nm, build_family, closed_form_xi, family, family_size
from .formats import read_edgelist, read_graph6, write_edgelist, write_graph6
from .graph import (
    CanonicalCode,
    EccentricityProfile,
    Graph,
    bfs_distances,
    canonical_graph_code_small,
    canonical_tree_code,
    complement,
    eccentricity_profile,
    from_edge_list,
    is_connected,
)
from .invariants import (
    InvariantReport,
    degree_distance,
    eccentric_connectivity_index,
    first_zagreb,
    invariant_report,
    wiener_index,
)
from .transforms import (
    Lemma1Site,
    Lemma2Site,
    find_lemma1_sites,
    find_lemma2_sites,
    lemma1_apply,
    lemma2_apply,
)

__version__ = "0.1.0"
