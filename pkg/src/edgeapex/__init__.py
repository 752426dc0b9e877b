"""Cographs, edge-apex hereditary classes and their forbidden induced subgraphs."""

from .cograph import P4Witness, all_p4_sets, find_p4, is_cograph, is_cograph_decomposition, is_edge_apex_cograph
from .enumeration import EnumerationLevel, count_graphs_burnside, enumerate_order, load_level_from_g6
from .graph import (
    CanonicalForm,
    SmallGraph,
    canonical_form,
    canonical_relabel,
    complete_graph,
    contains_induced,
    count_induced,
    cycle_graph,
    empty_graph,
    find_induced,
    from_edges,
    is_isomorphic,
    path_graph,
)
from .graph6 import decode_graph6, encode_graph6, read_g6_stream, write_g6_stream
from .hereditary import (
    COGRAPH,
    ClassSpec,
    Cograph,
    Excluding,
    ForbiddenSet,
    bound_no_overlap,
    bound_with_overlap,
    in_class,
    in_edge_apex,
    is_minimal_apex_obstruction,
)
from .search import ObstructionReport, classify_obstruction, find_obstructions, load_catalog, verify_report
from .witness import ApexResult, ApexStatus

__version__ = "0.1.0"
