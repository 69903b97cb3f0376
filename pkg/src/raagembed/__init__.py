"""Exact computation in right-angled Artin groups presented on graph
complements: word reduction, extension graphs, embedding-producing moves
and non-embeddability certificates."""

from .constructions import (
    build_t2_pipeline,
    certify_non_embeddability,
    counterexample_check,
    hairy_witness,
    move_deg1k,
    move_deg3,
    t2_graph,
)
from .errors import GraphParseError, InvariantViolation
from .extgraph import (
    ExtVertex,
    enumerate_vertices,
    ext_adjacent,
    ext_vertex,
    induced_ext_subgraph,
    parse_ext_vertex,
    push_to_base,
    search_induced_embedding_ext,
)
from .graphs import (
    HairyDecomposition,
    SimplicialGraph,
    complement,
    find_induced_embeddings,
    find_tripod_obstruction,
    is_hairy_path,
    load_graph,
    make_cycle,
    make_path,
    make_tripod,
    parse_graph,
)
from .homs import GraphHom, GroupMap, InducedHom, induced_hom, kill_generators
from .words import (
    Letter,
    commute_elements,
    equal,
    is_trivial,
    normal_form,
    parse_word,
    reduce,
    support,
    word,
)

__all__ = [
    "GraphParseError",
    "InvariantViolation",
    "SimplicialGraph",
    "HairyDecomposition",
    "complement",
    "find_induced_embeddings",
    "find_tripod_obstruction",
    "is_hairy_path",
    "load_graph",
    "make_cycle",
    "make_path",
    "make_tripod",
    "parse_graph",
    "Letter",
    "word",
    "parse_word",
    "reduce",
    "normal_form",
    "support",
    "equal",
    "is_trivial",
    "commute_elements",
    "ExtVertex",
    "ext_vertex",
    "ext_adjacent",
    "enumerate_vertices",
    "induced_ext_subgraph",
    "parse_ext_vertex",
    "push_to_base",
    "search_induced_embedding_ext",
    "GraphHom",
    "GroupMap",
    "InducedHom",
    "induced_hom",
    "kill_generators",
    "build_t2_pipeline",
    "certify_non_embeddability",
    "counterexample_check",
    "hairy_witness",
    "move_deg1k",
    "move_deg3",
    "t2_graph",
]
