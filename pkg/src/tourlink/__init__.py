"""Exhaustive checks and explicit constructions for intrinsic linking and knotting in tournaments."""

from .catalogue import (
    Certificate,
    EmbeddingCatalogue,
    VerificationReport,
    cg_certificate,
    find_certificate,
    is_certified_labeling,
    load_catalogue,
    parse_compact,
    residual_family,
    verify_class,
)
from .digraph import (
    CyclePattern,
    DomainError,
    OrientedGraph,
    Tournament,
    arc_direction,
    complete_to_tournament,
    consistent_edge_contraction,
    dual,
    glue,
    is_consistent,
    killed_by_partial,
    relabel,
    vertex_expansion,
)
from .isoenum import all_labelings, canonical_form, enumerate_tournaments

__version__ = "0.1.0"
