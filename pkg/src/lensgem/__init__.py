"""Crystallizations of lens spaces, GM-complexity and gem invariants."""
from .code import GemCode, canonical_code
from .gm import gm_complexity, proof_witness_score, region_decomposition
from .graph import (
    PARTITIONS,
    ColouredGraph,
    GraphError,
    PartitionPair,
    classify,
    embedding_surface,
    from_involutions,
    regular_genus,
    represents_closed_3manifold,
    residues,
)
from .homology import AbelianGroup, first_homology, relation_matrix, smith_normal_form
from .lens import cf_expand, ferri_crystallization, normalize_lens, plat_diagram, proof_index_sets

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "ColouredGraph",
    "GemCode",
    "GraphError",
    "PARTITIONS",
    "PartitionPair",
    "canonical_code",
    "cf_expand",
    "classify",
    "embedding_surface",
    "ferri_crystallization",
    "first_homology",
    "from_involutions",
    "gm_complexity",
    "normalize_lens",
    "plat_diagram",
    "proof_index_sets",
    "proof_witness_score",
    "region_decomposition",
    "regular_genus",
    "relation_matrix",
    "represents_closed_3manifold",
    "residues",
    "smith_normal_form",
]
