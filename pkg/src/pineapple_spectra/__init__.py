"""Exact spectral characterization of generalized pineapple graphs."""
from .classifier import (
    Classification,
    ClosedFormMismatch,
    Mate,
    VerificationError,
    corollary_family,
    enumerate_mates,
)
from .closed_forms import FactoredPoly, Family, FamilySpec, cs_poly, family_poly, pineapple_poly
from .formats import FormatError, from_graph6, to_edge_list, to_graph6
from .graph import (
    Graph,
    InvalidParams,
    MixedExtension,
    PineappleParams,
    disjoint_union,
    make_complete,
    make_complete_split,
    make_mixed_extension,
    make_pineapple,
    mixed_ext_isomorphic,
)
from .poly import IntPoly
from .spectra import char_poly, is_cospectral, quotient_matrix

__all__ = [
    "Classification", "ClosedFormMismatch", "FactoredPoly", "Family", "FamilySpec",
    "FormatError", "Graph", "IntPoly", "InvalidParams", "Mate", "MixedExtension",
    "PineappleParams", "VerificationError", "char_poly", "corollary_family", "cs_poly",
    "disjoint_union", "enumerate_mates", "family_poly", "from_graph6", "is_cospectral",
    "make_complete", "make_complete_split", "make_mixed_extension", "make_pineapple",
    "mixed_ext_isomorphic", "pineapple_poly", "quotient_matrix", "to_edge_list", "to_graph6",
]
