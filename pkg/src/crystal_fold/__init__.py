"""Exact crystal-basis combinatorics and Dynkin-diagram folding checks."""

from .cartan import (
    CartanDatum,
    FoldingDatum,
    build_cartan,
    identify_type,
    project_weight,
    validate_automorphism,
)
from .catalog import FoldingPair, catalog_pairs, lookup_pair
from .characters import freudenthal, weyl_dim
from .crystal import CrystalElt, CrystalEngine, LambdaElt
from .errors import CrystalFoldError
from .folding import (
    FoldedPairContext,
    SimilarityDatum,
    omega_act,
    omega_kashiwara,
    omega_map,
    similarity,
    similarity_datum,
    upsilon,
    verify_similarity_param,
    verify_slice,
)
from .kernel import BACKEND
from .polytope import (
    HRepSystem,
    LatticePointSet,
    RationalPolytope,
    hrep_lattice_points,
    hull_contains,
    linear_image,
    polytopes_equal,
    string_polytope_points,
    verify_folding_theorem,
)
from .weyl import (
    ReducedWord,
    WeylElement,
    is_reduced,
    longest_word,
    positive_roots,
    reduced_word,
    theta_word,
    word_to_element,
)

__all__ = [name for name in dir() if not name.startswith("_")]
