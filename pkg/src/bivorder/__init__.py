"""Bivariate order polynomials of bicolored posets and bivariate
chromatic polynomials of graphs, in exact rational arithmetic, with
brute-force oracles and reciprocity checks."""

from .ratpoly import ONE, X, Y, BiPoly, binom_poly
from .poset import (
    BicoloredPoset,
    Word,
    all_natural_labelings,
    all_reverse_natural_labelings,
    ascents,
    build_poset,
    covers,
    descents,
    is_natural_labeling,
    is_reverse_natural_labeling,
    linear_extensions,
    natural_labeling,
    poset_from_json,
    poset_to_json,
    reverse_natural_labeling,
    reverse_word,
    word_of,
)
from .orderpoly import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    CheckReport,
    brute_count,
    brute_count_strict,
    brute_count_weak,
    chain_strict,
    chain_weak,
    check_reciprocity_poset,
    check_reciprocity_word,
    interpolate_brute,
    interpolate_poly,
    order_poly_strict,
    order_poly_weak,
    strict_word_decomposition,
    weak_word_decomposition,
    word_poly_strict,
    word_poly_weak,
)
from .graph import (
    AcyclicOrientation,
    Flat,
    Graph,
    acyclic_orientations,
    build_graph,
    flats,
    graph_from_json,
    graph_to_json,
    is_acyclic,
    orientation_to_poset,
    trivial_flat,
)
from .chrompoly import (
    check_reciprocity_graph,
    check_reciprocity_graph_poly,
    chrom_count,
    chrom_poly,
    classical_chrom_poly,
    count_compatible_colorings,
)
from .fixtures import (
    antichain_poset,
    chain_poset,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    fence_poset,
    fixture_graphs,
    fixture_posets,
    path_graph,
    skew_diamond_poset,
    two_chain_celeste_top,
)

__version__ = "0.1.0"

__all__ = [
    "ONE",
    "X",
    "Y",
    "BiPoly",
    "binom_poly",
    "BicoloredPoset",
    "Word",
    "all_natural_labelings",
    "all_reverse_natural_labelings",
    "ascents",
    "build_poset",
    "covers",
    "descents",
    "is_natural_labeling",
    "is_reverse_natural_labeling",
    "linear_extensions",
    "natural_labeling",
    "poset_from_json",
    "poset_to_json",
    "reverse_natural_labeling",
    "reverse_word",
    "word_of",
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "CheckReport",
    "brute_count",
    "brute_count_strict",
    "brute_count_weak",
    "chain_strict",
    "chain_weak",
    "check_reciprocity_poset",
    "check_reciprocity_word",
    "interpolate_brute",
    "interpolate_poly",
    "order_poly_strict",
    "order_poly_weak",
    "strict_word_decomposition",
    "weak_word_decomposition",
    "word_poly_strict",
    "word_poly_weak",
    "AcyclicOrientation",
    "Flat",
    "Graph",
    "acyclic_orientations",
    "build_graph",
    "flats",
    "graph_from_json",
    "graph_to_json",
    "is_acyclic",
    "orientation_to_poset",
    "trivial_flat",
    "check_reciprocity_graph",
    "check_reciprocity_graph_poly",
    "chrom_count",
    "chrom_poly",
    "classical_chrom_poly",
    "count_compatible_colorings",
    "antichain_poset",
    "chain_poset",
    "complete_graph",
    "cycle_graph",
    "edgeless_graph",
    "fence_poset",
    "fixture_graphs",
    "fixture_posets",
    "path_graph",
    "skew_diamond_poset",
    "two_chain_celeste_top",
]
