"""Exact spectral graph theory toolkit.

Graph Laplacian characteristic polynomials, closed-form integer spectra
for four graph families, and spanning-tree counts by four independent
methods, all in arbitrary-precision integer arithmetic.
"""

from .graphs import (
    DOMINATING,
    Graph,
    GraphParseError,
    ISOLATED,
    PartitionSpec,
    ThresholdSequence,
    bipartite_minus_matching,
    complete_graph,
    complete_multipartite,
    laplacian,
    parse_graph,
    serialize_graph,
    threshold_graph,
)
from .linalg import ExactDivisionError, IntMatrix, IntPolynomial
from .spectra import (
    Spectrum,
    deflate,
    identity_plus_ones_charpoly,
    perturbed_charpoly,
    spectrum_bipartite_minus_matching,
    spectrum_complete,
    spectrum_multipartite,
    spectrum_threshold_hk,
    spectrum_threshold_merris,
    spectrum_to_charpoly,
    threshold_perturbed_diagonal,
)
from .treecount import (
    BRUTEFORCE_EDGE_LIMIT,
    BruteForceBoundError,
    TreeCountReport,
    compare_methods,
    tau_bruteforce,
    tau_cayley,
    tau_charpoly,
    tau_cofactor,
    tau_rank_one,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTEFORCE_EDGE_LIMIT",
    "BruteForceBoundError",
    "DOMINATING",
    "ExactDivisionError",
    "Graph",
    "GraphParseError",
    "ISOLATED",
    "IntMatrix",
    "IntPolynomial",
    "PartitionSpec",
    "Spectrum",
    "ThresholdSequence",
    "TreeCountReport",
    "bipartite_minus_matching",
    "compare_methods",
    "complete_graph",
    "complete_multipartite",
    "deflate",
    "identity_plus_ones_charpoly",
    "laplacian",
    "parse_graph",
    "perturbed_charpoly",
    "serialize_graph",
    "spectrum_bipartite_minus_matching",
    "spectrum_complete",
    "spectrum_multipartite",
    "spectrum_threshold_hk",
    "spectrum_threshold_merris",
    "spectrum_to_charpoly",
    "tau_bruteforce",
    "tau_cayley",
    "tau_charpoly",
    "tau_cofactor",
    "tau_rank_one",
    "threshold_graph",
    "threshold_perturbed_diagonal",
]
