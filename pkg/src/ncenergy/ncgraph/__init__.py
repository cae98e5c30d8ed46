from .graph import (
    CliqueDecomposition,
    GraphError,
    SimpleGraph,
    clique_decomposition,
    commuting_graph,
    complement,
    non_commuting_graph,
)
from .linalg import bareiss_rank, jacobi_eigenvalues
from .planarity import is_planar, kuratowski_minor
from .spectrum import (
    LaplacianSpectrum,
    SpectrumError,
    UncertifiedSpectrumWarning,
    is_l_integral,
    laplacian_energy,
    spectrum_from_cliques,
    spectrum_numeric,
)

__all__ = [
    "CliqueDecomposition",
    "GraphError",
    "LaplacianSpectrum",
    "SimpleGraph",
    "SpectrumError",
    "UncertifiedSpectrumWarning",
    "bareiss_rank",
    "clique_decomposition",
    "commuting_graph",
    "complement",
    "is_l_integral",
    "is_planar",
    "jacobi_eigenvalues",
    "kuratowski_minor",
    "laplacian_energy",
    "non_commuting_graph",
    "spectrum_from_cliques",
    "spectrum_numeric",
]
