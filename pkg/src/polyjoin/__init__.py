"""Exact composition of simplicial complexes and natural stochastic polytopes."""

from .betti import BettiTable, beta_poly, b_poly, compose_beta, h_poly, hochster_betti, koszul_betti, q_poly
from .complex_core import SimplicialComplex, boundary, build, ghost, link, simplex
from .composition import compose, iterated_wedge, vertex_blowup
from .errors import DomainError, MalformedInputError, PolyjoinError, ResourceLimitError
from .homology import FieldSpec, reduced_cohomology
from .polyring import MultiPoly
from .polytope import StochasticPolytope, compose_polytopes, nerve_complex

__all__ = [
    "BettiTable", "DomainError", "FieldSpec", "MalformedInputError", "MultiPoly",
    "PolyjoinError", "ResourceLimitError", "SimplicialComplex", "StochasticPolytope",
    "b_poly", "beta_poly", "boundary", "build", "compose", "compose_beta",
    "compose_polytopes", "ghost", "h_poly", "hochster_betti", "iterated_wedge",
    "koszul_betti", "link", "nerve_complex", "q_poly", "reduced_cohomology",
    "simplex", "vertex_blowup",
]
__version__ = "0.1.0"
