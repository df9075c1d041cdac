"""Odd graphs, their bipartite doubles and the folded double F(2O_k):
exact spectra, intersection arrays, equitable quotients and automorphisms."""

from .exact import IntMatrix, Polynomial, Spectrum, char_poly, integer_roots, integral_spectrum, nullity_at
from .graphs import (
    DistanceTable, DoubleOddLabel, Graph, all_pairs_distances, antipodal_map, bipartite_double,
    double_odd_graph, folded_double_odd, odd_graph, verify_covering_map,
)
from .verdict import CapacityError, Refutation, Verdict

__version__ = "0.1.0"
