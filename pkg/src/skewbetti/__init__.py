"""Betti numbers of shifted-skew graph ideals and stable hypergraph ideals.

The package pairs closed combinatorial formulas (rectangular decomposition,
complex of boxes, colexsegment forms) with an exact integer homology oracle,
so every closed-form value can be cross-checked.
"""

from .diagrams import (Diagram, RectDecomposition, ShiftedSkewShape,
                       StrictPartition, build_shifted_skew,
                       has_pedestal_pattern, parse_dsl,
                       rectangular_decomposition, restrict)
from .hypergraphs import (BoxComplex, PartiteFamily, UniformFamily,
                          colex_closed_form, colexsegment, complex_of_boxes,
                          closed_betti_formulas, depolarize, gale_compare,
                          partite_expansion, polarize, stability_check,
                          verify_cellular_resolution)
from .simplicial import (BettiTable, BipartiteGraph, HomologyProfile,
                         SimpleGraph, SimplicialComplex, alexander_dual,
                         hochster_betti_table, independence_complex,
                         monomial_betti_totals, reduced_homology,
                         taylor_analysis)
from .skew import (FerrersShape, KrullReport, betti_bipartite_closed,
                   betti_nonbipartite, ferrers_betti, krull_dimension,
                   regularity_and_pd, rook_tools, spherical_column_subsets)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
