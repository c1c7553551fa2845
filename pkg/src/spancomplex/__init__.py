"""Spanning simplicial complexes of uni-cyclic multigraphs.

Exact-arithmetic construction and cross-verification: spanning tree
enumeration (closed form and backtracking oracle), f-vectors and Euler
characteristics, facet ideals with their primary decomposition via
minimal vertex covers, and integer simplicial homology.
"""

from .analysis import AnalysisReport, Discrepancy, run_analyze, run_verify
from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    DuplicateEdgeIdError,
    EmptyGraphError,
    GraphValidationError,
    LoopEdgeError,
    NotUnicyclicError,
    SchemaError,
    SpanComplexError,
    UnknownEndpointError,
)
from .fvector import (
    FVector,
    binomial,
    dimension,
    euler_characteristic,
    f_vector_bruteforce,
    f_vector_closed_form,
)
from .homology import (
    BettiProfile,
    BoundaryMatrix,
    GradedFaces,
    betti_numbers,
    boundary_matrix,
    euler_from_betti,
    graded_faces,
    matrix_rank_exact,
)
from .ideal import (
    MonomialIdealView,
    VertexCover,
    facet_ideal,
    minimal_vertex_covers_closed_form,
    minimal_vertex_covers_generic,
    primary_decomposition,
)
from .multigraph import (
    Multigraph,
    ParallelClass,
    UnicyclicLayout,
    build_multigraph,
    load_graph_file,
    multigraph_from_json,
    parallel_classes,
    recognize_unicyclic,
)
from .spanning import (
    Facet,
    count_spanning_trees_layout,
    enumerate_spanning_trees_generic,
    enumerate_spanning_trees_layout,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BettiProfile",
    "BoundaryMatrix",
    "BudgetExceededError",
    "DisconnectedGraphError",
    "Discrepancy",
    "DuplicateEdgeIdError",
    "EmptyGraphError",
    "FVector",
    "Facet",
    "GradedFaces",
    "GraphValidationError",
    "LoopEdgeError",
    "MonomialIdealView",
    "Multigraph",
    "NotUnicyclicError",
    "ParallelClass",
    "SchemaError",
    "SpanComplexError",
    "UnicyclicLayout",
    "UnknownEndpointError",
    "VertexCover",
    "betti_numbers",
    "binomial",
    "boundary_matrix",
    "build_multigraph",
    "count_spanning_trees_layout",
    "dimension",
    "euler_characteristic",
    "euler_from_betti",
    "enumerate_spanning_trees_generic",
    "enumerate_spanning_trees_layout",
    "f_vector_bruteforce",
    "f_vector_closed_form",
    "facet_ideal",
    "graded_faces",
    "load_graph_file",
    "matrix_rank_exact",
    "minimal_vertex_covers_closed_form",
    "minimal_vertex_covers_generic",
    "multigraph_from_json",
    "parallel_classes",
    "primary_decomposition",
    "recognize_unicyclic",
    "run_analyze",
    "run_verify",
]
