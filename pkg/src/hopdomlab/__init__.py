"""Exact solvers and computationally verified gadget reductions relating
Vertex Cover to Hop Domination and 2-Step Domination on 3-regular, d-regular,
claw-free and unit disk graphs."""

from .graph import (Graph, GraphBuilder, GraphError, ParseError, VertexSet,
                    exact_distance_neighborhood, is_claw_free, is_regular,
                    parse_graph, serialize_graph)
from .solvers import (Problem, SolveResult, is_hop_dominating,
                      is_two_step_dominating, is_vertex_cover, solve_minimum)
from .reductions import (CertificateError, ExtractionError, RealizationError,
                         Reduction, ReductionError, ReductionFamily,
                         ReductionKind, build_regular_graph,
                         extract_vertex_cover, forward_certificate, reduce,
                         write_reduction_report)
from .geometry import (Disk, DiskLayout, EmbeddingError, GridEmbedding,
                       PlacementError, embed_orthogonal, intersection_graph,
                       reduce_unit_disk, unit_disk_extract_cover,
                       unit_disk_forward_certificate, validate_embedding)
from .verify import (CorpusSpec, VerifyReport, VerifyRow, connected_graphs,
                     enumerate_corpus, named_graph, run_verification)

__all__ = [
    "Graph", "GraphBuilder", "GraphError", "ParseError", "VertexSet",
    "exact_distance_neighborhood", "is_claw_free", "is_regular",
    "parse_graph", "serialize_graph",
    "Problem", "SolveResult", "is_hop_dominating", "is_two_step_dominating",
    "is_vertex_cover", "solve_minimum",
    "CertificateError", "ExtractionError", "RealizationError", "Reduction",
    "ReductionError", "ReductionFamily", "ReductionKind", "build_regular_graph",
    "extract_vertex_cover", "forward_certificate", "reduce",
    "write_reduction_report",
    "Disk", "DiskLayout", "EmbeddingError", "GridEmbedding", "PlacementError",
    "embed_orthogonal", "intersection_graph", "reduce_unit_disk",
    "unit_disk_extract_cover", "unit_disk_forward_certificate",
    "validate_embedding",
    "CorpusSpec", "VerifyReport", "VerifyRow", "connected_graphs",
    "enumerate_corpus", "named_graph", "run_verification",
]
