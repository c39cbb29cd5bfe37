"""Vertex colouring within the Brooks bound in linear time.

Every graph with maximum degree d has a proper colouring with d colours
unless a component is a complete graph or an odd cycle, which need d+1;
:func:`brooks_colour` produces such a colouring in O(|V|+|E|) time via
block decomposition, per-shape block colouring and a colour-swapping merge
along the block-cut forest.  Brute-force oracles, DIMACS I/O, seeded
generators and a benchmark harness round out the package.
"""

from .bench import BenchmarkRecord, bench
from .colouring import (ABPair, BlockKind, BrooksReport, Classification,
                        Colouring, ComponentReport, brooks_bound,
                        brooks_colour, classify_block, colour_complete,
                        colour_cycle, find_ab, greedy_colour,
                        merge_block_colourings, sequential_colour)
from .connectivity import (Block, BlockCutForest, BlockDecomposition,
                           biconnected_components, block_cut_forest,
                           connected_components, end_blocks, is_biconnected)
from .dimacs import (emit_colouring, parse_colouring, parse_dimacs,
                     write_dimacs)
from .errors import (BadParamsError, BrooksColourError, CountMismatchError,
                     DimacsError, DimacsSyntaxError, DuplicateEdgeError,
                     GraphBuildError, GraphTooLargeError, IdOutOfRangeError,
                     ImproperLocalColouringError, IncompleteColouringError,
                     InvalidPairError, NotABlockError, NotACycleError,
                     NotApplicableError, NotAPermutationError,
                     NotCompleteError, PreconditionViolatedError,
                     SelfLoopError)
from .generators import (block_chain, complete_graph, cycle_graph, generate,
                         random_connected, split_graph, theta_graph)
from .graph import (Graph, GraphView, as_view, build_graph,
                    distance_two_vertex, max_degree)
from .oracle import (BoundExceeded, MonochromaticEdge, UncolouredVertex,
                     Violation, block_edge_partition_bruteforce,
                     chromatic_number_bruteforce,
                     connected_components_bruteforce,
                     cut_vertices_bruteforce, is_connected_bruteforce,
                     is_k_colourable_bruteforce, verify_colouring)

__version__ = "0.1.0"

__all__ = [
    "ABPair", "BadParamsError", "BenchmarkRecord", "Block", "BlockCutForest",
    "BlockDecomposition", "BlockKind", "BoundExceeded", "BrooksColourError",
    "BrooksReport", "Classification", "Colouring", "ComponentReport",
    "CountMismatchError", "DimacsError", "DimacsSyntaxError",
    "DuplicateEdgeError", "Graph", "GraphBuildError", "GraphTooLargeError",
    "GraphView", "IdOutOfRangeError", "ImproperLocalColouringError",
    "IncompleteColouringError", "InvalidPairError", "MonochromaticEdge",
    "NotABlockError", "NotACycleError", "NotApplicableError",
    "NotAPermutationError", "NotCompleteError", "PreconditionViolatedError",
    "SelfLoopError", "UncolouredVertex", "Violation", "as_view", "bench",
    "biconnected_components", "block_chain", "block_cut_forest",
    "block_edge_partition_bruteforce", "brooks_bound", "brooks_colour",
    "build_graph", "chromatic_number_bruteforce", "classify_block",
    "colour_complete", "colour_cycle", "complete_graph",
    "connected_components", "connected_components_bruteforce", "cycle_graph",
    "cut_vertices_bruteforce", "distance_two_vertex", "emit_colouring",
    "end_blocks", "find_ab", "generate", "greedy_colour", "is_biconnected",
    "is_connected_bruteforce", "is_k_colourable_bruteforce", "max_degree",
    "merge_block_colourings", "parse_colouring", "parse_dimacs",
    "random_connected", "sequential_colour", "split_graph", "theta_graph",
    "verify_colouring", "write_dimacs",
]
