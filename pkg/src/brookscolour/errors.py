"""Exception types raised across the package."""


class BrooksColourError(Exception):
    """Base class for every error raised by this package."""


class GraphBuildError(BrooksColourError, ValueError):
    """An edge list handed to :func:`build_graph` is invalid."""


class SelfLoopError(GraphBuildError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class DuplicateEdgeError(GraphBuildError):
    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v
        super().__init__(f"duplicate edge ({u}, {v})")


class IdOutOfRangeError(GraphBuildError):
    def __init__(self, vertex: int, n: int):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex id {vertex} out of range for n={n}")


class NotABlockError(BrooksColourError):
    """The view is not a single block (and not degenerate K1/K2)."""


class NotACycleError(BrooksColourError):
    """The view is not a cycle."""


class NotCompleteError(BrooksColourError):
    """The view is not a complete graph."""


class PreconditionViolatedError(BrooksColourError):
    """A vertex-pair search was asked for on a complete graph, a cycle, or a
    non-biconnected view."""


class InvalidPairError(BrooksColourError):
    """An (a, b, v1) triple fails its invariants for the given view."""


class ImproperLocalColouringError(BrooksColourError):
    """A per-block colouring handed to the merge step is not proper."""

    def __init__(self, block_index: int, message: str):
        self.block_index = block_index
        super().__init__(f"block {block_index}: {message}")


class NotAPermutationError(BrooksColourError):
    """A greedy colouring order is not a permutation of 0..n-1."""


class NotApplicableError(BrooksColourError):
    """End-blocks were requested for a view without a non-trivial block-cut
    tree (biconnected, disconnected, or single-block)."""


class IncompleteColouringError(BrooksColourError):
    """A colouring with uncoloured vertices cannot be emitted."""


class GraphTooLargeError(BrooksColourError):
    """A brute-force oracle was called above its hard size guard."""


class BadParamsError(BrooksColourError, ValueError):
    """Invalid parameters for a graph generator."""


class DimacsError(BrooksColourError, ValueError):
    """Parse error carrying the 1-based line number it occurred on."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DimacsSyntaxError(DimacsError):
    pass


class CountMismatchError(DimacsError):
    def __init__(self, line: int, declared: int, found: int):
        self.declared = declared
        self.found = found
        super().__init__(line, f"problem line declared {declared} edges but {found} were read")
