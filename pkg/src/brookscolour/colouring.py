"""Block classification, pair finding, reverse-greedy colouring and merging.

The pipeline in :func:`brooks_colour` colours every connected graph with at
most max-degree colours unless a component is a complete graph or an odd
cycle, in which case it needs one more; :func:`brooks_bound` computes that
target.  Per block the dispatch is: complete graphs and cycles get direct
colourings; everything else gets a distance-2 pair {a, b} whose removal
keeps the block connected (:func:`find_ab`), then the reverse-greedy pass of
:func:`sequential_colour`.  Per-block colourings are combined by
:func:`merge_block_colourings`, which swaps at most two colour values in
each non-root block.

All functions are pure and deterministic: ties break by ascending vertex id
everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels as _k
from .connectivity import (BlockCutForest, BlockDecomposition,
                           biconnected_components, connected_components,
                           is_biconnected)
from .errors import (ImproperLocalColouringError, InvalidPairError,
                     NotABlockError, NotACycleError, NotAPermutationError,
                     NotCompleteError, PreconditionViolatedError)
from .graph import Graph, GraphView, as_view


class Colouring:
    """Per-vertex colour assignment; 0 means uncoloured, colours are 1, 2, ...

    ``num_colours`` is the maximum assigned colour.  Instances are immutable.
    """

    __slots__ = ("colours", "num_colours")

    def __init__(self, colours):
        arr = np.array(colours, dtype=np.int64, copy=True).ravel()
        arr.setflags(write=False)
        self.colours = arr
        self.num_colours = int(arr.max(initial=0))

    @property
    def n(self) -> int:
        return int(self.colours.shape[0])

    def of(self, v: int) -> int:
        return int(self.colours[v])

    def is_complete(self) -> bool:
        """True when every vertex carries a positive colour."""
        return bool((self.colours > 0).all())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Colouring):
            return NotImplemented
        return np.array_equal(self.colours, other.colours)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Colouring(n={self.n}, num_colours={self.num_colours})"


class BlockKind(Enum):
    COMPLETE_GRAPH = "complete-graph"
    EVEN_CYCLE = "even-cycle"
    ODD_CYCLE = "odd-cycle"
    SPLIT_SPECIAL = "split-special"
    GENERAL = "general"


@dataclass(frozen=True)
class Classification:
    """Shape of a single block; ``hubs`` carries the two full-degree
    vertices of a split-special block (two hubs plus degree-2 vertices)."""

    kind: BlockKind
    hubs: tuple[int, int] | None = None


@dataclass(frozen=True)
class ABPair:
    """Vertices a, b at distance 2 plus a common neighbour v1.

    Valid for a view when a and b are distinct non-adjacent vertices, v1 is
    adjacent to both, and removing {a, b} leaves the view connected.
    """

    a: int
    b: int
    v1: int


@dataclass(frozen=True)
class ComponentReport:
    component: int
    vertices: int
    edges: int
    delta: int
    category: str  # "complete" | "odd-cycle" | "other"
    bound: int
    colours_used: int


@dataclass(frozen=True)
class BrooksReport:
    components: tuple[ComponentReport, ...]
    num_colours: int
    bound: int


def _classify_from_degrees(verts: np.ndarray, degs: np.ndarray) -> Classification:
    nB = int(verts.shape[0])
    if nB == 1:
        return Classification(BlockKind.COMPLETE_GRAPH)
    if bool((degs == nB - 1).all()):
        return Classification(BlockKind.COMPLETE_GRAPH)
    if bool((degs == 2).all()):
        kind = BlockKind.EVEN_CYCLE if nB % 2 == 0 else BlockKind.ODD_CYCLE
        return Classification(kind)
    hubs = verts[degs == nB - 1]
    if nB >= 4 and hubs.shape[0] == 2 and int((degs == 2).sum()) == nB - 2:
        return Classification(BlockKind.SPLIT_SPECIAL, hubs=(int(hubs[0]), int(hubs[1])))
    return Classification(BlockKind.GENERAL)


def classify_block(view: Graph | GraphView) -> Classification:
    """Classify a view that forms a single block.

    Complete graphs (including K1, K2, K3), even/odd cycles, the two-hub
    split shape, or general.  Raises :class:`NotABlockError` when the view
    is not connected or decomposes into more than one block.
    """
    view = as_view(view)
    decomp = biconnected_components(view)
    if decomp.n_blocks != 1:
        raise NotABlockError(
            f"view has {decomp.n_blocks} blocks; classification needs exactly one")
    verts = view.vertices()
    degs = view.degrees()[verts]
    return _classify_from_degrees(verts, degs)


def colour_cycle(view: Graph | GraphView) -> Colouring:
    """Colour a cycle: walk it alternating 1, 2; the last vertex of an odd
    cycle becomes 3.  The walk starts at the smallest vertex and moves to
    its smaller neighbour first.  Raises :class:`NotACycleError` otherwise."""
    view = as_view(view)
    verts = view.vertices()
    nB = verts.shape[0]
    degs = view.degrees()[verts] if nB else np.zeros(0, np.int64)
    _labels, ncomp = connected_components(view)
    if nB < 3 or ncomp != 1 or not bool((degs == 2).all()):
        raise NotACycleError("view is not a cycle")
    col = np.zeros(view.base.n, np.int64)
    start = int(verts[0])
    nxt = int(view.neighbours(start)[0])
    col[start] = 1
    prev, cur, i = start, nxt, 1
    while cur != start:
        col[cur] = 1 if i % 2 == 0 else 2
        nbrs = view.neighbours(cur)
        cur, prev = int(nbrs[0] if nbrs[0] != prev else nbrs[1]), cur
        i += 1
    if nB % 2 == 1:
        col[prev] = 3
    return Colouring(col)


def colour_complete(view: Graph | GraphView) -> Colouring:
    """Give each vertex of a complete view a distinct colour 1..n, ascending
    by vertex id.  Raises :class:`NotCompleteError` otherwise."""
    view = as_view(view)
    verts = view.vertices()
    nB = verts.shape[0]
    degs = view.degrees()[verts] if nB else np.zeros(0, np.int64)
    if not bool((degs == nB - 1).all()):
        raise NotCompleteError("view is not a complete graph")
    col = np.zeros(view.base.n, np.int64)
    col[verts] = np.arange(1, nB + 1)
    return Colouring(col)


_KIND_CODE = {
    BlockKind.SPLIT_SPECIAL: _k.KIND_SPLIT,
    BlockKind.GENERAL: _k.KIND_GENERAL,
}


def find_ab(view: Graph | GraphView) -> ABPair:
    """Find a distance-2 pair {a, b} with v1 adjacent to both such that the
    view stays connected without {a, b}.

    Requires a biconnected view that is neither complete nor a cycle (hence
    n >= 4).  Construction: for the split shape, a and b are the two
    lowest-id degree-2 vertices and v1 the lower hub.  Otherwise x is the
    lowest-id vertex with 3 <= deg(x) <= n-2; if the view minus x is
    biconnected then a = x and b is the first vertex at distance 2 (v1 the
    lowest common neighbour); if not, a and b are x's lowest-id neighbours
    inside the two end-blocks of the view minus x (cut points excluded) and
    v1 = x.
    """
    view = as_view(view)
    if not is_biconnected(view):
        raise PreconditionViolatedError("view is not biconnected")
    verts = view.vertices()
    deg = view.degrees()
    cls = _classify_from_degrees(verts, deg[verts])
    if cls.kind not in _KIND_CODE:
        raise PreconditionViolatedError(
            f"view is {cls.kind.value}; no distance-2 pair applies")
    g = view.base
    n = g.n
    hub_lo = min(cls.hubs) if cls.hubs else -1
    inb = view.active.copy()
    mB = view.edge_count()
    disc = np.zeros(n, np.int32)
    low = np.empty(n, np.int32)
    parent = np.empty(n, np.int32)
    iterptr = np.empty(n, np.int32)
    vstack = np.empty(n, np.int32)
    mcap = max(mB, 1)
    es_u = np.empty(mcap, np.int32)
    es_v = np.empty(mcap, np.int32)
    mark = np.zeros(n, np.uint8)
    cutbuf = np.zeros(n, np.uint8)
    a, b, v1 = _k.find_ab_core(g.indptr, g.indices, inb, verts, mB, deg[verts],
                               _KIND_CODE[cls.kind], hub_lo,
                               disc, low, parent, iterptr, vstack,
                               es_u, es_v, mark, cutbuf)
    assert a >= 0 and b >= 0 and v1 >= 0
    return ABPair(int(a), int(b), int(v1))


def _validate_pair(view: GraphView, pair: ABPair) -> None:
    a, b, v1 = pair.a, pair.b, pair.v1
    if not (view.contains(a) and view.contains(b) and view.contains(v1)):
        raise InvalidPairError("pair references removed or out-of-range vertices")
    if a == b or v1 in (a, b):
        raise InvalidPairError("a, b and v1 must be three distinct vertices")
    if view.has_edge(a, b):
        raise InvalidPairError("a and b must not be adjacent")
    if not (view.has_edge(v1, a) and view.has_edge(v1, b)):
        raise InvalidPairError("v1 must be adjacent to both a and b")


def sequential_colour(view: Graph | GraphView, pair: ABPair) -> Colouring:
    """Colour a connected view given a valid pair: a and b share colour 1,
    the remaining vertices are ordered by DFS preorder of the view minus
    {a, b} rooted at v1 and coloured in reverse order, each taking the
    minimum colour free among already-coloured neighbours.

    The result is proper and uses at most max-degree colours: every vertex
    other than v1 still has an uncoloured neighbour when its turn comes,
    and v1's neighbours a and b share a colour.
    """
    view = as_view(view)
    _validate_pair(view, pair)
    g = view.base
    n = g.n
    inb = view.active.copy()
    col = np.zeros(n, np.int32)
    order = np.empty(n, np.int32)
    seen = np.zeros(n, np.uint8)
    iterptr = np.empty(n, np.int32)
    vstack = np.empty(n, np.int32)
    used = np.zeros(n + 2, np.uint8)
    cnt = _k.sequential_colour_block(g.indptr, g.indices, inb,
                                     pair.a, pair.b, pair.v1,
                                     col, order, seen, iterptr, vstack, used)
    if cnt != view.n_active - 2:
        raise InvalidPairError("view minus {a, b} is not connected")
    return Colouring(col)


def merge_block_colourings(g: Graph, decomp: BlockDecomposition,
                           forest: BlockCutForest,
                           block_colourings) -> Colouring:
    """Combine proper per-block colourings into one proper colouring.

    Pre-order traversal of each tree of the forest: the root block's colours
    are copied verbatim; every other block is written after one transposition
    (alpha beta) of colour values, where alpha is the colour already fixed on
    its parent cut vertex and beta the block's own colour there.  The number
    of distinct global colours never exceeds the largest local count.

    Raises :class:`ImproperLocalColouringError` if some local colouring
    leaves a block vertex uncoloured or repeats a colour across a block edge.
    """
    blocks = decomp.blocks
    if len(block_colourings) != len(blocks):
        raise ValueError("need exactly one local colouring per block")
    locs = [c.colours for c in block_colourings]
    for b, block in enumerate(blocks):
        loc = locs[b]
        if (loc[block.vertices] <= 0).any():
            raise ImproperLocalColouringError(b, "block vertex left uncoloured")
        if block.edge_ids.shape[0]:
            eu = g.edge_u[block.edge_ids]
            ev = g.edge_v[block.edge_ids]
            if (loc[eu] == loc[ev]).any():
                raise ImproperLocalColouringError(b, "monochromatic edge in local colouring")

    colour = np.zeros(g.n, np.int64)
    visited = np.zeros(len(blocks), bool)
    for root in forest.roots:
        stack = [(root, -1)]
        visited[root] = True
        while stack:
            b, centry = stack.pop()
            block = blocks[b]
            loc = locs[b]
            if centry < 0:
                colour[block.vertices] = loc[block.vertices]
            else:
                beta = int(loc[centry])
                alpha = int(colour[centry])
                vals = loc[block.vertices].copy()
                if alpha != beta:
                    swap_a = vals == alpha
                    vals[vals == beta] = alpha
                    vals[swap_a] = beta
                colour[block.vertices] = vals
            for v in forest.block_cuts[b]:
                for b2 in forest.cut_blocks[int(v)]:
                    if not visited[b2]:
                        visited[b2] = True
                        stack.append((int(b2), int(v)))
    return Colouring(colour)


def _component_stats(g: Graph):
    labels, ncomp = connected_components(g.view())
    deg = np.diff(g.indptr)
    n_c = np.bincount(labels, minlength=ncomp)
    sumdeg_c = np.bincount(labels, weights=deg, minlength=ncomp).astype(np.int64)
    maxdeg_c = np.zeros(ncomp, np.int64)
    np.maximum.at(maxdeg_c, labels, deg)
    deg2_c = np.bincount(labels[deg == 2], minlength=ncomp)
    complete_c = sumdeg_c == n_c * (n_c - 1)
    oddcycle_c = (deg2_c == n_c) & (n_c % 2 == 1)
    bound_c = maxdeg_c + np.where(complete_c | oddcycle_c, 1, 0)
    return labels, ncomp, n_c, sumdeg_c // 2, maxdeg_c, complete_c, oddcycle_c, bound_c


def brooks_bound(g: Graph) -> int:
    """Colour budget for a graph: per component, max degree plus one when
    the component is complete or an odd cycle, max degree otherwise; the
    overall bound is the maximum over components (0 for the empty graph)."""
    if g.n == 0:
        return 0
    *_rest, bound_c = _component_stats(g)
    return int(bound_c.max(initial=0))


def greedy_colour(g: Graph, order) -> Colouring:
    """First-fit colouring in the given vertex order; uses at most
    max-degree + 1 colours.  ``order`` must be a permutation of 0..n-1."""
    order = np.asarray(list(order) if not isinstance(order, np.ndarray) else order,
                       dtype=np.int64).ravel()
    if order.shape[0] != g.n:
        raise NotAPermutationError(f"order has length {order.shape[0]}, expected {g.n}")
    if g.n and (order.min() < 0 or order.max() >= g.n
                or not (np.bincount(order, minlength=g.n) == 1).all()):
        raise NotAPermutationError("order is not a permutation of 0..n-1")
    return Colouring(_k.greedy_colour_csr(g.indptr, g.indices, order.astype(np.int32)))


def brooks_colour(g: Graph) -> tuple[Colouring, BrooksReport]:
    """Colour a graph within :func:`brooks_bound` in O(|V|+|E|) time.

    Per component: decompose into blocks, colour each block by its shape
    (complete -> distinct colours, cycle -> alternation, otherwise
    find_ab + sequential_colour), then merge along the block-cut forest.
    Deterministic for a fixed input.  Returns the colouring plus a
    per-component report.
    """
    if g.n == 0:
        return Colouring(np.zeros(0, np.int64)), BrooksReport((), 0, 0)
    arr, ncomp = _k.brooks_pipeline(g.indptr, g.indices)
    if ncomp == 1:
        # connected fast path: no per-component scatters needed
        deg = np.diff(g.indptr)
        delta = int(deg.max(initial=0))
        complete = 2 * g.m == g.n * (g.n - 1)
        oddcycle = g.n % 2 == 1 and bool((deg == 2).all()) and g.n >= 3
        bound = delta + 1 if complete or oddcycle else delta
        used = int(arr.max(initial=0))
        category = "complete" if complete else "odd-cycle" if oddcycle else "other"
        comp = ComponentReport(component=0, vertices=g.n, edges=g.m,
                               delta=delta, category=category,
                               bound=bound, colours_used=used)
        return Colouring(arr), BrooksReport((comp,), used, bound)
    labels, ncomp, n_c, m_c, maxdeg_c, complete_c, oddcycle_c, bound_c = _component_stats(g)
    used_c = np.zeros(ncomp, np.int64)
    np.maximum.at(used_c, labels, arr)
    comps = []
    for c in range(ncomp):
        category = ("complete" if complete_c[c]
                    else "odd-cycle" if oddcycle_c[c] else "other")
        comps.append(ComponentReport(
            component=c, vertices=int(n_c[c]), edges=int(m_c[c]),
            delta=int(maxdeg_c[c]), category=category,
            bound=int(bound_c[c]), colours_used=int(used_c[c])))
    report = BrooksReport(components=tuple(comps),
                          num_colours=int(arr.max(initial=0)),
                          bound=int(bound_c.max(initial=0)))
    return Colouring(arr), report
