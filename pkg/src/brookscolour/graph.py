"""Immutable CSR graphs and masked vertex-deletion views.

A :class:`Graph` is a simple undirected graph on dense vertex ids 0..n-1
with per-vertex neighbour arrays sorted ascending.  A :class:`GraphView`
pairs a graph with a removed-vertex mask, so induced subgraphs like "the
graph without x" cost O(1) to create and never copy or mutate the base.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from . import _kernels as _k
from .errors import DuplicateEdgeError, IdOutOfRangeError, SelfLoopError


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class Graph:
    """Simple undirected graph in compressed sparse row form.

    Attributes
    ----------
    n : int
        Number of vertices; ids are 0..n-1.
    m : int
        Number of undirected edges.
    indptr, indices : ndarray
        CSR adjacency; ``indices[indptr[v]:indptr[v+1]]`` lists v's
        neighbours in ascending order.

    Instances are immutable after construction (all arrays are locked) and
    safe to share between threads.  Use :func:`build_graph` to construct one
    from an edge list.
    """

    __slots__ = ("n", "m", "indptr", "indices", "edge_u", "edge_v", "eid_of_slot")

    def __init__(self, n, indptr, indices, edge_u, edge_v, eid_of_slot):
        self.n = int(n)
        self.m = int(edge_u.shape[0])
        self.indptr = _frozen(indptr)
        self.indices = _frozen(indices)
        self.edge_u = _frozen(edge_u)
        self.edge_v = _frozen(edge_v)
        self.eid_of_slot = _frozen(eid_of_slot)

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbours(self, v: int) -> np.ndarray:
        """Ascending neighbour ids of ``v`` (a read-only view)."""
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return bool(_k.has_edge_csr(self.indptr, self.indices, u, v))

    def edges(self) -> np.ndarray:
        """All edges as an (m, 2) array with u < v, sorted lexicographically.

        Row i is the edge with canonical id i, the id space used by
        block decompositions.
        """
        return np.column_stack((self.edge_u, self.edge_v))

    def max_degree(self) -> int:
        return int(np.max(np.diff(self.indptr), initial=0))

    def view(self) -> "GraphView":
        """Full view with nothing removed."""
        return GraphView(self, np.zeros(self.n, np.uint8))

    def without(self, vertices: Iterable[int]) -> "GraphView":
        return self.view().without(vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.m == other.m
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class GraphView:
    """A graph together with a removed-vertex mask.

    All operations behave as on the subgraph induced by the non-removed
    vertices.  Views never mutate their base graph; removing further
    vertices yields a new view.
    """

    __slots__ = ("base", "_removed", "_active", "_vertices")

    def __init__(self, base: Graph, removed: np.ndarray):
        self.base = base
        self._removed = _frozen(np.ascontiguousarray(removed, np.uint8))
        self._active = _frozen((self._removed == 0).astype(np.uint8))
        self._vertices = None

    @property
    def removed(self) -> np.ndarray:
        """Byte mask; 1 marks a removed vertex."""
        return self._removed

    @property
    def active(self) -> np.ndarray:
        """Byte mask; 1 marks a vertex present in the view."""
        return self._active

    def vertices(self) -> np.ndarray:
        """Ascending ids of the vertices present in the view."""
        if self._vertices is None:
            self._vertices = _frozen(np.flatnonzero(self._removed == 0).astype(np.int32))
        return self._vertices

    @property
    def n_active(self) -> int:
        return int(self.vertices().shape[0])

    def contains(self, v: int) -> bool:
        return 0 <= v < self.base.n and not self._removed[v]

    def degree(self, v: int) -> int:
        """Number of non-removed neighbours of ``v``."""
        return int(_k.degree_in_view(self.base.indptr, self.base.indices, self.active, v))

    def degrees(self) -> np.ndarray:
        """In-view degree of every vertex (0 for removed ones)."""
        out = np.zeros(self.base.n, np.int32)
        _k.degrees_in_view(self.base.indptr, self.base.indices, self.active, out)
        return out

    def neighbours(self, v: int) -> np.ndarray:
        nbrs = self.base.neighbours(v)
        return nbrs[self._removed[nbrs] == 0]

    def has_edge(self, u: int, v: int) -> bool:
        return self.contains(u) and self.contains(v) and self.base.has_edge(u, v)

    def edge_count(self) -> int:
        """Number of edges with both endpoints in the view."""
        keep = (self._removed[self.base.edge_u] == 0) & (self._removed[self.base.edge_v] == 0)
        return int(np.count_nonzero(keep))

    def without(self, vertices: Iterable[int]) -> "GraphView":
        removed = self._removed.copy()
        idx = np.asarray(list(vertices) if not isinstance(vertices, np.ndarray) else vertices,
                         dtype=np.int64).ravel()
        if idx.size:
            if idx.min() < 0 or idx.max() >= self.base.n:
                raise IndexError("vertex id out of range")
            removed[idx] = 1
        return GraphView(self.base, removed)

    def __repr__(self) -> str:
        return f"GraphView(base={self.base!r}, active={self.n_active})"


def as_view(g: Graph | GraphView) -> GraphView:
    """Coerce a Graph into its full view; views pass through unchanged."""
    return g.view() if isinstance(g, Graph) else g


def build_graph(n: int, edges) -> Graph:
    """Build an immutable graph from an unordered edge list.

    Parameters
    ----------
    n : int
        Vertex count; every endpoint must lie in [0, n).
    edges : iterable of pairs or (m, 2) array
        Unordered endpoint pairs.  Input order is irrelevant to the result.

    Raises
    ------
    IdOutOfRangeError, SelfLoopError, DuplicateEdgeError
        In that priority order; a pair repeated in either orientation counts
        as a duplicate.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n >= 2**31:
        raise ValueError("vertex count must fit in 32 bits")
    if isinstance(edges, np.ndarray):
        earr = edges.astype(np.int64, copy=True).reshape(-1, 2)
    else:
        earr = np.array(list(edges), dtype=np.int64).reshape(-1, 2)
    m = earr.shape[0]
    if 2 * m >= 2**31:
        raise ValueError("edge count must fit in 32 bits")
    eu = np.ascontiguousarray(earr[:, 0])
    ev = np.ascontiguousarray(earr[:, 1])

    if m:
        bad = (eu < 0) | (eu >= n) | (ev < 0) | (ev >= n)
        if bad.any():
            i = int(np.argmax(bad))
            v = int(eu[i]) if not (0 <= eu[i] < n) else int(ev[i])
            raise IdOutOfRangeError(v, n)
        loops = eu == ev
        if loops.any():
            raise SelfLoopError(int(eu[int(np.argmax(loops))]))

    lo = np.minimum(eu, ev).astype(np.int32)
    hi = np.maximum(eu, ev).astype(np.int32)
    corder = np.lexsort((hi, lo))
    lo = lo[corder]
    hi = hi[corder]
    if m > 1:
        dup = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
        if dup.any():
            i = int(np.argmax(dup))
            raise DuplicateEdgeError(int(lo[i]), int(hi[i]))

    # canonical edge arrays, sorted by (u, v) with u < v
    edge_u = lo
    edge_v = hi

    # CSR over both directions
    du = np.concatenate((edge_u, edge_v))
    dv = np.concatenate((edge_v, edge_u))
    sl = np.lexsort((dv, du))
    du = du[sl]
    dv = dv[sl]
    indptr = np.zeros(n + 1, np.int64)
    if m:
        np.cumsum(np.bincount(du, minlength=n), out=indptr[1:])
    indices = np.ascontiguousarray(dv)

    # canonical edge id of each directed CSR slot: slots sorted by
    # (min, max) pair off into the two directions of edge id k at 2k, 2k+1
    eid_of_slot = np.empty(2 * m, np.int32)
    if m:
        kmin = np.minimum(du, dv)
        kmax = np.maximum(du, dv)
        pairing = np.lexsort((kmax, kmin))
        eid_of_slot[pairing] = np.repeat(np.arange(m, dtype=np.int32), 2)

    return Graph(n, indptr, indices, edge_u, edge_v, eid_of_slot)


def max_degree(view: Graph | GraphView) -> int:
    """Maximum degree of the induced subgraph; 0 when edgeless or empty."""
    view = as_view(view)
    if isinstance(view.base, Graph) and view.n_active == view.base.n:
        return view.base.max_degree()
    return int(_k.max_degree_csr(view.base.indptr, view.base.indices, view.active))


def distance_two_vertex(view: Graph | GraphView, x: int) -> int | None:
    """Some vertex at distance exactly 2 from ``x`` in the view, or None.

    Two-level breadth-first scan with ascending tie-breaks: x's neighbours
    are tried in ascending order and each neighbour's adjacency likewise,
    so the result is deterministic.  ``x`` must be present in the view.
    """
    view = as_view(view)
    if not view.contains(x):
        raise ValueError(f"vertex {x} is not in the view")
    mark = np.zeros(view.base.n, np.uint8)
    b, _v1 = _k.distance_two(view.base.indptr, view.base.indices, view.active, x, mark)
    return int(b) if b >= 0 else None
