"""Depth-first-search machinery: components, blocks, cut vertices, forests.

The block decomposition is the one-pass iterative lowpoint method; recursion
is never used, so million-vertex inputs cannot overflow the interpreter
stack.  Ties are always broken by ascending vertex id, which makes every
decomposition, forest and traversal deterministic for a given input.

Conventions: K1 and K2 are *not* biconnected, but a 2-vertex block is a
legal block; every isolated vertex gets its own degenerate single-vertex
block so later colouring passes still reach it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from .errors import NotApplicableError
from .graph import Graph, GraphView, as_view


@dataclass(frozen=True)
class Block:
    """One block: its vertex ids and the canonical edge ids it owns.

    Both arrays are sorted ascending.  A block with >= 3 vertices is
    biconnected; 2 vertices means a bridge edge; 1 vertex (no edges) is the
    degenerate block of an isolated vertex.
    """

    vertices: np.ndarray
    edge_ids: np.ndarray

    @property
    def n(self) -> int:
        return int(self.vertices.shape[0])

    def vertex_set(self) -> frozenset:
        return frozenset(int(v) for v in self.vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut-vertex flags and the edge-to-block mapping of a view.

    ``block_of_edge[i]`` is the index of the block owning canonical edge i
    of the base graph, or -1 when the edge has a removed endpoint.  Every
    in-view edge belongs to exactly one block, and a vertex lies in two or
    more blocks exactly when it is a cut vertex.
    """

    view: GraphView
    blocks: tuple[Block, ...]
    cut_vertex: np.ndarray
    block_of_edge: np.ndarray

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def cut_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.cut_vertex).astype(np.int64)


@dataclass(frozen=True)
class BlockCutForest:
    """Bipartite forest over block nodes and cut-vertex nodes.

    ``block_cuts[b]`` lists the cut vertices inside block b (ascending) and
    ``cut_blocks[v]`` the block indices containing cut vertex v (ascending);
    each such pair is one forest edge.  ``roots`` holds one block index per
    tree, ordered by component: the lowest-index block containing the
    component's smallest vertex.
    """

    block_cuts: tuple[np.ndarray, ...]
    cut_blocks: dict[int, np.ndarray]
    roots: tuple[int, ...]

    @property
    def n_trees(self) -> int:
        return len(self.roots)

    def leaf_blocks(self) -> list[int]:
        """Indices of blocks incident to exactly one cut vertex."""
        return [b for b, cuts in enumerate(self.block_cuts) if cuts.shape[0] == 1]


def connected_components(view: Graph | GraphView) -> tuple[np.ndarray, int]:
    """Per-vertex component ids plus the component count.

    Ids are 0..count-1 in order of each component's smallest vertex;
    removed vertices get -1.
    """
    view = as_view(view)
    labels = np.full(view.base.n, -1, np.int32)
    count = _k.connected_components_csr(view.base.indptr, view.base.indices,
                                        view.active, labels)
    return labels, int(count)


def biconnected_components(view: Graph | GraphView) -> BlockDecomposition:
    """Decompose the view into blocks with one iterative lowpoint DFS.

    Blocks are emitted in DFS pop order (roots ascending, neighbours
    ascending); isolated vertices appear as degenerate single-vertex blocks.
    """
    view = as_view(view)
    g = view.base
    nb, beptr, beids, bvptr, bverts, cut, _broot, _croots = _k.block_decomposition(
        g.indptr, g.indices, g.eid_of_slot, g.edge_u, g.edge_v, view.active)
    block_of_edge = np.full(g.m, -1, np.int64)
    blocks = []
    for b in range(nb):
        eids = np.sort(beids[beptr[b]:beptr[b + 1]])
        verts = np.sort(bverts[bvptr[b]:bvptr[b + 1]])
        block_of_edge[eids] = b
        blocks.append(Block(vertices=verts.copy(), edge_ids=eids))
    return BlockDecomposition(view=view, blocks=tuple(blocks),
                              cut_vertex=cut.astype(bool),
                              block_of_edge=block_of_edge)


def is_biconnected(view: Graph | GraphView) -> bool:
    """True iff the view is connected, has >= 3 vertices and no cut vertex.

    K2 and K1 report False by convention.
    """
    view = as_view(view)
    verts = view.vertices()
    n_active = verts.shape[0]
    if n_active < 3:
        return False
    g = view.base
    n = g.n
    disc = np.zeros(n, np.int32)
    low = np.empty(n, np.int32)
    parent = np.empty(n, np.int32)
    iterptr = np.empty(n, np.int32)
    vstack = np.empty(n, np.int32)
    mcap = max(view.edge_count(), 1)
    es_u = np.empty(mcap, np.int32)
    es_v = np.empty(mcap, np.int32)
    cutbuf = np.zeros(n, np.uint8)
    bvptr = np.empty(mcap + 2, np.int64)
    bverts = np.empty(2 * mcap + 2, np.int32)
    mark = np.zeros(n, np.uint8)
    nblocks, _nv, visited, ncut = _k.blocks_of_subview(
        g.indptr, g.indices, view.active, verts[0],
        disc, low, parent, iterptr, vstack, es_u, es_v,
        cutbuf, bvptr, bverts, mark)
    return visited == n_active and nblocks == 1 and ncut == 0


def block_cut_forest(decomp: BlockDecomposition) -> BlockCutForest:
    """Forest with one node per block and per cut vertex of the view.

    Node ordering is deterministic: blocks keep their decomposition index,
    cut nodes are keyed by vertex id.
    """
    cut = decomp.cut_vertex
    block_cuts = []
    cut_blocks: dict[int, list[int]] = {}
    for b, block in enumerate(decomp.blocks):
        cuts_here = block.vertices[cut[block.vertices]]
        block_cuts.append(cuts_here.astype(np.int64))
        for v in cuts_here:
            cut_blocks.setdefault(int(v), []).append(b)

    labels, ncomp = connected_components(decomp.view)
    comp_root = np.full(ncomp, -1, np.int64)
    for v in decomp.view.vertices():
        c = labels[v]
        if comp_root[c] < 0:
            comp_root[c] = v
    roots = np.full(ncomp, -1, np.int64)
    for b, block in enumerate(decomp.blocks):
        c = labels[block.vertices[0]]
        if roots[c] < 0 and comp_root[c] in block.vertices:
            roots[c] = b
    return BlockCutForest(
        block_cuts=tuple(block_cuts),
        cut_blocks={v: np.asarray(bs, np.int64) for v, bs in cut_blocks.items()},
        roots=tuple(int(r) for r in roots),
    )


def end_blocks(decomp: BlockDecomposition) -> list[tuple[Block, int]]:
    """Leaf blocks of the block-cut tree, each with its unique cut vertex.

    Requires the view to be connected but not biconnected, with at least
    two blocks; returns >= 2 entries sorted by each block's smallest
    vertex.  Raises :class:`NotApplicableError` otherwise (biconnected,
    disconnected, or single-block views have no end-blocks).
    """
    _labels, ncomp = connected_components(decomp.view)
    if ncomp != 1:
        raise NotApplicableError("view is disconnected")
    if decomp.n_blocks == 1:
        block = decomp.blocks[0]
        if block.n >= 3:
            raise NotApplicableError("view is biconnected")
        raise NotApplicableError("view is a single block; no block-cut tree leaves")
    cut = decomp.cut_vertex
    out = []
    for block in decomp.blocks:
        cuts_here = block.vertices[cut[block.vertices]]
        if cuts_here.shape[0] == 1:
            out.append((block, int(cuts_here[0])))
    out.sort(key=lambda item: int(item[0].vertices[0]))
    return out
