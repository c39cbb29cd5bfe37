"""Ground-truth brute-force oracles and the colouring verifier.

Everything here is deliberately independent of the fast kernels: the
verifier is vectorised numpy over the edge arrays, the colourability search
is plain backtracking over adjacency bitmasks, and the connectivity oracles
are list-based flood fills.  Size guards are hard errors, never silent
truncation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GraphTooLargeError
from .graph import Graph

MAX_COLOURING_N = 12
MAX_QUADRATIC_N = 2048


@dataclass(frozen=True)
class Violation:
    pass


@dataclass(frozen=True)
class UncolouredVertex(Violation):
    vertex: int


@dataclass(frozen=True)
class MonochromaticEdge(Violation):
    u: int
    v: int


@dataclass(frozen=True)
class BoundExceeded(Violation):
    used: int
    bound: int


def verify_colouring(g: Graph, colouring, bound: int | None = None) -> list[Violation]:
    """All violations of completeness, properness and (optionally) a colour
    budget; the empty list certifies a proper complete colouring within the
    bound.  Uncoloured vertices come first (ascending), then monochromatic
    edges in canonical edge order, then a bound violation if any."""
    col = colouring.colours if hasattr(colouring, "colours") else np.asarray(colouring, np.int64)
    out: list[Violation] = []
    uncoloured = np.flatnonzero(col <= 0)
    out.extend(UncolouredVertex(int(v)) for v in uncoloured)
    if g.m:
        cu = col[g.edge_u]
        cv = col[g.edge_v]
        mono = np.flatnonzero((cu == cv) & (cu > 0))
        out.extend(MonochromaticEdge(int(g.edge_u[i]), int(g.edge_v[i])) for i in mono)
    used = int(col.max(initial=0))
    if bound is not None and used > bound:
        out.append(BoundExceeded(used, int(bound)))
    return out


def _adjacency_bitmasks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for u, v in zip(g.edge_u.tolist(), g.edge_v.tolist()):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def is_k_colourable_bruteforce(g: Graph, k: int, symmetry_pruning: bool = True) -> bool:
    """Exhaustive test for a proper colouring with at most ``k`` colours.

    Backtracks over vertices in ascending id; with ``symmetry_pruning``
    vertex i may only take colours 1..min(i+1, k), which never changes the
    decision.  Guarded to n <= 12.
    """
    if g.n > MAX_COLOURING_N:
        raise GraphTooLargeError(f"n={g.n} exceeds the n<={MAX_COLOURING_N} oracle guard")
    if k < 0:
        return g.n == 0
    if g.n == 0:
        return True
    if k == 0:
        return False
    adj = _adjacency_bitmasks(g)
    n = g.n
    colour_mask = [0] * (k + 1)

    def bt(i: int) -> bool:
        if i == n:
            return True
        bit = 1 << i
        av = adj[i]
        top = min(i + 1, k) if symmetry_pruning else k
        for c in range(1, top + 1):
            if colour_mask[c] & av:
                continue
            colour_mask[c] |= bit
            if bt(i + 1):
                return True
            colour_mask[c] &= ~bit
        return False

    return bt(0)


def chromatic_number_bruteforce(g: Graph) -> int:
    """Minimum k with a proper k-colouring; 0 for the empty graph."""
    if g.n > MAX_COLOURING_N:
        raise GraphTooLargeError(f"n={g.n} exceeds the n<={MAX_COLOURING_N} oracle guard")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    for k in range(2, g.n + 1):
        if is_k_colourable_bruteforce(g, k):
            return k
    return g.n


def _adjacency_lists(g: Graph) -> list[list[int]]:
    return [g.neighbours(v).tolist() for v in range(g.n)]


def _component_count(adj: list[list[int]], alive: list[bool]) -> int:
    n = len(adj)
    seen = [False] * n
    count = 0
    for r in range(n):
        if not alive[r] or seen[r]:
            continue
        count += 1
        seen[r] = True
        stack = [r]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if alive[w] and not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def connected_components_bruteforce(g: Graph, removed=()) -> list[frozenset]:
    """Vertex sets of the components of the graph minus ``removed``."""
    adj = _adjacency_lists(g)
    alive = [True] * g.n
    for v in removed:
        alive[v] = False
    seen = [False] * g.n
    comps = []
    for r in range(g.n):
        if not alive[r] or seen[r]:
            continue
        comp = []
        seen[r] = True
        stack = [r]
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if alive[w] and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected_bruteforce(g: Graph, removed=()) -> bool:
    return len(connected_components_bruteforce(g, removed)) <= 1


def cut_vertices_bruteforce(g: Graph) -> set[int]:
    """Exactly the vertices whose removal increases the component count.

    Quadratic: one flood fill per vertex.  Guarded to n <= 2048.
    """
    if g.n > MAX_QUADRATIC_N:
        raise GraphTooLargeError(f"n={g.n} exceeds the n<={MAX_QUADRATIC_N} oracle guard")
    adj = _adjacency_lists(g)
    alive = [True] * g.n
    base = _component_count(adj, alive)
    cuts = set()
    for v in range(g.n):
        alive[v] = False
        if _component_count(adj, alive) > base:
            cuts.add(v)
        alive[v] = True
    return cuts


def block_edge_partition_bruteforce(g: Graph):
    """Blocks as (vertex frozenset, edge frozenset) pairs, by brute force.

    Two edges sharing an endpoint v lie in the same block exactly when
    their other endpoints stay connected without v; the partition is the
    transitive closure of that relation (union-find over edges).  Isolated
    vertices are reported as degenerate single-vertex blocks with no edges,
    matching the DFS decomposition.  Guarded to n <= 2048.
    """
    if g.n > MAX_QUADRATIC_N:
        raise GraphTooLargeError(f"n={g.n} exceeds the n<={MAX_QUADRATIC_N} oracle guard")
    adj = _adjacency_lists(g)
    edges = [(int(u), int(v)) for u, v in zip(g.edge_u, g.edge_v)]
    eid = {e: i for i, e in enumerate(edges)}

    parent = list(range(g.m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    def canon(u: int, v: int):
        return (u, v) if u < v else (v, u)

    alive = [True] * g.n
    for v in range(g.n):
        if not adj[v]:
            continue
        alive[v] = False
        comp_of = {}
        seen = [False] * g.n
        cid = 0
        for r in adj[v]:
            if seen[r] or not alive[r]:
                continue
            seen[r] = True
            stack = [r]
            while stack:
                x = stack.pop()
                comp_of[x] = cid
                for w in adj[x]:
                    if alive[w] and not seen[w]:
                        seen[w] = True
                        stack.append(w)
            cid += 1
        alive[v] = True
        first_by_comp = {}
        for u in adj[v]:
            c = comp_of[u]
            if c in first_by_comp:
                union(eid[canon(v, first_by_comp[c])], eid[canon(v, u)])
            else:
                first_by_comp[c] = u

    groups: dict[int, list[int]] = {}
    for i in range(g.m):
        groups.setdefault(find(i), []).append(i)
    blocks = []
    for ids in groups.values():
        vs = set()
        for i in ids:
            vs.add(edges[i][0])
            vs.add(edges[i][1])
        blocks.append((frozenset(vs), frozenset(edges[i] for i in ids)))
    degs = np.diff(g.indptr)
    for v in np.flatnonzero(degs == 0):
        blocks.append((frozenset({int(v)}), frozenset()))
    blocks.sort(key=lambda blk: sorted(blk[0]))
    return blocks
