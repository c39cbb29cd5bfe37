"""Seeded graph generators for tests, demos and the benchmark harness.

Every generator is deterministic for a fixed (kind, params, seed) triple.
``random_connected`` draws a uniform labelled spanning tree from a random
code sequence and tops it up with distinct random non-tree edges;
``block_chain`` glues biconnected blocks at shared cut vertices;
``theta`` joins two hubs by three internally disjoint paths.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from . import _kernels as _k
from .errors import BadParamsError
from .graph import Graph, build_graph


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParamsError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise BadParamsError(f"complete needs n >= 0, got {n}")
    return build_graph(n, list(combinations(range(n), 2)))


def split_graph(n: int) -> Graph:
    """Two hubs (0 and 1) adjacent to each other and to n-2 degree-2
    vertices: the complete tripartite graph with parts 1, 1, n-2."""
    if n < 3:
        raise BadParamsError(f"split needs n >= 3, got {n}")
    edges = [(0, 1)]
    for v in range(2, n):
        edges.append((0, v))
        edges.append((1, v))
    return build_graph(n, edges)


def _in_sorted(values: np.ndarray, table: np.ndarray) -> np.ndarray:
    if table.size == 0:
        return np.zeros(values.shape[0], bool)
    idx = np.searchsorted(table, values)
    idx[idx == table.size] = table.size - 1
    return table[idx] == values


def random_connected(n: int, m: int, seed: int = 0) -> Graph:
    """Connected simple graph: a uniform random spanning tree plus m-(n-1)
    distinct random non-tree edges."""
    if n < 1:
        raise BadParamsError(f"random_connected needs n >= 1, got {n}")
    maxm = n * (n - 1) // 2
    if not n - 1 <= m <= maxm:
        raise BadParamsError(f"need n-1 <= m <= {maxm}, got m={m}")
    rng = np.random.default_rng(seed)
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = rng.integers(0, n, size=n - 2, dtype=np.int64)
    eu, ev = _k.prufer_decode(seq, n)
    lo = np.minimum(eu, ev)
    hi = np.maximum(eu, ev)
    tree_keys = np.sort(lo * n + hi)

    need = m - (n - 1)
    chosen: list[np.ndarray] = []
    taken = tree_keys
    while need > 0:
        batch = max(64, int(need * 3 // 2) + 16)
        bu = rng.integers(0, n, size=batch, dtype=np.int64)
        bv = rng.integers(0, n, size=batch, dtype=np.int64)
        ok = bu != bv
        blo = np.minimum(bu[ok], bv[ok])
        bhi = np.maximum(bu[ok], bv[ok])
        keys = blo * n + bhi
        uniq, first = np.unique(keys, return_index=True)
        fresh = ~_in_sorted(uniq, taken)
        uniq = uniq[fresh]
        first = first[fresh]
        # keep arrival order so the draw sequence alone fixes the result
        uniq = uniq[np.argsort(first, kind="stable")]
        take = uniq[:need]
        if take.size:
            chosen.append(take)
            taken = np.sort(np.concatenate((taken, take)))
            need -= take.size
    if chosen:
        keys = np.concatenate(chosen)
        lo = np.concatenate((lo, keys // n))
        hi = np.concatenate((hi, keys % n))
    return build_graph(n, np.column_stack((lo, hi)))


def block_chain(k: int, s: int, seed: int = 0) -> Graph:
    """Chain of k biconnected blocks of s vertices, consecutive blocks glued
    at a shared cut vertex (n = k*(s-1) + 1).

    Each block of s >= 3 vertices is a cycle plus a random set of chords,
    so block shapes vary between cycles, chorded cycles and complete
    graphs; s = 2 gives bridge edges (a path).
    """
    if k < 1:
        raise BadParamsError(f"block_chain needs k >= 1, got {k}")
    if s < 2:
        raise BadParamsError(f"block_chain needs s >= 2, got {s}")
    rng = np.random.default_rng(seed)
    n = k * (s - 1) + 1
    edges: list[tuple[int, int]] = []
    for b in range(k):
        base = b * (s - 1)
        verts = list(range(base, base + s))
        if s == 2:
            edges.append((verts[0], verts[1]))
            continue
        for i in range(s):
            edges.append((verts[i], verts[(i + 1) % s]))
        chords = [(u, v) for u, v in combinations(verts, 2)
                  if abs(u - v) not in (1, s - 1)]
        if chords:
            count = int(rng.integers(0, len(chords) + 1))
            picks = rng.choice(len(chords), size=count, replace=False)
            edges.extend(chords[int(i)] for i in np.sort(picks))
    return build_graph(n, edges)


def theta_graph(p: int, q: int, r: int) -> Graph:
    """Two hubs (0 and 1) joined by three internally disjoint paths with
    p, q and r interior vertices (all >= 1); n = p + q + r + 2."""
    if min(p, q, r) < 1:
        raise BadParamsError("theta needs all three interior counts >= 1")
    edges = []
    nxt = 2
    for length in (p, q, r):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return build_graph(p + q + r + 2, edges)


_GENERATORS = {
    "cycle": (cycle_graph, 1, False),
    "complete": (complete_graph, 1, False),
    "split": (split_graph, 1, False),
    "random_connected": (random_connected, 2, True),
    "block_chain": (block_chain, 2, True),
    "theta": (theta_graph, 3, False),
}


def generate(kind: str, params, seed: int = 0) -> Graph:
    """Dispatch to a generator by name; ``params`` is its positional integer
    argument list (seed excluded)."""
    if kind not in _GENERATORS:
        known = ", ".join(sorted(_GENERATORS))
        raise BadParamsError(f"unknown generator {kind!r} (known: {known})")
    func, arity, seeded = _GENERATORS[kind]
    params = tuple(int(p) for p in params)
    if len(params) != arity:
        raise BadParamsError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    if seeded:
        return func(*params, seed=seed)
    return func(*params)
