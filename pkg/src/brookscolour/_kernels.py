"""Compiled kernels behind the graph, connectivity and colouring layers.

Everything here operates on CSR adjacency (``indptr``/``indices``, neighbour
lists sorted ascending) plus an ``active`` byte mask selecting the vertices of
the current induced subgraph.  Kernels that run once per block inside the
colouring pipeline take caller-owned scratch arrays and restore every entry
they touch, so a whole pipeline run stays O(|V|+|E|) no matter how many
blocks the input decomposes into.

Vertex and edge ids are int32 (graphs are capped at 2^31-1 directed edge
slots), indptr is int64, masks are uint8; the narrow ids keep the working
set small enough that million-vertex traversals stay memory-friendly.
Traversals explore neighbours in ascending id order, which makes every
result deterministic.
"""

import numpy as np
from numba import njit

KIND_COMPLETE = 0
KIND_EVEN_CYCLE = 1
KIND_ODD_CYCLE = 2
KIND_SPLIT = 3
KIND_GENERAL = 4


@njit(cache=True)
def connected_components_csr(indptr, indices, active, labels):
    """Label active vertices with component ids 0..count-1; returns count.

    ``labels`` must come in filled with -1; inactive vertices keep -1.
    Ids are assigned in order of each component's smallest vertex.
    """
    n = indptr.shape[0] - 1
    stack = np.empty(n if n > 0 else 1, np.int32)
    count = 0
    for r in range(n):
        if active[r] == 0 or labels[r] >= 0:
            continue
        labels[r] = count
        top = 0
        stack[0] = r
        while top >= 0:
            v = stack[top]
            top -= 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if active[w] != 0 and labels[w] < 0:
                    labels[w] = count
                    top += 1
                    stack[top] = w
        count += 1
    return count


@njit(cache=True)
def degree_in_view(indptr, indices, active, v):
    d = 0
    for k in range(indptr[v], indptr[v + 1]):
        if active[indices[k]] != 0:
            d += 1
    return d


@njit(cache=True)
def max_degree_csr(indptr, indices, active):
    n = indptr.shape[0] - 1
    best = 0
    for v in range(n):
        if active[v] == 0:
            continue
        d = 0
        for k in range(indptr[v], indptr[v + 1]):
            if active[indices[k]] != 0:
                d += 1
        if d > best:
            best = d
    return best


@njit(cache=True)
def degrees_in_view(indptr, indices, active, out):
    """Per-vertex in-view degree into ``out`` (inactive vertices get 0)."""
    n = indptr.shape[0] - 1
    for v in range(n):
        d = 0
        if active[v] != 0:
            for k in range(indptr[v], indptr[v + 1]):
                if active[indices[k]] != 0:
                    d += 1
        out[v] = d


@njit(cache=True)
def has_edge_csr(indptr, indices, u, v):
    lo = indptr[u]
    hi = indptr[u + 1]
    while lo < hi:
        mid = (lo + hi) // 2
        if indices[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo < indptr[u + 1] and indices[lo] == v


@njit(cache=True)
def distance_two(indptr, indices, active, x, mark):
    """First vertex at distance exactly 2 from ``x`` in the active subgraph.

    Returns ``(b, v1)`` where ``v1`` is the lowest-id common neighbour of
    ``x`` and ``b``, or ``(-1, -1)`` if nothing lies at distance 2.  The scan
    walks x's neighbours ascending, then their neighbours ascending.
    ``mark`` is all-zero scratch, restored before returning.
    """
    mark[x] = 1
    for k in range(indptr[x], indptr[x + 1]):
        w = indices[k]
        if active[w] != 0:
            mark[w] = 1
    b = np.int32(-1)
    v1 = np.int32(-1)
    for k in range(indptr[x], indptr[x + 1]):
        u = indices[k]
        if active[u] == 0:
            continue
        for k2 in range(indptr[u], indptr[u + 1]):
            w = indices[k2]
            if active[w] != 0 and mark[w] == 0:
                b = w
                v1 = u
                break
        if b >= 0:
            break
    if b >= 0:
        # lowest-id common neighbour wins ties
        for k in range(indptr[x], indptr[x + 1]):
            u = indices[k]
            if active[u] != 0 and has_edge_csr(indptr, indices, u, b):
                v1 = u
                break
    mark[x] = 0
    for k in range(indptr[x], indptr[x + 1]):
        mark[indices[k]] = 0
    return b, v1


@njit(cache=True)
def dfs_preorder(indptr, indices, active, root, order, seen, iterptr, vstack):
    """Preorder of the active subgraph reachable from ``root``.

    Writes vertices into ``order`` and returns how many were reached.  The
    caller owns ``seen`` (all-zero on entry) and clears it afterwards via the
    returned prefix of ``order``; ``iterptr``/``vstack`` need no cleanup.
    """
    cnt = 0
    seen[root] = 1
    order[cnt] = root
    cnt += 1
    iterptr[root] = indptr[root]
    top = 0
    vstack[0] = root
    while top >= 0:
        v = vstack[top]
        k = iterptr[v]
        moved = False
        while k < indptr[v + 1]:
            w = indices[k]
            k += 1
            if active[w] != 0 and seen[w] == 0:
                iterptr[v] = k
                seen[w] = 1
                order[cnt] = w
                cnt += 1
                iterptr[w] = indptr[w]
                top += 1
                vstack[top] = w
                moved = True
                break
        if not moved:
            iterptr[v] = k
            top -= 1
    return cnt


@njit(cache=True)
def reverse_greedy(indptr, indices, active, order, count, col, used):
    """Colour order[count-1], ..., order[0] with the minimum free colour.

    ``col`` holds current colours (0 = uncoloured) and is updated in place;
    only active neighbours are consulted.  ``used`` is all-zero scratch of
    size >= n + 2, restored after every vertex.  Returns the maximum colour
    assigned here.
    """
    best = 0
    for i in range(count - 1, -1, -1):
        v = order[i]
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if active[w] != 0 and col[w] > 0:
                used[col[w]] = 1
        c = 1
        while used[c] != 0:
            c += 1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if active[w] != 0 and col[w] > 0:
                used[col[w]] = 0
        col[v] = c
        if c > best:
            best = c
    return best


@njit(cache=True)
def greedy_colour_csr(indptr, indices, order):
    """First-fit colouring of the whole graph in the given vertex order."""
    n = indptr.shape[0] - 1
    col = np.zeros(n, np.int32)
    used = np.zeros(n + 2, np.uint8)
    for i in range(n):
        v = order[i]
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if col[w] > 0:
                used[col[w]] = 1
        c = 1
        while used[c] != 0:
            c += 1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if col[w] > 0:
                used[col[w]] = 0
        col[v] = c
    return col


@njit(cache=True)
def block_decomposition(indptr, indices, eid_of_slot, edges_u, edges_v, active):
    """Blocks, cut vertices and block vertex lists of the active subgraph.

    One iterative lowpoint DFS per root (roots ascending, neighbours
    ascending).  Blocks are emitted in pop order; every isolated active
    vertex becomes a single-vertex block with no edges.  Returns
    ``(nb, beptr, beids, bvptr, bverts, cut, broot, croots)`` where
    ``beptr``/``beids`` list each block's edge ids, ``bvptr``/``bverts`` its
    vertices in first-seen order, ``broot`` the DFS root of each block's
    component and ``croots`` the DFS roots in discovery order (one per
    component, each the smallest vertex of its component).
    """
    n = indptr.shape[0] - 1
    m = edges_u.shape[0]
    cut = np.zeros(n, np.uint8)
    disc = np.zeros(n, np.int32)
    low = np.empty(n if n > 0 else 1, np.int32)
    parent = np.empty(n if n > 0 else 1, np.int32)
    iterptr = np.empty(n if n > 0 else 1, np.int32)
    tree_eid = np.empty(n if n > 0 else 1, np.int32)
    vstack = np.empty(n if n > 0 else 1, np.int32)
    es = np.empty(m if m > 0 else 1, np.int32)
    beptr = np.empty(n + m + 2, np.int64)
    beids = np.empty(m if m > 0 else 1, np.int32)
    biso = np.empty(n + m + 2, np.int32)
    broot = np.empty(n + m + 2, np.int32)
    croots = np.empty(n if n > 0 else 1, np.int32)
    beptr[0] = 0
    nb = 0
    ne = 0
    ncomp = 0
    t = 0
    for r in range(n):
        if active[r] == 0 or disc[r] != 0:
            continue
        croots[ncomp] = r
        ncomp += 1
        has_nbr = False
        for k in range(indptr[r], indptr[r + 1]):
            if active[indices[k]] != 0:
                has_nbr = True
                break
        if not has_nbr:
            biso[nb] = r
            broot[nb] = r
            beptr[nb + 1] = ne
            nb += 1
            t += 1
            disc[r] = t
            continue
        root = r
        root_children = 0
        t += 1
        disc[r] = t
        low[r] = t
        parent[r] = -1
        iterptr[r] = indptr[r]
        top = 0
        vstack[0] = r
        estop = -1
        while top >= 0:
            v = vstack[top]
            k = iterptr[v]
            moved = False
            while k < indptr[v + 1]:
                w = indices[k]
                if active[w] == 0 or w == parent[v]:
                    k += 1
                    continue
                if disc[w] == 0:
                    eid = eid_of_slot[k]
                    estop += 1
                    es[estop] = eid
                    if v == root:
                        root_children += 1
                    parent[w] = v
                    t += 1
                    disc[w] = t
                    low[w] = t
                    tree_eid[w] = eid
                    iterptr[w] = indptr[w]
                    iterptr[v] = k + 1
                    top += 1
                    vstack[top] = w
                    moved = True
                    break
                elif disc[w] < disc[v]:
                    eid = eid_of_slot[k]
                    estop += 1
                    es[estop] = eid
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                k += 1
            if moved:
                continue
            iterptr[v] = k
            top -= 1
            u = parent[v]
            if u != -1:
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    te = tree_eid[v]
                    while True:
                        eid = es[estop]
                        estop -= 1
                        beids[ne] = eid
                        ne += 1
                        if eid == te:
                            break
                    biso[nb] = -1
                    broot[nb] = root
                    beptr[nb + 1] = ne
                    nb += 1
                    if u != root or root_children > 1:
                        cut[u] = 1
    # block vertex lists, first-seen order along each block's edge list
    bvptr = np.empty(nb + 1, np.int64)
    bverts = np.empty(2 * m + nb + 1, np.int32)
    mark = np.zeros(n if n > 0 else 1, np.uint8)
    nv = 0
    bvptr[0] = 0
    for b in range(nb):
        start_nv = nv
        if biso[b] >= 0:
            bverts[nv] = biso[b]
            nv += 1
        else:
            for kk in range(beptr[b], beptr[b + 1]):
                eid = beids[kk]
                u = edges_u[eid]
                v = edges_v[eid]
                if mark[u] == 0:
                    mark[u] = 1
                    bverts[nv] = u
                    nv += 1
                if mark[v] == 0:
                    mark[v] = 1
                    bverts[nv] = v
                    nv += 1
            for j in range(start_nv, nv):
                mark[bverts[j]] = 0
        bvptr[b + 1] = nv
    return (nb, beptr[: nb + 1], beids[:ne], bvptr, bverts[:nv], cut,
            broot[:nb], croots[:ncomp])


@njit(cache=True)
def blocks_fused(indptr, indices, active):
    """Pipeline variant of the decomposition: no edge ids, degrees fused in.

    Identical traversal and block order to :func:`block_decomposition`, but
    the edge stack holds endpoint pairs and each block's per-vertex degrees
    are accumulated while its edges pop, so the colouring pipeline never has
    to re-scan edges.  Returns ``(nb, bvptr, bverts, bdeg, bm, cut, broot,
    croots)`` with ``bdeg`` aligned to ``bverts`` and ``bm`` the per-block
    edge count.
    """
    n = indptr.shape[0] - 1
    m2 = indices.shape[0]
    m = m2 // 2
    cut = np.zeros(n, np.uint8)
    disc = np.zeros(n, np.int32)
    low = np.empty(n if n > 0 else 1, np.int32)
    parent = np.empty(n if n > 0 else 1, np.int32)
    iterptr = np.empty(n if n > 0 else 1, np.int32)
    vstack = np.empty(n if n > 0 else 1, np.int32)
    es_u = np.empty(m if m > 0 else 1, np.int32)
    es_v = np.empty(m if m > 0 else 1, np.int32)
    deg = np.zeros(n if n > 0 else 1, np.int32)
    mark = np.zeros(n if n > 0 else 1, np.uint8)
    nbcap = n + m + 2
    bvptr = np.empty(nbcap, np.int64)
    bm = np.empty(nbcap, np.int64)
    bverts = np.empty(2 * m + n + 1, np.int32)
    bdeg = np.empty(2 * m + n + 1, np.int32)
    broot = np.empty(nbcap, np.int32)
    croots = np.empty(n if n > 0 else 1, np.int32)
    bvptr[0] = 0
    nb = 0
    nv = 0
    ncomp = 0
    t = 0
    for r in range(n):
        if active[r] == 0 or disc[r] != 0:
            continue
        croots[ncomp] = r
        ncomp += 1
        has_nbr = False
        for k in range(indptr[r], indptr[r + 1]):
            if active[indices[k]] != 0:
                has_nbr = True
                break
        if not has_nbr:
            bverts[nv] = r
            bdeg[nv] = 0
            nv += 1
            bm[nb] = 0
            broot[nb] = r
            bvptr[nb + 1] = nv
            nb += 1
            t += 1
            disc[r] = t
            continue
        root = r
        root_children = 0
        t += 1
        disc[r] = t
        low[r] = t
        parent[r] = -1
        iterptr[r] = indptr[r]
        top = 0
        vstack[0] = r
        estop = -1
        while top >= 0:
            v = vstack[top]
            k = iterptr[v]
            moved = False
            while k < indptr[v + 1]:
                w = indices[k]
                if active[w] == 0 or w == parent[v]:
                    k += 1
                    continue
                if disc[w] == 0:
                    estop += 1
                    es_u[estop] = v
                    es_v[estop] = w
                    if v == root:
                        root_children += 1
                    parent[w] = v
                    t += 1
                    disc[w] = t
                    low[w] = t
                    iterptr[w] = indptr[w]
                    iterptr[v] = k + 1
                    top += 1
                    vstack[top] = w
                    moved = True
                    break
                elif disc[w] < disc[v]:
                    estop += 1
                    es_u[estop] = v
                    es_v[estop] = w
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                k += 1
            if moved:
                continue
            iterptr[v] = k
            top -= 1
            u = parent[v]
            if u != -1:
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    start_nv = nv
                    ecount = 0
                    while True:
                        eu = es_u[estop]
                        ev = es_v[estop]
                        estop -= 1
                        ecount += 1
                        deg[eu] += 1
                        deg[ev] += 1
                        if mark[eu] == 0:
                            mark[eu] = 1
                            bverts[nv] = eu
                            nv += 1
                        if mark[ev] == 0:
                            mark[ev] = 1
                            bverts[nv] = ev
                            nv += 1
                        if eu == u and ev == v:
                            break
                    for j in range(start_nv, nv):
                        bv = bverts[j]
                        bdeg[j] = deg[bv]
                        deg[bv] = 0
                        mark[bv] = 0
                    bm[nb] = ecount
                    broot[nb] = root
                    bvptr[nb + 1] = nv
                    nb += 1
                    if u != root or root_children > 1:
                        cut[u] = 1
    return (nb, bvptr[: nb + 1], bverts[:nv], bdeg[:nv], bm[:nb], cut,
            broot[:nb], croots[:ncomp])


@njit(cache=True)
def blocks_of_subview(indptr, indices, active, root,
                      disc, low, parent, iterptr, vstack,
                      es_u, es_v, cut_out, bvptr_out, bverts_out, mark):
    """Single-root block decomposition over ``active``; cleans up after itself.

    Returns ``(nb, nverts, visited, ncut)``.  Block vertex lists land in the
    caller-owned ``bvptr_out``/``bverts_out``; cut flags in ``cut_out`` (the
    caller clears those via the returned lists).  ``disc`` and ``mark`` are
    restored before returning, so repeated calls stay linear overall.
    """
    t = 1
    disc[root] = 1
    low[root] = 1
    parent[root] = -1
    iterptr[root] = indptr[root]
    vstack[0] = root
    top = 0
    estop = -1
    nb = 0
    nv = 0
    visited = 1
    ncut = 0
    root_children = 0
    bvptr_out[0] = 0
    while top >= 0:
        v = vstack[top]
        k = iterptr[v]
        moved = False
        while k < indptr[v + 1]:
            w = indices[k]
            if active[w] == 0 or w == parent[v]:
                k += 1
                continue
            if disc[w] == 0:
                estop += 1
                es_u[estop] = v
                es_v[estop] = w
                if v == root:
                    root_children += 1
                parent[w] = v
                t += 1
                disc[w] = t
                low[w] = t
                iterptr[w] = indptr[w]
                iterptr[v] = k + 1
                top += 1
                vstack[top] = w
                visited += 1
                moved = True
                break
            elif disc[w] < disc[v]:
                estop += 1
                es_u[estop] = v
                es_v[estop] = w
                if disc[w] < low[v]:
                    low[v] = disc[w]
            k += 1
        if moved:
            continue
        iterptr[v] = k
        top -= 1
        u = parent[v]
        if u != -1:
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                start_nv = nv
                while True:
                    eu = es_u[estop]
                    ev = es_v[estop]
                    estop -= 1
                    if mark[eu] == 0:
                        mark[eu] = 1
                        bverts_out[nv] = eu
                        nv += 1
                    if mark[ev] == 0:
                        mark[ev] = 1
                        bverts_out[nv] = ev
                        nv += 1
                    if eu == u and ev == v:
                        break
                for j in range(start_nv, nv):
                    mark[bverts_out[j]] = 0
                bvptr_out[nb + 1] = nv
                nb += 1
                if (u != root or root_children > 1) and cut_out[u] == 0:
                    cut_out[u] = 1
                    ncut += 1
    for b in range(nb):
        for j in range(bvptr_out[b], bvptr_out[b + 1]):
            disc[bverts_out[j]] = 0
    disc[root] = 0
    return nb, nv, visited, ncut


@njit(cache=True)
def find_ab_core(indptr, indices, inb, vs, mb, degc, kind, hub_lo,
                 disc, low, parent, iterptr, vstack, es_u, es_v, mark, cutbuf):
    """Distance-2 pair (a, b) plus common neighbour v1 for a single block.

    ``inb`` is the block's membership mask, ``vs`` its vertex list, ``mb``
    its edge count and ``degc`` the in-block degrees aligned with ``vs``.
    ``kind`` is KIND_SPLIT or KIND_GENERAL.  Every scratch array is restored
    on return.

    For the two-hub degree-2 shape the pair is the two lowest-id degree-2
    vertices and the lower hub.  Otherwise x is the lowest-id vertex of
    middling degree; if the block stays biconnected without x, a = x and b is
    the first vertex at distance 2.  Failing that, a and b are x's lowest-id
    neighbours inside two leaf blocks of the decomposition without x (cut
    vertices excluded), and v1 = x.
    """
    nB = vs.shape[0]
    if kind == KIND_SPLIT:
        a = np.int32(-1)
        b = np.int32(-1)
        for i in range(nB):
            v = vs[i]
            if degc[i] != 2:
                continue
            if a < 0 or v < a:
                b = a
                a = v
            elif b < 0 or v < b:
                b = v
        return a, b, np.int32(hub_lo)
    x = np.int32(-1)
    for i in range(nB):
        v = vs[i]
        if degc[i] >= 3 and degc[i] <= nB - 2 and (x < 0 or v < x):
            x = v
    root = np.int32(-1)
    for i in range(nB):
        v = vs[i]
        if v != x and (root < 0 or v < root):
            root = v
    inb[x] = 0
    bvptr2 = np.empty(mb + 2, np.int64)
    bverts2 = np.empty(2 * mb + 2, np.int32)
    nb2, nv2, visited, ncut = blocks_of_subview(
        indptr, indices, inb, root, disc, low, parent, iterptr, vstack,
        es_u, es_v, cutbuf, bvptr2, bverts2, mark)
    if visited == nB - 1 and nb2 == 1 and ncut == 0:
        inb[x] = 1
        b, v1 = distance_two(indptr, indices, inb, x, mark)
        return x, b, v1
    # two leaf blocks with the smallest minimum vertex
    b1 = -1
    b2 = -1
    key1 = np.int32(-1)
    key2 = np.int32(-1)
    z1 = np.int32(-1)
    z2 = np.int32(-1)
    for sb in range(nb2):
        ccount = 0
        z = np.int32(-1)
        mn = np.int32(-1)
        for j in range(bvptr2[sb], bvptr2[sb + 1]):
            v = bverts2[j]
            if cutbuf[v] != 0:
                ccount += 1
                z = v
            if mn < 0 or v < mn:
                mn = v
        if ccount != 1:
            continue
        if b1 < 0 or mn < key1:
            b2 = b1
            key2 = key1
            z2 = z1
            b1 = sb
            key1 = mn
            z1 = z
        elif b2 < 0 or mn < key2:
            b2 = sb
            key2 = mn
            z2 = z
    a = np.int32(-1)
    for j in range(bvptr2[b1], bvptr2[b1 + 1]):
        mark[bverts2[j]] = 1
    for k in range(indptr[x], indptr[x + 1]):
        w = indices[k]
        if mark[w] != 0 and w != z1:
            a = w
            break
    for j in range(bvptr2[b1], bvptr2[b1 + 1]):
        mark[bverts2[j]] = 0
    b = np.int32(-1)
    for j in range(bvptr2[b2], bvptr2[b2 + 1]):
        mark[bverts2[j]] = 1
    for k in range(indptr[x], indptr[x + 1]):
        w = indices[k]
        if mark[w] != 0 and w != z2:
            b = w
            break
    for j in range(bvptr2[b2], bvptr2[b2 + 1]):
        mark[bverts2[j]] = 0
    for j in range(nv2):
        cutbuf[bverts2[j]] = 0
    inb[x] = 1
    return a, b, x


@njit(cache=True)
def sequential_colour_block(indptr, indices, inb, a, b, v1,
                            col, order, seen, iterptr, vstack, used):
    """Colour one block: a and b get colour 1, the rest reverse-greedy.

    The remaining vertices are ordered by DFS preorder of the block without
    {a, b} rooted at v1, then coloured last-to-first with the minimum free
    colour among already-coloured in-block neighbours.  Returns the number
    of ordered vertices (block size minus two when the pair is valid).
    """
    col[a] = 1
    col[b] = 1
    inb[a] = 0
    inb[b] = 0
    cnt = dfs_preorder(indptr, indices, inb, v1, order, seen, iterptr, vstack)
    inb[a] = 1
    inb[b] = 1
    reverse_greedy(indptr, indices, inb, order, cnt, col, used)
    for i in range(cnt):
        seen[order[i]] = 0
    return cnt


@njit(cache=True)
def colour_cycle_block(indptr, indices, inb, vs, col):
    """Walk a cycle block from its smallest vertex, alternating 1 and 2;
    the final vertex of an odd cycle is patched to 3."""
    start = vs[0]
    for i in range(vs.shape[0]):
        if vs[i] < start:
            start = vs[i]
    nxt = np.int32(-1)
    for k in range(indptr[start], indptr[start + 1]):
        w = indices[k]
        if inb[w] != 0:
            nxt = w
            break
    col[start] = 1
    prev = start
    cur = nxt
    i = 1
    while cur != start:
        col[cur] = 1 if i % 2 == 0 else 2
        nxt2 = np.int32(-1)
        for k in range(indptr[cur], indptr[cur + 1]):
            w = indices[k]
            if inb[w] != 0 and w != prev:
                nxt2 = w
                break
        prev = cur
        cur = nxt2
        i += 1
    if vs.shape[0] % 2 == 1:
        col[prev] = 3


@njit(cache=True)
def brooks_pipeline(indptr, indices):
    """Whole-graph colouring: decompose into blocks, colour each block by
    shape, then merge along the block-cut forest with one colour swap per
    non-root block.  Returns the per-vertex colour array plus the number of
    connected components."""
    n = indptr.shape[0] - 1
    colour = np.zeros(n, np.int32)
    if n == 0:
        return colour, 0
    m = indices.shape[0] // 2
    active = np.ones(n, np.uint8)
    nb, bvptr, bverts, bdeg, bm, cut, broot, croots = blocks_fused(
        indptr, indices, active)
    lcol = np.zeros(bverts.shape[0] if bverts.shape[0] > 0 else 1, np.int32)
    inb = np.zeros(n, np.uint8)
    col = np.zeros(n, np.int32)
    seen = np.zeros(n, np.uint8)
    mark = np.zeros(n, np.uint8)
    cutbuf = np.zeros(n, np.uint8)
    used = np.zeros(n + 2, np.uint8)
    order = np.empty(n, np.int32)
    iterptr = np.empty(n, np.int32)
    vstack = np.empty(n, np.int32)
    disc = np.zeros(n, np.int32)
    low = np.empty(n, np.int32)
    parent = np.empty(n, np.int32)
    mguard = m if m > 0 else 1
    es_u = np.empty(mguard, np.int32)
    es_v = np.empty(mguard, np.int32)

    for bi in range(nb):
        s = bvptr[bi]
        e = bvptr[bi + 1]
        nB = e - s
        if nB == 1:
            lcol[s] = 1
            continue
        mB = bm[bi]
        all2 = True
        full = 0
        okdeg = True
        hub_lo = np.int32(-1)
        for j in range(s, e):
            d = bdeg[j]
            inb[bverts[j]] = 1
            if d != 2:
                all2 = False
                if d != nB - 1:
                    okdeg = False
            if d == nB - 1:
                full += 1
                if hub_lo < 0 or bverts[j] < hub_lo:
                    hub_lo = bverts[j]
        if 2 * mB == nB * (nB - 1):
            kind = KIND_COMPLETE
        elif all2:
            kind = KIND_EVEN_CYCLE if nB % 2 == 0 else KIND_ODD_CYCLE
        elif okdeg and full == 2 and nB >= 4:
            kind = KIND_SPLIT
        else:
            kind = KIND_GENERAL
        if kind == KIND_COMPLETE:
            c = 0
            for j in range(s, e):
                c += 1
                col[bverts[j]] = c
        elif kind == KIND_EVEN_CYCLE or kind == KIND_ODD_CYCLE:
            colour_cycle_block(indptr, indices, inb, bverts[s:e], col)
        else:
            a, b, v1 = find_ab_core(indptr, indices, inb, bverts[s:e], mB,
                                    bdeg[s:e], kind, hub_lo, disc, low, parent,
                                    iterptr, vstack, es_u, es_v, mark, cutbuf)
            sequential_colour_block(indptr, indices, inb, a, b, v1,
                                    col, order, seen, iterptr, vstack, used)
        for j in range(s, e):
            v = bverts[j]
            lcol[j] = col[v]
            col[v] = 0
            inb[v] = 0

    # merge: copy each tree's root block, swap (alpha beta) in every other
    ncomp = croots.shape[0]
    rmap = np.full(n, -1, np.int32)
    for c in range(ncomp):
        rmap[croots[c]] = c
    root_block = np.full(ncomp if ncomp > 0 else 1, -1, np.int64)
    for bi in range(nb):
        c = rmap[broot[bi]]
        if root_block[c] >= 0:
            continue
        rv = croots[c]
        for j in range(bvptr[bi], bvptr[bi + 1]):
            if bverts[j] == rv:
                root_block[c] = bi
                break
    cdeg = np.zeros(n + 1, np.int64)
    for bi in range(nb):
        for j in range(bvptr[bi], bvptr[bi + 1]):
            v = bverts[j]
            if cut[v] != 0:
                cdeg[v + 1] += 1
    cptr = np.empty(n + 1, np.int64)
    cptr[0] = 0
    for v in range(n):
        cptr[v + 1] = cptr[v] + cdeg[v + 1]
    fill = cptr[:n].copy()
    total = cptr[n]
    cblocks = np.empty(total if total > 0 else 1, np.int32)
    for bi in range(nb):
        for j in range(bvptr[bi], bvptr[bi + 1]):
            v = bverts[j]
            if cut[v] != 0:
                cblocks[fill[v]] = bi
                fill[v] += 1
    visitedb = np.zeros(nb if nb > 0 else 1, np.uint8)
    bstack = np.empty(nb if nb > 0 else 1, np.int32)
    entry = np.empty(nb if nb > 0 else 1, np.int32)
    for c in range(ncomp):
        rb = root_block[c]
        top = 0
        bstack[0] = rb
        entry[0] = -1
        visitedb[rb] = 1
        while top >= 0:
            bi = bstack[top]
            ce = entry[top]
            top -= 1
            s = bvptr[bi]
            e = bvptr[bi + 1]
            if ce < 0:
                for j in range(s, e):
                    colour[bverts[j]] = lcol[j]
            else:
                beta = np.int32(0)
                for j in range(s, e):
                    if bverts[j] == ce:
                        beta = lcol[j]
                        break
                alpha = colour[ce]
                for j in range(s, e):
                    cc = lcol[j]
                    if cc == beta:
                        cc = alpha
                    elif cc == alpha:
                        cc = beta
                    colour[bverts[j]] = cc
            for j in range(s, e):
                v = bverts[j]
                if cut[v] != 0:
                    for t2 in range(cptr[v], cptr[v + 1]):
                        b2 = cblocks[t2]
                        if visitedb[b2] == 0:
                            visitedb[b2] = 1
                            top += 1
                            bstack[top] = b2
                            entry[top] = v
    return colour, ncomp


@njit(cache=True)
def prufer_decode(seq, n):
    """Edge arrays of the labelled tree encoded by a length n-2 sequence."""
    deg = np.ones(n, np.int64)
    for i in range(seq.shape[0]):
        deg[seq[i]] += 1
    nedges = n - 1 if n >= 2 else 0
    eu = np.empty(nedges if nedges > 0 else 1, np.int64)
    ev = np.empty(nedges if nedges > 0 else 1, np.int64)
    ptr = 0
    leaf = np.int64(-1)
    for i in range(seq.shape[0]):
        if leaf < 0:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        v = seq[i]
        eu[i] = leaf
        ev[i] = v
        deg[leaf] -= 1
        deg[v] -= 1
        if deg[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
    if n >= 2:
        a = np.int64(-1)
        for v in range(n):
            if deg[v] == 1:
                if a < 0:
                    a = v
                else:
                    eu[n - 2] = a
                    ev[n - 2] = v
    return eu[:nedges], ev[:nedges]
