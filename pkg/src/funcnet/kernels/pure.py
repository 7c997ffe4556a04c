"""Pure NumPy/Python kernels, the fallback when funcnet._kernels is not built.

Every function here must return bit-identical results to its compiled twin;
tests/test_kernels.py enforces the parity.
"""

from __future__ import annotations

import numpy as np


def kruskal_scan(n: int, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
    """Union-find scan over a pre-ordered edge list.

    Returns a uint8 mask: mask[i] == 1 iff edge i joined two components
    (a spanning-forest edge under the caller's ordering).
    """
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    mask = np.zeros(len(us), dtype=np.uint8)
    joined = 0
    for i in range(len(us)):
        ru, rv = find(int(us[i])), find(int(vs[i]))
        if ru != rv:
            parent[rv] = ru
            mask[i] = 1
            joined += 1
            if joined == n - 1:
                break
    return mask


def _pack_adjacency(n: int, indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    words = (n + 63) // 64
    bits = np.zeros((n, words), dtype=np.uint64)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    cols = indices.astype(np.int64)
    np.bitwise_or.at(bits, (rows, cols >> 6), np.uint64(1) << (cols & 63).astype(np.uint64))
    return bits


def _decode_bits(bits: np.ndarray) -> np.ndarray:
    flat = np.unpackbits(bits.view(np.uint8), bitorder="little")
    return np.flatnonzero(flat)


def bfs_distance_sums(n: int, indptr: np.ndarray, indices: np.ndarray):
    """Per-source BFS sums over an unweighted CSR adjacency.

    Returns (dist_sum int64[n], inv_sum float64[n], reached int64[n]) where
    reached[s] counts nodes reachable from s excluding s itself and the sums
    run over those reached nodes.
    """
    dist_sum = np.zeros(n, dtype=np.int64)
    inv_sum = np.zeros(n, dtype=np.float64)
    reached = np.zeros(n, dtype=np.int64)
    if n == 0:
        return dist_sum, inv_sum, reached
    adj = _pack_adjacency(n, indptr, indices)
    words = adj.shape[1]
    for s in range(n):
        visited = np.zeros(words, dtype=np.uint64)
        visited[s >> 6] = np.uint64(1) << np.uint64(s & 63)
        frontier = [s]
        level = 0
        while frontier:
            level += 1
            nxt = np.bitwise_or.reduce(adj[frontier], axis=0) & ~visited
            count = int(np.bitwise_count(nxt).sum())
            if count == 0:
                break
            visited |= nxt
            dist_sum[s] += level * count
            inv_sum[s] += count / level
            reached[s] += count
            frontier = _decode_bits(nxt).tolist()
    return dist_sum, inv_sum, reached


def triangle_counts(n: int, indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """Number of triangles through each node (each triangle counted at all
    three of its vertices)."""
    counts = np.zeros(n, dtype=np.int64)
    if n == 0 or len(indices) == 0:
        return counts
    adj = _pack_adjacency(n, indptr, indices)
    for u in range(n):
        nbrs = indices[indptr[u]:indptr[u + 1]]
        if len(nbrs) < 2:
            continue
        common = np.bitwise_count(adj[nbrs.astype(np.int64)] & adj[u]).sum(axis=1)
        counts[u] = int(common.sum()) // 2
    return counts


def enumerate_triangles(n: int, indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """All triangles (i < j < k) of the graph, lexicographically sorted."""
    if n == 0 or len(indices) == 0:
        return np.empty((0, 3), dtype=np.int32)
    adj = _pack_adjacency(n, indptr, indices)
    words = adj.shape[1]
    out = []
    # mask_above[v] keeps only bits > v
    word_idx = np.arange(words)
    for u in range(n):
        nbrs = indices[indptr[u]:indptr[u + 1]]
        nbrs = nbrs[nbrs > u]
        for v in nbrs:
            common = adj[u] & adj[int(v)]
            # zero out bits <= v
            w = int(v) >> 6
            common = common.copy()
            common[:w] = 0
            common[w] &= ~((np.uint64(1) << np.uint64((int(v) & 63) + 1)) - np.uint64(1)) \
                if (int(v) & 63) != 63 else np.uint64(0)
            if (int(v) & 63) == 63:
                common[w] = 0
            ks = _decode_bits(common)
            for k in ks:
                out.append((u, int(v), int(k)))
    if not out:
        return np.empty((0, 3), dtype=np.int32)
    tri = np.array(out, dtype=np.int32)
    order = np.lexsort((tri[:, 2], tri[:, 1], tri[:, 0]))
    return tri[order]


def _symdiff(a: list, b: list) -> list:
    """Symmetric difference of two ascending integer lists."""
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x < y:
            out.append(x)
            i += 1
        elif y < x:
            out.append(y)
            j += 1
        else:
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


def reduce_d2(num_edges: int, cols: np.ndarray) -> np.ndarray:
    """GF(2) column reduction of the triangle boundary matrix.

    ``cols`` is (T, 3) int64: for each triangle (in filtration order) the
    filtration positions of its three edges, ascending. Returns int64[T]:
    the pivot edge position each triangle pairs with, or -1 when the column
    reduces to zero.
    """
    pairs = np.full(cols.shape[0], -1, dtype=np.int64)
    owner: dict[int, list] = {}
    for t in range(cols.shape[0]):
        col = [int(x) for x in cols[t]]
        while col:
            p = col[-1]
            prev = owner.get(p)
            if prev is None:
                owner[p] = col
                pairs[t] = p
                break
            col = _symdiff(col, prev)
    return pairs
