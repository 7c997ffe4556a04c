"""Undirected simple graphs on integer nodes, stored as canonical edge arrays."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SchemaError


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on nodes 0..n-1.

    ``edges`` is an (E, 2) int32 array in canonical form: each row u < v,
    rows sorted lexicographically, no duplicates.
    """

    n: int
    edges: np.ndarray

    @property
    def num_edges(self) -> int:
        return self.edges.shape[0]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        lo = np.searchsorted(self.edges[:, 0], u, side="left")
        hi = np.searchsorted(self.edges[:, 0], u, side="right")
        return bool(np.any(self.edges[lo:hi, 1] == v))


def canonical_edges(edges, n: int) -> np.ndarray:
    """Normalize an edge collection to canonical form, rejecting bad rows."""
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if arr.size == 0:
        return np.empty((0, 2), dtype=np.int32)
    if arr.min() < 0 or arr.max() >= n:
        raise SchemaError(f"edge endpoint outside [0, {n})")
    u = np.minimum(arr[:, 0], arr[:, 1])
    v = np.maximum(arr[:, 0], arr[:, 1])
    if np.any(u == v):
        bad = int(np.flatnonzero(u == v)[0])
        raise SchemaError(f"self-loop at node {arr[bad, 0]}")
    order = np.lexsort((v, u))
    u, v = u[order], v[order]
    dup = (u[1:] == u[:-1]) & (v[1:] == v[:-1])
    if np.any(dup):
        bad = int(np.flatnonzero(dup)[0])
        raise SchemaError(f"duplicate edge ({u[bad]}, {v[bad]})")
    return np.column_stack([u, v]).astype(np.int32)


def make_graph(n: int, edges) -> Graph:
    if n < 0:
        raise SchemaError("node count must be non-negative")
    return Graph(n=n, edges=canonical_edges(edges, n))


def adjacency_csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Symmetric CSR adjacency (indptr int64[n+1], indices int32 sorted per row)."""
    n = g.n
    if g.num_edges == 0:
        return np.zeros(n + 1, dtype=np.int64), np.empty(0, dtype=np.int32)
    src = np.concatenate([g.edges[:, 0], g.edges[:, 1]])
    dst = np.concatenate([g.edges[:, 1], g.edges[:, 0]])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, src.astype(np.int64) + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr, dst.astype(np.int32)


def degrees(g: Graph) -> np.ndarray:
    deg = np.zeros(g.n, dtype=np.int64)
    if g.num_edges:
        np.add.at(deg, g.edges[:, 0].astype(np.int64), 1)
        np.add.at(deg, g.edges[:, 1].astype(np.int64), 1)
    return deg


def adjacency_bool(g: Graph) -> np.ndarray:
    adj = np.zeros((g.n, g.n), dtype=bool)
    if g.num_edges:
        adj[g.edges[:, 0], g.edges[:, 1]] = True
        adj[g.edges[:, 1], g.edges[:, 0]] = True
    return adj


def connected_components(g: Graph) -> np.ndarray:
    """Component labels in [0, k), numbered by smallest member node."""
    parent = np.arange(g.n, dtype=np.int64)

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for u, v in g.edges:
        ru, rv = find(int(u)), find(int(v))
        if ru != rv:
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    roots = np.array([find(i) for i in range(g.n)], dtype=np.int64)
    _, labels = np.unique(roots, return_inverse=True)
    return labels.astype(np.int32)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    labels = connected_components(g)
    return bool(labels.max(initial=0) == 0)


def induced_subgraph(g: Graph, nodes) -> Graph:
    """Induced subgraph with nodes relabeled 0..len(nodes)-1 in sorted order."""
    nodes = np.asarray(sorted(set(int(x) for x in nodes)), dtype=np.int64)
    relabel = -np.ones(g.n, dtype=np.int64)
    relabel[nodes] = np.arange(len(nodes))
    keep = np.isin(g.edges[:, 0], nodes) & np.isin(g.edges[:, 1], nodes)
    sub = relabel[g.edges[keep].astype(np.int64)]
    return make_graph(len(nodes), sub)
