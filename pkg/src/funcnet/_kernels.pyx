# cython: boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled twins of funcnet.kernels.pure. Same contracts, same outputs."""

import numpy as np

from libcpp.vector cimport vector


cdef long long _find(long long[::1] parent, long long x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def kruskal_scan(long long n, us, vs):
    cdef long long[::1] u64 = np.ascontiguousarray(us, dtype=np.int64)
    cdef long long[::1] v64 = np.ascontiguousarray(vs, dtype=np.int64)
    cdef long long m = u64.shape[0]
    parent_arr = np.arange(n, dtype=np.int64)
    cdef long long[::1] parent = parent_arr
    mask_arr = np.zeros(m, dtype=np.uint8)
    cdef unsigned char[::1] mask = mask_arr
    cdef long long i, ru, rv, joined = 0
    for i in range(m):
        ru = _find(parent, u64[i])
        rv = _find(parent, v64[i])
        if ru != rv:
            parent[rv] = ru
            mask[i] = 1
            joined += 1
            if joined == n - 1:
                break
    return mask_arr


def bfs_distance_sums(long long n, indptr, indices):
    cdef long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef int[::1] idx = np.ascontiguousarray(indices, dtype=np.int32)
    dist_sum_arr = np.zeros(n, dtype=np.int64)
    inv_sum_arr = np.zeros(n, dtype=np.float64)
    reached_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] dist_sum = dist_sum_arr
    cdef double[::1] inv_sum = inv_sum_arr
    cdef long long[::1] reached = reached_arr
    if n == 0:
        return dist_sum_arr, inv_sum_arr, reached_arr
    dist_arr = np.empty(n, dtype=np.int32)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] dist = dist_arr
    cdef int[::1] queue = queue_arr
    cdef long long s, head, tail, u, v, j
    cdef long long dsum, rcount
    cdef double isum
    with nogil:
        for s in range(n):
            for j in range(n):
                dist[j] = -1
            dist[s] = 0
            queue[0] = <int>s
            head = 0
            tail = 1
            dsum = 0
            isum = 0.0
            rcount = 0
            while head < tail:
                u = queue[head]
                head += 1
                for j in range(ip[u], ip[u + 1]):
                    v = idx[j]
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        queue[tail] = <int>v
                        tail += 1
                        dsum += dist[v]
                        isum += 1.0 / dist[v]
                        rcount += 1
            dist_sum[s] = dsum
            inv_sum[s] = isum
            reached[s] = rcount
    return dist_sum_arr, inv_sum_arr, reached_arr


def triangle_counts(long long n, indptr, indices):
    cdef long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef int[::1] idx = np.ascontiguousarray(indices, dtype=np.int32)
    counts_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] counts = counts_arr
    cdef long long u, v, a, b, pu, pv
    with nogil:
        for u in range(n):
            for a in range(ip[u], ip[u + 1]):
                v = idx[a]
                if v <= u:
                    continue
                # merge-intersect sorted neighbor lists of u and v, k > v only
                pu = a + 1
                pv = ip[v]
                while pu < ip[u + 1] and pv < ip[v + 1]:
                    if idx[pu] < idx[pv]:
                        pu += 1
                    elif idx[pv] < idx[pu]:
                        pv += 1
                    else:
                        if idx[pu] > v:
                            counts[u] += 1
                            counts[v] += 1
                            counts[idx[pu]] += 1
                        pu += 1
                        pv += 1
    return counts_arr


def enumerate_triangles(long long n, indptr, indices):
    cdef long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef int[::1] idx = np.ascontiguousarray(indices, dtype=np.int32)
    cdef vector[int] tri
    cdef long long u, v, a, pu, pv
    with nogil:
        for u in range(n):
            for a in range(ip[u], ip[u + 1]):
                v = idx[a]
                if v <= u:
                    continue
                pu = a + 1
                pv = ip[v]
                while pu < ip[u + 1] and pv < ip[v + 1]:
                    if idx[pu] < idx[pv]:
                        pu += 1
                    elif idx[pv] < idx[pu]:
                        pv += 1
                    else:
                        if idx[pu] > v:
                            tri.push_back(<int>u)
                            tri.push_back(<int>v)
                            tri.push_back(idx[pu])
                        pu += 1
                        pv += 1
    cdef long long t = tri.size() // 3
    out = np.empty((t, 3), dtype=np.int32)
    cdef int[:, ::1] om = out
    cdef long long i
    with nogil:
        for i in range(t):
            om[i, 0] = tri[3 * i]
            om[i, 1] = tri[3 * i + 1]
            om[i, 2] = tri[3 * i + 2]
    # already lexicographic: u ascending outer, v ascending (sorted CSR rows),
    # k ascending along the merge
    return out


def reduce_d2(long long num_edges, cols):
    cdef long long[:, ::1] cm = np.ascontiguousarray(cols, dtype=np.int64)
    cdef long long t_count = cm.shape[0]
    pairs_arr = np.full(t_count, -1, dtype=np.int64)
    cdef long long[::1] pairs = pairs_arr
    cdef vector[vector[long long]] owner = vector[vector[long long]](num_edges)
    cdef vector[long long] col, merged
    cdef long long t, p, i, j, la, lb
    with nogil:
        for t in range(t_count):
            col.clear()
            col.push_back(cm[t, 0])
            col.push_back(cm[t, 1])
            col.push_back(cm[t, 2])
            while col.size() > 0:
                p = col.back()
                if owner[p].size() == 0:
                    owner[p] = col
                    pairs[t] = p
                    break
                # col ^= owner[p] (symmetric difference of ascending lists)
                merged.clear()
                la = col.size()
                lb = owner[p].size()
                i = 0
                j = 0
                while i < la and j < lb:
                    if col[i] < owner[p][j]:
                        merged.push_back(col[i])
                        i += 1
                    elif owner[p][j] < col[i]:
                        merged.push_back(owner[p][j])
                        j += 1
                    else:
                        i += 1
                        j += 1
                while i < la:
                    merged.push_back(col[i])
                    i += 1
                while j < lb:
                    merged.push_back(owner[p][j])
                    j += 1
                col.swap(merged)
    return pairs_arr
