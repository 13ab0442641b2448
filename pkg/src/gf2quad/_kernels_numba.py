"""Numba-compiled implementations of the sweep kernels.

Same signatures and results as the numpy backend; single-pass loops
instead of vectorized temporaries.
"""

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True)
def square_table(m, modulus):
    n = 1 << m
    out = np.empty(n, np.uint32)
    for i in range(n):
        v = np.int64(0)
        for j in range(m):
            if (i >> j) & 1:
                v |= np.int64(1) << np.int64(2 * j)
        for bit in range(2 * m - 2, m - 1, -1):
            if (v >> np.int64(bit)) & 1:
                v ^= np.int64(modulus) << np.int64(bit - m)
        out[i] = v
    return out


@njit(cache=True)
def trace_table(sq, m):
    n = sq.shape[0]
    out = np.empty(n, np.uint8)
    for i in range(n):
        acc = np.uint32(i)
        t = np.uint32(i)
        for _ in range(m - 1):
            t = sq[t]
            acc ^= t
        out[i] = acc
    return out


@njit(cache=True)
def syndrome_table(p_cols, m):
    n = 1 << m
    out = np.empty(n, np.uint32)
    for c in range(n):
        s = np.uint32(0)
        for j in range(m):
            if (c >> j) & 1:
                s ^= p_cols[j]
        out[c] = s
    return out


@njit(cache=True)
def root_pairs_from_image(g):
    n = g.shape[0]
    counts = np.zeros(n, np.int64)
    low = np.full(n, -1, np.int64)
    for x in range(n - 1, -1, -1):
        c = g[x]
        counts[c] += 1
        low[c] = x
    return counts, low


@njit(cache=True)
def popcounts(values):
    n = values.shape[0]
    out = np.empty(n, np.int64)
    for i in range(n):
        v = np.uint32(values[i])
        k = 0
        while v:
            v &= v - np.uint32(1)
            k += 1
        out[i] = k
    return out
