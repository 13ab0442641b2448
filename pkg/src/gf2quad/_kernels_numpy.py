"""Pure-numpy implementations of the sweep kernels (no JIT)."""

import numpy as np

BACKEND_NAME = "numpy"


def square_table(m, modulus):
    """uint32 array sq with sq[i] = index of w_i squared, for all 2^m i."""
    n = 1 << m
    idx = np.arange(n, dtype=np.uint64)
    # carry-less square: spread bit j to bit 2j (cross terms cancel mod 2)
    v = np.zeros(n, dtype=np.uint64)
    for j in range(m):
        v |= ((idx >> np.uint64(j)) & np.uint64(1)) << np.uint64(2 * j)
    # reduce degree 2m-2 .. m by the modulus
    mod = np.uint64(modulus)
    for bit in range(2 * m - 2, m - 1, -1):
        hit = (v >> np.uint64(bit)) & np.uint64(1)
        v ^= hit * (mod << np.uint64(bit - m))
    return v.astype(np.uint32)


def trace_table(sq, m):
    """uint8 array tr with tr[i] = Tr(w_i), derived from the square table."""
    n = sq.shape[0]
    acc = np.arange(n, dtype=np.uint32)
    t = acc.copy()
    for _ in range(m - 1):
        t = sq[t]
        acc ^= t
    return acc.astype(np.uint8)


def syndrome_table(p_cols, m):
    """uint32 array s with s[c] = XOR of p_cols[j] over the set bits j of c."""
    n = 1 << m
    c = np.arange(n, dtype=np.uint32)
    s = np.zeros(n, dtype=np.uint32)
    for j in range(m):
        bit = (c >> np.uint32(j)) & np.uint32(1)
        s ^= bit * p_cols[j]
    return s


def root_pairs_from_image(g):
    """Exhaustive root sets of x^2 + x + c from the image table g[x] = x^2 + x.

    Returns (counts, low) where counts[c] is the number of field elements
    x with g[x] == c and low[c] is the smallest such x (-1 if none).
    """
    n = g.shape[0]
    counts = np.bincount(g, minlength=n).astype(np.int64)
    low = np.full(n, -1, dtype=np.int64)
    xs = np.arange(n - 1, -1, -1, dtype=np.int64)
    low[g[xs]] = xs  # descending writes leave the smallest x per image value
    return counts, low


def popcounts(values):
    """Per-element popcount of a uint32 array."""
    return np.bitwise_count(values.astype(np.uint32)).astype(np.int64)
