"""Batch sweep kernels with selectable backend.

The exhaustive verification paths (all-c solver sweeps, Chien-style
evaluation over a whole field, trace tables) run through a handful of
array kernels.  Two interchangeable backends provide them:

* ``numba`` -- @njit single-pass loops (default when numba imports);
* ``numpy`` -- pure vectorized fallback.

Selection happens once, at first use, from the ``GF2QUAD_BACKEND``
environment variable ("numba" or "numpy"; empty means auto).  Both
backends are bit-identical in output -- the test suite compares them --
so the flag only affects speed.  ``benchmarks/backend_bench.py`` times
one against the other.
"""

import os

ENV_FLAG = "GF2QUAD_BACKEND"

_impl = None


def _load_backend():
    choice = os.environ.get(ENV_FLAG, "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ValueError(f"{ENV_FLAG} must be 'numba' or 'numpy', got {choice!r}")
    if choice in ("", "numba"):
        try:
            from . import _kernels_numba as impl
            return impl
        except ImportError:
            if choice == "numba":
                raise ImportError(
                    f"{ENV_FLAG}=numba requested but numba is not importable")
    from . import _kernels_numpy as impl
    return impl


def _backend():
    global _impl
    if _impl is None:
        _impl = _load_backend()
    return _impl


def backend_name() -> str:
    """Name of the active kernel backend ("numba" or "numpy")."""
    return _backend().BACKEND_NAME


def square_table(m, modulus):
    """sq[i] = index of w_i^2, for every element index i of GF(2^m)."""
    return _backend().square_table(m, modulus)


def trace_table(sq, m):
    """tr[i] = Tr(w_i) for every element index, from a square table."""
    return _backend().trace_table(sq, m)


def syndrome_table(p_cols, m):
    """s[c] = XOR of packed transform columns over the set bits of c, all c."""
    return _backend().syndrome_table(p_cols, m)


def quad_image(sq):
    """g[x] = index of x^2 + x for every x (image table of the quadratic map)."""
    import numpy as np
    return sq ^ np.arange(sq.shape[0], dtype=np.uint32)


def root_pairs_from_image(g):
    """(counts, low): exhaustive root multiplicity and smallest root per c."""
    return _backend().root_pairs_from_image(g)


def popcounts(values):
    """Per-element popcount."""
    return _backend().popcounts(values)
