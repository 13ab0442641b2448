"""Reed-Muller matrix rows and the evaluation identities behind the solver.

R_m is the 2^m x 2^m binary matrix defined recursively by
R_{j+1} = ((R_j, R_j), (0, R_j)) with R_0 = (1); equivalently, entry
(r, c) is 1 iff the bits of r are a subset of the bits of c.  Its
power-of-two-indexed rows expand Frobenius powers of field elements
over the polynomial basis, which is what reduces the quadratic to a
binary linear system.  Nothing here sits on the solve path -- these are
verification routines surfaced through the CLI ``verify`` command.
"""

from __future__ import annotations

import numpy as np

from .errors import RangeError
from .field import FieldParams

# Rows are generated on demand; the checks only ever need m+1 of them.
RM_ROW_LIMIT = 16
VERIFY_LIMIT = 12
RECURSION_LIMIT = 10


class RmRow:
    """One row of R_m: ``bits[c] = 1`` iff row_index is a submask of c."""

    __slots__ = ("m", "row_index", "bits")

    def __init__(self, m: int, row_index: int, bits: np.ndarray):
        self.m = m
        self.row_index = row_index
        self.bits = bits

    def __repr__(self):
        return f"RmRow(m={self.m}, row={self.row_index})"


def rm_row(m: int, r: int) -> RmRow:
    """Row r of R_m by the submask rule (m >= 1, verification scale)."""
    if not 1 <= m <= RM_ROW_LIMIT:
        raise RangeError(f"rm_row supports 1 <= m <= {RM_ROW_LIMIT}, got {m}")
    if not 0 <= r < (1 << m):
        raise RangeError(f"row index {r} outside [0, 2^{m})")
    cols = np.arange(1 << m, dtype=np.uint32)
    bits = ((cols & np.uint32(r)) == np.uint32(r)).astype(np.uint8)
    return RmRow(m, r, bits)


def rm_matrix(m: int) -> np.ndarray:
    """Full R_m by the direct recursion (cross-check use only; m <= 10)."""
    if not 0 <= m <= RECURSION_LIMIT:
        raise RangeError(f"rm_matrix supports 0 <= m <= {RECURSION_LIMIT}, got {m}")
    mat = np.array([[1]], dtype=np.uint8)
    for _ in range(m):
        n = mat.shape[0]
        nxt = np.zeros((2 * n, 2 * n), dtype=np.uint8)
        nxt[:n, :n] = mat
        nxt[:n, n:] = mat
        nxt[n:, n:] = mat
        mat = nxt
    return mat


def _check_verify_args(field: FieldParams) -> None:
    if field.m > VERIFY_LIMIT:
        raise RangeError(
            f"verification materializes 2^m evaluations; capped at m <= {VERIFY_LIMIT}")


def verify_power_row_identity(field: FieldParams, ell: int) -> bool:
    """Check that elementwise ell-th powers expand over RM rows.

    For ell a power of two, the vector (w_0^ell, ..., w_{2^m-1}^ell)
    must equal sum_j alpha^(j*ell) * R_m(2^j), evaluated in the field.
    """
    m = field.m
    _check_verify_args(field)
    if ell <= 0 or ell & (ell - 1) or ell >= (1 << m):
        raise RangeError(f"ell must be a power of two in [1, 2^{m - 1}], got {ell}")
    rows = [rm_row(m, 1 << j).bits for j in range(m)]
    coeffs = [field.pow_int(2, j * ell)[0] for j in range(m)]
    t = ell.bit_length() - 1  # ell = 2^t: t Frobenius squarings
    for i in range(1 << m):
        lhs = i
        for _ in range(t):
            lhs = field.square_int(lhs)
        rhs = 0
        for j in range(m):
            if rows[j][i]:
                rhs ^= coeffs[j]
        if lhs != rhs:
            return False
    return True


def verify_message_polynomial(field: FieldParams, c, ell_bit: int) -> bool:
    """Check the affine form of one output bit of f(x) = x^2 + x + c.

    Bit ell of f(w_i) must equal bit_ell(c) + sum_j bit_ell(alpha^j +
    alpha^(2j)) * i_j over GF(2), for every element index i.  The
    right-hand side is computed from scratch here (independent of the
    solver's matrix builder).
    """
    m = field.m
    _check_verify_args(field)
    if not 0 <= ell_bit < m:
        raise RangeError(f"ell_bit {ell_bit} outside [0, {m})")
    c_bits = c.index if hasattr(c, "index") else int(c)
    # mask over j of bit ell_bit of alpha^j + alpha^(2j)
    mask = 0
    a_j = 1
    for j in range(m):
        val = a_j ^ field.square_int(a_j)
        if (val >> ell_bit) & 1:
            mask |= 1 << j
        a_j = field.mul_int(a_j, 2)
    c_bit = (c_bits >> ell_bit) & 1
    for i in range(1 << m):
        f_val = field.square_int(i) ^ i ^ c_bits
        lhs = (f_val >> ell_bit) & 1
        rhs = c_bit ^ ((mask & i).bit_count() & 1)
        if lhs != rhs:
            return False
    return True
