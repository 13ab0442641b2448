"""Dense GF(2) matrices as packed int rows, plus tracked Gauss-Jordan.

Row r is a plain int whose bit j holds entry (r, j), so column 0 lives
at bit 0.  That layout matches the row-hex wire encoding used by the
CLI and keeps row operations single XORs.
"""

from __future__ import annotations

from .errors import InternalRankError, RangeError


def parity(x: int) -> int:
    return x.bit_count() & 1


class BitMatrix:
    """Immutable dense matrix over GF(2)."""

    __slots__ = ("rows", "cols", "row_bits")

    def __init__(self, rows: int, cols: int, row_bits):
        if rows <= 0 or cols <= 0:
            raise RangeError(f"matrix dimensions must be positive, got {rows}x{cols}")
        row_bits = tuple(int(r) for r in row_bits)
        if len(row_bits) != rows:
            raise RangeError(f"expected {rows} rows, got {len(row_bits)}")
        mask = (1 << cols) - 1
        for r in row_bits:
            if r & ~mask:
                raise RangeError(f"row value 0x{r:x} has bits beyond column {cols - 1}")
        self.rows = rows
        self.cols = cols
        self.row_bits = row_bits

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_bit_rows(cls, bit_rows) -> "BitMatrix":
        """Build from nested 0/1 lists, row major, column 0 first."""
        rows = len(bit_rows)
        cols = len(bit_rows[0])
        packed = []
        for row in bit_rows:
            if len(row) != cols:
                raise RangeError("ragged rows")
            packed.append(sum(bit << j for j, bit in enumerate(row)))
        return cls(rows, cols, packed)

    def get(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise RangeError(f"index ({r}, {c}) outside {self.rows}x{self.cols}")
        return (self.row_bits[r] >> c) & 1

    def column(self, j: int) -> int:
        """Column j packed into an int (row k at bit k)."""
        if not 0 <= j < self.cols:
            raise RangeError(f"column {j} outside 0..{self.cols - 1}")
        out = 0
        for k, row in enumerate(self.row_bits):
            out |= ((row >> j) & 1) << k
        return out

    def columns(self) -> tuple:
        return tuple(self.column(j) for j in range(self.cols))

    def mul_vec(self, v: int) -> int:
        """Matrix-vector product over GF(2); v packed with coordinate j at bit j."""
        out = 0
        for k, row in enumerate(self.row_bits):
            out |= parity(row & v) << k
        return out

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise RangeError(f"shape mismatch: {self.rows}x{self.cols} @ "
                             f"{other.rows}x{other.cols}")
        out = []
        for row in self.row_bits:
            acc = 0
            k = 0
            r = row
            while r:
                if r & 1:
                    acc ^= other.row_bits[k]
                r >>= 1
                k += 1
            out.append(acc)
        return BitMatrix(self.rows, other.cols, out)

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.cols, self.rows,
                         [self.column(j) for j in range(self.cols)])

    def rank(self) -> int:
        work = list(self.row_bits)
        rank = 0
        for col in range(self.cols):
            pivot = next((r for r in range(rank, len(work))
                          if (work[r] >> col) & 1), None)
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            for r in range(len(work)):
                if r != rank and (work[r] >> col) & 1:
                    work[r] ^= work[rank]
            rank += 1
        return rank

    def is_identity(self) -> bool:
        return (self.rows == self.cols
                and all(row == 1 << i for i, row in enumerate(self.row_bits)))

    def __eq__(self, other):
        return (isinstance(other, BitMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.row_bits == other.row_bits)

    def __hash__(self):
        return hash((self.rows, self.cols, self.row_bits))

    def to_hex_rows(self) -> list[str]:
        return [f"0x{r:x}" for r in self.row_bits]

    @classmethod
    def from_hex_rows(cls, rows: int, cols: int, hex_rows) -> "BitMatrix":
        return cls(rows, cols, [int(h, 16) for h in hex_rows])

    def render(self) -> str:
        """Human-readable 0/1 grid, column 0 leftmost."""
        lines = []
        for row in self.row_bits:
            lines.append(" ".join(str((row >> j) & 1) for j in range(self.cols)))
        return "\n".join(lines)

    def __repr__(self):
        return f"BitMatrix({self.rows}x{self.cols})"


def reduce_with_transform(matrix: BitMatrix) -> tuple[BitMatrix, BitMatrix, dict]:
    """Gauss-Jordan over GF(2) with row-operation tracking.

    Returns (rref, transform, pivot_row_of_col) with transform @ matrix
    == rref.  Pivots are chosen smallest-row-index-first so the result
    is deterministic; no row swaps are performed here (callers permute).
    """
    work = list(matrix.row_bits)
    trans = list(BitMatrix.identity(matrix.rows).row_bits)
    pivot_row_of_col: dict = {}
    claimed = set()
    for col in range(matrix.cols):
        pivot = next((r for r in range(matrix.rows)
                      if r not in claimed and (work[r] >> col) & 1), None)
        if pivot is None:
            continue
        claimed.add(pivot)
        pivot_row_of_col[col] = pivot
        for r in range(matrix.rows):
            if r != pivot and (work[r] >> col) & 1:
                work[r] ^= work[pivot]
                trans[r] ^= trans[pivot]
    rref = BitMatrix(matrix.rows, matrix.cols, work)
    transform = BitMatrix(matrix.rows, matrix.rows, trans)
    return rref, transform, pivot_row_of_col


def assert_invertible(matrix: BitMatrix) -> None:
    """Raise InternalRankError unless the square matrix has full rank."""
    if matrix.rows != matrix.cols or matrix.rank() != matrix.rows:
        raise InternalRankError(f"matrix {matrix!r} is not invertible over GF(2)")
