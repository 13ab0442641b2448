"""XOR-only solver for reduced quadratics x^2 + x + c over GF(2^m).

The map p(x) = x^2 + x is GF(2)-linear, so in the polynomial basis it
has an m x m matrix over GF(2) (column j holds the coordinates of
alpha^j + alpha^(2j)).  Its kernel is {0, 1}, hence rank m-1, and a
one-time Gauss-Jordan pass yields an invertible row transform T with

    T @ quad_matrix == (0 | I0)

where (0 | I0) is zero in column 0 and, outside one all-zero row, has a
single 1 per row k sitting in column k.  Solving x^2 + x + c = 0 then
costs only the XORs of the syndrome s = T @ bits(c): bit 0 of s decides
solvability and the remaining bits literally spell the canonical root's
coordinates.  No field multiplications or exponentiations are involved.

The all-zero row is canonicalized to index 0 (zero row on top), so for a
solvable c the canonical root is w_s itself, with bit 0 clear, and the
other root is w_(s+1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import FieldMismatchError, InternalRankError, RangeError
from .field import FieldElement, FieldParams, field_new, parse_hex, poly_hex
from .linalg import BitMatrix, parity, reduce_with_transform


@dataclass(frozen=True)
class SolveOutcome:
    """Result of one reduced-quadratic solve.

    ``syndrome`` is always populated (diagnostic value even when
    unsolvable); ``roots`` is the pair (x0, x1) with bit 0 of x0 clear
    and x1 = x0 + 1, or None when no roots exist.
    """

    solvable: bool
    syndrome: int
    roots: tuple[FieldElement, FieldElement] | None


@dataclass(frozen=True)
class XorCostReport:
    """Bit-level cost of one syndrome computation.

    ``sequential_xors`` counts the XOR gates of summing the selected
    transform columns (m-1 useful bits each: the zero row's bit is
    excluded); ``depth`` is the balanced binary XOR-tree latency over
    the ``columns_summed`` selected columns.
    """

    sequential_xors: int
    depth: int
    columns_summed: int


class RootKind(enum.Enum):
    ALL_ELEMENTS = "all_elements"
    NO_ROOTS = "no_roots"
    SINGLE = "single"
    DOUBLE = "double"
    PAIR = "pair"


@dataclass(frozen=True)
class GeneralOutcome:
    """Root set of a general quadratic a*y^2 + b*y + d.

    For ALL_ELEMENTS the (trivial) root list is left empty; every field
    element satisfies the equation.  DOUBLE carries the repeated root
    once.
    """

    kind: RootKind
    roots: tuple[FieldElement, ...]


class SolverTables:
    """Precomputed (transform, quad_matrix, zero row) for one field.

    Immutable after construction and safe to share across threads.  The
    constructor re-verifies every structural invariant, so any tables
    object in circulation satisfies transform @ quad_matrix == (0 | I0)
    bit-exactly with the zero row on top.
    """

    __slots__ = ("field", "quad_matrix", "transform", "zero_row",
                 "_t_cols", "_criterion_row")

    def __init__(self, field: FieldParams, quad_matrix: BitMatrix,
                 transform: BitMatrix, zero_row: int = 0):
        m = field.m
        if zero_row != 0:
            raise RangeError("the all-zero row is canonicalized to index 0")
        if quad_matrix.rows != m or quad_matrix.cols != m:
            raise RangeError("quad_matrix must be m x m")
        if transform.rows != m or transform.cols != m:
            raise RangeError("transform must be m x m")
        if quad_matrix.column(0) != 0:
            raise InternalRankError("column 0 of the quadratic-map matrix must be zero")
        if quad_matrix.rank() != m - 1:
            raise InternalRankError(
                f"quadratic-map matrix rank {quad_matrix.rank()} != m-1 = {m - 1}")
        if transform.rank() != m:
            raise InternalRankError("row transform is not invertible over GF(2)")
        product = transform @ quad_matrix
        expected = BitMatrix(m, m, [0] + [1 << k for k in range(1, m)])
        if product != expected:
            raise InternalRankError("transform @ quad_matrix != (0 | I0)")
        self.field = field
        self.quad_matrix = quad_matrix
        self.transform = transform
        self.zero_row = zero_row
        self._t_cols = transform.columns()
        self._criterion_row = transform.row_bits[zero_row]

    @property
    def criterion_row(self) -> int:
        """Row ell* of the transform: the solvability-test mask over bits of c."""
        return self._criterion_row

    def __repr__(self):
        return f"SolverTables(m={self.field.m}, modulus={poly_hex(self.field.modulus)})"


def artin_schreier_matrix(field: FieldParams) -> BitMatrix:
    """Matrix of the linear map x -> x^2 + x in the polynomial basis.

    Entry (ell, j) is bit ell of alpha^j + alpha^(2j); column 0 is zero
    because 1 + 1 = 0.
    """
    m = field.m
    rows = [0] * m
    a_j = 1  # alpha^j, starting at j = 0
    for j in range(m):
        val = a_j ^ field.square_int(a_j)  # alpha^j + alpha^(2j)
        for ell in range(m):
            if (val >> ell) & 1:
                rows[ell] |= 1 << j
        a_j = field.mul_int(a_j, 2)
    return BitMatrix(m, m, rows)


def build_tables(field: FieldParams) -> SolverTables:
    """One-time precomputation of the (transform, quad_matrix) pair.

    Gauss-Jordan with smallest-row-index pivoting, then a row
    permutation placing the pivot row of column k at index k and the
    single zero row at index 0.  Deterministic for a given field.
    """
    m = field.m
    quad = artin_schreier_matrix(field)
    rref, trans, pivot_row_of_col = reduce_with_transform(quad)
    if set(pivot_row_of_col.keys()) != set(range(1, m)):
        raise InternalRankError(
            f"expected pivots in columns 1..{m - 1}, got {sorted(pivot_row_of_col)}")
    claimed = set(pivot_row_of_col.values())
    spare = [r for r in range(m) if r not in claimed]
    if len(spare) != 1 or rref.row_bits[spare[0]] != 0:
        raise InternalRankError("expected exactly one all-zero row after elimination")
    perm = [spare[0]] + [pivot_row_of_col[k] for k in range(1, m)]
    transform = BitMatrix(m, m, [trans.row_bits[r] for r in perm])
    return SolverTables(field, quad, transform, zero_row=0)


def _check_element(tables: SolverTables, c: FieldElement) -> int:
    if not tables.field.same_field(c.field):
        raise FieldMismatchError(
            f"element from {c.field!r} used with tables for {tables.field!r}")
    return c.index


def is_solvable(tables: SolverTables, c: FieldElement) -> bool:
    """Whether x^2 + x + c has roots; reads one transform row only.

    Costs at most m-1 bit XORs: the parity of the criterion-row bits of
    c.  The XOR count is added to the field tally when instrumentation
    is on.
    """
    c_bits = _check_element(tables, c)
    masked = tables._criterion_row & c_bits
    f = tables.field
    if f.tally is not None:
        f.tally.xors += max(masked.bit_count() - 1, 0)
    return parity(masked) == 0


def _syndrome(tables: SolverTables, c_bits: int) -> tuple[int, int]:
    """Sum the transform columns selected by the set bits of c."""
    s = 0
    cols = tables._t_cols
    bits = c_bits
    j = 0
    n_cols = 0
    while bits:
        if bits & 1:
            s ^= cols[j]
            n_cols += 1
        bits >>= 1
        j += 1
    return s, n_cols


def _cost_of(m: int, columns_summed: int) -> XorCostReport:
    sequential = max(columns_summed - 1, 0) * (m - 1)
    depth = (max(columns_summed, 1) - 1).bit_length()  # ceil(log2(...))
    return XorCostReport(sequential, depth, columns_summed)


def _solve_core(tables: SolverTables, c_bits: int) -> tuple[SolveOutcome, int]:
    s, n_cols = _syndrome(tables, c_bits)
    field = tables.field
    if (s >> tables.zero_row) & 1:
        return SolveOutcome(False, s, None), n_cols
    # canonical form: bit k of s is the root coordinate i_k, bit 0 clear
    x0 = FieldElement(s, field)
    x1 = FieldElement(s | 1, field)
    return SolveOutcome(True, s, (x0, x1)), n_cols


def solve_reduced(tables: SolverTables, c: FieldElement) -> SolveOutcome:
    """Solve x^2 + x + c = 0 by the syndrome method (XORs only)."""
    c_bits = _check_element(tables, c)
    outcome, n_cols = _solve_core(tables, c_bits)
    f = tables.field
    if f.tally is not None:
        f.tally.xors += _cost_of(f.m, n_cols).sequential_xors
    return outcome


def solve_with_cost(tables: SolverTables,
                    c: FieldElement) -> tuple[SolveOutcome, XorCostReport]:
    """solve_reduced plus the bit-XOR count and XOR-tree depth of the solve."""
    c_bits = _check_element(tables, c)
    outcome, n_cols = _solve_core(tables, c_bits)
    report = _cost_of(tables.field.m, n_cols)
    f = tables.field
    if f.tally is not None:
        f.tally.xors += report.sequential_xors
    return outcome, report


_TABLES_CACHE: dict = {}


def tables_for(field: FieldParams) -> SolverTables:
    """build_tables with a per-(m, modulus) cache."""
    key = (field.m, field.modulus)
    tables = _TABLES_CACHE.get(key)
    if tables is None or not tables.field.same_field(field):
        tables = build_tables(field)
        _TABLES_CACHE[key] = tables
    return tables


def solve_general(field: FieldParams, a: FieldElement, b: FieldElement,
                  d: FieldElement, tables: SolverTables | None = None) -> GeneralOutcome:
    """Full case analysis for a*y^2 + b*y + d = 0 over GF(2^m).

    The two-root case substitutes x = a*y/b, solves the reduced
    quadratic with c = a*d/b^2, and maps roots back via y = b*x/a.
    """
    for el in (a, b, d):
        if not field.same_field(el.field):
            raise FieldMismatchError(f"element from {el.field!r} used with {field!r}")
    if not a and not b:
        if not d:
            return GeneralOutcome(RootKind.ALL_ELEMENTS, ())
        return GeneralOutcome(RootKind.NO_ROOTS, ())
    if not a:
        return GeneralOutcome(RootKind.SINGLE, (d / b,))
    if not b:
        return GeneralOutcome(RootKind.DOUBLE, ((d / a).sqrt(),))
    if tables is None:
        tables = tables_for(field)
    b_inv = b.inverse()
    c = a * d * b_inv * b_inv
    outcome = solve_reduced(tables, c)
    if not outcome.solvable:
        return GeneralOutcome(RootKind.NO_ROOTS, ())
    scale = b / a
    x0, x1 = outcome.roots
    return GeneralOutcome(RootKind.PAIR, (scale * x0, scale * x1))


# ---------- wire format ----------

def tables_to_dict(tables: SolverTables) -> dict:
    """JSON-ready form: {m, modulus_hex, ell_star, P, B} with hex bit-rows."""
    return {
        "m": tables.field.m,
        "modulus_hex": poly_hex(tables.field.modulus),
        "ell_star": tables.zero_row,
        "P": tables.transform.to_hex_rows(),
        "B": tables.quad_matrix.to_hex_rows(),
    }


def tables_from_dict(data: dict) -> SolverTables:
    """Rebuild tables from the wire format, re-verifying every invariant."""
    m = data["m"]
    field = field_new(m, parse_hex(data["modulus_hex"]))
    quad = BitMatrix.from_hex_rows(m, m, data["B"])
    transform = BitMatrix.from_hex_rows(m, m, data["P"])
    return SolverTables(field, quad, transform, zero_row=data["ell_star"])
