"""Arithmetic in binary extension fields GF(2^m) under a polynomial basis.

Elements are m-bit coordinate vectors over the basis (1, alpha, ...,
alpha^(m-1)), packed into Python ints: bit j is the coefficient of
alpha^j, so the element of index i is w_i = sum_j bit_j(i) * alpha^j.
This makes index <-> coordinate-vector conversion the identity and
addition a plain XOR.

A :class:`FieldParams` describes one field (degree and modulus) and
optionally carries an :class:`OpTally` that counts operations when
``op_counters_enabled`` is set.  Counters are off by default so the
uninstrumented paths stay allocation- and branch-light.

Text encodings: polynomials and element indices are written as hex
integers with bit i holding the coefficient of x^i (resp. alpha^i),
e.g. x^7+x^3+1 <-> 0x89.
"""

from __future__ import annotations

from .errors import FieldMismatchError, NotIrreducibleError, RangeError

MIN_M = 2
MAX_M = 32

# Largest m for which per-field lookup tables (squares, traces) are
# materialized; above this everything stays scalar.
TABLE_LIMIT = 20

# Default modulus per degree: the classical low-weight primitive
# polynomials tabulated in standard coding-theory references (the same
# defaults used by e.g. MATLAB's gfprimdf).  Every entry is verified
# irreducible at field construction and checked primitive in the test
# suite; primitivity is documented, not required, by this module.
_DEFAULT_MODULI = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
    17: 0x20009,
    18: 0x40081,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x1000087,
    25: 0x2000009,
    26: 0x4000047,
    27: 0x8000027,
    28: 0x10000009,
    29: 0x20000005,
    30: 0x40800007,
    31: 0x80000009,
    32: 0x100400007,
}


# ---------- raw GF(2)[x] helpers (ints as coefficient bit vectors) ----------

def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def preduce(v: int, modulus: int, m: int) -> int:
    """Reduce polynomial v modulo a degree-m modulus."""
    for bit in range(v.bit_length() - 1, m - 1, -1):
        if (v >> bit) & 1:
            v ^= modulus << (bit - m)
    return v


def pmod(a: int, b: int) -> int:
    """Polynomial remainder a mod b over GF(2)."""
    while a and a.bit_length() >= b.bit_length():
        a ^= b << (a.bit_length() - b.bit_length())
    return a


def pgcd(a: int, b: int) -> int:
    """Polynomial gcd over GF(2)."""
    while b:
        a, b = b, pmod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _frobenius_of_x(k: int, modulus: int, m: int) -> int:
    """x^(2^k) mod modulus, by k modular squarings."""
    t = 2
    for _ in range(k):
        t = preduce(clmul(t, t), modulus, m)
    return t


def is_irreducible(modulus: int, m: int) -> bool:
    """Rabin test: degree-m modulus is irreducible over GF(2)."""
    if modulus.bit_length() - 1 != m:
        return False
    if m == 1:
        return True  # x and x+1
    if not modulus & 1:
        return False  # divisible by x
    if _frobenius_of_x(m, modulus, m) != 2:
        return False
    for p in _prime_factors(m):
        if pgcd(_frobenius_of_x(m // p, modulus, m) ^ 2, modulus) != 1:
            return False
    return True


def poly_hex(p: int) -> str:
    """Hex text encoding of a polynomial / element index (bit i = coeff of x^i)."""
    return f"0x{p:x}"


def parse_hex(text: str) -> int:
    """Parse the hex text encoding (with or without 0x prefix)."""
    return int(text, 16)


# ---------- instrumentation ----------

class OpTally:
    """Operation counters for instrumented field arithmetic.

    Counters only grow while a tallied computation runs; ``reset``
    rezeroes them between runs.  A tally is confined to one thread of
    execution (no cross-thread aggregation).

    ``exps`` counts exponentiation calls as single units (the unit used
    in method-cost comparisons); ``squarings`` separately records the
    raw Frobenius squarings those units expand to.  ``xors`` counts
    single bit-level XOR gates.
    """

    __slots__ = ("adds", "muls", "exps", "squarings", "xors")

    def __init__(self):
        self.adds = 0
        self.muls = 0
        self.exps = 0
        self.squarings = 0
        self.xors = 0

    def reset(self) -> None:
        self.adds = self.muls = self.exps = self.squarings = self.xors = 0

    def snapshot(self) -> dict:
        return {
            "adds": self.adds,
            "muls": self.muls,
            "exps": self.exps,
            "squarings": self.squarings,
            "xors": self.xors,
        }

    def __repr__(self):
        return (f"OpTally(adds={self.adds}, muls={self.muls}, exps={self.exps}, "
                f"squarings={self.squarings}, xors={self.xors})")


# ---------- the field ----------

class FieldParams:
    """Immutable description of GF(2^m): degree, modulus, derived masks.

    Safe to share between threads; the optional tally is the only
    mutable attachment and follows OpTally's single-thread contract.
    """

    __slots__ = ("m", "modulus", "op_counters_enabled", "tally",
                 "order", "_mask", "_sq_table", "_trace_table")

    def __init__(self, m: int, modulus: int | None = None, *,
                 op_counters_enabled: bool = False):
        if not isinstance(m, int) or not MIN_M <= m <= MAX_M:
            raise RangeError(f"m must be an integer in [{MIN_M}, {MAX_M}], got {m!r}")
        if modulus is None:
            modulus = _DEFAULT_MODULI[m]
        if modulus.bit_length() - 1 != m:
            raise RangeError(
                f"modulus degree must be exactly m={m}, got degree "
                f"{modulus.bit_length() - 1} ({poly_hex(modulus)})")
        if not is_irreducible(modulus, m):
            raise NotIrreducibleError(
                f"{poly_hex(modulus)} factors over GF(2); need an irreducible modulus")
        self.m = m
        self.modulus = modulus
        self.order = 1 << m
        self.op_counters_enabled = op_counters_enabled
        self.tally = OpTally() if op_counters_enabled else None
        self._mask = self.order - 1
        self._sq_table = None
        self._trace_table = None

    # -- identity / housekeeping

    def __eq__(self, other):
        return (isinstance(other, FieldParams)
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.m, self.modulus))

    def __repr__(self):
        return f"FieldParams(m={self.m}, modulus={poly_hex(self.modulus)})"

    def same_field(self, other: "FieldParams") -> bool:
        return self.m == other.m and self.modulus == other.modulus

    # -- element constructors

    def element(self, index: int) -> "FieldElement":
        """Element of the given index (Eq.-of-basis bijection), 0 <= index < 2^m."""
        if not 0 <= index < self.order:
            raise RangeError(f"element index {index} outside [0, 2^{self.m})")
        return FieldElement(index, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    @property
    def alpha(self) -> "FieldElement":
        """The residue class of x: basis generator alpha."""
        return FieldElement(2, self)

    def elements(self):
        """Iterate over all 2^m elements in index order."""
        for i in range(self.order):
            yield FieldElement(i, self)

    # -- raw int arithmetic (indices in, indices out; no tallying)

    def mul_int(self, a: int, b: int) -> int:
        return preduce(clmul(a, b), self.modulus, self.m)

    def square_int(self, a: int) -> int:
        return preduce(clmul(a, a), self.modulus, self.m)

    def pow_int(self, a: int, e: int) -> tuple[int, int, int]:
        """Square-and-multiply; returns (result, n_squarings, n_muls)."""
        if e == 0:
            return 1, 0, 0
        if a == 0:
            return 0, 0, 0
        result = a
        sqs = muls = 0
        for bit in range(e.bit_length() - 2, -1, -1):
            result = self.square_int(result)
            sqs += 1
            if (e >> bit) & 1:
                result = self.mul_int(result, a)
                muls += 1
        return result, sqs, muls

    def trace_int(self, a: int) -> int:
        acc = t = a
        for _ in range(self.m - 1):
            t = self.square_int(t)
            acc ^= t
        return acc  # always 0 or 1

    def inv_int(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow_int(a, self.order - 2)[0]

    # -- cached lookup tables (lazy; backed by the kernels module)

    def square_table(self):
        """uint32 array t with t[i] = index of w_i^2 (m <= TABLE_LIMIT only)."""
        if self._sq_table is None:
            if self.m > TABLE_LIMIT:
                raise RangeError(f"square table capped at m <= {TABLE_LIMIT}")
            from . import kernels
            self._sq_table = kernels.square_table(self.m, self.modulus)
        return self._sq_table

    def trace_table(self):
        """uint8 array t with t[i] = Tr(w_i) (m <= TABLE_LIMIT only)."""
        if self._trace_table is None:
            from . import kernels
            self._trace_table = kernels.trace_table(self.square_table(), self.m)
        return self._trace_table


class FieldElement:
    """One element of GF(2^m), as an m-bit coordinate vector (packed int).

    Immutable value object.  Arithmetic goes through Python operators;
    ``+`` and ``-`` are the same operation in characteristic 2.
    """

    __slots__ = ("index", "field")

    def __init__(self, index: int, field: FieldParams):
        self.index = index
        self.field = field

    # -- value semantics

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.index == other.index and self.field.same_field(other.field))

    def __hash__(self):
        return hash((self.index, self.field.m, self.field.modulus))

    def __repr__(self):
        return f"w[{poly_hex(self.index)}]@GF(2^{self.field.m})"

    def __bool__(self):
        return self.index != 0

    def bit(self, ell: int) -> int:
        """ell-th bit of the coordinate vector (coefficient of alpha^ell)."""
        return (self.index >> ell) & 1

    # -- arithmetic

    def _coerce(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if not self.field.same_field(other.field):
            raise FieldMismatchError(
                f"operands from different fields: {self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        f = self.field
        if f.tally is not None:
            f.tally.adds += 1
            f.tally.xors += f.m
        return FieldElement(self.index ^ other.index, f)

    __sub__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        f = self.field
        if f.tally is not None:
            f.tally.muls += 1
        return FieldElement(f.mul_int(self.index, other.index), f)

    def square(self) -> "FieldElement":
        f = self.field
        if f.tally is not None:
            f.tally.squarings += 1
        return FieldElement(f.square_int(self.index), f)

    def __pow__(self, e: int) -> "FieldElement":
        """a**e for e >= 0; tallied as one exponentiation unit."""
        if e < 0:
            raise RangeError("negative exponents: use inverse() explicitly")
        f = self.field
        result, sqs, muls = f.pow_int(self.index, e)
        if f.tally is not None:
            f.tally.exps += 1
            f.tally.squarings += sqs
            f.tally.muls += muls
        return FieldElement(result, f)

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse of a nonzero element (a^(2^m - 2))."""
        f = self.field
        if self.index == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        result, sqs, muls = f.pow_int(self.index, f.order - 2)
        if f.tally is not None:
            # same unit convention as __pow__
            f.tally.exps += 1
            f.tally.squarings += sqs
            f.tally.muls += muls
        return FieldElement(result, f)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def trace(self) -> int:
        """Absolute trace Tr(a) = sum of a^(2^i), returned as a bit."""
        f = self.field
        if f.tally is not None:
            f.tally.squarings += f.m - 1
            f.tally.adds += f.m - 1
            f.tally.xors += (f.m - 1) * f.m
        return f.trace_int(self.index)

    def sqrt(self) -> "FieldElement":
        """Unique square root: a^(2^(m-1)), the inverse of the Frobenius map."""
        f = self.field
        t = self.index
        for _ in range(f.m - 1):
            t = f.square_int(t)
        if f.tally is not None:
            f.tally.exps += 1
            f.tally.squarings += f.m - 1
        return FieldElement(t, f)


# ---------- module-level operations mirroring the library surface ----------

def field_new(m: int, modulus: int | None = None, *,
              op_counters_enabled: bool = False) -> FieldParams:
    """Construct a field descriptor; verifies degree and irreducibility."""
    return FieldParams(m, modulus, op_counters_enabled=op_counters_enabled)


def default_modulus(m: int) -> int:
    """The shipped default modulus polynomial for degree m."""
    if not isinstance(m, int) or not MIN_M <= m <= MAX_M:
        raise RangeError(f"m must be an integer in [{MIN_M}, {MAX_M}], got {m!r}")
    return _DEFAULT_MODULI[m]


def element_from_index(field: FieldParams, index: int) -> FieldElement:
    return field.element(index)


def index_of(w: FieldElement) -> int:
    return w.index
