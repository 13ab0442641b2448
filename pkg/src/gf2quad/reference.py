"""Frozen reference values for the GF(2^7), x^7+x^3+1 worked example.

These are the published quadratic-map matrix and one published row
transform for that field, packed as int rows with column 0 at bit 0.
The transform is not unique (any valid one differs by additions of the
left-nullspace row), so checks assert the defining identity
P @ B == (0 | I0), never bitwise equality of an independently computed
transform with this one.
"""

M7_MODULUS = 0x89  # x^7 + x^3 + 1

# rows ell = 0..6; bit j of row ell = bit ell of alpha^j + alpha^(2j)
M7_QUAD_MATRIX_ROWS = (0x00, 0x52, 0x06, 0x28, 0x44, 0x60, 0x68)

# one published row transform satisfying the identity for the matrix above
M7_TRANSFORM_ROWS = (0x01, 0x5C, 0x58, 0x60, 0x16, 0x68, 0x48)
