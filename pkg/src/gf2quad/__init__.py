"""Finite-field algebra for GF(2^m) and an XOR-only reduced-quadratic solver.

The package precomputes, per field, a GF(2) matrix pair that turns
solving x^2 + x + c into a handful of XOR gates (no multiplications or
exponentiations), alongside classical baselines for cross-validation
and cost comparison, Reed-Muller identity checks, and a CLI.
"""

from .baselines import (MethodCostRow, cherly_root, chien_roots, compare_methods,
                        find_trace_one_element, half_trace_root,
                        trace_solvability_check)
from .errors import (FieldMismatchError, InternalRankError, NotIrreducibleError,
                     PreconditionError, RangeError)
from .field import (FieldElement, FieldParams, OpTally, default_modulus,
                    element_from_index, field_new, index_of, is_irreducible,
                    parse_hex, poly_hex)
from .linalg import BitMatrix
from .rm import RmRow, rm_matrix, rm_row, verify_message_polynomial, \
    verify_power_row_identity
from .solver import (GeneralOutcome, RootKind, SolveOutcome, SolverTables,
                     XorCostReport, artin_schreier_matrix, build_tables,
                     is_solvable, solve_general, solve_reduced, solve_with_cost,
                     tables_for, tables_from_dict, tables_to_dict)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix", "FieldElement", "FieldMismatchError", "FieldParams",
    "GeneralOutcome", "InternalRankError", "MethodCostRow",
    "NotIrreducibleError", "OpTally", "PreconditionError", "RangeError",
    "RmRow", "RootKind", "SolveOutcome", "SolverTables", "XorCostReport",
    "artin_schreier_matrix", "build_tables", "cherly_root", "chien_roots",
    "compare_methods", "default_modulus", "element_from_index", "field_new",
    "find_trace_one_element", "half_trace_root", "index_of", "is_irreducible",
    "is_solvable", "parse_hex", "poly_hex", "rm_matrix", "rm_row",
    "solve_general", "solve_reduced", "solve_with_cost", "tables_for",
    "tables_from_dict", "tables_to_dict", "trace_solvability_check",
    "verify_message_polynomial", "verify_power_row_identity",
]
