"""Exhaustive cross-verification suites driven by the CLI ``verify`` command.

Each suite checks one family of claims for one field, over every value
of c where feasible (the batch kernels make full sweeps cheap), and
returns a pass/fail count.  A raised exception inside a suite is
recorded as a failure rather than aborting the run, so an injected
fault in any layer surfaces as a nonzero exit status.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import baselines, kernels, reference, rm, solver
from .field import FieldParams, field_new
from .linalg import BitMatrix

CHIEN_SWEEP_LIMIT = 12
RM_SUITE_LIMIT = 10
SPOT_SAMPLE = 64

# irreducible but non-primitive moduli exercised on top of the defaults
NONPRIMITIVE_MODULI = {4: 0x1F, 6: 0x49}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failed: int = 0
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.checked > 0

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{self.name}: {status} [{self.checked} checks, {self.failed} failed]{extra}"


@dataclass
class VerifyReport:
    results: list = dc_field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        return {
            "all_passed": self.all_passed,
            "suites": [{"name": r.name, "checked": r.checked,
                        "failed": r.failed, "detail": r.detail,
                        "passed": r.passed} for r in self.results],
        }


def _sweep_arrays(field: FieldParams, tables):
    import numpy as np
    sq = field.square_table()
    tr = field.trace_table()
    p_cols = np.array(tables.transform.columns(), dtype=np.uint32)
    syn = kernels.syndrome_table(p_cols, field.m)
    return np, sq, tr, syn


def suite_tables_identity(field: FieldParams) -> SuiteResult:
    """Structural invariants of the precomputed pair."""
    res = SuiteResult(f"m={field.m} tables-identity")
    tables = solver.build_tables(field)
    m = field.m
    checks = [
        tables.zero_row == 0,
        tables.quad_matrix.column(0) == 0,
        tables.quad_matrix.rank() == m - 1,
        tables.transform.rank() == m,
        (tables.transform @ tables.quad_matrix
         == BitMatrix(m, m, [0] + [1 << k for k in range(1, m)])),
    ]
    res.checked = len(checks)
    res.failed = sum(not ok for ok in checks)
    return res


def suite_solver_vs_trace(field: FieldParams) -> SuiteResult:
    """Solvability bit == (trace(c) == 0) for every c; solvable count 2^(m-1)."""
    res = SuiteResult(f"m={field.m} solver-vs-trace")
    tables = solver.build_tables(field)
    np, _, tr, syn = _sweep_arrays(field, tables)
    solvable = (syn & np.uint32(1)) == 0
    agree = int(np.count_nonzero(solvable == (tr == 0)))
    res.checked = field.order + 1
    res.failed = (field.order - agree)
    if int(np.count_nonzero(solvable)) != field.order // 2:
        res.failed += 1
        res.detail = "solvable count != 2^(m-1)"
    return res


def suite_solver_vs_chien(field: FieldParams) -> SuiteResult:
    """Root sets match exhaustive evaluation (full Chien sweep for small m)."""
    res = SuiteResult(f"m={field.m} solver-vs-chien")
    tables = solver.build_tables(field)
    np, sq, tr, syn = _sweep_arrays(field, tables)
    n = field.order
    solvable = (syn & np.uint32(1)) == 0
    if field.m <= CHIEN_SWEEP_LIMIT:
        g = kernels.quad_image(sq)
        counts, low = kernels.root_pairs_from_image(g)
        ok = np.where(solvable,
                      (counts == 2) & (low == (syn & np.uint32(~np.uint32(1)))),
                      counts == 0)
        res.checked = n
        res.failed = int(np.count_nonzero(~ok))
    else:
        # substitution check: x0^2 + x0 == c for the claimed root
        x0 = (syn & ~np.uint32(1)).astype(np.uint32)
        cs = np.arange(n, dtype=np.uint32)
        subst_ok = (sq[x0] ^ x0) == cs
        ok = np.where(solvable, subst_ok, tr == 1)
        res.checked = n
        res.failed = int(np.count_nonzero(~ok))
    # spot-check the per-c oracle operation against the sweep
    stride = max(n // SPOT_SAMPLE, 1)
    for c in range(0, n, stride):
        el = field.element(c)
        roots = {r.index for r in baselines.chien_roots(
            field, (el, field.one, field.one))}
        out = solver.solve_reduced(tables, el)
        expect = {out.roots[0].index, out.roots[1].index} if out.solvable else set()
        res.checked += 1
        if roots != expect:
            res.failed += 1
    return res


def suite_root_contract(field: FieldParams) -> SuiteResult:
    """Returned pairs satisfy f(x)=0, x0+x1=1, bit 0 of x0 clear; all c."""
    res = SuiteResult(f"m={field.m} root-contract")
    tables = solver.build_tables(field)
    np, sq, _, syn = _sweep_arrays(field, tables)
    n = field.order
    solvable = (syn & np.uint32(1)) == 0
    cs = np.arange(n, dtype=np.uint32)
    x0 = syn  # canonical root: syndrome itself, bit 0 clear when solvable
    x1 = syn | np.uint32(1)
    ok = ((sq[x0] ^ x0) == cs) & ((sq[x1] ^ x1) == cs) & ((x0 & 1) == 0)
    res.checked = n
    res.failed = int(np.count_nonzero(solvable & ~ok))
    # scalar spot checks through the public API
    stride = max(n // SPOT_SAMPLE, 1)
    for c in range(0, n, stride):
        el = field.element(c)
        out = solver.solve_reduced(tables, el)
        res.checked += 1
        if out.solvable:
            x0e, x1e = out.roots
            good = (x0e * x0e + x0e + el).index == 0
            good &= (x1e * x1e + x1e + el).index == 0
            good &= (x0e + x1e).index == 1 and x0e.bit(0) == 0
            if not good:
                res.failed += 1
    return res


def suite_xor_bounds(field: FieldParams) -> SuiteResult:
    """Cost model stays within (m-1)^2 XORs / ceil(log2 m) depth; check cost m-1."""
    res = SuiteResult(f"m={field.m} xor-bounds")
    tables = solver.build_tables(field)
    import numpy as np
    m = field.m
    n = field.order
    cs = np.arange(n, dtype=np.uint32)
    k = kernels.popcounts(cs)
    seq = np.maximum(k - 1, 0) * (m - 1)
    depth_bound = max(m - 1, 1).bit_length()
    depth = np.array([(int(max(kk, 1)) - 1).bit_length() for kk in k])
    check_k = kernels.popcounts(cs & np.uint32(tables.criterion_row))
    check_xors = np.maximum(check_k - 1, 0)
    res.checked = 3 * n
    res.failed = (int(np.count_nonzero(seq > (m - 1) ** 2))
                  + int(np.count_nonzero(depth > depth_bound))
                  + int(np.count_nonzero(check_xors > m - 1)))
    # instrumented spot checks through the public API
    inst = field_new(m, field.modulus, op_counters_enabled=True)
    itables = solver.build_tables(inst)
    stride = max(n // SPOT_SAMPLE, 1)
    for c in range(0, n, stride):
        el = inst.element(c)
        _, report = solver.solve_with_cost(itables, el)
        inst.tally.reset()
        solver.is_solvable(itables, el)
        res.checked += 1
        if (report.sequential_xors > (m - 1) ** 2 or report.depth > depth_bound
                or inst.tally.xors > m - 1):
            res.failed += 1
    return res


def suite_rm_identity(field: FieldParams) -> SuiteResult:
    """Power-of-two evaluation identity and message-polynomial form."""
    res = SuiteResult(f"m={field.m} rm-identity")
    for j in range(field.m):
        res.checked += 1
        if not rm.verify_power_row_identity(field, 1 << j):
            res.failed += 1
    # message polynomial: every output bit, sampled c
    for ell in range(field.m):
        for c in (0, 1, field.order // 2, field.order - 1):
            res.checked += 1
            if not rm.verify_message_polynomial(field, field.element(c), ell):
                res.failed += 1
    return res


def suite_reference_fixtures() -> SuiteResult:
    """The published m=7 example: exact B, and its P satisfies the identity."""
    res = SuiteResult("m=7 reference-fixtures")
    f = field_new(7, reference.M7_MODULUS)
    built = solver.artin_schreier_matrix(f)
    res.checked += 1
    if built.row_bits != reference.M7_QUAD_MATRIX_ROWS:
        res.failed += 1
        res.detail = "worked-example B mismatch"
    ref_p = BitMatrix(7, 7, reference.M7_TRANSFORM_ROWS)
    expected = BitMatrix(7, 7, [0] + [1 << k for k in range(1, 7)])
    res.checked += 1
    if ref_p @ built != expected:
        res.failed += 1
        res.detail = (res.detail + "; " if res.detail else "") + \
            "worked-example P identity mismatch"
    res.checked += 1
    own = solver.build_tables(f)
    if own.transform @ built != expected:
        res.failed += 1
    return res


_PER_FIELD_SUITES = (
    suite_tables_identity,
    suite_solver_vs_trace,
    suite_solver_vs_chien,
    suite_root_contract,
    suite_xor_bounds,
)


def run_verify(ms=None, exhaustive_limit: int = 16) -> VerifyReport:
    """Run every suite for the requested degrees (defaults: 2..limit)."""
    report = VerifyReport()
    if ms is None:
        ms = range(2, exhaustive_limit + 1)
    for m in ms:
        fields = [field_new(m)]
        if m in NONPRIMITIVE_MODULI:
            fields.append(field_new(m, NONPRIMITIVE_MODULI[m]))
        for f in fields:
            tag = "" if f.modulus == field_new(m).modulus else " (non-primitive modulus)"
            for suite in _PER_FIELD_SUITES:
                try:
                    result = suite(f)
                except Exception as exc:  # injected faults survive as failures
                    result = SuiteResult(f"m={m} {suite.__name__}", checked=1,
                                         failed=1, detail=f"{type(exc).__name__}: {exc}")
                if tag:
                    result.name += tag
                report.results.append(result)
            if f.m <= RM_SUITE_LIMIT:
                try:
                    result = suite_rm_identity(f)
                except Exception as exc:
                    result = SuiteResult(f"m={m} rm-identity", checked=1,
                                         failed=1, detail=f"{type(exc).__name__}: {exc}")
                if tag:
                    result.name += tag
                report.results.append(result)
    if any(m == 7 for m in ms):
        try:
            report.results.append(suite_reference_fixtures())
        except Exception as exc:
            report.results.append(SuiteResult("m=7 reference-fixtures", checked=1,
                                              failed=1,
                                              detail=f"{type(exc).__name__}: {exc}"))
    return report
