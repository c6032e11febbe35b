"""Reference self-verification: two-route equivalence and poison sweeps.

Used by both the CLI (``kgauge oracle-selftest``) and the acceptance tests.
The equivalence half verifies the loop reference against the independent
dense route over the full default matrix; the poison half plants 1e30 in
storage a routine must never touch (the opposite triangle, the stored
diagonal under unit-diag) and demands bit-identical results and untouched
poison.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import oracle, plainref, testgen, verifier
from .routines import ROUTINES, matrix_shape

POISON = 1.0e30

# Routines with a triangle that must stay unread, and their A argument.
UPLO_ROUTINES = ("dsymv", "dsyr", "dsyr2", "dtrmv", "dtrsv",
                 "dsymm", "dsyrk", "dsyr2k", "dtrmm", "dtrsm")
DIAG_ROUTINES = ("dtrmv", "dtrsv", "dtrmm", "dtrsm")


@dataclass
class RoutineReport:
    routine: str
    cases: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def two_oracle_report(profile: testgen.SizeProfile | None = None,
                      routines=None,
                      model: verifier.ErrorModel | None = None) -> list[RoutineReport]:
    """Loop reference vs dense route over the (possibly capped) matrix."""
    profile = profile or testgen.default_size_profile()
    model = model or verifier.ErrorModel()
    reports = []
    for name in routines or ROUTINES:
        cases = testgen.enumerate_cases(name, profile)
        verdict = verifier.verify_candidate(
            verifier.CallableKernel(plainref.call, name="plainref"),
            name, cases, model=model, stop_on_first_failure=True)
        report = RoutineReport(name, len(cases))
        if not verdict.passed:
            report.failures.append(
                f"{verdict.kind.value} at {verdict.failing_case}: {verdict.detail}")
        reports.append(report)
    return reports


def _poison_variants(name: str) -> list[dict]:
    """Param combos for which some A storage must stay untouched."""
    spec = ROUTINES[name]
    variants = []
    for combo in testgen.param_combos(spec):
        if "uplo" in combo or combo.get("diag") == "U":
            variants.append(combo)
    return variants


def _poison_indices(name: str, params: dict, dims: dict) -> np.ndarray:
    """Flat storage indices of A that the routine must never read or write."""
    rows, cols = matrix_shape(ROUTINES[name], "a", params, dims)
    ld = max(1, rows)
    idx = []
    uplo = params.get("uplo")
    diag = params.get("diag")
    for j in range(cols):
        for i in range(rows):
            if uplo == "L" and i < j:
                idx.append(i + j * ld)
            elif uplo == "U" and i > j:
                idx.append(i + j * ld)
            elif i == j and diag == "U":
                idx.append(i + j * ld)
    return np.array(sorted(set(idx)), dtype=np.int64)


def _poison_cases(name: str) -> list[testgen.TestCase]:
    spec = ROUTINES[name]
    sizes = ({"n": 7}, {"n": 32}) if spec.dims == ("n",) else \
        ({"m": 7, "n": 5}, {"m": 16, "n": 16}) if spec.dims == ("m", "n") else \
        ({"n": 7, "k": 5}, {"n": 16, "k": 16})
    stride_axes = [ax for ax in spec.param_axes if ax.startswith("inc")]
    cases = []
    for combo in _poison_variants(name):
        for dims in sizes:
            cases.append(testgen.TestCase(
                name, tuple(combo.items()), tuple(dims.items()),
                tuple((ax, 1) for ax in stride_axes)))
    return cases


def run_poison_case(name: str, case: testgen.TestCase,
                    call=oracle.call) -> list[str]:
    """Run one case clean and poisoned; return failure descriptions."""
    failures = []
    params = case.params_dict()
    dims = case.dims_dict()
    spec = ROUTINES[name]

    clean = testgen.init_problem(case)
    clean_args = testgen.fortran_args(case, clean)
    clean_value = call(name, clean_args)

    poisoned = testgen.init_problem(case)
    idx = _poison_indices(name, params, dims)
    poisoned["a"][idx] = POISON
    poisoned_args = testgen.fortran_args(case, poisoned)
    poisoned_value = call(name, poisoned_args)

    for arg in spec.out_args:
        got = poisoned[arg.name]
        want = clean[arg.name].copy()
        if arg.name == "a":
            want[idx] = POISON  # untouched poison, referenced part clean
        if not np.array_equal(got, want):
            failures.append(f"{case.case_id}: output {arg.name} differs under poison")
    if spec.returns_value and not (clean_value == poisoned_value):
        failures.append(f"{case.case_id}: return value differs under poison")
    if "a" not in [a.name for a in spec.out_args]:
        if idx.size and not np.all(poisoned["a"][idx] == POISON):
            failures.append(f"{case.case_id}: poisoned storage was written")
    return failures


def poison_report(routines=None, call=oracle.call) -> list[RoutineReport]:
    reports = []
    for name in routines or UPLO_ROUTINES:
        report = RoutineReport(name, 0)
        for case in _poison_cases(name):
            report.cases += 1
            report.failures.extend(run_poison_case(name, case, call))
        reports.append(report)
    return reports


def run_selftest(max_dim: int | None = None, routines=None) -> tuple[bool, list[str]]:
    """Full self-test; returns (all passed, printable report lines)."""
    profile = testgen.default_size_profile()
    if max_dim is not None:
        profile = profile.capped(max_dim)
    lines = []
    ok = True
    lines.append("== two-route equivalence ==")
    for report in two_oracle_report(profile, routines):
        status = "PASS" if report.ok else "FAIL"
        lines.append(f"  {report.routine:8s} {report.cases:4d} cases  {status}")
        for failure in report.failures:
            lines.append(f"      {failure}")
        ok = ok and report.ok
    lines.append("== poison (non-referenced storage) ==")
    poison_routines = [r for r in (routines or UPLO_ROUTINES) if r in UPLO_ROUTINES]
    for report in poison_report(poison_routines):
        status = "PASS" if report.ok else "FAIL"
        lines.append(f"  {report.routine:8s} {report.cases:4d} cases  {status}")
        for failure in report.failures:
            lines.append(f"      {failure}")
        ok = ok and report.ok
    lines.append("result: " + ("PASS" if ok else "FAIL"))
    return ok, lines
