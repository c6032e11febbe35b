"""Classify candidate kernels against the reference over the test matrix.

The numerical check is an infinity-norm relative error normalized by machine
epsilon and a per-routine error-growth factor, so a verdict threshold of a
few units accepts any reasonable summation reordering while rejecting
actually-wrong arithmetic by many orders of magnitude.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import oracle, testgen
from .errors import BlasArgumentError
from .routines import AXIS_VALUES, ROUTINES, RoutineSpec

EPS = float(np.finfo(np.float64).eps)

# Extra allowance for triangular solves: forward error scales with the
# (bounded, thanks to diagonal dominance) condition of the system.
SOLVE_ALLOWANCE = 10.0


def growth_factor(routine: str, dims: dict) -> float:
    """Forward-error growth: the length of the longest accumulation chain."""
    n = dims.get("n", 0)
    m = dims.get("m", 0)
    k = dims.get("k", 0)
    if routine in ("dasum", "ddot", "dnrm2", "idamax"):
        return float(max(1, n))
    if routine in ("daxpy", "drot", "drotm"):
        return 4.0
    if routine == "dgemv":
        return float(max(1, n, m))
    if routine in ("dger", "dsymv", "dsyr", "dsyr2", "dtrmv"):
        return float(max(1, n))
    if routine == "dtrsv":
        return float(max(1, n)) * SOLVE_ALLOWANCE
    if routine == "dgemm":
        return float(max(1, k))
    if routine == "dsymm":
        return float(max(1, m, n))
    if routine in ("dsyrk", "dsyr2k"):
        return float(max(1, k))
    if routine == "dtrmm":
        return float(max(1, m, n))
    if routine == "dtrsm":
        return float(max(1, m, n)) * SOLVE_ALLOWANCE
    raise KeyError(routine)


@dataclass
class ErrorModel:
    tol_multiplier: float = 3.0
    growth: Callable[[str, dict], float] = growth_factor


class VerdictKind(enum.Enum):
    PASS = "Pass"
    COMPILE_ERROR = "CompileError"
    LINK_ERROR = "LinkError"
    CRASH = "Crash"
    TIMEOUT = "Timeout"
    MARKER_MISSING = "MarkerMissing"
    NUMERICAL_ERROR = "NumericalError"
    ARG_CHECK_MISMATCH = "ArgCheckMismatch"


@dataclass
class Verdict:
    kind: VerdictKind
    failing_case: str | None = None
    detail: str = ""
    max_rel_err: float | None = None
    combo_pass: dict[str, bool] | None = None
    arg_check_issues: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.kind is VerdictKind.PASS


@dataclass
class CaseOutcome:
    """What happened when a kernel ran one case (produced by an adapter)."""

    case_id: str
    status: str = "ok"              # ok | crash | timeout | error
    outputs: dict | None = None     # arg name -> float64 array, "_result" -> value
    marker: bool | None = None      # None when the marker check does not apply
    detail: str = ""
    xerbla: list[str] = field(default_factory=list)


def reference_outputs(case: testgen.TestCase) -> dict:
    """Run the reference on a freshly initialized problem; return out buffers."""
    problem = testgen.init_problem(case)
    args = testgen.fortran_args(case, problem)
    value = oracle.call(case.routine, args)
    spec = ROUTINES[case.routine]
    out = {arg.name: problem[arg.name] for arg in spec.out_args}
    if spec.returns_value:
        out["_result"] = np.array([float(value)])
    return out


def relative_error(result: dict, reference: dict, case: testgen.TestCase,
                   model: ErrorModel | None = None) -> float:
    """Normalized error: ||result - reference||_inf / (growth * eps * scale).

    Non-finite candidate values force +inf. idamax indices are compared via
    the same machinery; any index mismatch is astronomically above threshold.
    """
    model = model or ErrorModel()
    diff = 0.0
    scale = 0.0
    for name, ref in reference.items():
        ref = np.asarray(ref, dtype=np.float64)
        got = np.asarray(result.get(name), dtype=np.float64) if name in result else None
        if got is None or got.shape != ref.shape:
            return float("inf")
        if ref.size == 0:
            continue
        if not np.isfinite(got).all():
            return float("inf")
        diff = max(diff, float(np.max(np.abs(got - ref))))
        scale = max(scale, float(np.max(np.abs(ref))))
    if diff == 0.0:
        return 0.0
    if scale == 0.0:
        scale = 1.0
    g = model.growth(case.routine, case.dims_dict())
    return diff / (g * EPS * scale)


class KernelAdapter:
    """Runs a kernel over cases; implementations decide the isolation level.

    Adapters must yield exactly one :class:`CaseOutcome` per case, in case
    order, even after crashes or timeouts (isolated adapters restart their
    child process and continue with the next case).
    """

    name = "kernel"

    def run_cases(self, cases: Sequence[testgen.TestCase]) -> Iterable[CaseOutcome]:
        raise NotImplementedError


class CallableKernel(KernelAdapter):
    """In-process adapter around Fortran-style callables (trusted code only)."""

    def __init__(self, func_map, name="callable"):
        # func_map: callable(routine_name, args) -> value, or dict name->fn
        self._funcs = func_map
        self.name = name

    def run_cases(self, cases):
        for case in cases:
            problem = testgen.init_problem(case)
            args = testgen.fortran_args(case, problem)
            spec = ROUTINES[case.routine]
            try:
                if callable(self._funcs):
                    value = self._funcs(case.routine, args)
                else:
                    value = self._funcs[case.routine](*args)
            except BlasArgumentError as exc:
                yield CaseOutcome(case.case_id, status="error",
                                  detail=str(exc), xerbla=[f"{exc.routine}:{exc.index}"])
                continue
            except Exception as exc:
                yield CaseOutcome(case.case_id, status="error", detail=repr(exc))
                continue
            outputs = {arg.name: problem[arg.name] for arg in spec.out_args}
            if spec.returns_value:
                outputs["_result"] = np.array([float(value)])
            yield CaseOutcome(case.case_id, outputs=outputs)


def oracle_adapter() -> CallableKernel:
    return CallableKernel(oracle.call, name="oracle")


def verify_candidate(kernel: KernelAdapter, spec: RoutineSpec | str,
                     cases: Sequence[testgen.TestCase],
                     model: ErrorModel | None = None,
                     stop_on_first_failure: bool = True,
                     strict_arg_checks: bool = False) -> Verdict:
    """Pass iff every case passes; the first failure names the verdict.

    With ``stop_on_first_failure`` false, all cases run and per-parameter-
    combination pass/fail is recorded (needed to decide benchmark
    eligibility); the verdict kind still reflects the first failing case in
    manifest order.
    """
    if isinstance(spec, str):
        spec = ROUTINES[spec]
    model = model or ErrorModel()
    combo_pass: dict[str, bool] = {}
    first_failure: tuple[VerdictKind, str, str, float | None] | None = None
    max_rel_err = 0.0

    outcomes = kernel.run_cases(cases)
    for case, outcome in zip(cases, outcomes):
        combo = case.combo_id
        combo_pass.setdefault(combo, True)
        failure: tuple[VerdictKind, str, str, float | None] | None = None

        if outcome.status == "crash":
            failure = (VerdictKind.CRASH, case.case_id, outcome.detail, None)
        elif outcome.status == "timeout":
            failure = (VerdictKind.TIMEOUT, case.case_id, outcome.detail, None)
        elif outcome.status == "error":
            failure = (VerdictKind.CRASH, case.case_id,
                       outcome.detail or "kernel reported an error", None)
        elif outcome.marker is False:
            failure = (VerdictKind.MARKER_MISSING, case.case_id,
                       'no "[gptblas]" marker on stdout', None)
        else:
            err = relative_error(outcome.outputs or {}, reference_outputs(case),
                                 case, model)
            if np.isfinite(err):
                max_rel_err = max(max_rel_err, err)
            if err > model.tol_multiplier:
                failure = (VerdictKind.NUMERICAL_ERROR, case.case_id,
                           f"normalized error {err:.3g} > {model.tol_multiplier}",
                           err)

        if failure is not None:
            combo_pass[combo] = False
            if first_failure is None:
                first_failure = failure
            if stop_on_first_failure:
                break

    arg_issues = _arg_check_probes(kernel, spec) if spec.level > 1 else []

    if first_failure is not None:
        kind, case_id, detail, err = first_failure
        return Verdict(kind, failing_case=case_id, detail=detail,
                       max_rel_err=err if err is not None else None,
                       combo_pass=combo_pass, arg_check_issues=arg_issues)
    if arg_issues and strict_arg_checks:
        return Verdict(VerdictKind.ARG_CHECK_MISMATCH, detail="; ".join(arg_issues),
                       combo_pass=combo_pass, arg_check_issues=arg_issues)
    return Verdict(VerdictKind.PASS, max_rel_err=max_rel_err,
                   combo_pass=combo_pass, arg_check_issues=arg_issues)


def _arg_check_probes(kernel: KernelAdapter, spec: RoutineSpec) -> list[str]:
    """Feed invalid dimensions and look for an error-handler reaction.

    Most generated codes omit xerbla-style checking, so by default the result
    is recorded, not failed. Probes only target level-2/3 routines: the
    reference level-1 routines have no error handler to mirror.
    """
    probe = _invalid_probe_case(spec)
    if probe is None:
        return []
    try:
        outcome = next(iter(kernel.run_cases([probe])), None)
    except Exception as exc:  # probes must never kill verification
        return [f"arg-check probe failed to run: {exc}"]
    if outcome is None:
        return ["arg-check probe produced no outcome"]
    if outcome.xerbla or outcome.status == "error":
        return []
    return [f"invalid dims accepted silently ({probe.case_id})"]


def _invalid_probe_case(spec: RoutineSpec) -> testgen.TestCase | None:
    if spec.level == 1:
        return None
    params = tuple((ax, AXIS_VALUES[ax][0]) for ax in spec.param_axes
                   if ax in AXIS_VALUES)
    dims = tuple((d, -1 if d == spec.dims[0] else 2) for d in spec.dims)
    strides = tuple((ax, 1) for ax in spec.param_axes if ax.startswith("inc"))
    return testgen.TestCase(spec.name, params, dims, strides)
