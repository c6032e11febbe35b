"""Wall-time benchmarking with bandwidth/flops conversion.

Level-1/2 routines report bytes per second, level-3 routines flops per
second; both divide a frozen per-routine work model by the median wall time
of the timed repetitions. The models are streaming lower bounds: every
operand is counted once (triangular and symmetric routines count only the
stored triangle, n(n+1)/2 elements), and flop counts are the standard
2-flops-per-multiply-add totals.

The reference implementation is timed in process (JIT-accelerated when numba
is present); candidate kernels are timed inside their sandbox child with
buffer restoration between repetitions, so repeated in-place updates cannot
drift the data toward denormals.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field

import numpy as np
import psutil

from . import testgen
from .errors import KernelGaugeError
from .oracle import accel
from .routines import ROUTINES
from .sandbox import IsolatedKernel
from .verifier import growth_factor  # noqa: F401  (re-exported for reports)

BYTES_PER_SEC = "bytes_per_sec"
FLOPS_PER_SEC = "flops_per_sec"

_FLAG_CODES = {"N": 0, "T": 1, "L": 0, "U": 1, "R": 1}


def _physical_cores() -> int:
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1


@dataclass
class BenchConfig:
    level1_n: int = 16777216
    level2_mn: int = 8192
    level3_mnk: int = 2048
    reps: int = 5
    warmups: int = 1
    threads: int = field(default_factory=_physical_cores)
    budget_s: float = 600.0

    def __post_init__(self):
        if min(self.level1_n, self.level2_mn, self.level3_mnk) <= 0:
            raise KernelGaugeError("bench sizes must be positive")
        if self.reps < 3:
            raise KernelGaugeError("need at least 3 reps for a median")
        if self.warmups < 0 or self.threads <= 0:
            raise KernelGaugeError("invalid bench configuration")


@dataclass
class BenchSample:
    routine: str
    param_combo: str
    impl_id: str
    seconds: float
    metric_value: float
    metric_kind: str


def _tri(n: int) -> int:
    return n * (n + 1) // 2


def traffic_model(routine: str, dims: dict) -> int:
    """Minimal memory traffic in bytes for a level-1/2 routine."""
    spec = ROUTINES[routine]
    if spec.level == 3:
        raise KernelGaugeError(f"{routine} is level 3; use flop_model")
    n = dims.get("n", 0)
    m = dims.get("m", 0)
    if routine in ("dasum", "idamax", "dnrm2"):
        return 8 * n
    if routine == "daxpy":
        return 24 * n
    if routine == "ddot":
        return 16 * n
    if routine in ("drot", "drotm"):
        return 32 * n
    if routine == "dgemv":
        if dims.get("trans", "N") == "T":
            return 8 * (m * n + m + 2 * n)
        return 8 * (m * n + n + 2 * m)
    if routine == "dger":
        return 8 * (2 * m * n + m + n)
    if routine == "dsymv":
        return 8 * (_tri(n) + 3 * n)
    if routine == "dsyr":
        return 8 * (2 * _tri(n) + n)
    if routine == "dsyr2":
        return 8 * (2 * _tri(n) + 2 * n)
    if routine in ("dtrmv", "dtrsv"):
        return 8 * (_tri(n) + 2 * n)
    raise KernelGaugeError(f"no traffic model for {routine}")


def flop_model(routine: str, dims: dict) -> int:
    """Standard flop count for a level-3 routine."""
    spec = ROUTINES[routine]
    if spec.level != 3:
        raise KernelGaugeError(f"{routine} is level {spec.level}; use traffic_model")
    m = dims.get("m", 0)
    n = dims.get("n", 0)
    k = dims.get("k", 0)
    side = dims.get("side", "L")
    if routine == "dgemm":
        return 2 * m * n * k
    if routine == "dsymm":
        return 2 * m * m * n if side == "L" else 2 * m * n * n
    if routine == "dsyrk":
        return n * (n + 1) * k
    if routine == "dsyr2k":
        return 2 * n * (n + 1) * k
    if routine in ("dtrmm", "dtrsm"):
        return n * m * m if side == "L" else m * n * n
    raise KernelGaugeError(f"no flop model for {routine}")


def metric_kind(routine: str) -> str:
    return FLOPS_PER_SEC if ROUTINES[routine].level == 3 else BYTES_PER_SEC


def work_model(routine: str, dims: dict) -> int:
    return flop_model(routine, dims) if metric_kind(routine) == FLOPS_PER_SEC \
        else traffic_model(routine, dims)


def make_sample(routine: str, param_combo: str, impl_id: str, dims: dict,
                seconds: float) -> BenchSample:
    """Pure conversion from a measured time to a metric sample."""
    if seconds <= 0:
        raise KernelGaugeError("non-positive measured time")
    return BenchSample(
        routine=routine,
        param_combo=param_combo,
        impl_id=impl_id,
        seconds=seconds,
        metric_value=work_model(routine, dims) / seconds,
        metric_kind=metric_kind(routine),
    )


def bench_dims(routine: str, cfg: BenchConfig, param_combo: str = "") -> dict:
    """The fixed large problem size for a routine, plus model context."""
    spec = ROUTINES[routine]
    if spec.level == 1:
        dims = {"n": cfg.level1_n}
    elif spec.level == 2:
        dims = {d: cfg.level2_mn for d in spec.dims}
    else:
        dims = {d: cfg.level3_mnk for d in spec.dims}
    for part in param_combo.split(","):
        key, _, value = part.strip().partition("=")
        if key in ("trans", "side"):
            dims[key] = value
    return dims


def bench_case(routine: str, param_combo: str, cfg: BenchConfig) -> testgen.TestCase:
    """A TestCase pinned to the bench size with all strides forced to 1."""
    spec = ROUTINES[routine]
    params = []
    combo = {}
    for part in param_combo.split(","):
        key, _, value = part.strip().partition("=")
        if key:
            combo[key] = value
    for ax in spec.param_axes:
        if ax.startswith("inc"):
            continue
        if ax not in combo:
            raise KernelGaugeError(f"{routine}: param combo missing {ax}")
        params.append((ax, combo[ax]))
    dims = bench_dims(routine, cfg)
    sizes = tuple((d, dims[d]) for d in spec.dims)
    strides = tuple((ax, 1) for ax in spec.param_axes if ax.startswith("inc"))
    return testgen.TestCase(routine, tuple(params), sizes, strides)


def _kernel_args(case: testgen.TestCase, problem: dict) -> list:
    """Fortran args with flag chars translated to kernel int codes."""
    args = testgen.fortran_args(case, problem)
    spec = ROUTINES[case.routine]
    coded = []
    for arg_spec, value in zip(spec.args, args):
        if arg_spec.kind == "char":
            coded.append(_FLAG_CODES[str(value).upper()])
        else:
            coded.append(value)
    return coded


def bench_reference(routine: str, param_combo: str, cfg: BenchConfig) -> BenchSample:
    """Time the reference kernel in process and convert to a sample."""
    case = bench_case(routine, param_combo, cfg)
    problem = testgen.init_problem(case)
    spec = ROUTINES[routine]
    originals = {a.name: problem[a.name].copy() for a in spec.out_args}
    kern = accel.accelerated_kernels()[routine]
    args = _kernel_args(case, problem)
    for _ in range(cfg.warmups):
        kern(*args)
    times = []
    for _ in range(cfg.reps):
        for name, orig in originals.items():
            np.copyto(problem[name], orig)
        t0 = time.perf_counter()
        kern(*args)
        t1 = time.perf_counter()
        times.append(t1 - t0)
    dims = bench_dims(routine, cfg, param_combo)
    return make_sample(routine, param_combo, "ref", dims, statistics.median(times))


def bench_kernel(kernel: IsolatedKernel, routine: str, param_combo: str,
                 cfg: BenchConfig, impl_id: str) -> BenchSample:
    """Time a candidate kernel inside its sandbox child."""
    case = bench_case(routine, param_combo, cfg)
    env = {"OMP_NUM_THREADS": str(cfg.threads)}
    times = kernel.bench_case(case, cfg.reps, cfg.warmups, cfg.budget_s, env=env)
    dims = bench_dims(routine, cfg, param_combo)
    return make_sample(routine, param_combo, impl_id, dims,
                       statistics.median(times))
