"""Exhaustive per-routine test matrix: parameter axes x size grid x strides.

The default grids are frozen so the per-routine case counts are stable
contracts (dgemv enumerates exactly 128 cases and dtrsm exactly 256). Sizes
mix squares, tall/wide rectangles, a zero dimension, and values straddling
power-of-two boundaries. Problem data is uniform on the open interval (0, 1),
seeded per case, so every case is reproducible in any process.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import KernelGaugeError
from .routines import (
    AXIS_VALUES, ROUTINES, RoutineSpec, axis_for_arg, matrix_shape, vector_length,
)

_BASE = (1, 2, 3, 7, 16, 31, 32, 33)

_L2_MN = (
    (1, 1), (2, 2), (3, 3), (7, 7), (16, 16), (31, 31), (32, 32), (33, 33),
    (5, 2), (16, 7), (32, 16), (33, 32),       # tall, m > n
    (2, 5), (7, 16),                           # wide, m < n
    (0, 4), (4, 0),                            # degenerate
)

_L3_MNK = (
    (1, 1, 1), (2, 2, 2), (3, 3, 3), (7, 7, 7),
    (16, 16, 16), (31, 31, 31), (32, 32, 32), (33, 33, 33),
    (5, 2, 3), (2, 5, 3), (16, 7, 9), (7, 16, 5), (32, 16, 8), (16, 32, 24),
    (0, 4, 2), (4, 3, 0),
)

_L3_NK = (
    (1, 1), (2, 2), (3, 3), (7, 7), (16, 16), (31, 31), (32, 32), (33, 33),
    (5, 2), (16, 7), (32, 16),
    (2, 5), (7, 16),
    (33, 31),
    (0, 4), (4, 0),
)

_L2_N = (0, 1, 2, 3, 5, 7, 8, 11, 16, 17, 24, 31, 32, 33, 48, 64)

_STRIDES = (1, 2)
_STRIDES_STRICT = (1, 2, -1, -2)

# Modified-Givens flags cycled across drotm cases (not a Table-II axis).
_ROTM_FLAGS = (-2.0, -1.0, 0.0, 1.0)


@dataclass(frozen=True)
class SizeProfile:
    """The frozen dimension grids, one per dimension signature."""

    l1_n: tuple[int, ...] = _BASE
    l2_mn: tuple[tuple[int, int], ...] = _L2_MN
    l2_n: tuple[int, ...] = _L2_N
    l3_mnk: tuple[tuple[int, int, int], ...] = _L3_MNK
    l3_mn: tuple[tuple[int, int], ...] = _L2_MN
    l3_nk: tuple[tuple[int, int], ...] = _L3_NK
    strides: tuple[int, ...] = _STRIDES

    def capped(self, max_dim: int) -> "SizeProfile":
        """Drop every grid entry with a dimension above ``max_dim``."""
        def keep1(vals):
            return tuple(v for v in vals if v <= max_dim)

        def keepn(tuples):
            return tuple(t for t in tuples if max(t) <= max_dim)

        return replace(
            self,
            l1_n=keep1(self.l1_n),
            l2_mn=keepn(self.l2_mn),
            l2_n=keep1(self.l2_n),
            l3_mnk=keepn(self.l3_mnk),
            l3_mn=keepn(self.l3_mn),
            l3_nk=keepn(self.l3_nk),
        )

    def dims_for(self, spec: RoutineSpec) -> list[dict]:
        if spec.level == 1:
            return [{"n": n} for n in self.l1_n]
        if spec.dims == ("m", "n") and spec.level == 2:
            return [{"m": m, "n": n} for m, n in self.l2_mn]
        if spec.dims == ("n",):
            return [{"n": n} for n in self.l2_n]
        if spec.dims == ("m", "n", "k"):
            return [{"m": m, "n": n, "k": k} for m, n, k in self.l3_mnk]
        if spec.dims == ("m", "n"):
            return [{"m": m, "n": n} for m, n in self.l3_mn]
        if spec.dims == ("n", "k"):
            return [{"n": n, "k": k} for n, k in self.l3_nk]
        raise KernelGaugeError(f"no grid for dims signature {spec.dims}")


def default_size_profile(strict_strides: bool = False) -> SizeProfile:
    """Grids sized so dgemv yields 128 cases and dtrsm 256."""
    strides = _STRIDES_STRICT if strict_strides else _STRIDES
    return SizeProfile(strides=strides)


@dataclass(frozen=True)
class TestCase:
    """One fully bound invocation of a routine."""

    routine: str
    params: tuple[tuple[str, str], ...]   # (axis, value) for char axes
    dims: tuple[tuple[str, int], ...]
    strides: tuple[tuple[str, int], ...]  # ("incx"/"incy", value)

    @property
    def case_id(self) -> str:
        bits = [self.routine]
        bits += [f"{k}={v}" for k, v in self.params]
        bits += [f"{k}={v}" for k, v in self.dims]
        bits += [f"{k}={v}" for k, v in self.strides]
        return ";".join(bits)

    @property
    def seed(self) -> int:
        digest = hashlib.blake2b(self.case_id.encode(), digest_size=8).digest()
        return int.from_bytes(digest, "little")

    @property
    def combo_id(self) -> str:
        """Parameter combination this case belongs to (strides excluded)."""
        if not self.params:
            return ""
        return ", ".join(f"{k}={v}" for k, v in self.params)

    def params_dict(self) -> dict:
        return dict(self.params)

    def dims_dict(self) -> dict:
        return dict(self.dims)

    def strides_dict(self) -> dict:
        return dict(self.strides)


def param_combos(spec: RoutineSpec) -> list[dict]:
    """Char-axis combinations in deterministic Table-II order."""
    axes = [ax for ax in spec.param_axes if ax in AXIS_VALUES]
    combos = []
    for values in itertools.product(*(AXIS_VALUES[ax] for ax in axes)):
        combos.append(dict(zip(axes, values)))
    return combos


def enumerate_cases(spec: RoutineSpec | str, profile: SizeProfile | None = None) -> list[TestCase]:
    """Full Cartesian product: char axes x size grid x stride axes."""
    if isinstance(spec, str):
        spec = ROUTINES[spec]
    if profile is None:
        profile = default_size_profile()
    stride_axes = [ax for ax in spec.param_axes if ax.startswith("inc")]
    cases = []
    for combo in param_combos(spec):
        for dims in profile.dims_for(spec):
            for svals in itertools.product(*(profile.strides for _ in stride_axes)):
                cases.append(TestCase(
                    routine=spec.name,
                    params=tuple(combo.items()),
                    dims=tuple(dims.items()),
                    strides=tuple(zip(stride_axes, svals)),
                ))
    return cases


def _draw_open_unit(rng: np.random.Generator, size: int) -> np.ndarray:
    """Uniform draws strictly inside (0, 1); exact 0.0 draws are redrawn."""
    out = rng.random(size)
    while True:
        zeros = out == 0.0
        if not zeros.any():
            return out
        out[zeros] = rng.random(int(zeros.sum()))


def init_problem(case: TestCase) -> dict:
    """Bind all input buffers and scalars for a case, from its seed.

    Returns a dict keyed by Fortran argument name holding float64 arrays for
    vector/matrix/dparam payloads and floats for scalars. Triangular-solve
    matrices get a +order diagonal shift so the systems stay well
    conditioned.
    """
    spec = ROUTINES[case.routine]
    params = case.params_dict()
    dims = case.dims_dict()
    strides = case.strides_dict()
    rng = np.random.default_rng(case.seed)
    problem: dict = {}

    for arg in spec.args:
        if case.routine == "drot" and arg.name in ("c", "s"):
            continue
        if arg.kind == "scalar":
            problem[arg.name] = float(_draw_open_unit(rng, 1)[0])
        elif arg.kind == "vec":
            n = vector_length(spec, arg.name, params, dims)
            inc = strides.get("incx" if arg.name == "x" else "incy", 1)
            size = 0 if n <= 0 else 1 + (n - 1) * abs(inc)
            problem[arg.name] = _draw_open_unit(rng, size)
        elif arg.kind == "mat":
            rows, cols = matrix_shape(spec, arg.name, params, dims)
            ld = max(1, rows)
            problem[arg.name] = _draw_open_unit(rng, ld * max(0, cols))
        elif arg.kind == "param5":
            # Cycle the flag with the vector length so all four encodings
            # appear in every grid; the H entries come from the seed stream.
            flag = _ROTM_FLAGS[dims["n"] % len(_ROTM_FLAGS)]
            h = _draw_open_unit(rng, 4)
            problem[arg.name] = np.array([flag, h[0], h[1], h[2], h[3]])

    if case.routine == "drot":
        theta = float(_draw_open_unit(rng, 1)[0]) * (np.pi / 2.0)
        problem["c"] = float(np.cos(theta))
        problem["s"] = float(np.sin(theta))

    if case.routine in ("dtrsv", "dtrsm"):
        name = "a"
        rows, cols = matrix_shape(spec, name, params, dims)
        ld = max(1, rows)
        a = problem[name]
        for j in range(min(rows, cols)):
            a[j + j * ld] += rows
    return problem


def fortran_args(case: TestCase, problem: dict) -> list:
    """Assemble the routine's positional argument list from a bound problem."""
    spec = ROUTINES[case.routine]
    params = case.params_dict()
    dims = case.dims_dict()
    strides = case.strides_dict()
    args = []
    for arg in spec.args:
        if arg.kind == "char":
            axis = axis_for_arg(spec, arg)
            args.append(params.get(axis, "N"))
        elif arg.kind == "dim":
            args.append(dims[arg.name])
        elif arg.kind == "inc":
            args.append(strides.get(arg.name, 1))
        elif arg.kind == "ld":
            mat = {"lda": "a", "ldb": "b", "ldc": "c"}[arg.name]
            rows, _ = matrix_shape(spec, mat, params, dims)
            args.append(max(1, rows))
        else:
            args.append(problem[arg.name])
    return args


# --- manifest serialization -------------------------------------------------

def manifest_lines(cases: list[TestCase]) -> list[str]:
    return [f"{c.case_id} seed={c.seed}" for c in cases]


def write_manifest(cases: list[TestCase], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for line in manifest_lines(cases):
            fh.write(line + "\n")


def parse_case_id(case_id: str) -> TestCase:
    parts = case_id.split(";")
    routine = parts[0]
    spec = ROUTINES[routine]
    params, dims, strides = [], [], []
    for part in parts[1:]:
        key, _, value = part.partition("=")
        if key.startswith("inc"):
            strides.append((key, int(value)))
        elif key in ("m", "n", "k"):
            dims.append((key, int(value)))
        else:
            params.append((key, value))
    return TestCase(routine, tuple(params), tuple(dims), tuple(strides))


def read_manifest(path) -> list[TestCase]:
    cases = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            case_id, _, seed_part = line.rpartition(" seed=")
            case = parse_case_id(case_id)
            if seed_part and int(seed_part) != case.seed:
                raise KernelGaugeError(f"seed mismatch for case {case_id}")
            cases.append(case)
    return cases
