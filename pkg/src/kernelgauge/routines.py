"""Registry of the 20 target double-precision BLAS routines.

Each entry records the routine's level, its varied parameter axes, its
dimension signature, and the full Fortran argument list. Everything that
marshals arguments (test generation, binary case files, the child-process
ABI, xerbla argument indices) is driven from this table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import KernelGaugeError

# Values each parameter axis may take in the default test matrix.
AXIS_VALUES = {
    "trans": ("N", "T"),
    "transa": ("N", "T"),
    "transb": ("N", "T"),
    "uplo": ("L", "U"),
    "side": ("L", "R"),
    "diag": ("N", "U"),
}

# Argument kinds: how a Fortran argument slot is marshaled.
#   char    one-character flag (an axis name, or fixed for untested axes)
#   dim     problem dimension (m/n/k)
#   inc     vector stride
#   ld      leading dimension
#   scalar  one float64 (rides in the payload as a 1-element array)
#   vec     strided float64 vector
#   mat     column-major float64 matrix
#   param5  the 5-element dparam block of drotm

CHAR, DIM, INC, LD, SCALAR, VEC, MAT, PARAM5 = (
    "char", "dim", "inc", "ld", "scalar", "vec", "mat", "param5",
)


@dataclass(frozen=True)
class Arg:
    name: str
    kind: str
    out: bool = False


@dataclass(frozen=True)
class RoutineSpec:
    name: str
    routine_id: int
    level: int
    param_axes: tuple[str, ...]     # varied axes, in Table-II order
    dims: tuple[str, ...]           # dimension names used by the routine
    args: tuple[Arg, ...]           # full Fortran argument list, in order
    returns_value: bool = False

    @property
    def payload_args(self) -> tuple[Arg, ...]:
        """Arguments that ride in the binary payload, in signature order."""
        return tuple(a for a in self.args if a.kind in (SCALAR, VEC, MAT, PARAM5))

    @property
    def out_args(self) -> tuple[Arg, ...]:
        return tuple(a for a in self.args if a.out)

    def arg_index(self, name: str) -> int:
        """1-based Fortran position of an argument (xerbla convention)."""
        for i, a in enumerate(self.args, start=1):
            if a.name == name:
                return i
        raise KeyError(name)


def _spec(name, rid, level, axes, dims, args, returns_value=False):
    return RoutineSpec(name, rid, level, tuple(axes), tuple(dims), tuple(args),
                       returns_value)


ROUTINES: dict[str, RoutineSpec] = {}

for spec in [
    _spec("dasum", 0, 1, ["incx"], ["n"],
          [Arg("n", DIM), Arg("x", VEC), Arg("incx", INC)], returns_value=True),
    _spec("daxpy", 1, 1, ["incx", "incy"], ["n"],
          [Arg("n", DIM), Arg("alpha", SCALAR), Arg("x", VEC), Arg("incx", INC),
           Arg("y", VEC, out=True), Arg("incy", INC)]),
    _spec("ddot", 2, 1, ["incx", "incy"], ["n"],
          [Arg("n", DIM), Arg("x", VEC), Arg("incx", INC),
           Arg("y", VEC), Arg("incy", INC)], returns_value=True),
    _spec("idamax", 3, 1, ["incx"], ["n"],
          [Arg("n", DIM), Arg("x", VEC), Arg("incx", INC)], returns_value=True),
    _spec("dnrm2", 4, 1, ["incx"], ["n"],
          [Arg("n", DIM), Arg("x", VEC), Arg("incx", INC)], returns_value=True),
    _spec("drot", 5, 1, ["incx", "incy"], ["n"],
          [Arg("n", DIM), Arg("x", VEC, out=True), Arg("incx", INC),
           Arg("y", VEC, out=True), Arg("incy", INC),
           Arg("c", SCALAR), Arg("s", SCALAR)]),
    _spec("drotm", 6, 1, ["incx", "incy"], ["n"],
          [Arg("n", DIM), Arg("x", VEC, out=True), Arg("incx", INC),
           Arg("y", VEC, out=True), Arg("incy", INC), Arg("dparam", PARAM5)]),
    _spec("dgemv", 7, 2, ["trans", "incx", "incy"], ["m", "n"],
          [Arg("trans", CHAR), Arg("m", DIM), Arg("n", DIM),
           Arg("alpha", SCALAR), Arg("a", MAT), Arg("lda", LD),
           Arg("x", VEC), Arg("incx", INC), Arg("beta", SCALAR),
           Arg("y", VEC, out=True), Arg("incy", INC)]),
    _spec("dger", 8, 2, ["incx", "incy"], ["m", "n"],
          [Arg("m", DIM), Arg("n", DIM), Arg("alpha", SCALAR),
           Arg("x", VEC), Arg("incx", INC), Arg("y", VEC), Arg("incy", INC),
           Arg("a", MAT, out=True), Arg("lda", LD)]),
    _spec("dsymv", 9, 2, ["uplo", "incx", "incy"], ["n"],
          [Arg("uplo", CHAR), Arg("n", DIM), Arg("alpha", SCALAR),
           Arg("a", MAT), Arg("lda", LD), Arg("x", VEC), Arg("incx", INC),
           Arg("beta", SCALAR), Arg("y", VEC, out=True), Arg("incy", INC)]),
    _spec("dsyr", 10, 2, ["uplo", "incx"], ["n"],
          [Arg("uplo", CHAR), Arg("n", DIM), Arg("alpha", SCALAR),
           Arg("x", VEC), Arg("incx", INC), Arg("a", MAT, out=True),
           Arg("lda", LD)]),
    _spec("dsyr2", 11, 2, ["uplo", "incx", "incy"], ["n"],
          [Arg("uplo", CHAR), Arg("n", DIM), Arg("alpha", SCALAR),
           Arg("x", VEC), Arg("incx", INC), Arg("y", VEC), Arg("incy", INC),
           Arg("a", MAT, out=True), Arg("lda", LD)]),
    _spec("dtrmv", 12, 2, ["uplo", "diag", "incx"], ["n"],
          [Arg("uplo", CHAR), Arg("trans", CHAR), Arg("diag", CHAR),
           Arg("n", DIM), Arg("a", MAT), Arg("lda", LD),
           Arg("x", VEC, out=True), Arg("incx", INC)]),
    _spec("dtrsv", 13, 2, ["uplo", "trans", "diag", "incx"], ["n"],
          [Arg("uplo", CHAR), Arg("trans", CHAR), Arg("diag", CHAR),
           Arg("n", DIM), Arg("a", MAT), Arg("lda", LD),
           Arg("x", VEC, out=True), Arg("incx", INC)]),
    _spec("dgemm", 14, 3, ["transa", "transb"], ["m", "n", "k"],
          [Arg("transa", CHAR), Arg("transb", CHAR), Arg("m", DIM),
           Arg("n", DIM), Arg("k", DIM), Arg("alpha", SCALAR),
           Arg("a", MAT), Arg("lda", LD), Arg("b", MAT), Arg("ldb", LD),
           Arg("beta", SCALAR), Arg("c", MAT, out=True), Arg("ldc", LD)]),
    _spec("dsymm", 15, 3, ["side", "uplo"], ["m", "n"],
          [Arg("side", CHAR), Arg("uplo", CHAR), Arg("m", DIM), Arg("n", DIM),
           Arg("alpha", SCALAR), Arg("a", MAT), Arg("lda", LD),
           Arg("b", MAT), Arg("ldb", LD), Arg("beta", SCALAR),
           Arg("c", MAT, out=True), Arg("ldc", LD)]),
    _spec("dsyrk", 16, 3, ["uplo", "trans"], ["n", "k"],
          [Arg("uplo", CHAR), Arg("trans", CHAR), Arg("n", DIM), Arg("k", DIM),
           Arg("alpha", SCALAR), Arg("a", MAT), Arg("lda", LD),
           Arg("beta", SCALAR), Arg("c", MAT, out=True), Arg("ldc", LD)]),
    _spec("dsyr2k", 17, 3, ["uplo", "trans"], ["n", "k"],
          [Arg("uplo", CHAR), Arg("trans", CHAR), Arg("n", DIM), Arg("k", DIM),
           Arg("alpha", SCALAR), Arg("a", MAT), Arg("lda", LD),
           Arg("b", MAT), Arg("ldb", LD), Arg("beta", SCALAR),
           Arg("c", MAT, out=True), Arg("ldc", LD)]),
    _spec("dtrmm", 18, 3, ["side", "uplo", "trans", "diag"], ["m", "n"],
          [Arg("side", CHAR), Arg("uplo", CHAR), Arg("transa", CHAR),
           Arg("diag", CHAR), Arg("m", DIM), Arg("n", DIM),
           Arg("alpha", SCALAR), Arg("a", MAT), Arg("lda", LD),
           Arg("b", MAT, out=True), Arg("ldb", LD)]),
    _spec("dtrsm", 19, 3, ["side", "uplo", "trans", "diag"], ["m", "n"],
          [Arg("side", CHAR), Arg("uplo", CHAR), Arg("transa", CHAR),
           Arg("diag", CHAR), Arg("m", DIM), Arg("n", DIM),
           Arg("alpha", SCALAR), Arg("a", MAT), Arg("lda", LD),
           Arg("b", MAT, out=True), Arg("ldb", LD)]),
]:
    ROUTINES[spec.name] = spec

ROUTINE_ORDER = tuple(ROUTINES)  # Table-II order: level 1, then 2, then 3
ROUTINE_BY_ID = {spec.routine_id: spec for spec in ROUTINES.values()}


def get(name: str) -> RoutineSpec:
    try:
        return ROUTINES[name]
    except KeyError:
        raise KernelGaugeError(f"unknown routine {name!r}") from None


def axis_for_arg(spec: RoutineSpec, arg: Arg) -> str:
    """The parameter-axis name backing a char argument.

    dtrmm/dtrsm name the argument ``transa`` but Table II varies it as the
    ``trans`` axis; dtrmv carries a trans argument that is not varied at all.
    """
    if arg.name == "transa" and "transa" not in spec.param_axes and "trans" in spec.param_axes:
        return "trans"
    return arg.name


def vector_length(spec: RoutineSpec, arg_name: str, params: dict, dims: dict) -> int:
    """Logical element count of a vector argument."""
    n = dims.get("n", 0)
    m = dims.get("m", 0)
    if spec.name == "dgemv":
        if params.get("trans", "N") == "N":
            return n if arg_name == "x" else m
        return m if arg_name == "x" else n
    if spec.name == "dger":
        return m if arg_name == "x" else n
    return n


def matrix_shape(spec: RoutineSpec, arg_name: str, params: dict, dims: dict) -> tuple[int, int]:
    """Logical (rows, cols) of a matrix argument."""
    m = dims.get("m", 0)
    n = dims.get("n", 0)
    k = dims.get("k", 0)
    name = spec.name
    if name in ("dgemv", "dger"):
        return (m, n)
    if name in ("dsymv", "dsyr", "dsyr2", "dtrmv", "dtrsv"):
        return (n, n)
    if name == "dgemm":
        if arg_name == "a":
            return (m, k) if params["transa"] == "N" else (k, m)
        if arg_name == "b":
            return (k, n) if params["transb"] == "N" else (n, k)
        return (m, n)
    if name == "dsymm":
        if arg_name == "a":
            order = m if params["side"] == "L" else n
            return (order, order)
        return (m, n)
    if name in ("dsyrk", "dsyr2k"):
        if arg_name in ("a", "b"):
            return (n, k) if params["trans"] == "N" else (k, n)
        return (n, n)
    if name in ("dtrmm", "dtrsm"):
        if arg_name == "a":
            order = m if params["side"] == "L" else n
            return (order, order)
        return (m, n)
    raise KernelGaugeError(f"{name} has no matrix argument {arg_name!r}")
