"""Reference implementations of the 20 target BLAS routines.

Public functions follow the Fortran BLAS argument lists (column-major flat
storage, explicit leading dimensions and strides) and mutate their output
buffers in place; value routines return the value. Invalid dimension, stride,
and flag arguments raise :class:`BlasArgumentError` carrying the 1-based
position of the first offending argument, mirroring xerbla.

Negative strides are fully supported even though the default test matrix
only exercises 1 and 2.
"""

from __future__ import annotations

import numpy as np

from ..errors import BlasArgumentError, KernelGaugeError
from . import kernels as _k


def _arr(x, name: str) -> np.ndarray:
    if not isinstance(x, np.ndarray) or x.dtype != np.float64 or x.ndim != 1:
        raise KernelGaugeError(f"{name} must be a 1-D float64 ndarray")
    if not x.flags.c_contiguous:
        raise KernelGaugeError(f"{name} must be contiguous")
    return x


def _flag(routine, pos, ch, allowed) -> int:
    c = str(getattr(ch, "value", ch)).upper()
    if c not in allowed:
        raise BlasArgumentError(routine, pos, f"flag {ch!r} not in {sorted(allowed)}")
    return allowed[c]


def _trans(routine, pos, ch):
    return _flag(routine, pos, ch, {"N": _k.NOTRANS, "T": _k.TRANS})


def _uplo(routine, pos, ch):
    return _flag(routine, pos, ch, {"L": _k.LOWER, "U": _k.UPPER})


def _side(routine, pos, ch):
    return _flag(routine, pos, ch, {"L": _k.LEFT, "R": _k.RIGHT})


def _diag(routine, pos, ch):
    return _flag(routine, pos, ch, {"N": _k.NONUNIT, "U": _k.UNIT})


def _check_dim(routine, pos, name, value):
    if value < 0:
        raise BlasArgumentError(routine, pos, f"{name}={value} < 0")


def _check_inc(routine, pos, name, value):
    if value == 0:
        raise BlasArgumentError(routine, pos, f"{name} must be nonzero")


def _check_ld(routine, pos, name, value, rows):
    if value < max(1, rows):
        raise BlasArgumentError(routine, pos, f"{name}={value} < max(1,{rows})")


def _check_vec(routine, name, x, n, inc):
    if n > 0 and x.size < 1 + (n - 1) * abs(inc):
        raise KernelGaugeError(
            f"{routine}: {name} storage {x.size} too small for n={n}, inc={inc}"
        )


def _check_mat(routine, name, a, ld, cols):
    if a.size < ld * cols:
        raise KernelGaugeError(
            f"{routine}: {name} storage {a.size} too small for ld={ld}, cols={cols}"
        )


# ---------------------------------------------------------------------------
# level 1

def dasum(n, x, incx):
    _check_dim("dasum", 1, "n", n)
    _check_inc("dasum", 3, "incx", incx)
    _check_vec("dasum", "x", _arr(x, "x"), n, incx)
    return _k.dasum(n, x, incx)


def daxpy(n, alpha, x, incx, y, incy):
    _check_dim("daxpy", 1, "n", n)
    _check_inc("daxpy", 4, "incx", incx)
    _check_inc("daxpy", 6, "incy", incy)
    _check_vec("daxpy", "x", _arr(x, "x"), n, incx)
    _check_vec("daxpy", "y", _arr(y, "y"), n, incy)
    _k.daxpy(n, float(alpha), x, incx, y, incy)


def ddot(n, x, incx, y, incy):
    _check_dim("ddot", 1, "n", n)
    _check_inc("ddot", 3, "incx", incx)
    _check_inc("ddot", 5, "incy", incy)
    _check_vec("ddot", "x", _arr(x, "x"), n, incx)
    _check_vec("ddot", "y", _arr(y, "y"), n, incy)
    return _k.ddot(n, x, incx, y, incy)


def idamax(n, x, incx):
    # Reference convention: n < 1 yields 0, not an error.
    _check_inc("idamax", 3, "incx", incx)
    if n < 1:
        return 0
    _check_vec("idamax", "x", _arr(x, "x"), n, incx)
    return _k.idamax(n, x, incx)


def dnrm2(n, x, incx):
    _check_dim("dnrm2", 1, "n", n)
    _check_inc("dnrm2", 3, "incx", incx)
    _check_vec("dnrm2", "x", _arr(x, "x"), n, incx)
    return _k.dnrm2(n, x, incx)


def drot(n, x, incx, y, incy, c, s):
    _check_dim("drot", 1, "n", n)
    _check_inc("drot", 3, "incx", incx)
    _check_inc("drot", 5, "incy", incy)
    _check_vec("drot", "x", _arr(x, "x"), n, incx)
    _check_vec("drot", "y", _arr(y, "y"), n, incy)
    _k.drot(n, x, incx, y, incy, float(c), float(s))


def drotm(n, x, incx, y, incy, dparam):
    _check_dim("drotm", 1, "n", n)
    _check_inc("drotm", 3, "incx", incx)
    _check_inc("drotm", 5, "incy", incy)
    _check_vec("drotm", "x", _arr(x, "x"), n, incx)
    _check_vec("drotm", "y", _arr(y, "y"), n, incy)
    dparam = _arr(dparam, "dparam")
    if dparam.size < 5:
        raise KernelGaugeError("drotm: dparam must have 5 elements")
    if dparam[0] not in (-2.0, -1.0, 0.0, 1.0):
        raise BlasArgumentError("drotm", 6, f"bad rotm flag {dparam[0]}")
    _k.drotm(n, x, incx, y, incy, dparam)


# ---------------------------------------------------------------------------
# level 2

def dgemv(trans, m, n, alpha, a, lda, x, incx, beta, y, incy):
    t = _trans("dgemv", 1, trans)
    _check_dim("dgemv", 2, "m", m)
    _check_dim("dgemv", 3, "n", n)
    _check_ld("dgemv", 6, "lda", lda, m)
    _check_inc("dgemv", 8, "incx", incx)
    _check_inc("dgemv", 11, "incy", incy)
    lenx = n if t == _k.NOTRANS else m
    leny = m if t == _k.NOTRANS else n
    _check_mat("dgemv", "a", _arr(a, "a"), lda, n)
    _check_vec("dgemv", "x", _arr(x, "x"), lenx, incx)
    _check_vec("dgemv", "y", _arr(y, "y"), leny, incy)
    _k.dgemv(t, m, n, float(alpha), a, lda, x, incx, float(beta), y, incy)


def dger(m, n, alpha, x, incx, y, incy, a, lda):
    _check_dim("dger", 1, "m", m)
    _check_dim("dger", 2, "n", n)
    _check_inc("dger", 5, "incx", incx)
    _check_inc("dger", 7, "incy", incy)
    _check_ld("dger", 9, "lda", lda, m)
    _check_vec("dger", "x", _arr(x, "x"), m, incx)
    _check_vec("dger", "y", _arr(y, "y"), n, incy)
    _check_mat("dger", "a", _arr(a, "a"), lda, n)
    _k.dger(m, n, float(alpha), x, incx, y, incy, a, lda)


def dsymv(uplo, n, alpha, a, lda, x, incx, beta, y, incy):
    u = _uplo("dsymv", 1, uplo)
    _check_dim("dsymv", 2, "n", n)
    _check_ld("dsymv", 5, "lda", lda, n)
    _check_inc("dsymv", 7, "incx", incx)
    _check_inc("dsymv", 10, "incy", incy)
    _check_mat("dsymv", "a", _arr(a, "a"), lda, n)
    _check_vec("dsymv", "x", _arr(x, "x"), n, incx)
    _check_vec("dsymv", "y", _arr(y, "y"), n, incy)
    _k.dsymv(u, n, float(alpha), a, lda, x, incx, float(beta), y, incy)


def dsyr(uplo, n, alpha, x, incx, a, lda):
    u = _uplo("dsyr", 1, uplo)
    _check_dim("dsyr", 2, "n", n)
    _check_inc("dsyr", 5, "incx", incx)
    _check_ld("dsyr", 7, "lda", lda, n)
    _check_vec("dsyr", "x", _arr(x, "x"), n, incx)
    _check_mat("dsyr", "a", _arr(a, "a"), lda, n)
    _k.dsyr(u, n, float(alpha), x, incx, a, lda)


def dsyr2(uplo, n, alpha, x, incx, y, incy, a, lda):
    u = _uplo("dsyr2", 1, uplo)
    _check_dim("dsyr2", 2, "n", n)
    _check_inc("dsyr2", 5, "incx", incx)
    _check_inc("dsyr2", 7, "incy", incy)
    _check_ld("dsyr2", 9, "lda", lda, n)
    _check_vec("dsyr2", "x", _arr(x, "x"), n, incx)
    _check_vec("dsyr2", "y", _arr(y, "y"), n, incy)
    _check_mat("dsyr2", "a", _arr(a, "a"), lda, n)
    _k.dsyr2(u, n, float(alpha), x, incx, y, incy, a, lda)


def dtrmv(uplo, trans, diag, n, a, lda, x, incx):
    u = _uplo("dtrmv", 1, uplo)
    t = _trans("dtrmv", 2, trans)
    d = _diag("dtrmv", 3, diag)
    _check_dim("dtrmv", 4, "n", n)
    _check_ld("dtrmv", 6, "lda", lda, n)
    _check_inc("dtrmv", 8, "incx", incx)
    _check_mat("dtrmv", "a", _arr(a, "a"), lda, n)
    _check_vec("dtrmv", "x", _arr(x, "x"), n, incx)
    _k.dtrmv(u, t, d, n, a, lda, x, incx)


def dtrsv(uplo, trans, diag, n, a, lda, x, incx):
    u = _uplo("dtrsv", 1, uplo)
    t = _trans("dtrsv", 2, trans)
    d = _diag("dtrsv", 3, diag)
    _check_dim("dtrsv", 4, "n", n)
    _check_ld("dtrsv", 6, "lda", lda, n)
    _check_inc("dtrsv", 8, "incx", incx)
    _check_mat("dtrsv", "a", _arr(a, "a"), lda, n)
    _check_vec("dtrsv", "x", _arr(x, "x"), n, incx)
    _k.dtrsv(u, t, d, n, a, lda, x, incx)


# ---------------------------------------------------------------------------
# level 3

def dgemm(transa, transb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc):
    ta = _trans("dgemm", 1, transa)
    tb = _trans("dgemm", 2, transb)
    _check_dim("dgemm", 3, "m", m)
    _check_dim("dgemm", 4, "n", n)
    _check_dim("dgemm", 5, "k", k)
    nrowa = m if ta == _k.NOTRANS else k
    nrowb = k if tb == _k.NOTRANS else n
    _check_ld("dgemm", 8, "lda", lda, nrowa)
    _check_ld("dgemm", 10, "ldb", ldb, nrowb)
    _check_ld("dgemm", 13, "ldc", ldc, m)
    _check_mat("dgemm", "a", _arr(a, "a"), lda, k if ta == _k.NOTRANS else m)
    _check_mat("dgemm", "b", _arr(b, "b"), ldb, n if tb == _k.NOTRANS else k)
    _check_mat("dgemm", "c", _arr(c, "c"), ldc, n)
    _k.dgemm(ta, tb, m, n, k, float(alpha), a, lda, b, ldb, float(beta), c, ldc)


def dsymm(side, uplo, m, n, alpha, a, lda, b, ldb, beta, c, ldc):
    s = _side("dsymm", 1, side)
    u = _uplo("dsymm", 2, uplo)
    _check_dim("dsymm", 3, "m", m)
    _check_dim("dsymm", 4, "n", n)
    nrowa = m if s == _k.LEFT else n
    _check_ld("dsymm", 7, "lda", lda, nrowa)
    _check_ld("dsymm", 9, "ldb", ldb, m)
    _check_ld("dsymm", 12, "ldc", ldc, m)
    _check_mat("dsymm", "a", _arr(a, "a"), lda, nrowa)
    _check_mat("dsymm", "b", _arr(b, "b"), ldb, n)
    _check_mat("dsymm", "c", _arr(c, "c"), ldc, n)
    _k.dsymm(s, u, m, n, float(alpha), a, lda, b, ldb, float(beta), c, ldc)


def dsyrk(uplo, trans, n, k, alpha, a, lda, beta, c, ldc):
    u = _uplo("dsyrk", 1, uplo)
    t = _trans("dsyrk", 2, trans)
    _check_dim("dsyrk", 3, "n", n)
    _check_dim("dsyrk", 4, "k", k)
    nrowa = n if t == _k.NOTRANS else k
    _check_ld("dsyrk", 7, "lda", lda, nrowa)
    _check_ld("dsyrk", 10, "ldc", ldc, n)
    _check_mat("dsyrk", "a", _arr(a, "a"), lda, k if t == _k.NOTRANS else n)
    _check_mat("dsyrk", "c", _arr(c, "c"), ldc, n)
    _k.dsyrk(u, t, n, k, float(alpha), a, lda, float(beta), c, ldc)


def dsyr2k(uplo, trans, n, k, alpha, a, lda, b, ldb, beta, c, ldc):
    u = _uplo("dsyr2k", 1, uplo)
    t = _trans("dsyr2k", 2, trans)
    _check_dim("dsyr2k", 3, "n", n)
    _check_dim("dsyr2k", 4, "k", k)
    nrowa = n if t == _k.NOTRANS else k
    _check_ld("dsyr2k", 7, "lda", lda, nrowa)
    _check_ld("dsyr2k", 9, "ldb", ldb, nrowa)
    _check_ld("dsyr2k", 12, "ldc", ldc, n)
    cols = k if t == _k.NOTRANS else n
    _check_mat("dsyr2k", "a", _arr(a, "a"), lda, cols)
    _check_mat("dsyr2k", "b", _arr(b, "b"), ldb, cols)
    _check_mat("dsyr2k", "c", _arr(c, "c"), ldc, n)
    _k.dsyr2k(u, t, n, k, float(alpha), a, lda, b, ldb, float(beta), c, ldc)


def dtrmm(side, uplo, transa, diag, m, n, alpha, a, lda, b, ldb):
    s = _side("dtrmm", 1, side)
    u = _uplo("dtrmm", 2, uplo)
    t = _trans("dtrmm", 3, transa)
    d = _diag("dtrmm", 4, diag)
    _check_dim("dtrmm", 5, "m", m)
    _check_dim("dtrmm", 6, "n", n)
    nrowa = m if s == _k.LEFT else n
    _check_ld("dtrmm", 9, "lda", lda, nrowa)
    _check_ld("dtrmm", 11, "ldb", ldb, m)
    _check_mat("dtrmm", "a", _arr(a, "a"), lda, nrowa)
    _check_mat("dtrmm", "b", _arr(b, "b"), ldb, n)
    _k.dtrmm(s, u, t, d, m, n, float(alpha), a, lda, b, ldb)


def dtrsm(side, uplo, transa, diag, m, n, alpha, a, lda, b, ldb):
    s = _side("dtrsm", 1, side)
    u = _uplo("dtrsm", 2, uplo)
    t = _trans("dtrsm", 3, transa)
    d = _diag("dtrsm", 4, diag)
    _check_dim("dtrsm", 5, "m", m)
    _check_dim("dtrsm", 6, "n", n)
    nrowa = m if s == _k.LEFT else n
    _check_ld("dtrsm", 9, "lda", lda, nrowa)
    _check_ld("dtrsm", 11, "ldb", ldb, m)
    _check_mat("dtrsm", "a", _arr(a, "a"), lda, nrowa)
    _check_mat("dtrsm", "b", _arr(b, "b"), ldb, n)
    _k.dtrsm(s, u, t, d, m, n, float(alpha), a, lda, b, ldb)


FUNCS = {
    "dasum": dasum, "daxpy": daxpy, "ddot": ddot, "idamax": idamax,
    "dnrm2": dnrm2, "drot": drot, "drotm": drotm,
    "dgemv": dgemv, "dger": dger, "dsymv": dsymv, "dsyr": dsyr,
    "dsyr2": dsyr2, "dtrmv": dtrmv, "dtrsv": dtrsv,
    "dgemm": dgemm, "dsymm": dsymm, "dsyrk": dsyrk, "dsyr2k": dsyr2k,
    "dtrmm": dtrmm, "dtrsm": dtrsm,
}


def call(name: str, args: list):
    """Invoke a routine by name with its Fortran-order argument list."""
    try:
        fn = FUNCS[name]
    except KeyError:
        raise KernelGaugeError(f"unknown routine {name!r}") from None
    return fn(*args)
