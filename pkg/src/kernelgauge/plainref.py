"""Independent dense oracle used to cross-check the reference routines.

Same Fortran-style argument lists as :mod:`kernelgauge.oracle`, but a
completely different evaluation route: logical operands are gathered into
dense numpy arrays, the operation is computed with numpy/linalg primitives
(symmetrize-then-multiply, dense solves), and results are scattered back.
Summation order therefore differs from the loop kernels, which is exactly
what makes the two-route agreement check meaningful.

The contract-level conventions are shared with the reference: quick returns
leave outputs untouched, beta == 0 assigns without reading, unit-diagonal
variants never read the stored diagonal, and only the stored triangle of a
symmetric/triangular output is written.
"""

from __future__ import annotations

import numpy as np


def _gather_vec(x: np.ndarray, n: int, inc: int) -> np.ndarray:
    if n == 0:
        return np.empty(0)
    start = 0 if inc > 0 else (n - 1) * abs(inc)
    return x[start::inc][:n].astype(np.float64, copy=True)


def _scatter_vec(x: np.ndarray, n: int, inc: int, values: np.ndarray) -> None:
    if n == 0:
        return
    start = 0 if inc > 0 else (n - 1) * abs(inc)
    x[start::inc][:n] = values


def _gather_mat(a: np.ndarray, rows: int, cols: int, ld: int) -> np.ndarray:
    return a[: ld * cols].reshape(cols, ld).T[:rows, :].astype(np.float64, copy=True)


def _scatter_mat(a: np.ndarray, rows: int, cols: int, ld: int, values: np.ndarray) -> None:
    a[: ld * cols].reshape(cols, ld).T[:rows, :] = values


def _sym(a: np.ndarray, uplo: str) -> np.ndarray:
    if str(uplo).upper() == "U":
        u = np.triu(a)
        return u + np.triu(a, 1).T
    l = np.tril(a)
    return l + np.tril(a, -1).T


def _tri(a: np.ndarray, uplo: str, diag: str) -> np.ndarray:
    t = np.triu(a) if str(uplo).upper() == "U" else np.tril(a)
    if str(diag).upper() == "U":
        np.fill_diagonal(t, 1.0)
    return t


def _op(a: np.ndarray, trans: str) -> np.ndarray:
    return a.T.copy() if str(trans).upper() == "T" else a


def _combine(alpha_part: np.ndarray, beta: float, old: np.ndarray) -> np.ndarray:
    if beta == 0.0:
        return alpha_part
    return alpha_part + beta * old


# ---------------------------------------------------------------------------
# level 1

def dasum(n, x, incx):
    return float(np.sum(np.abs(_gather_vec(x, n, incx))))


def daxpy(n, alpha, x, incx, y, incy):
    if n <= 0 or alpha == 0.0:
        return
    yl = _gather_vec(y, n, incy)
    _scatter_vec(y, n, incy, alpha * _gather_vec(x, n, incx) + yl)


def ddot(n, x, incx, y, incy):
    return float(np.dot(_gather_vec(x, n, incx), _gather_vec(y, n, incy)))


def idamax(n, x, incx):
    if n < 1:
        return 0
    return int(np.argmax(np.abs(_gather_vec(x, n, incx)))) + 1


def dnrm2(n, x, incx):
    return float(np.linalg.norm(_gather_vec(x, n, incx)))


def drot(n, x, incx, y, incy, c, s):
    if n <= 0:
        return
    xl = _gather_vec(x, n, incx)
    yl = _gather_vec(y, n, incy)
    _scatter_vec(x, n, incx, c * xl + s * yl)
    _scatter_vec(y, n, incy, c * yl - s * xl)


def drotm(n, x, incx, y, incy, dparam):
    if n <= 0:
        return
    flag = int(dparam[0])
    if flag == -2:
        return
    if flag == -1:
        h11, h21, h12, h22 = dparam[1], dparam[2], dparam[3], dparam[4]
    elif flag == 0:
        h11, h21, h12, h22 = 1.0, dparam[2], dparam[3], 1.0
    else:
        h11, h21, h12, h22 = dparam[1], -1.0, 1.0, dparam[4]
    xl = _gather_vec(x, n, incx)
    yl = _gather_vec(y, n, incy)
    _scatter_vec(x, n, incx, h11 * xl + h12 * yl)
    _scatter_vec(y, n, incy, h21 * xl + h22 * yl)


# ---------------------------------------------------------------------------
# level 2

def dgemv(trans, m, n, alpha, a, lda, x, incx, beta, y, incy):
    if m == 0 or n == 0 or (alpha == 0.0 and beta == 1.0):
        return
    t = str(trans).upper()
    lenx, leny = (n, m) if t == "N" else (m, n)
    al = _gather_mat(a, m, n, lda)
    xl = _gather_vec(x, lenx, incx)
    yl = _gather_vec(y, leny, incy)
    _scatter_vec(y, leny, incy, _combine(alpha * (_op(al, t) @ xl), beta, yl))


def dger(m, n, alpha, x, incx, y, incy, a, lda):
    if m == 0 or n == 0 or alpha == 0.0:
        return
    al = _gather_mat(a, m, n, lda)
    al += alpha * np.outer(_gather_vec(x, m, incx), _gather_vec(y, n, incy))
    _scatter_mat(a, m, n, lda, al)


def dsymv(uplo, n, alpha, a, lda, x, incx, beta, y, incy):
    if n == 0 or (alpha == 0.0 and beta == 1.0):
        return
    full = _sym(_gather_mat(a, n, n, lda), uplo)
    xl = _gather_vec(x, n, incx)
    yl = _gather_vec(y, n, incy)
    _scatter_vec(y, n, incy, _combine(alpha * (full @ xl), beta, yl))


def _scatter_triangle(a, n, lda, updated, uplo):
    al = _gather_mat(a, n, n, lda)
    mask = np.triu(np.ones((n, n), dtype=bool)) if str(uplo).upper() == "U" \
        else np.tril(np.ones((n, n), dtype=bool))
    al[mask] = updated[mask]
    _scatter_mat(a, n, n, lda, al)


def dsyr(uplo, n, alpha, x, incx, a, lda):
    if n == 0 or alpha == 0.0:
        return
    xl = _gather_vec(x, n, incx)
    _scatter_triangle(a, n, lda,
                      _gather_mat(a, n, n, lda) + alpha * np.outer(xl, xl), uplo)


def dsyr2(uplo, n, alpha, x, incx, y, incy, a, lda):
    if n == 0 or alpha == 0.0:
        return
    xl = _gather_vec(x, n, incx)
    yl = _gather_vec(y, n, incy)
    upd = _gather_mat(a, n, n, lda) + alpha * (np.outer(xl, yl) + np.outer(yl, xl))
    _scatter_triangle(a, n, lda, upd, uplo)


def dtrmv(uplo, trans, diag, n, a, lda, x, incx):
    if n == 0:
        return
    t = _tri(_gather_mat(a, n, n, lda), uplo, diag)
    xl = _gather_vec(x, n, incx)
    _scatter_vec(x, n, incx, _op(t, trans) @ xl)


def dtrsv(uplo, trans, diag, n, a, lda, x, incx):
    if n == 0:
        return
    t = _tri(_gather_mat(a, n, n, lda), uplo, diag)
    xl = _gather_vec(x, n, incx)
    _scatter_vec(x, n, incx, np.linalg.solve(_op(t, trans), xl))


# ---------------------------------------------------------------------------
# level 3

def dgemm(transa, transb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc):
    if m == 0 or n == 0 or ((alpha == 0.0 or k == 0) and beta == 1.0):
        return
    ta, tb = str(transa).upper(), str(transb).upper()
    al = _gather_mat(a, m if ta == "N" else k, k if ta == "N" else m, lda)
    bl = _gather_mat(b, k if tb == "N" else n, n if tb == "N" else k, ldb)
    cl = _gather_mat(c, m, n, ldc)
    prod = alpha * (_op(al, ta) @ _op(bl, tb)) if alpha != 0.0 else np.zeros((m, n))
    _scatter_mat(c, m, n, ldc, _combine(prod, beta, cl))


def dsymm(side, uplo, m, n, alpha, a, lda, b, ldb, beta, c, ldc):
    if m == 0 or n == 0 or (alpha == 0.0 and beta == 1.0):
        return
    s = str(side).upper()
    order = m if s == "L" else n
    full = _sym(_gather_mat(a, order, order, lda), uplo)
    bl = _gather_mat(b, m, n, ldb)
    cl = _gather_mat(c, m, n, ldc)
    if alpha == 0.0:
        prod = np.zeros((m, n))
    elif s == "L":
        prod = alpha * (full @ bl)
    else:
        prod = alpha * (bl @ full)
    _scatter_mat(c, m, n, ldc, _combine(prod, beta, cl))


def dsyrk(uplo, trans, n, k, alpha, a, lda, beta, c, ldc):
    if n == 0 or ((alpha == 0.0 or k == 0) and beta == 1.0):
        return
    t = str(trans).upper()
    al = _gather_mat(a, n if t == "N" else k, k if t == "N" else n, lda)
    prod = al @ al.T if t == "N" else al.T @ al
    cl = _gather_mat(c, n, n, ldc)
    _scatter_triangle(c, n, ldc, _combine(alpha * prod, beta, cl), uplo)


def dsyr2k(uplo, trans, n, k, alpha, a, lda, b, ldb, beta, c, ldc):
    if n == 0 or ((alpha == 0.0 or k == 0) and beta == 1.0):
        return
    t = str(trans).upper()
    rows = n if t == "N" else k
    cols = k if t == "N" else n
    al = _gather_mat(a, rows, cols, lda)
    bl = _gather_mat(b, rows, cols, ldb)
    prod = al @ bl.T + bl @ al.T if t == "N" else al.T @ bl + bl.T @ al
    cl = _gather_mat(c, n, n, ldc)
    _scatter_triangle(c, n, ldc, _combine(alpha * prod, beta, cl), uplo)


def dtrmm(side, uplo, transa, diag, m, n, alpha, a, lda, b, ldb):
    if m == 0 or n == 0:
        return
    s = str(side).upper()
    order = m if s == "L" else n
    t = _op(_tri(_gather_mat(a, order, order, lda), uplo, diag), transa)
    bl = _gather_mat(b, m, n, ldb)
    res = alpha * (t @ bl) if s == "L" else alpha * (bl @ t)
    _scatter_mat(b, m, n, ldb, res)


def dtrsm(side, uplo, transa, diag, m, n, alpha, a, lda, b, ldb):
    if m == 0 or n == 0:
        return
    s = str(side).upper()
    order = m if s == "L" else n
    t = _op(_tri(_gather_mat(a, order, order, lda), uplo, diag), transa)
    bl = _gather_mat(b, m, n, ldb)
    if alpha == 0.0:
        res = np.zeros((m, n))
    elif s == "L":
        res = np.linalg.solve(t, alpha * bl)
    else:
        # X * op(A) = alpha * B  <=>  op(A)' X' = alpha * B'
        res = np.linalg.solve(t.T, (alpha * bl).T).T
    _scatter_mat(b, m, n, ldb, res)


FUNCS = {
    "dasum": dasum, "daxpy": daxpy, "ddot": ddot, "idamax": idamax,
    "dnrm2": dnrm2, "drot": drot, "drotm": drotm,
    "dgemv": dgemv, "dger": dger, "dsymv": dsymv, "dsyr": dsyr,
    "dsyr2": dsyr2, "dtrmv": dtrmv, "dtrsv": dtrsv,
    "dgemm": dgemm, "dsymm": dsymm, "dsyrk": dsyrk, "dsyr2k": dsyr2k,
    "dtrmm": dtrmm, "dtrsm": dtrsm,
}


def call(name: str, args: list):
    return FUNCS[name](*args)
