"""Plain-loop kernels for the 20 reference routines.

These are the arithmetic cores behind the public oracle API. They follow the
classic reference loop structures: fixed ascending-index accumulation with a
single accumulator per output element, beta == 0 assigns without reading the
prior output, and unit-diagonal variants never read the stored diagonal. No
blocking, no vectorization — determinism over speed.

Flags are small ints so the same source can be compiled by numba for the
benchmark path: trans/transa/transb 0=N 1=T, uplo 0=L 1=U, side 0=L 1=R,
diag 0=non-unit 1=unit. Matrices are flat column-major float64 arrays.
"""

from __future__ import annotations

import math

NOTRANS, TRANS = 0, 1
LOWER, UPPER = 0, 1
LEFT, RIGHT = 0, 1
NONUNIT, UNIT = 0, 1


def _vstart(n, inc):
    # Storage offset of logical element 0 (reversed traversal for inc < 0).
    if inc >= 0:
        return 0
    return (n - 1) * (-inc)


# ---------------------------------------------------------------------------
# level 1

def dasum(n, x, incx):
    if n <= 0:
        return 0.0
    acc = 0.0
    ix = _vstart(n, incx)
    for _ in range(n):
        acc += abs(x[ix])
        ix += incx
    return acc


def daxpy(n, alpha, x, incx, y, incy):
    if n <= 0 or alpha == 0.0:
        return
    ix = _vstart(n, incx)
    iy = _vstart(n, incy)
    for _ in range(n):
        y[iy] += alpha * x[ix]
        ix += incx
        iy += incy


def ddot(n, x, incx, y, incy):
    if n <= 0:
        return 0.0
    acc = 0.0
    ix = _vstart(n, incx)
    iy = _vstart(n, incy)
    for _ in range(n):
        acc += x[ix] * y[iy]
        ix += incx
        iy += incy
    return acc


def idamax(n, x, incx):
    if n < 1:
        return 0
    if n == 1:
        return 1
    ix = _vstart(n, incx)
    best = abs(x[ix])
    idx = 1
    for i in range(1, n):
        ix += incx
        v = abs(x[ix])
        if v > best:
            best = v
            idx = i + 1
    return idx


def dnrm2(n, x, incx):
    if n < 1:
        return 0.0
    ix = _vstart(n, incx)
    if n == 1:
        return abs(x[ix])
    scale = 0.0
    ssq = 1.0
    for _ in range(n):
        if x[ix] != 0.0:
            ax = abs(x[ix])
            if scale < ax:
                ssq = 1.0 + ssq * (scale / ax) ** 2
                scale = ax
            else:
                ssq += (ax / scale) ** 2
        ix += incx
    return scale * math.sqrt(ssq)


def drot(n, x, incx, y, incy, c, s):
    if n <= 0:
        return
    ix = _vstart(n, incx)
    iy = _vstart(n, incy)
    for _ in range(n):
        t = c * x[ix] + s * y[iy]
        y[iy] = c * y[iy] - s * x[ix]
        x[ix] = t
        ix += incx
        iy += incy


def drotm(n, x, incx, y, incy, dparam):
    if n <= 0:
        return
    flag = dparam[0]
    if flag == -2.0:
        return
    ix = _vstart(n, incx)
    iy = _vstart(n, incy)
    if flag == -1.0:
        h11 = dparam[1]
        h21 = dparam[2]
        h12 = dparam[3]
        h22 = dparam[4]
        for _ in range(n):
            w = x[ix]
            z = y[iy]
            x[ix] = w * h11 + z * h12
            y[iy] = w * h21 + z * h22
            ix += incx
            iy += incy
    elif flag == 0.0:
        h21 = dparam[2]
        h12 = dparam[3]
        for _ in range(n):
            w = x[ix]
            z = y[iy]
            x[ix] = w + z * h12
            y[iy] = w * h21 + z
            ix += incx
            iy += incy
    else:
        h11 = dparam[1]
        h22 = dparam[4]
        for _ in range(n):
            w = x[ix]
            z = y[iy]
            x[ix] = w * h11 + z
            y[iy] = -w + z * h22
            ix += incx
            iy += incy


# ---------------------------------------------------------------------------
# level 2

def dgemv(trans, m, n, alpha, a, lda, x, incx, beta, y, incy):
    if m == 0 or n == 0 or (alpha == 0.0 and beta == 1.0):
        return
    lenx = n if trans == NOTRANS else m
    leny = m if trans == NOTRANS else n
    kx = _vstart(lenx, incx)
    ky = _vstart(leny, incy)
    if beta != 1.0:
        iy = ky
        if beta == 0.0:
            for _ in range(leny):
                y[iy] = 0.0
                iy += incy
        else:
            for _ in range(leny):
                y[iy] = beta * y[iy]
                iy += incy
    if alpha == 0.0:
        return
    if trans == NOTRANS:
        jx = kx
        for j in range(n):
            temp = alpha * x[jx]
            iy = ky
            for i in range(m):
                y[iy] += temp * a[i + j * lda]
                iy += incy
            jx += incx
    else:
        jy = ky
        for j in range(n):
            temp = 0.0
            ix = kx
            for i in range(m):
                temp += a[i + j * lda] * x[ix]
                ix += incx
            y[jy] += alpha * temp
            jy += incy


def dger(m, n, alpha, x, incx, y, incy, a, lda):
    if m == 0 or n == 0 or alpha == 0.0:
        return
    kx = _vstart(m, incx)
    jy = _vstart(n, incy)
    for j in range(n):
        if y[jy] != 0.0:
            temp = alpha * y[jy]
            ix = kx
            for i in range(m):
                a[i + j * lda] += x[ix] * temp
                ix += incx
        jy += incy


def dsymv(uplo, n, alpha, a, lda, x, incx, beta, y, incy):
    if n == 0 or (alpha == 0.0 and beta == 1.0):
        return
    kx = _vstart(n, incx)
    ky = _vstart(n, incy)
    if beta != 1.0:
        iy = ky
        if beta == 0.0:
            for _ in range(n):
                y[iy] = 0.0
                iy += incy
        else:
            for _ in range(n):
                y[iy] = beta * y[iy]
                iy += incy
    if alpha == 0.0:
        return
    if uplo == UPPER:
        jx = kx
        jy = ky
        for j in range(n):
            temp1 = alpha * x[jx]
            temp2 = 0.0
            ix = kx
            iy = ky
            for i in range(j):
                y[iy] += temp1 * a[i + j * lda]
                temp2 += a[i + j * lda] * x[ix]
                ix += incx
                iy += incy
            y[jy] += temp1 * a[j + j * lda] + alpha * temp2
            jx += incx
            jy += incy
    else:
        jx = kx
        jy = ky
        for j in range(n):
            temp1 = alpha * x[jx]
            temp2 = 0.0
            y[jy] += temp1 * a[j + j * lda]
            ix = jx
            iy = jy
            for i in range(j + 1, n):
                ix += incx
                iy += incy
                y[iy] += temp1 * a[i + j * lda]
                temp2 += a[i + j * lda] * x[ix]
            y[jy] += alpha * temp2
            jx += incx
            jy += incy


def dsyr(uplo, n, alpha, x, incx, a, lda):
    if n == 0 or alpha == 0.0:
        return
    kx = _vstart(n, incx)
    jx = kx
    if uplo == UPPER:
        for j in range(n):
            if x[jx] != 0.0:
                temp = alpha * x[jx]
                ix = kx
                for i in range(j + 1):
                    a[i + j * lda] += x[ix] * temp
                    ix += incx
            jx += incx
    else:
        for j in range(n):
            if x[jx] != 0.0:
                temp = alpha * x[jx]
                ix = jx
                for i in range(j, n):
                    a[i + j * lda] += x[ix] * temp
                    ix += incx
            jx += incx


def dsyr2(uplo, n, alpha, x, incx, y, incy, a, lda):
    if n == 0 or alpha == 0.0:
        return
    kx = _vstart(n, incx)
    ky = _vstart(n, incy)
    jx = kx
    jy = ky
    if uplo == UPPER:
        for j in range(n):
            if x[jx] != 0.0 or y[jy] != 0.0:
                temp1 = alpha * y[jy]
                temp2 = alpha * x[jx]
                ix = kx
                iy = ky
                for i in range(j + 1):
                    a[i + j * lda] += x[ix] * temp1 + y[iy] * temp2
                    ix += incx
                    iy += incy
            jx += incx
            jy += incy
    else:
        for j in range(n):
            if x[jx] != 0.0 or y[jy] != 0.0:
                temp1 = alpha * y[jy]
                temp2 = alpha * x[jx]
                ix = jx
                iy = jy
                for i in range(j, n):
                    a[i + j * lda] += x[ix] * temp1 + y[iy] * temp2
                    ix += incx
                    iy += incy
            jx += incx
            jy += incy


def dtrmv(uplo, trans, diag, n, a, lda, x, incx):
    if n == 0:
        return
    nonunit = diag == NONUNIT
    kx = _vstart(n, incx)
    if trans == NOTRANS:
        if uplo == UPPER:
            jx = kx
            for j in range(n):
                if x[jx] != 0.0:
                    temp = x[jx]
                    ix = kx
                    for i in range(j):
                        x[ix] += temp * a[i + j * lda]
                        ix += incx
                    if nonunit:
                        x[jx] = x[jx] * a[j + j * lda]
                jx += incx
        else:
            last = kx + (n - 1) * incx
            jx = last
            for j in range(n - 1, -1, -1):
                if x[jx] != 0.0:
                    temp = x[jx]
                    ix = last
                    for i in range(n - 1, j, -1):
                        x[ix] += temp * a[i + j * lda]
                        ix -= incx
                    if nonunit:
                        x[jx] = x[jx] * a[j + j * lda]
                jx -= incx
    else:
        if uplo == UPPER:
            jx = kx + (n - 1) * incx
            for j in range(n - 1, -1, -1):
                temp = x[jx]
                ix = jx
                if nonunit:
                    temp = temp * a[j + j * lda]
                for i in range(j - 1, -1, -1):
                    ix -= incx
                    temp += a[i + j * lda] * x[ix]
                x[jx] = temp
                jx -= incx
        else:
            jx = kx
            for j in range(n):
                temp = x[jx]
                ix = jx
                if nonunit:
                    temp = temp * a[j + j * lda]
                for i in range(j + 1, n):
                    ix += incx
                    temp += a[i + j * lda] * x[ix]
                x[jx] = temp
                jx += incx


def dtrsv(uplo, trans, diag, n, a, lda, x, incx):
    if n == 0:
        return
    nonunit = diag == NONUNIT
    kx = _vstart(n, incx)
    if trans == NOTRANS:
        if uplo == UPPER:
            jx = kx + (n - 1) * incx
            for j in range(n - 1, -1, -1):
                if x[jx] != 0.0:
                    if nonunit:
                        x[jx] = x[jx] / a[j + j * lda]
                    temp = x[jx]
                    ix = jx
                    for i in range(j - 1, -1, -1):
                        ix -= incx
                        x[ix] -= temp * a[i + j * lda]
                jx -= incx
        else:
            jx = kx
            for j in range(n):
                if x[jx] != 0.0:
                    if nonunit:
                        x[jx] = x[jx] / a[j + j * lda]
                    temp = x[jx]
                    ix = jx
                    for i in range(j + 1, n):
                        ix += incx
                        x[ix] -= temp * a[i + j * lda]
                jx += incx
    else:
        if uplo == UPPER:
            jx = kx
            for j in range(n):
                temp = x[jx]
                ix = kx
                for i in range(j):
                    temp -= a[i + j * lda] * x[ix]
                    ix += incx
                if nonunit:
                    temp = temp / a[j + j * lda]
                x[jx] = temp
                jx += incx
        else:
            last = kx + (n - 1) * incx
            jx = last
            for j in range(n - 1, -1, -1):
                temp = x[jx]
                ix = last
                for i in range(n - 1, j, -1):
                    temp -= a[i + j * lda] * x[ix]
                    ix -= incx
                if nonunit:
                    temp = temp / a[j + j * lda]
                x[jx] = temp
                jx -= incx


# ---------------------------------------------------------------------------
# level 3

def dgemm(transa, transb, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc):
    if m == 0 or n == 0 or ((alpha == 0.0 or k == 0) and beta == 1.0):
        return
    if alpha == 0.0:
        for j in range(n):
            if beta == 0.0:
                for i in range(m):
                    c[i + j * ldc] = 0.0
            else:
                for i in range(m):
                    c[i + j * ldc] = beta * c[i + j * ldc]
        return
    if transb == NOTRANS:
        if transa == NOTRANS:
            for j in range(n):
                if beta == 0.0:
                    for i in range(m):
                        c[i + j * ldc] = 0.0
                elif beta != 1.0:
                    for i in range(m):
                        c[i + j * ldc] = beta * c[i + j * ldc]
                for l in range(k):
                    temp = alpha * b[l + j * ldb]
                    for i in range(m):
                        c[i + j * ldc] += temp * a[i + l * lda]
        else:
            for j in range(n):
                for i in range(m):
                    temp = 0.0
                    for l in range(k):
                        temp += a[l + i * lda] * b[l + j * ldb]
                    if beta == 0.0:
                        c[i + j * ldc] = alpha * temp
                    else:
                        c[i + j * ldc] = alpha * temp + beta * c[i + j * ldc]
    else:
        if transa == NOTRANS:
            for j in range(n):
                if beta == 0.0:
                    for i in range(m):
                        c[i + j * ldc] = 0.0
                elif beta != 1.0:
                    for i in range(m):
                        c[i + j * ldc] = beta * c[i + j * ldc]
                for l in range(k):
                    temp = alpha * b[j + l * ldb]
                    for i in range(m):
                        c[i + j * ldc] += temp * a[i + l * lda]
        else:
            for j in range(n):
                for i in range(m):
                    temp = 0.0
                    for l in range(k):
                        temp += a[l + i * lda] * b[j + l * ldb]
                    if beta == 0.0:
                        c[i + j * ldc] = alpha * temp
                    else:
                        c[i + j * ldc] = alpha * temp + beta * c[i + j * ldc]


def dsymm(side, uplo, m, n, alpha, a, lda, b, ldb, beta, c, ldc):
    if m == 0 or n == 0 or (alpha == 0.0 and beta == 1.0):
        return
    if alpha == 0.0:
        for j in range(n):
            if beta == 0.0:
                for i in range(m):
                    c[i + j * ldc] = 0.0
            else:
                for i in range(m):
                    c[i + j * ldc] = beta * c[i + j * ldc]
        return
    if side == LEFT:
        if uplo == UPPER:
            for j in range(n):
                for i in range(m):
                    temp1 = alpha * b[i + j * ldb]
                    temp2 = 0.0
                    for k2 in range(i):
                        c[k2 + j * ldc] += temp1 * a[k2 + i * lda]
                        temp2 += b[k2 + j * ldb] * a[k2 + i * lda]
                    if beta == 0.0:
                        c[i + j * ldc] = temp1 * a[i + i * lda] + alpha * temp2
                    else:
                        c[i + j * ldc] = (beta * c[i + j * ldc]
                                          + temp1 * a[i + i * lda] + alpha * temp2)
        else:
            for j in range(n):
                for i in range(m - 1, -1, -1):
                    temp1 = alpha * b[i + j * ldb]
                    temp2 = 0.0
                    for k2 in range(i + 1, m):
                        c[k2 + j * ldc] += temp1 * a[k2 + i * lda]
                        temp2 += b[k2 + j * ldb] * a[k2 + i * lda]
                    if beta == 0.0:
                        c[i + j * ldc] = temp1 * a[i + i * lda] + alpha * temp2
                    else:
                        c[i + j * ldc] = (beta * c[i + j * ldc]
                                          + temp1 * a[i + i * lda] + alpha * temp2)
    else:
        for j in range(n):
            temp1 = alpha * a[j + j * lda]
            if beta == 0.0:
                for i in range(m):
                    c[i + j * ldc] = temp1 * b[i + j * ldb]
            else:
                for i in range(m):
                    c[i + j * ldc] = beta * c[i + j * ldc] + temp1 * b[i + j * ldb]
            for k2 in range(j):
                if uplo == UPPER:
                    temp1 = alpha * a[k2 + j * lda]
                else:
                    temp1 = alpha * a[j + k2 * lda]
                for i in range(m):
                    c[i + j * ldc] += temp1 * b[i + k2 * ldb]
            for k2 in range(j + 1, n):
                if uplo == UPPER:
                    temp1 = alpha * a[j + k2 * lda]
                else:
                    temp1 = alpha * a[k2 + j * lda]
                for i in range(m):
                    c[i + j * ldc] += temp1 * b[i + k2 * ldb]


def dsyrk(uplo, trans, n, k, alpha, a, lda, beta, c, ldc):
    if n == 0 or ((alpha == 0.0 or k == 0) and beta == 1.0):
        return
    if alpha == 0.0:
        for j in range(n):
            lo = 0 if uplo == UPPER else j
            hi = j + 1 if uplo == UPPER else n
            if beta == 0.0:
                for i in range(lo, hi):
                    c[i + j * ldc] = 0.0
            else:
                for i in range(lo, hi):
                    c[i + j * ldc] = beta * c[i + j * ldc]
        return
    if trans == NOTRANS:
        for j in range(n):
            lo = 0 if uplo == UPPER else j
            hi = j + 1 if uplo == UPPER else n
            if beta == 0.0:
                for i in range(lo, hi):
                    c[i + j * ldc] = 0.0
            elif beta != 1.0:
                for i in range(lo, hi):
                    c[i + j * ldc] = beta * c[i + j * ldc]
            for l in range(k):
                if a[j + l * lda] != 0.0:
                    temp = alpha * a[j + l * lda]
                    for i in range(lo, hi):
                        c[i + j * ldc] += temp * a[i + l * lda]
    else:
        for j in range(n):
            lo = 0 if uplo == UPPER else j
            hi = j + 1 if uplo == UPPER else n
            for i in range(lo, hi):
                temp = 0.0
                for l in range(k):
                    temp += a[l + i * lda] * a[l + j * lda]
                if beta == 0.0:
                    c[i + j * ldc] = alpha * temp
                else:
                    c[i + j * ldc] = alpha * temp + beta * c[i + j * ldc]


def dsyr2k(uplo, trans, n, k, alpha, a, lda, b, ldb, beta, c, ldc):
    if n == 0 or ((alpha == 0.0 or k == 0) and beta == 1.0):
        return
    if alpha == 0.0:
        for j in range(n):
            lo = 0 if uplo == UPPER else j
            hi = j + 1 if uplo == UPPER else n
            if beta == 0.0:
                for i in range(lo, hi):
                    c[i + j * ldc] = 0.0
            else:
                for i in range(lo, hi):
                    c[i + j * ldc] = beta * c[i + j * ldc]
        return
    if trans == NOTRANS:
        for j in range(n):
            lo = 0 if uplo == UPPER else j
            hi = j + 1 if uplo == UPPER else n
            if beta == 0.0:
                for i in range(lo, hi):
                    c[i + j * ldc] = 0.0
            elif beta != 1.0:
                for i in range(lo, hi):
                    c[i + j * ldc] = beta * c[i + j * ldc]
            for l in range(k):
                if a[j + l * lda] != 0.0 or b[j + l * ldb] != 0.0:
                    temp1 = alpha * b[j + l * ldb]
                    temp2 = alpha * a[j + l * lda]
                    for i in range(lo, hi):
                        c[i + j * ldc] += a[i + l * lda] * temp1 + b[i + l * ldb] * temp2
    else:
        for j in range(n):
            lo = 0 if uplo == UPPER else j
            hi = j + 1 if uplo == UPPER else n
            for i in range(lo, hi):
                temp1 = 0.0
                temp2 = 0.0
                for l in range(k):
                    temp1 += a[l + i * lda] * b[l + j * ldb]
                    temp2 += b[l + i * lda] * a[l + j * lda]
                if beta == 0.0:
                    c[i + j * ldc] = alpha * temp1 + alpha * temp2
                else:
                    c[i + j * ldc] = (beta * c[i + j * ldc]
                                      + alpha * temp1 + alpha * temp2)


def dtrmm(side, uplo, transa, diag, m, n, alpha, a, lda, b, ldb):
    if m == 0 or n == 0:
        return
    if alpha == 0.0:
        for j in range(n):
            for i in range(m):
                b[i + j * ldb] = 0.0
        return
    nonunit = diag == NONUNIT
    if side == LEFT:
        if transa == NOTRANS:
            if uplo == UPPER:
                for j in range(n):
                    for k2 in range(m):
                        if b[k2 + j * ldb] != 0.0:
                            temp = alpha * b[k2 + j * ldb]
                            for i in range(k2):
                                b[i + j * ldb] += temp * a[i + k2 * lda]
                            if nonunit:
                                temp = temp * a[k2 + k2 * lda]
                            b[k2 + j * ldb] = temp
            else:
                for j in range(n):
                    for k2 in range(m - 1, -1, -1):
                        if b[k2 + j * ldb] != 0.0:
                            temp = alpha * b[k2 + j * ldb]
                            b[k2 + j * ldb] = temp
                            if nonunit:
                                b[k2 + j * ldb] = b[k2 + j * ldb] * a[k2 + k2 * lda]
                            for i in range(k2 + 1, m):
                                b[i + j * ldb] += temp * a[i + k2 * lda]
        else:
            if uplo == UPPER:
                for j in range(n):
                    for i in range(m - 1, -1, -1):
                        temp = b[i + j * ldb]
                        if nonunit:
                            temp = temp * a[i + i * lda]
                        for k2 in range(i):
                            temp += a[k2 + i * lda] * b[k2 + j * ldb]
                        b[i + j * ldb] = alpha * temp
            else:
                for j in range(n):
                    for i in range(m):
                        temp = b[i + j * ldb]
                        if nonunit:
                            temp = temp * a[i + i * lda]
                        for k2 in range(i + 1, m):
                            temp += a[k2 + i * lda] * b[k2 + j * ldb]
                        b[i + j * ldb] = alpha * temp
    else:
        if transa == NOTRANS:
            if uplo == UPPER:
                for j in range(n - 1, -1, -1):
                    temp = alpha
                    if nonunit:
                        temp = temp * a[j + j * lda]
                    for i in range(m):
                        b[i + j * ldb] = temp * b[i + j * ldb]
                    for k2 in range(j):
                        if a[k2 + j * lda] != 0.0:
                            temp = alpha * a[k2 + j * lda]
                            for i in range(m):
                                b[i + j * ldb] += temp * b[i + k2 * ldb]
            else:
                for j in range(n):
                    temp = alpha
                    if nonunit:
                        temp = temp * a[j + j * lda]
                    for i in range(m):
                        b[i + j * ldb] = temp * b[i + j * ldb]
                    for k2 in range(j + 1, n):
                        if a[k2 + j * lda] != 0.0:
                            temp = alpha * a[k2 + j * lda]
                            for i in range(m):
                                b[i + j * ldb] += temp * b[i + k2 * ldb]
        else:
            if uplo == UPPER:
                for k2 in range(n):
                    for j in range(k2):
                        if a[j + k2 * lda] != 0.0:
                            temp = alpha * a[j + k2 * lda]
                            for i in range(m):
                                b[i + j * ldb] += temp * b[i + k2 * ldb]
                    temp = alpha
                    if nonunit:
                        temp = temp * a[k2 + k2 * lda]
                    if temp != 1.0:
                        for i in range(m):
                            b[i + k2 * ldb] = temp * b[i + k2 * ldb]
            else:
                for k2 in range(n - 1, -1, -1):
                    for j in range(k2 + 1, n):
                        if a[j + k2 * lda] != 0.0:
                            temp = alpha * a[j + k2 * lda]
                            for i in range(m):
                                b[i + j * ldb] += temp * b[i + k2 * ldb]
                    temp = alpha
                    if nonunit:
                        temp = temp * a[k2 + k2 * lda]
                    if temp != 1.0:
                        for i in range(m):
                            b[i + k2 * ldb] = temp * b[i + k2 * ldb]


def dtrsm(side, uplo, transa, diag, m, n, alpha, a, lda, b, ldb):
    if m == 0 or n == 0:
        return
    if alpha == 0.0:
        for j in range(n):
            for i in range(m):
                b[i + j * ldb] = 0.0
        return
    nonunit = diag == NONUNIT
    if side == LEFT:
        if transa == NOTRANS:
            if uplo == UPPER:
                for j in range(n):
                    if alpha != 1.0:
                        for i in range(m):
                            b[i + j * ldb] = alpha * b[i + j * ldb]
                    for k2 in range(m - 1, -1, -1):
                        if b[k2 + j * ldb] != 0.0:
                            if nonunit:
                                b[k2 + j * ldb] = b[k2 + j * ldb] / a[k2 + k2 * lda]
                            for i in range(k2):
                                b[i + j * ldb] -= b[k2 + j * ldb] * a[i + k2 * lda]
            else:
                for j in range(n):
                    if alpha != 1.0:
                        for i in range(m):
                            b[i + j * ldb] = alpha * b[i + j * ldb]
                    for k2 in range(m):
                        if b[k2 + j * ldb] != 0.0:
                            if nonunit:
                                b[k2 + j * ldb] = b[k2 + j * ldb] / a[k2 + k2 * lda]
                            for i in range(k2 + 1, m):
                                b[i + j * ldb] -= b[k2 + j * ldb] * a[i + k2 * lda]
        else:
            if uplo == UPPER:
                for j in range(n):
                    for i in range(m):
                        temp = alpha * b[i + j * ldb]
                        for k2 in range(i):
                            temp -= a[k2 + i * lda] * b[k2 + j * ldb]
                        if nonunit:
                            temp = temp / a[i + i * lda]
                        b[i + j * ldb] = temp
            else:
                for j in range(n):
                    for i in range(m - 1, -1, -1):
                        temp = alpha * b[i + j * ldb]
                        for k2 in range(i + 1, m):
                            temp -= a[k2 + i * lda] * b[k2 + j * ldb]
                        if nonunit:
                            temp = temp / a[i + i * lda]
                        b[i + j * ldb] = temp
    else:
        if transa == NOTRANS:
            if uplo == UPPER:
                for j in range(n):
                    if alpha != 1.0:
                        for i in range(m):
                            b[i + j * ldb] = alpha * b[i + j * ldb]
                    for k2 in range(j):
                        if a[k2 + j * lda] != 0.0:
                            for i in range(m):
                                b[i + j * ldb] -= a[k2 + j * lda] * b[i + k2 * ldb]
                    if nonunit:
                        temp = 1.0 / a[j + j * lda]
                        for i in range(m):
                            b[i + j * ldb] = temp * b[i + j * ldb]
            else:
                for j in range(n - 1, -1, -1):
                    if alpha != 1.0:
                        for i in range(m):
                            b[i + j * ldb] = alpha * b[i + j * ldb]
                    for k2 in range(j + 1, n):
                        if a[k2 + j * lda] != 0.0:
                            for i in range(m):
                                b[i + j * ldb] -= a[k2 + j * lda] * b[i + k2 * ldb]
                    if nonunit:
                        temp = 1.0 / a[j + j * lda]
                        for i in range(m):
                            b[i + j * ldb] = temp * b[i + j * ldb]
        else:
            if uplo == UPPER:
                for k2 in range(n - 1, -1, -1):
                    if nonunit:
                        temp = 1.0 / a[k2 + k2 * lda]
                        for i in range(m):
                            b[i + k2 * ldb] = temp * b[i + k2 * ldb]
                    for j in range(k2):
                        if a[j + k2 * lda] != 0.0:
                            temp = a[j + k2 * lda]
                            for i in range(m):
                                b[i + j * ldb] -= temp * b[i + k2 * ldb]
                    if alpha != 1.0:
                        for i in range(m):
                            b[i + k2 * ldb] = alpha * b[i + k2 * ldb]
            else:
                for k2 in range(n):
                    if nonunit:
                        temp = 1.0 / a[k2 + k2 * lda]
                        for i in range(m):
                            b[i + k2 * ldb] = temp * b[i + k2 * ldb]
                    for j in range(k2 + 1, n):
                        if a[j + k2 * lda] != 0.0:
                            temp = a[j + k2 * lda]
                            for i in range(m):
                                b[i + j * ldb] -= temp * b[i + k2 * ldb]
                    if alpha != 1.0:
                        for i in range(m):
                            b[i + k2 * ldb] = alpha * b[i + k2 * ldb]


KERNELS = {
    "dasum": dasum, "daxpy": daxpy, "ddot": ddot, "idamax": idamax,
    "dnrm2": dnrm2, "drot": drot, "drotm": drotm,
    "dgemv": dgemv, "dger": dger, "dsymv": dsymv, "dsyr": dsyr,
    "dsyr2": dsyr2, "dtrmv": dtrmv, "dtrsv": dtrsv,
    "dgemm": dgemm, "dsymm": dsymm, "dsyrk": dsyrk, "dsyr2k": dsyr2k,
    "dtrmm": dtrmm, "dtrsm": dtrsm,
}
