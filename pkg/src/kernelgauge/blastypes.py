"""Domain types for the BLAS routine surface.

Flag parsing is case-insensitive and mirrors the Fortran character
conventions. Conjugate transpose is deliberately rejected: the harness only
targets real double-precision routines.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import KernelGaugeError


class Trans(enum.Enum):
    NO_TRANS = "N"
    TRANS = "T"

    @classmethod
    def from_char(cls, ch: str) -> "Trans":
        c = str(ch).upper()
        if c == "N":
            return cls.NO_TRANS
        if c == "T":
            return cls.TRANS
        raise KernelGaugeError(f"invalid trans flag {ch!r} (expected 'N' or 'T')")


class Uplo(enum.Enum):
    LOWER = "L"
    UPPER = "U"

    @classmethod
    def from_char(cls, ch: str) -> "Uplo":
        c = str(ch).upper()
        if c == "L":
            return cls.LOWER
        if c == "U":
            return cls.UPPER
        raise KernelGaugeError(f"invalid uplo flag {ch!r} (expected 'L' or 'U')")


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    @classmethod
    def from_char(cls, ch: str) -> "Side":
        c = str(ch).upper()
        if c == "L":
            return cls.LEFT
        if c == "R":
            return cls.RIGHT
        raise KernelGaugeError(f"invalid side flag {ch!r} (expected 'L' or 'R')")


class Diag(enum.Enum):
    NON_UNIT = "N"
    UNIT = "U"

    @classmethod
    def from_char(cls, ch: str) -> "Diag":
        c = str(ch).upper()
        if c == "U":
            return cls.UNIT
        if c == "N":
            return cls.NON_UNIT
        raise KernelGaugeError(f"invalid diag flag {ch!r} (expected 'U' or 'N')")


@dataclass
class StridedVector:
    """A logical vector of ``n`` float64 elements inside strided storage.

    Logical element i (0-based) lives at ``data[i * inc]`` for positive
    strides and at the reversed position ``data[(n - 1 - i) * |inc|]`` for
    negative ones, matching the Fortran BLAS convention.
    """

    data: np.ndarray
    n: int
    inc: int = 1

    def __post_init__(self):
        self.data = np.ascontiguousarray(self.data, dtype=np.float64)
        if self.n < 0:
            raise KernelGaugeError(f"vector length must be >= 0, got {self.n}")
        if self.inc == 0:
            raise KernelGaugeError("vector stride must be nonzero")
        if self.n > 0 and self.data.size < 1 + (self.n - 1) * abs(self.inc):
            raise KernelGaugeError(
                f"storage of {self.data.size} elements too small for "
                f"n={self.n}, inc={self.inc}"
            )

    @classmethod
    def from_logical(cls, values, inc: int = 1, fill: float = 0.0) -> "StridedVector":
        """Build storage holding ``values`` at stride ``inc`` (gaps = fill)."""
        values = np.asarray(values, dtype=np.float64)
        n = values.size
        size = 0 if n == 0 else 1 + (n - 1) * abs(inc)
        data = np.full(size, fill, dtype=np.float64)
        if n:
            start = 0 if inc > 0 else (n - 1) * abs(inc)
            data[start::inc][:n] = values
        return cls(data, n, inc)

    def logical(self) -> np.ndarray:
        """Contiguous copy of the logical elements."""
        if self.n == 0:
            return np.empty(0, dtype=np.float64)
        start = 0 if self.inc > 0 else (self.n - 1) * abs(self.inc)
        return self.data[start :: self.inc][: self.n].copy()


@dataclass
class ColMajorMatrix:
    """A rows x cols float64 matrix in column-major storage.

    Element (i, j) (0-based) lives at ``data[i + j * ld]``; ``ld`` is the
    storage row count and must satisfy ``ld >= max(1, rows)``.
    """

    data: np.ndarray
    rows: int
    cols: int
    ld: int

    def __post_init__(self):
        self.data = np.ascontiguousarray(self.data, dtype=np.float64)
        if self.rows < 0 or self.cols < 0:
            raise KernelGaugeError(
                f"matrix dims must be >= 0, got {self.rows}x{self.cols}"
            )
        if self.ld < max(1, self.rows):
            raise KernelGaugeError(
                f"leading dimension {self.ld} < max(1, rows={self.rows})"
            )
        if self.data.size < self.ld * self.cols:
            raise KernelGaugeError(
                f"storage of {self.data.size} elements too small for "
                f"ld={self.ld}, cols={self.cols}"
            )

    @classmethod
    def from_logical(cls, values, ld: int | None = None, fill: float = 0.0) -> "ColMajorMatrix":
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 2:
            raise KernelGaugeError("from_logical expects a 2-D array")
        rows, cols = values.shape
        if ld is None:
            ld = max(1, rows)
        data = np.full(ld * cols, fill, dtype=np.float64)
        view = data.reshape(cols, ld).T
        view[:rows, :] = values
        return cls(data, rows, cols, ld)

    def logical(self) -> np.ndarray:
        """Contiguous (rows, cols) copy of the logical elements."""
        view = self.data[: self.ld * self.cols].reshape(self.cols, self.ld).T
        return view[: self.rows, :].copy()


@dataclass
class RotParams:
    """Plane-rotation coefficients; c**2 + s**2 = 1 is conventional, not enforced."""

    c: float
    s: float


@dataclass
class RotmParams:
    """Modified-Givens parameter block (flag plus the 2x2 H entries).

    flag -2: H is the identity. flag -1: all four entries are used.
    flag 0: unit diagonal is implied (h11 = h22 = 1). flag 1: the
    antidiagonal is fixed (h21 = -1, h12 = 1).
    """

    flag: int
    h11: float = 0.0
    h21: float = 0.0
    h12: float = 0.0
    h22: float = 0.0

    def __post_init__(self):
        if self.flag not in (-2, -1, 0, 1):
            raise KernelGaugeError(f"rotm flag must be in {{-2,-1,0,1}}, got {self.flag}")

    def to_dparam(self) -> np.ndarray:
        """Pack into the 5-element dparam array (flag, h11, h21, h12, h22)."""
        return np.array(
            [float(self.flag), self.h11, self.h21, self.h12, self.h22],
            dtype=np.float64,
        )

    @classmethod
    def from_dparam(cls, dparam) -> "RotmParams":
        d = np.asarray(dparam, dtype=np.float64)
        if d.size != 5:
            raise KernelGaugeError("dparam must have 5 elements")
        return cls(int(d[0]), float(d[1]), float(d[2]), float(d[3]), float(d[4]))

    def matrix(self) -> np.ndarray:
        """The effective 2x2 H, with implied entries filled in."""
        if self.flag == -2:
            return np.eye(2)
        if self.flag == -1:
            return np.array([[self.h11, self.h12], [self.h21, self.h22]])
        if self.flag == 0:
            return np.array([[1.0, self.h12], [self.h21, 1.0]])
        return np.array([[self.h11, 1.0], [-1.0, self.h22]])


@dataclass
class Scalars:
    alpha: float = 1.0
    beta: float = 0.0
