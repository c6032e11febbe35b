"""Exception types shared across the harness."""

from __future__ import annotations


class KernelGaugeError(Exception):
    """Base class for all harness errors."""


class BlasArgumentError(KernelGaugeError):
    """Invalid routine argument, reported xerbla-style.

    ``index`` is the 1-based position of the first offending argument in the
    routine's Fortran argument list.
    """

    def __init__(self, routine: str, index: int, message: str = ""):
        self.routine = routine
        self.index = index
        detail = f"{routine}: argument {index} is invalid"
        if message:
            detail += f" ({message})"
        super().__init__(detail)


class ReplayMissError(KernelGaugeError):
    """A replay store has no entry for the requested candidate key."""


class BackendError(KernelGaugeError):
    """Terminal sampling-backend failure (auth, quota, malformed response)."""


class ConfigError(KernelGaugeError):
    """Invalid run configuration."""
