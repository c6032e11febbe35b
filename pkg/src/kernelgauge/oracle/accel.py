"""Optional numba acceleration for the benchmark path.

Verdicts never depend on this module: verification always runs the
interpreted kernels. Benchmarking the reference at the full problem sizes
(16M-element vectors, 2048^3 matrix products) is impractical in interpreted
Python, so the same plain-loop sources are JIT-compiled here when numba is
available. The compiled code performs the identical operation sequence
(no fastmath, no reassociation), so results stay bit-identical.
"""

from __future__ import annotations

import warnings

from . import kernels as _k

_jitted: dict | None = None


def available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def accelerated_kernels() -> dict:
    """Name -> callable map; JIT-compiled when numba is importable."""
    global _jitted
    if _jitted is not None:
        return _jitted
    try:
        import numba
    except ImportError:
        warnings.warn(
            "numba not installed: benchmarking the reference runs interpreted "
            "and will be extremely slow at the default problem sizes",
            stacklevel=2,
        )
        _jitted = dict(_k.KERNELS)
        return _jitted
    jit = numba.njit(cache=True, fastmath=False)
    # The kernels resolve _vstart through module globals; nopython mode needs
    # it to be a jitted function. Rebinding it is transparent to the
    # interpreted path (pure integer arithmetic, same results).
    _k._vstart = jit(_k._vstart)
    _jitted = {name: jit(fn) for name, fn in _k.KERNELS.items()}
    return _jitted
