"""kernelgauge: generate, verify, and benchmark candidate BLAS kernels.

The package pairs a deterministic plain-loop reference implementation of 20
double-precision BLAS routines with an exhaustive test matrix, a sandboxed
compile-and-run pipeline for untrusted candidate kernels, bandwidth/flops
benchmarking, and report generation.
"""

__version__ = "0.1.0"
