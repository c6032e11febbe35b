"""Child-process entry point that executes one kernel over a case manifest.

Run as ``python -m kernelgauge.sandbox_child``. The parent communicates
through files only, so a crashing kernel can never corrupt parent state:

* ``--manifest``: one case id per line; cases are numbered by line.
* ``--workdir``: receives ``NNNNNN.out`` output case files, ``NNNNNN.stdout``
  captured kernel stdout, and ``progress.txt`` with one flushed line per
  event (``START i`` / ``DONE i marker=M xerbla=X`` / ``ERROR i msg``).

Kernels come in two flavors, selected by the ``--kernel`` argument:

* a Python source file defining ``GPTBLAS_<routine>`` with the Fortran
  argument list (buffers as 1-D float64 ndarrays, flags as one-char strings);
* ``so:<path>`` — a compiled shared library whose ``shim_main`` is invoked
  through ctypes with input/output case-file paths.

Subcommands: ``check`` (load and resolve the symbol, exit 4 when missing),
``batch`` (run the manifest), ``bench`` (timed repetitions of one case,
emitting ``KGAUTIME <i> <seconds>`` lines on stderr).

Exit codes: 0 ok, 4 missing kernel symbol, 5 kernel failed to load.
"""

from __future__ import annotations

import argparse
import contextlib
import ctypes
import importlib.util
import io
import os
import sys
import time

import numpy as np

from . import casefile, testgen
from .errors import BlasArgumentError
from .routines import ROUTINES

MARKER = b"[gptblas]"


class _XerblaLog:
    def __init__(self):
        self.records: list[str] = []

    def __call__(self, srname: str, info: int) -> None:
        self.records.append(f"{srname}:{info}")


class PythonKernelRunner:
    """Loads a candidate Python module and calls its GPTBLAS_<routine>."""

    def __init__(self, path: str, routine: str):
        spec = importlib.util.spec_from_file_location("kgauge_candidate", path)
        if spec is None or spec.loader is None:
            raise RuntimeError(f"cannot load candidate module {path}")
        module = importlib.util.module_from_spec(spec)
        self.xerbla = _XerblaLog()
        module.xerbla = self.xerbla  # available to candidates that want it
        spec.loader.exec_module(module)
        self.func = getattr(module, f"GPTBLAS_{routine}", None)
        self.routine = routine

    def has_symbol(self) -> bool:
        return callable(self.func)

    def run_case(self, case: testgen.TestCase, stdout_path: str) -> dict:
        problem = testgen.init_problem(case)
        args = testgen.fortran_args(case, problem)
        self.xerbla.records.clear()
        value = None
        err: BaseException | None = None
        with open(stdout_path, "wb") as sink, _fd_redirect(1, sink):
            try:
                value = self.func(*args)
            except BlasArgumentError as exc:
                self.xerbla.records.append(f"{exc.routine}:{exc.index}")
            except BaseException as exc:
                err = exc
            finally:
                sys.stdout.flush()
        if err is not None:
            raise err
        spec = ROUTINES[case.routine]
        outputs = {arg.name: problem[arg.name] for arg in spec.out_args}
        if spec.returns_value:
            outputs["_result"] = np.array([0.0 if value is None else float(value)])
        return outputs


class SharedLibRunner:
    """Drives a compiled candidate through the C shim's shim_main."""

    def __init__(self, path: str, routine: str):
        self.lib = ctypes.CDLL(os.path.abspath(path))
        self.routine = routine
        self.shim_main = getattr(self.lib, "shim_main", None)
        if self.shim_main is not None:
            self.shim_main.argtypes = [ctypes.c_char_p, ctypes.c_char_p]
            self.shim_main.restype = ctypes.c_int

    def has_symbol(self) -> bool:
        # The shim only links if GPTBLAS_<routine> resolved, so shim_main
        # standing in for the kernel symbol is sufficient.
        return self.shim_main is not None

    def run_case(self, case: testgen.TestCase, stdout_path: str) -> dict:
        problem = testgen.init_problem(case)
        in_path = stdout_path + ".in"
        out_path = stdout_path + ".outcf"
        with open(in_path, "wb") as fh:
            fh.write(casefile.encode_input(case, problem))
        with open(stdout_path, "wb") as sink, _fd_redirect(1, sink):
            rc = self.shim_main(in_path.encode(), out_path.encode())
            _flush_cstdio(self.lib)
        if rc != 0:
            raise RuntimeError(f"shim_main exited with code {rc}")
        with open(out_path, "rb") as fh:
            outputs = casefile.decode_output(fh.read(), case)
        os.unlink(in_path)
        os.unlink(out_path)
        return outputs


@contextlib.contextmanager
def _fd_redirect(fd: int, sink):
    """Temporarily point an OS-level fd at an open file object."""
    sys.stdout.flush()
    saved = os.dup(fd)
    try:
        os.dup2(sink.fileno(), fd)
        yield
    finally:
        os.dup2(saved, fd)
        os.close(saved)


def _flush_cstdio(lib) -> None:
    try:
        libc = ctypes.CDLL(None)
        libc.fflush(None)
    except OSError:
        pass


def _load_runner(kernel: str, routine: str):
    if kernel.startswith("so:"):
        return SharedLibRunner(kernel[3:], routine)
    return PythonKernelRunner(kernel, routine)


def _read_xerbla(runner) -> int:
    if isinstance(runner, PythonKernelRunner):
        return len(runner.xerbla.records)
    return 0


class _Progress:
    def __init__(self, path: str):
        self.fh = open(path, "a", encoding="utf-8")

    def emit(self, line: str) -> None:
        self.fh.write(line + "\n")
        self.fh.flush()
        os.fsync(self.fh.fileno())


def cmd_check(args) -> int:
    try:
        runner = _load_runner(args.kernel, args.routine)
    except BaseException as exc:
        print(f"load failure: {exc!r}", file=sys.stderr)
        return 5
    return 0 if runner.has_symbol() else 4


def cmd_batch(args) -> int:
    try:
        runner = _load_runner(args.kernel, args.routine)
    except BaseException as exc:
        print(f"load failure: {exc!r}", file=sys.stderr)
        return 5
    if not runner.has_symbol():
        return 4
    progress = _Progress(os.path.join(args.workdir, "progress.txt"))
    with open(args.manifest, "r", encoding="utf-8") as fh:
        case_ids = [line.strip() for line in fh if line.strip()]
    for i, case_id in enumerate(case_ids):
        if i < args.start:
            continue
        case = testgen.parse_case_id(case_id.rpartition(" seed=")[0] or case_id)
        progress.emit(f"START {i}")
        stdout_path = os.path.join(args.workdir, f"{i:06d}.stdout")
        try:
            outputs = runner.run_case(case, stdout_path)
        except BaseException as exc:
            progress.emit(f"ERROR {i} {exc!r}")
            continue
        with open(os.path.join(args.workdir, f"{i:06d}.out"), "wb") as fh:
            fh.write(casefile.encode_output(case, outputs))
        with open(stdout_path, "rb") as fh:
            marker = 1 if MARKER in fh.read() else 0
        progress.emit(f"DONE {i} marker={marker} xerbla={_read_xerbla(runner)}")
    return 0


def cmd_bench(args) -> int:
    case = testgen.parse_case_id(args.case)
    if args.kernel.startswith("so:"):
        os.environ["KGAU_BENCH_REPS"] = str(args.reps)
        os.environ["KGAU_BENCH_WARMUPS"] = str(args.warmups)
        runner = SharedLibRunner(args.kernel[3:], args.routine)
        if not runner.has_symbol():
            return 4
        stdout_path = os.path.join(args.workdir, "bench.stdout")
        runner.run_case(case, stdout_path)  # the shim times and reports
        return 0
    try:
        runner = _load_runner(args.kernel, args.routine)
    except BaseException as exc:
        print(f"load failure: {exc!r}", file=sys.stderr)
        return 5
    if not runner.has_symbol():
        return 4
    problem = testgen.init_problem(case)
    spec = ROUTINES[case.routine]
    originals = {a.name: problem[a.name].copy() for a in spec.out_args}
    fargs = testgen.fortran_args(case, problem)
    sink = open(os.path.join(args.workdir, "bench.stdout"), "wb")
    with _fd_redirect(1, sink):
        for _ in range(args.warmups):
            runner.func(*fargs)
        for rep in range(args.reps):
            for name, orig in originals.items():
                np.copyto(problem[name], orig)
            t0 = time.perf_counter()
            runner.func(*fargs)
            t1 = time.perf_counter()
            sys.stdout.flush()
            print(f"KGAUTIME {rep} {t1 - t0:.9e}", file=sys.stderr, flush=True)
    sink.close()
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="kernelgauge.sandbox_child")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check")
    p.add_argument("--kernel", required=True)
    p.add_argument("--routine", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("batch")
    p.add_argument("--kernel", required=True)
    p.add_argument("--routine", required=True)
    p.add_argument("--manifest", required=True)
    p.add_argument("--workdir", required=True)
    p.add_argument("--start", type=int, default=0)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("bench")
    p.add_argument("--kernel", required=True)
    p.add_argument("--routine", required=True)
    p.add_argument("--case", required=True)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--warmups", type=int, default=1)
    p.add_argument("--workdir", required=True)
    p.set_defaults(func=cmd_bench)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
