"""Compile candidate kernels and run them in crash-isolated child processes.

C candidates are compiled together with the driver shim into a shared
library (two-step compile/link so compiler and linker diagnostics classify
separately), then exercised through ``shim_main`` inside a disposable child
process. Python candidates skip the toolchain and run in the same child
harness. Either way the parent only ever touches files the child left
behind, so no candidate behavior can corrupt parent state; after a crash or
timeout the child is restarted on the next case, which preserves one
outcome per case.
"""

from __future__ import annotations

import os
import re
import shutil
import signal
import subprocess
import sys
import tempfile
import time
from dataclasses import dataclass, field

from . import casefile, testgen
from .errors import KernelGaugeError
from .verifier import CaseOutcome, KernelAdapter, VerdictKind

_POLL_S = 0.005


@dataclass
class BuildRecipe:
    """How to build a C candidate. opt_flags stays empty by default."""

    compiler_cmd: str = "cc"
    arch_flag: str = "-march=native"
    opt_flags: list[str] = field(default_factory=list)
    extra_libs: list[str] = field(default_factory=lambda: ["-lm"])
    shim_src: str | None = None
    int64_args: bool = False        # pass integer arguments as 64-bit

    def resolve_shim(self) -> str:
        if self.shim_src and os.path.exists(self.shim_src):
            return self.shim_src
        candidates = [
            os.environ.get("KGAU_SHIM_SRC"),
            os.path.join(os.getcwd(), "shim", "driver_shim.c"),
            os.path.join(os.path.dirname(__file__), "..", "..", "shim", "driver_shim.c"),
        ]
        for path in candidates:
            if path and os.path.exists(path):
                return path
        raise KernelGaugeError(
            "driver shim source not found (set BuildRecipe.shim_src or KGAU_SHIM_SRC)"
        )


@dataclass
class KernelHandle:
    """A compiled candidate: shared library plus its resolved entry point."""

    library_path: str
    entry_symbol: str
    routine: str
    workdir: str

    @property
    def kernel_ref(self) -> str:
        return f"so:{self.library_path}"


class CandidateUnusable(KernelGaugeError):
    """Candidate cannot be exercised at all; carries the verdict kind."""

    def __init__(self, kind: VerdictKind, detail: str):
        self.kind = kind
        self.detail = detail
        super().__init__(f"{kind.value}: {detail[:2000]}")


_MINMAX_PRELUDE = """\
#ifndef MIN
#define MIN(a, b) (((a) < (b)) ? (a) : (b))
#endif
#ifndef MAX
#define MAX(a, b) (((a) > (b)) ? (a) : (b))
#endif
"""


def _needs_minmax(source: str) -> bool:
    uses = re.search(r"\b(MIN|MAX)\s*\(", source)
    defines = re.search(r"#\s*define\s+(MIN|MAX)\b", source)
    return bool(uses) and not defines


def compile_candidate(source: str, routine: str, recipe: BuildRecipe,
                      workdir: str) -> KernelHandle:
    """Compile candidate C source with the shim into a shared library.

    Raises :class:`CandidateUnusable` with kind CompileError (either
    translation unit fails to compile) or LinkError (the entry symbol or
    anything else fails to resolve).
    """
    if not source.strip():
        raise CandidateUnusable(VerdictKind.COMPILE_ERROR, "empty candidate source")
    os.makedirs(workdir, exist_ok=True)
    cand_c = os.path.join(workdir, "candidate.c")
    text = source
    if _needs_minmax(source):
        text = _MINMAX_PRELUDE + source
    with open(cand_c, "w", encoding="utf-8") as fh:
        fh.write(text)

    shim_src = recipe.resolve_shim()
    base = [recipe.compiler_cmd]
    if recipe.arch_flag:
        base.append(recipe.arch_flag)
    base += recipe.opt_flags + ["-fPIC"]

    cand_o = os.path.join(workdir, "candidate.o")
    rc, diag = _run_tool(base + ["-c", cand_c, "-o", cand_o])
    if rc != 0:
        raise CandidateUnusable(VerdictKind.COMPILE_ERROR, diag)

    shim_o = os.path.join(workdir, "shim.o")
    shim_flags = [f"-DKGAU_HAVE_{routine}"]
    if recipe.int64_args:
        shim_flags.append("-DKGAU_INT64")
    rc, diag = _run_tool(base + shim_flags + ["-c", shim_src, "-o", shim_o])
    if rc != 0:
        raise KernelGaugeError(f"driver shim failed to compile:\n{diag}")

    lib = os.path.join(workdir, "libcandidate.so")
    rc, diag = _run_tool(
        [recipe.compiler_cmd, "-shared", cand_o, shim_o, "-o", lib,
         "-Wl,--no-undefined"] + recipe.extra_libs
    )
    if rc != 0:
        raise CandidateUnusable(VerdictKind.LINK_ERROR, diag)
    return KernelHandle(lib, f"GPTBLAS_{routine}", routine, workdir)


def _run_tool(cmd: list[str]) -> tuple[int, str]:
    proc = subprocess.run(cmd, capture_output=True, text=True)
    return proc.returncode, (proc.stderr or "") + (proc.stdout or "")


def prepare_python_candidate(source: str, routine: str, workdir: str) -> str:
    """Syntax-check and stage a Python candidate; returns the staged path."""
    if not source.strip():
        raise CandidateUnusable(VerdictKind.COMPILE_ERROR, "empty candidate source")
    try:
        compile(source, "candidate.py", "exec")
    except SyntaxError as exc:
        raise CandidateUnusable(VerdictKind.COMPILE_ERROR, str(exc)) from None
    os.makedirs(workdir, exist_ok=True)
    path = os.path.join(workdir, "candidate.py")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(source)
    return path


def check_loadable(kernel_ref: str, routine: str, budget_s: float = 60.0) -> None:
    """Load the kernel in a throwaway child; classify load/symbol failures."""
    try:
        proc = subprocess.run(
            [sys.executable, "-m", "kernelgauge.sandbox_child", "check",
             "--kernel", kernel_ref, "--routine", routine],
            capture_output=True, text=True, timeout=budget_s,
            start_new_session=True,
        )
    except subprocess.TimeoutExpired:
        raise CandidateUnusable(VerdictKind.TIMEOUT,
                                "kernel hung while loading") from None
    if proc.returncode == 4:
        raise CandidateUnusable(VerdictKind.LINK_ERROR,
                                f"GPTBLAS_{routine} not defined")
    if proc.returncode == 5:
        raise CandidateUnusable(VerdictKind.CRASH,
                                f"kernel failed to load: {proc.stderr.strip()}")
    if proc.returncode < 0:
        raise CandidateUnusable(
            VerdictKind.CRASH,
            f"kernel crashed while loading (signal {-proc.returncode})")
    if proc.returncode != 0:
        raise CandidateUnusable(VerdictKind.CRASH,
                                f"loader exited {proc.returncode}: {proc.stderr.strip()}")


class IsolatedKernel(KernelAdapter):
    """Adapter running a kernel (Python file or ``so:`` library) in children."""

    def __init__(self, kernel_ref: str, routine: str, workdir: str,
                 case_budget_s: float = 10.0, name: str | None = None):
        self.kernel_ref = kernel_ref
        self.routine = routine
        self.workdir = workdir
        self.case_budget_s = case_budget_s
        self.name = name or os.path.basename(kernel_ref)

    # -- batch verification -------------------------------------------------

    def run_cases(self, cases):
        """Yield one outcome per case, incrementally.

        Outcomes are yielded as soon as each child batch settles them, so a
        caller that stops consuming after a failure also stops the respawn
        loop.
        """
        os.makedirs(self.workdir, exist_ok=True)
        manifest = os.path.join(self.workdir, "manifest.txt")
        with open(manifest, "w", encoding="utf-8") as fh:
            for case in cases:
                fh.write(case.case_id + "\n")
        outcomes: list[CaseOutcome | None] = [None] * len(cases)
        start = 0
        while start < len(cases):
            next_start = self._run_batch_child(cases, manifest, outcomes, start)
            for i in range(start, next_start):
                yield outcomes[i] if outcomes[i] is not None else CaseOutcome(
                    cases[i].case_id, status="error", detail="case never ran")
            start = next_start

    def _run_batch_child(self, cases, manifest, outcomes, start) -> int:
        progress_path = os.path.join(self.workdir, "progress.txt")
        if os.path.exists(progress_path):
            os.unlink(progress_path)
        with open(os.path.join(self.workdir, "child.stderr"), "ab") as errsink:
            child = subprocess.Popen(
                [sys.executable, "-m", "kernelgauge.sandbox_child", "batch",
                 "--kernel", self.kernel_ref, "--routine", self.routine,
                 "--manifest", manifest, "--workdir", self.workdir,
                 "--start", str(start)],
                stdout=subprocess.DEVNULL, stderr=errsink,
                start_new_session=True,
            )
            events, last_index, timed_out = self._watch(child, progress_path, start,
                                                        len(cases))
        rc = child.returncode

        done_through = start - 1
        for i in sorted(events):
            kind, info = events[i]
            case = cases[i]
            if kind == "DONE":
                outcomes[i] = self._collect_done(case, i, info)
            elif kind == "ERROR":
                outcomes[i] = CaseOutcome(case.case_id, status="error", detail=info)
            done_through = i

        if rc == 4:
            raise CandidateUnusable(VerdictKind.LINK_ERROR,
                                    f"GPTBLAS_{self.routine} not defined")
        if rc == 5:
            raise CandidateUnusable(VerdictKind.CRASH, "kernel failed to load")

        if timed_out:
            victim = last_index if last_index is not None else done_through + 1
            if victim < len(cases):
                outcomes[victim] = CaseOutcome(
                    cases[victim].case_id, status="timeout",
                    detail=f"exceeded {self.case_budget_s:.3g}s budget")
                return victim + 1
            return len(cases)
        if rc == 0:
            return len(cases)
        # Child died (signal or unexpected exit) while a case was in flight.
        victim = last_index if last_index is not None else done_through + 1
        if victim < len(cases):
            if rc < 0:
                try:
                    signame = signal.Signals(-rc).name
                except ValueError:
                    signame = f"signal {-rc}"
                detail = f"terminated by {signame}"
            else:
                detail = f"child exited with status {rc}"
            outcomes[victim] = CaseOutcome(cases[victim].case_id, status="crash",
                                           detail=detail)
            return victim + 1
        return len(cases)

    def _watch(self, child, progress_path, start, total):
        """Poll the progress file; enforce the per-case wall budget."""
        events: dict[int, tuple[str, str]] = {}
        inflight: int | None = None
        deadline = time.monotonic() + self.case_budget_s
        timed_out = False
        while True:
            self._parse_progress(progress_path, events)
            newest = max(events) if events else None
            if newest is not None and (inflight is None or newest > inflight):
                inflight = newest
                deadline = time.monotonic() + self.case_budget_s
            finished = child.poll() is not None
            if finished:
                self._parse_progress(progress_path, events)
                return events, self._inflight_index(progress_path), False
            if time.monotonic() > deadline:
                timed_out = True
                try:
                    os.killpg(os.getpgid(child.pid), signal.SIGKILL)
                except ProcessLookupError:
                    pass
                child.wait()
                self._parse_progress(progress_path, events)
                return events, self._inflight_index(progress_path), True
            time.sleep(_POLL_S)

    @staticmethod
    def _parse_progress(path, events) -> None:
        if not os.path.exists(path):
            return
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                parts = line.rstrip("\n").split(" ", 2)
                if len(parts) < 2 or not parts[1].isdigit():
                    continue
                idx = int(parts[1])
                if parts[0] in ("DONE", "ERROR"):
                    events[idx] = (parts[0], parts[2] if len(parts) > 2 else "")
                elif parts[0] == "START" and idx not in events:
                    events.setdefault(idx, ("START", ""))

    @staticmethod
    def _inflight_index(path) -> int | None:
        """Largest STARTed index without a DONE/ERROR line."""
        if not os.path.exists(path):
            return None
        started, settled = set(), set()
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                parts = line.split(" ", 2)
                if len(parts) >= 2 and parts[1].strip().isdigit():
                    idx = int(parts[1])
                    if parts[0] == "START":
                        started.add(idx)
                    else:
                        settled.add(idx)
        pending = started - settled
        return max(pending) if pending else None

    def _collect_done(self, case, index, info) -> CaseOutcome:
        marker = None
        if "marker=" in info:
            marker = info.split("marker=")[1].split()[0] == "1"
        xerbla = []
        if "xerbla=" in info:
            count = int(info.split("xerbla=")[1].split()[0])
            xerbla = ["recorded"] * count
        out_path = os.path.join(self.workdir, f"{index:06d}.out")
        try:
            with open(out_path, "rb") as fh:
                outputs = casefile.decode_output(fh.read(), case)
        except (OSError, KernelGaugeError) as exc:
            return CaseOutcome(case.case_id, status="error",
                               detail=f"unreadable output: {exc}")
        return CaseOutcome(case.case_id, outputs=outputs, marker=marker,
                           xerbla=xerbla)

    # -- benchmarking ---------------------------------------------------------

    def bench_case(self, case: testgen.TestCase, reps: int, warmups: int,
                   budget_s: float, env: dict | None = None) -> list[float]:
        """Timed repetitions in a child; returns per-rep seconds."""
        os.makedirs(self.workdir, exist_ok=True)
        child_env = dict(os.environ)
        if env:
            child_env.update(env)
        try:
            proc = subprocess.run(
                [sys.executable, "-m", "kernelgauge.sandbox_child", "bench",
                 "--kernel", self.kernel_ref, "--routine", self.routine,
                 "--case", case.case_id, "--reps", str(reps),
                 "--warmups", str(warmups), "--workdir", self.workdir],
                capture_output=True, text=True, timeout=budget_s,
                start_new_session=True, env=child_env,
            )
        except subprocess.TimeoutExpired:
            raise CandidateUnusable(
                VerdictKind.TIMEOUT, f"bench exceeded {budget_s:.3g}s") from None
        if proc.returncode != 0:
            raise CandidateUnusable(
                VerdictKind.CRASH,
                f"bench child failed ({proc.returncode}): {proc.stderr[-500:]}")
        times = []
        for line in proc.stderr.splitlines():
            if line.startswith("KGAUTIME "):
                times.append(float(line.split()[2]))
        if len(times) < reps:
            raise CandidateUnusable(VerdictKind.CRASH,
                                    f"bench child reported {len(times)}/{reps} timings")
        return times


def make_scratch_dir(root: str | None, tag: str) -> str:
    base = root or tempfile.gettempdir()
    os.makedirs(base, exist_ok=True)
    return tempfile.mkdtemp(prefix=f"kgauge-{tag}-", dir=base)


def cleanup_scratch(path: str, keep: bool) -> None:
    """Remove a candidate scratch dir on success, keep it for forensics."""
    if keep:
        return
    shutil.rmtree(path, ignore_errors=True)
