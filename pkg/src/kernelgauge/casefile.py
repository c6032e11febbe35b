"""Binary case files: the wire format between the harness and kernel children.

Layout (little-endian throughout):

    offset  size  field
    0       4     magic "KGAU"
    4       4     u32 version (currently 1)
    8       4     u32 routine id
    12      24    i64 m, n, k          (0 when unused)
    36      16    i64 incx, incy       (0 when unused)
    52      4     4 param chars        (routine's char args in signature
                                        order, NUL when absent)
    56      ...   payload: float64 arrays back to back, one per scalar/
                  vector/matrix/dparam argument in signature order

An input file carries every payload argument; an output file carries only
the out-arguments (plus a 1-element "_result" slot for value-returning
routines), in the same order. Matrix storage always uses ld = max(1, rows),
which is the convention the test generator binds for child-executed cases.

The same records double as the oracle's conformance-dump format for
cross-implementation diffing.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import KernelGaugeError
from .routines import ROUTINES, RoutineSpec, axis_for_arg, matrix_shape, vector_length
from .testgen import TestCase

MAGIC = b"KGAU"
VERSION = 1
HEADER = struct.Struct("<4sII3q2q4s")  # 56 bytes
assert HEADER.size == 56


def _char_slots(spec: RoutineSpec, params: dict) -> bytes:
    chars = []
    for arg in spec.args:
        if arg.kind == "char":
            axis = axis_for_arg(spec, arg)
            chars.append(params.get(axis, "N").encode("ascii"))
    while len(chars) < 4:
        chars.append(b"\x00")
    return b"".join(chars[:4])


def payload_shapes(case: TestCase) -> list[tuple[str, int, bool]]:
    """(name, element count, is_out) for each payload slot, in order."""
    spec = ROUTINES[case.routine]
    params = case.params_dict()
    dims = case.dims_dict()
    strides = case.strides_dict()
    shapes = []
    for arg in spec.payload_args:
        if arg.kind == "scalar":
            count = 1
        elif arg.kind == "param5":
            count = 5
        elif arg.kind == "vec":
            n = vector_length(spec, arg.name, params, dims)
            inc = strides.get("incx" if arg.name == "x" else "incy", 1)
            count = 0 if n <= 0 else 1 + (n - 1) * abs(inc)
        else:
            rows, cols = matrix_shape(spec, arg.name, params, dims)
            count = max(1, rows) * max(0, cols)
        shapes.append((arg.name, count, arg.out))
    if spec.returns_value:
        shapes.append(("_result", 1, True))
    return shapes


def encode_header(case: TestCase) -> bytes:
    spec = ROUTINES[case.routine]
    dims = case.dims_dict()
    strides = case.strides_dict()
    return HEADER.pack(
        MAGIC, VERSION, spec.routine_id,
        dims.get("m", 0), dims.get("n", 0), dims.get("k", 0),
        strides.get("incx", 0), strides.get("incy", 0),
        _char_slots(spec, case.params_dict()),
    )


def encode_input(case: TestCase, problem: dict) -> bytes:
    """Serialize a bound problem into an input case file."""
    chunks = [encode_header(case)]
    for name, count, _ in payload_shapes(case):
        if name == "_result":
            continue
        value = problem[name]
        arr = np.asarray(value, dtype=np.float64).reshape(-1)
        if arr.size != count:
            raise KernelGaugeError(
                f"{case.routine}: payload {name} has {arr.size} elements, expected {count}"
            )
        chunks.append(arr.astype("<f8").tobytes())
    return b"".join(chunks)


def encode_output(case: TestCase, outputs: dict) -> bytes:
    """Serialize out-arguments (post-call buffers and the result slot)."""
    chunks = [encode_header(case)]
    for name, count, out in payload_shapes(case):
        if not out:
            continue
        arr = np.asarray(outputs[name], dtype=np.float64).reshape(-1)
        if arr.size != count:
            raise KernelGaugeError(
                f"{case.routine}: output {name} has {arr.size} elements, expected {count}"
            )
        chunks.append(arr.astype("<f8").tobytes())
    return b"".join(chunks)


def _decode_header(data: bytes, case: TestCase) -> None:
    if len(data) < HEADER.size:
        raise KernelGaugeError("case file truncated (no header)")
    magic, version, rid, m, n, k, incx, incy, chars = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise KernelGaugeError("bad case-file magic")
    if version != VERSION:
        raise KernelGaugeError(f"unsupported case-file version {version}")
    spec = ROUTINES[case.routine]
    if rid != spec.routine_id:
        raise KernelGaugeError(
            f"case file routine id {rid} does not match {case.routine}"
        )


def decode_input(data: bytes, case: TestCase) -> dict:
    """Deserialize an input case file into a problem dict."""
    _decode_header(data, case)
    offset = HEADER.size
    problem: dict = {}
    spec = ROUTINES[case.routine]
    kinds = {a.name: a.kind for a in spec.payload_args}
    for name, count, _ in payload_shapes(case):
        if name == "_result":
            continue
        end = offset + 8 * count
        if end > len(data):
            raise KernelGaugeError(f"case file truncated in payload {name}")
        arr = np.frombuffer(data[offset:end], dtype="<f8").astype(np.float64)
        offset = end
        problem[name] = float(arr[0]) if kinds[name] == "scalar" else arr
    if offset != len(data):
        raise KernelGaugeError("trailing bytes after payload")
    return problem


def decode_output(data: bytes, case: TestCase) -> dict:
    """Deserialize an output case file into an outputs dict."""
    _decode_header(data, case)
    offset = HEADER.size
    outputs: dict = {}
    for name, count, out in payload_shapes(case):
        if not out:
            continue
        end = offset + 8 * count
        if end > len(data):
            raise KernelGaugeError(f"case file truncated in output {name}")
        outputs[name] = np.frombuffer(data[offset:end], dtype="<f8").astype(np.float64)
        offset = end
    if offset != len(data):
        raise KernelGaugeError("trailing bytes after outputs")
    return outputs


def conformance_record(case: TestCase) -> tuple[bytes, bytes]:
    """Deterministic (input, output) records of one reference call."""
    from . import oracle, testgen

    problem = testgen.init_problem(case)
    input_bytes = encode_input(case, problem)
    args = testgen.fortran_args(case, problem)
    value = oracle.call(case.routine, args)
    outputs = dict(problem)
    if ROUTINES[case.routine].returns_value:
        outputs["_result"] = np.array([float(value)])
    return input_bytes, encode_output(case, outputs)
