"""Aggregate a run ledger into pass-count and performance tables.

Pass counts follow the whole-suite rule: a candidate counts only if it
passed every case of the routine's test matrix. Performance is reported per
parameter combination with the best passing candidate's metric next to the
reference ("Ref") value and a ratio computed from the unrounded numbers;
display rounds once, to one decimal. A blank cell means every sampled
candidate failed that combination.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import KernelGaugeError
from .routines import ROUTINE_ORDER, ROUTINES
from .testgen import param_combos

MODE_ORDER = ("NameToCcode", "NameToOptCcode", "FrtcodeToOptCcode")


def _column_order(records: list[dict], meta: dict | None) -> list[tuple[str, str]]:
    models: list[str] = []
    if meta:
        models = list(meta.get("models", []))
    for record in records:
        model = record.get("model")
        if model and model != "ref" and model not in models:
            models.append(model)
    modes = [m for m in MODE_ORDER
             if any(r.get("mode") == m for r in records)]
    return [(mode, model) for mode in modes for model in models
            if any(r.get("mode") == mode and r.get("model") == model
                   for r in records)]


def combo_strings(routine: str) -> list[str]:
    combos = []
    for combo in param_combos(ROUTINES[routine]):
        combos.append(", ".join(f"{k}={v}" for k, v in combo.items()))
    return combos


@dataclass
class PassCountTable:
    columns: list[tuple[str, str]]              # (mode, model)
    rows: list[tuple[int, str]]                 # (level, routine)
    counts: dict[tuple[str, str, str], int]     # (routine, mode, model) -> passes
    n_samples: int


@dataclass
class PerfTable:
    columns: list[tuple[str, str]]
    rows: list[tuple[str, str]]                          # (routine, param_combo)
    ref: dict[tuple[str, str], float]                    # row -> metric value
    cells: dict[tuple[str, str, str, str], float]        # row + column -> metric
    metric_kinds: dict[str, str]                         # routine -> metric kind


def build_pass_table(ledger_records: list[dict], meta: dict | None = None) -> PassCountTable:
    candidates = [r for r in ledger_records if r.get("kind") == "candidate"]
    columns = _column_order(candidates, meta)
    routines = [name for name in ROUTINE_ORDER
                if any(r["routine"] == name for r in candidates)]
    counts: dict[tuple[str, str, str], int] = {}
    per_cell_total: dict[tuple[str, str, str], int] = {}
    for record in candidates:
        key = (record["routine"], record["mode"], record["model"])
        per_cell_total[key] = per_cell_total.get(key, 0) + 1
        if record.get("verdict") == "Pass":
            counts[key] = counts.get(key, 0) + 1
        else:
            counts.setdefault(key, 0)
    n_samples = (meta or {}).get("n_samples") or max(per_cell_total.values(), default=0)
    rows = [(ROUTINES[name].level, name) for name in routines]
    return PassCountTable(columns, rows, counts, n_samples)


def build_perf_table(ledger_records: list[dict], meta: dict | None = None) -> PerfTable:
    samples = [r for r in ledger_records if r.get("kind") == "bench"]
    if not samples:
        raise KernelGaugeError("ledger holds no bench samples")
    candidates = [r for r in samples if r["impl"] != "ref"]
    columns = _column_order(candidates, meta)

    benched: dict[str, set[str]] = {}
    for record in samples:
        benched.setdefault(record["routine"], set()).add(record["param_combo"])

    rows: list[tuple[str, str]] = []
    for name in ROUTINE_ORDER:
        if name not in benched:
            continue
        for combo in combo_strings(name):
            if combo in benched[name]:
                rows.append((name, combo))

    ref: dict[tuple[str, str], float] = {}
    cells: dict[tuple[str, str, str, str], float] = {}
    kinds: dict[str, str] = {}
    for record in samples:
        row = (record["routine"], record["param_combo"])
        kinds[record["routine"]] = record["metric_kind"]
        if record["impl"] == "ref":
            ref[row] = record["metric_value"]
        else:
            key = (row[0], row[1], record["mode"], record["model"])
            if record["metric_value"] > cells.get(key, float("-inf")):
                cells[key] = record["metric_value"]
    for row in rows:
        if row not in ref:
            raise KernelGaugeError(
                f"no reference bench sample for {row[0]} [{row[1]}]")
    return PerfTable(columns, rows, ref, cells, kinds)


def format_metric(value: float) -> str:
    """Raw metric (per second) shown in G-units with one decimal."""
    return f"{value / 1e9:.1f}"


def format_ratio(candidate: float, ref: float) -> str:
    """Ratio from unrounded values, displayed to one decimal: ``(11.3x)``."""
    return f"({candidate / ref:.1f}x)"


# --- emission ----------------------------------------------------------------

def emit(table, fmt: str, sink) -> None:
    """Write a table (pass or perf) to a text sink in the requested format."""
    if fmt not in ("text", "markdown", "csv"):
        raise KernelGaugeError(f"unknown report format {fmt!r}")
    if isinstance(table, PassCountTable):
        text = _emit_pass(table, fmt)
    elif isinstance(table, PerfTable):
        text = _emit_perf(table, fmt)
    else:
        raise KernelGaugeError(f"cannot emit {type(table).__name__}")
    sink.write(text)


def _emit_pass(table: PassCountTable, fmt: str) -> str:
    header = ["level", "routine"] + [f"{mode}/{model}" for mode, model in table.columns]
    body = []
    for level, routine in table.rows:
        row = [str(level), routine]
        for mode, model in table.columns:
            count = table.counts.get((routine, mode, model))
            row.append("" if count is None else str(count))
        body.append(row)
    title = f"Pass counts out of {table.n_samples} sampled candidates"
    return _render(header, body, fmt, title)


def _emit_perf(table: PerfTable, fmt: str) -> str:
    if fmt == "csv":
        return _perf_csv(table)
    header = ["routine", "parameters", "unit", "Ref"]
    for mode, model in table.columns:
        header += [f"{mode}/{model}", "ratio"]
    body = []
    for row in table.rows:
        routine, combo = row
        unit = "GFlops/s" if table.metric_kinds[routine] == "flops_per_sec" else "GB/s"
        line = [routine, combo, unit, format_metric(table.ref[row])]
        for mode, model in table.columns:
            value = table.cells.get((routine, combo, mode, model))
            if value is None:
                line += ["", ""]
            else:
                line += [format_metric(value), format_ratio(value, table.ref[row])]
        body.append(line)
    title = ("Performance per parameter combination "
             "(best passing candidate; blank = all candidates failed)")
    return _render(header, body, fmt, title)


def _perf_csv(table: PerfTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["routine", "parameters", "metric_kind", "mode", "model",
                     "metric_value", "ratio_to_ref"])
    for row in table.rows:
        routine, combo = row
        kind = table.metric_kinds[routine]
        writer.writerow([routine, combo, kind, "ref", "ref",
                         repr(table.ref[row]), ""])
        for mode, model in table.columns:
            value = table.cells.get((routine, combo, mode, model))
            if value is not None:
                writer.writerow([routine, combo, kind, mode, model,
                                 repr(value), repr(value / table.ref[row])])
    return buf.getvalue()


def _render(header: list[str], body: list[list[str]], fmt: str, title: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue()
    if fmt == "markdown":
        lines = [f"### {title}", ""]
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "|".join("---" for _ in header) + "|")
        for row in body:
            lines.append("| " + " | ".join(row) + " |")
        return "\n".join(lines) + "\n"
    widths = [len(h) for h in header]
    for row in body:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [title, ""]
    lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip())
    lines.append("  ".join("-" * widths[i] for i in range(len(header))))
    for row in body:
        lines.append("  ".join(cell.ljust(widths[i])
                               for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"
