"""Append-only run ledger (JSON lines).

Every pipeline stage reads and writes only through this file, which makes
runs resumable (existing keys are skipped) and reports reproducible
(aggregation is a pure function of the ledger). Records carry no wall-clock
fields so identical runs produce identical ledgers.
"""

from __future__ import annotations

import json
import os
from pathlib import Path


class Ledger:
    def __init__(self, path):
        self.path = Path(path)
        self._records: list[dict] = []
        self._candidate_keys: set[tuple] = set()
        self._bench_keys: set[tuple] = set()
        if self.path.exists():
            self._load()

    def _load(self) -> None:
        with open(self.path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                record = json.loads(line)
                self._index(record)
                self._records.append(record)

    def _index(self, record: dict) -> None:
        if record.get("kind") == "candidate":
            self._candidate_keys.add(self._ckey(record))
        elif record.get("kind") == "bench":
            self._bench_keys.add(self._bkey(record))

    @staticmethod
    def _ckey(record: dict) -> tuple:
        return (record["routine"], record["mode"], record["model"],
                record["sample_index"])

    @staticmethod
    def _bkey(record: dict) -> tuple:
        return (record["impl"], record["routine"], record["param_combo"])

    def append(self, record: dict) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")
            fh.flush()
            os.fsync(fh.fileno())
        self._index(record)
        self._records.append(record)

    @property
    def records(self) -> list[dict]:
        return list(self._records)

    def has_candidate(self, routine: str, mode: str, model: str, index: int) -> bool:
        return (routine, mode, model, index) in self._candidate_keys

    def has_bench(self, impl: str, routine: str, param_combo: str) -> bool:
        return (impl, routine, param_combo) in self._bench_keys

    def meta(self) -> dict | None:
        for record in self._records:
            if record.get("kind") == "meta":
                return record
        return None

    def candidates(self) -> list[dict]:
        return [r for r in self._records if r.get("kind") == "candidate"]

    def bench_samples(self) -> list[dict]:
        return [r for r in self._records if r.get("kind") == "bench"]
