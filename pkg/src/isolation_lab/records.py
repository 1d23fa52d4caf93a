"""Result persistence: append-only JSON-lines log doubling as a compute cache.

One record per line, field names as in InvariantRecord, chosen over a
database for diff-ability and zero dependencies.  A cached (canonical key,
invariant) pair short-circuits recomputation; auditing with no_cache must
reproduce the stored value exactly.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

ENV_CACHE_PATH = "ISOLATION_LAB_CACHE"
DEFAULT_CACHE_PATH = "isolation_lab_cache.jsonl"


def cache_path() -> str:
    return os.environ.get(ENV_CACHE_PATH, DEFAULT_CACHE_PATH)


@dataclass(frozen=True)
class InvariantRecord:
    """One computed invariant value with witness and solver stats."""

    key: str                  # canonical graph key (cache key, not iso certificate)
    graph_spec: str           # family spec or serialized edge list
    invariant: str
    value: int
    witness: list
    nodes: int
    elapsed: float
    timestamp: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "InvariantRecord":
        data = json.loads(line)
        return cls(**data)


class ResultsLog:
    """Append-only record log with an in-memory (key, invariant) cache."""

    def __init__(self, path: Optional[str] = None):
        self.path = path or cache_path()
        self._cache: dict[tuple[str, str], InvariantRecord] = {}
        if os.path.exists(self.path):
            with open(self.path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = InvariantRecord.from_json(line)
                    self._cache[(rec.key, rec.invariant)] = rec

    def lookup(self, key: str, invariant: str) -> Optional[InvariantRecord]:
        return self._cache.get((key, invariant))

    def append(self, rec: InvariantRecord) -> None:
        self._cache[(rec.key, rec.invariant)] = rec
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(rec.to_json() + "\n")

    def record(self, key: str, graph_spec: str, invariant: str, value: int,
               witness, nodes: int, elapsed: float) -> InvariantRecord:
        rec = InvariantRecord(key, graph_spec, invariant, value,
                              [list(w) if isinstance(w, tuple) else w for w in witness],
                              nodes, elapsed, time.time())
        self.append(rec)
        return rec


@dataclass
class TheoremCheck:
    """One verification row: a named inequality on a concrete instance."""

    rule: str
    inputs: tuple[str, ...]
    hypothesis_met: bool
    lhs: object
    rhs: object
    verdict: str              # holds | violated | hypothesis-not-met | budget-exceeded
    detail: str = ""

    def row(self) -> dict:
        return {
            "rule": self.rule,
            "inputs": list(self.inputs),
            "hypothesis_met": self.hypothesis_met,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "detail": self.detail,
        }


def render_table(rows: list[dict], columns: list[str]) -> str:
    """Plain aligned text table."""
    if not rows:
        return "(no rows)\n"
    widths = {c: len(c) for c in columns}
    cells = []
    for row in rows:
        cell = {c: str(row.get(c, "")) for c in columns}
        for c in columns:
            widths[c] = max(widths[c], len(cell[c]))
        cells.append(cell)
    fmt = "  ".join("{:<%d}" % widths[c] for c in columns)
    lines = [fmt.format(*columns), fmt.format(*("-" * widths[c] for c in columns))]
    lines += [fmt.format(*(cell[c] for c in columns)) for cell in cells]
    return "\n".join(lines) + "\n"


def write_jsonl(path: str, header: dict, rows: list[dict]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps({"campaign": header}, sort_keys=True) + "\n")
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
