"""JSONL scan persistence with resume support.

One self-describing record per line:

    {"schema_version":1,"kind":...,"params":{...},"result":{...},"timestamp":"..."}

Records are append-only and keyed by (kind, params); a rerun with the same
parameters skips work units whose key is already on disk. Timestamps are
RFC 3339 UTC.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

SCHEMA_VERSION = 1

VALID_KINDS = ("rpc", "rigidity", "membership", "bridge")


def now_rfc3339() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class ScanRecord:
    kind: str
    params: dict
    result: dict
    schema_version: int = SCHEMA_VERSION
    timestamp: str = field(default_factory=now_rfc3339)

    def __post_init__(self):
        if self.kind not in VALID_KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")

    @property
    def key(self) -> str:
        return record_key(self.kind, self.params)

    def to_json_line(self) -> str:
        payload = {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "params": self.params,
            "result": self.result,
            "timestamp": self.timestamp,
        }
        return json.dumps(payload, separators=(",", ":"))


def record_key(kind: str, params: dict) -> str:
    return json.dumps([kind, params], sort_keys=True, separators=(",", ":"))


def load_records(path: str | Path) -> list[ScanRecord]:
    path = Path(path)
    if not path.exists():
        return []
    records = []
    with path.open() as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            records.append(
                ScanRecord(
                    kind=data["kind"],
                    params=data["params"],
                    result=data["result"],
                    schema_version=data["schema_version"],
                    timestamp=data["timestamp"],
                )
            )
    return records


def existing_keys(path: str | Path) -> set[str]:
    return {record.key for record in load_records(path)}


def append_records(path: str | Path, records: list[ScanRecord]) -> None:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a") as handle:
        for record in records:
            handle.write(record.to_json_line() + "\n")
