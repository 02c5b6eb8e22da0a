"""Per-curve census records and their JSONL persistence."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .weilzeta import counts_to_lpoly

STRATA = ("hyp", "biell", "quintic", "t0", "t2", "bn")


@dataclass(frozen=True)
class CurveRecord:
    stratum: str
    model: str
    counts: tuple
    lpoly: tuple
    aut_order: int
    aut_fingerprint: str | None
    canonical_id: str

    def to_json(self) -> str:
        d = asdict(self)
        d["counts"] = list(self.counts)
        d["lpoly"] = list(self.lpoly)
        return json.dumps(d, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "CurveRecord":
        d = json.loads(line)
        d["counts"] = tuple(d["counts"])
        d["lpoly"] = tuple(d["lpoly"])
        return cls(**d)

    @property
    def sort_key(self):
        return (STRATA.index(self.stratum), self.canonical_id)


def make_record(stratum: str, model: str, counts, aut_order: int,
                fingerprint_name: str | None) -> CurveRecord:
    if stratum not in STRATA:
        raise ValueError(f"unknown stratum {stratum!r}")
    counts = tuple(int(c) for c in counts)
    w = counts_to_lpoly(counts, 2, 6)
    return CurveRecord(stratum, model, counts, w.lpoly, int(aut_order),
                       fingerprint_name, model)


def write_jsonl(records, path) -> int:
    recs = sorted(records, key=lambda r: r.sort_key)
    with open(path, "w") as fh:
        for r in recs:
            fh.write(r.to_json() + "\n")
    return len(recs)


def read_jsonl(path) -> list[CurveRecord]:
    with open(path) as fh:
        return [CurveRecord.from_json(line) for line in fh if line.strip()]
