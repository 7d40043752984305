"""Structured verification reports with deterministic text and JSON renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__

TOOL = "cyclic-homotopy"


@dataclass
class Record:
    identity: str
    ring: str
    passed: bool
    policy: dict = field(default_factory=dict)
    seed: int | None = None
    witness: dict | None = None
    info: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "ring": self.ring,
            "policy": self.policy,
            "seed": self.seed,
            "passed": self.passed,
            "witness": self.witness,
            "info": self.info,
        }


@dataclass
class VerificationReport:
    campaign: str
    records: list[Record] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    version: str = __version__

    def add(self, record: Record) -> Record:
        self.records.append(record)
        return record

    @property
    def summary(self) -> dict:
        passed = sum(r.passed for r in self.records)
        return {"total": len(self.records), "passed": passed, "failed": len(self.records) - passed}

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    def to_dict(self) -> dict:
        out = {
            "tool": TOOL,
            "version": self.version,
            "campaign": self.campaign,
            "records": [r.to_dict() for r in self.records],
            "summary": self.summary,
        }
        if self.extra:
            out["extra"] = self.extra
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"{TOOL} {self.version}  campaign: {self.campaign}"]
        for rec in self.records:
            status = "PASS" if rec.passed else "FAIL"
            policy = ""
            if rec.policy:
                policy = f"  [{rec.policy.get('mode')} {rec.policy.get('count')}"
                policy += f", seed {rec.seed}]" if rec.seed is not None else "]"
            lines.append(f"{status}  {rec.identity}  on {rec.ring}{policy}")
            for key, val in rec.info.items():
                lines.append(f"      {key}: {_flat(val)}")
            if rec.witness:
                for key, val in rec.witness.items():
                    lines.append(f"      witness {key}: {_flat(val)}")
        for key, val in self.extra.items():
            lines.append(f"{key}: {_flat(val)}")
        s = self.summary
        lines.append(f"summary: {s['total']} checks, {s['passed']} passed, {s['failed']} failed")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str = "text") -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _flat(val) -> str:
    if isinstance(val, (dict, list)):
        return json.dumps(val, separators=(", ", ": "))
    return str(val)
