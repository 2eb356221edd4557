"""Verification reports and their JSON document form.

Integers are written as decimal strings so deep rows survive any JSON
reader without truncation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any

SCHEMA_VERSION = "1.0"


def _enc(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_enc(v) for v in value]
    return value


def _dec(value):
    if isinstance(value, list):
        return [_dec(v) for v in value]
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError:
            return value
    return value


def _enc_params(params: dict) -> dict:
    return {k: _enc(v) for k, v in params.items()}


def _dec_params(params: dict) -> dict:
    return {k: _dec(v) for k, v in params.items()}


@dataclass
class IdentityReport:
    id: str
    params: dict[str, Any]
    members: list
    holds: bool
    note: str = ""
    form: str = "as-stated"
    paper_members: list | None = None
    paper_holds: bool | None = None

    @property
    def lhs(self):
        return self.members[0]

    @property
    def rhs(self):
        rest = self.members[1:]
        return rest[0] if len(rest) == 1 else rest

    def to_dict(self) -> dict:
        d = {
            "type": "identity",
            "id": self.id,
            "form": self.form,
            "params": _enc_params(self.params),
            "lhs": _enc(self.lhs),
            "rhs": _enc(self.rhs),
            "holds": self.holds,
            "note": self.note,
        }
        if self.paper_members is not None:
            d["paper"] = {"members": _enc(self.paper_members), "holds": self.paper_holds}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "IdentityReport":
        lhs, rhs = _dec(d["lhs"]), _dec(d["rhs"])
        # a chain of three or more stores rhs as a list of members
        chained = isinstance(d["rhs"], list) and not isinstance(d["lhs"], list)
        members = [lhs, *rhs] if chained else [lhs, rhs]
        paper = d.get("paper")
        return cls(d["id"], _dec_params(d["params"]), members, d["holds"], d.get("note", ""),
                   d.get("form", "as-stated"),
                   _dec(paper["members"]) if paper else None,
                   paper["holds"] if paper else None)


@dataclass
class SweepReport:
    id: str
    grid: dict[str, str]
    instances: int
    failures: list[dict]
    elapsed: float
    form: str = "as-stated"
    paper_instances: int | None = None
    paper_failures: int | None = None
    paper_witnesses: list[dict] | None = None
    evaluator: str = "closed-form"

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        d = {
            "type": "sweep",
            "id": self.id,
            "form": self.form,
            "evaluator": self.evaluator,
            "grid": dict(self.grid),
            "instances": str(self.instances),
            "failures": [_enc_params(f) for f in self.failures],
            "holds": self.holds,
            "elapsed_seconds": f"{self.elapsed:.6f}",
        }
        if self.paper_instances is not None:
            d["paper"] = {
                "instances": str(self.paper_instances),
                "failures": str(self.paper_failures),
                "witnesses": [_enc_params(w) for w in self.paper_witnesses or []],
            }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SweepReport":
        paper = d.get("paper")
        return cls(
            d["id"], dict(d["grid"]), int(d["instances"]),
            [_dec_params(f) for f in d["failures"]], float(d["elapsed_seconds"]),
            d.get("form", "as-stated"),
            int(paper["instances"]) if paper else None,
            int(paper["failures"]) if paper else None,
            [_dec_params(w) for w in paper["witnesses"]] if paper else None,
            d.get("evaluator", "closed-form"),
        )


def _result_from_dict(d: dict):
    if d.get("type") == "sweep":
        return SweepReport.from_dict(d)
    return IdentityReport.from_dict(d)


@dataclass
class ReportDocument:
    command: str
    inputs: dict[str, Any]
    results: list[IdentityReport | SweepReport]
    generated_at: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))
    schema_version: str = SCHEMA_VERSION

    @property
    def failed(self) -> bool:
        return any(not r.holds for r in self.results)

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "inputs": {k: _enc(v) for k, v in self.inputs.items()},
            "results": [r.to_dict() for r in self.results],
            "generated_at": self.generated_at,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "ReportDocument":
        return cls(d["command"], {k: _dec(v) for k, v in d["inputs"].items()},
                   [_result_from_dict(r) for r in d["results"]],
                   d["generated_at"], d["schema_version"])

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))
