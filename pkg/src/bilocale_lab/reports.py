"""Replay reports and the atlas container.

Replays never hard-code an expected truth value: hypotheses and
conclusion are evaluated independently and `settle` turns them into a
status. REFUTED means hypotheses held and the conclusion failed, which
callers treat as an artifact failure. The `divergent` status is reserved
for the replays whose statement the source calculus leaves ungated;
those record disagreement as an observation instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

CONFIRMED = "confirmed"
VACUOUS = "vacuous"
REFUTED = "refuted"
DIVERGENT = "divergent"


def settle(hypotheses: dict, conclusion, observation_only: bool = False) -> str:
    if not all(bool(v) for v in hypotheses.values()):
        return VACUOUS
    if conclusion:
        return CONFIRMED
    return DIVERGENT if observation_only else REFUTED


@dataclass(frozen=True)
class PropositionReport:
    proposition: str
    instance: str
    orientation: tuple | None
    hypotheses: dict
    conclusion: bool | None
    status: str
    witness: dict | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        out = {
            "proposition": self.proposition,
            "instance": self.instance,
            "orientation": list(self.orientation) if self.orientation else None,
            "hypotheses": {k: bool(v) for k, v in sorted(self.hypotheses.items())},
            "conclusion": self.conclusion,
            "status": self.status,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


def _sort_key(d: dict):
    return (d["proposition"], d["instance"], str(d.get("orientation")))


@dataclass
class Atlas:
    meta: dict
    instances: dict = field(default_factory=dict)
    matrix: dict = field(default_factory=dict)
    reports: list = field(default_factory=list)
    separations: list = field(default_factory=list)

    def add_instance(self, instance_id: str, summary: dict):
        self.instances[instance_id] = summary

    def add_report(self, report: PropositionReport):
        self.reports.append(report)

    def extend(self, reports):
        self.reports.extend(reports)

    def add_matrix(self, instance_id: str, verdicts: dict):
        self.matrix[instance_id] = {k: bool(v) for k, v in verdicts.items()}

    def add_separation(self, entry: dict):
        self.separations.append(entry)

    @property
    def refuted(self) -> list:
        return [r for r in self.reports if r.status == REFUTED]

    @property
    def counts(self) -> dict:
        out = {}
        for r in self.reports:
            key = r.proposition
            slot = out.setdefault(key, {CONFIRMED: 0, VACUOUS: 0, REFUTED: 0, DIVERGENT: 0})
            slot[r.status] += 1
        return out

    def to_dict(self) -> dict:
        return {
            "meta": dict(sorted(self.meta.items())),
            "instances": dict(sorted(self.instances.items())),
            "matrix": dict(sorted(self.matrix.items())),
            "reports": sorted((r.to_dict() for r in self.reports), key=_sort_key),
            "separations": sorted(self.separations, key=lambda s: json.dumps(s, sort_keys=True)),
            "counts": self.counts,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"
