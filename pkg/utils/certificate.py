"""Self-contained verification certificates (one JSON object per line)."""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from config import TOOLKIT_VERSION
from utils.graph_io import graph_from_json, graph_to_json
from utils.multigraph import MultiGraph, hash_hex


class Claim(Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T5 = "T5"
    BOUNDS = "BOUNDS"
    CONJ = "CONJ"
    EXTREMAL = "EXTREMAL"
    F2 = "F2"


class Verdict(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    VIOLATION = "VIOLATION-FOUND"


@dataclass(frozen=True)
class Certificate:
    """
    Record of one verification outcome.

    The witness carries enough data (assignments, matchings, values) to
    re-check the verdict without repeating any search.
    """
    claim: Claim
    graph: MultiGraph
    verdict: Verdict
    witness: dict[str, Any] = field(default_factory=dict)
    version: str = TOOLKIT_VERSION

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def to_json(self) -> dict[str, Any]:
        return {
            "claim": self.claim.value,
            "graph": graph_to_json(self.graph),
            "hash": hash_hex(self.graph),
            "verdict": self.verdict.value,
            "witness": self.witness,
            "version": self.version,
        }

    def to_line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Certificate":
        return cls(
            claim=Claim(data["claim"]),
            graph=graph_from_json(data["graph"]),
            verdict=Verdict(data["verdict"]),
            witness=data["witness"],
            version=data["version"],
        )

    @classmethod
    def from_line(cls, line: str) -> "Certificate":
        return cls.from_json(json.loads(line))
