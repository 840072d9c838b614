"""Law-check results and their text/JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .bitset import bits
from .topology import ContMap, FinSpace

REPORT_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["law", "status", "witness"],
        "additionalProperties": False,
        "properties": {
            "law": {"type": "string"},
            "status": {"enum": ["pass", "fail"]},
            "witness": {"type": ["object", "null"]},
        },
    },
}


@dataclass(frozen=True)
class LawResult:
    law: str
    status: str
    witness: dict[str, Any] | None = None
    checked: int = field(default=0, compare=False)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, Any]:
        return {"law": self.law, "status": self.status, "witness": self.witness}

    def text(self) -> str:
        if self.ok:
            return f"PASS {self.law} ({self.checked} instances)"
        return f"FAIL {self.law} witness={json.dumps(self.witness, sort_keys=True, ensure_ascii=False)}"


def passed(law: str, checked: int) -> LawResult:
    return LawResult(law, "pass", None, checked)


def failed(law: str, witness: dict[str, Any], checked: int = 0) -> LawResult:
    return LawResult(law, "fail", witness, checked)


def merge(law: str, results) -> LawResult:
    """Combine sub-results: the first failure wins, otherwise counts add up."""
    total = 0
    for r in results:
        if not r.ok:
            return LawResult(law, "fail", r.witness, total + r.checked)
        total += r.checked
    return passed(law, total)


def space_json(X: FinSpace) -> dict[str, Any]:
    return {"name": X.name, "points": list(X.labels)}


def map_json(f: ContMap) -> dict[str, Any]:
    return {"dom": f.dom.name, "cod": f.cod.name, "table": list(f.table)}


def extent_json(mask: int) -> list[int]:
    return list(bits(mask))
