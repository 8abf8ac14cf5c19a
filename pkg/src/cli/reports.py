# src/cli/reports.py
"""Report models and their text/JSON rendering"""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from src.core.constants import OutputFormat


class SerializableModel:
    """Base class for serializable reports"""

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), default=str, ensure_ascii=False, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict):
        return cls(**data)

    @classmethod
    def from_json(cls, json_str: str):
        return cls.from_dict(json.loads(json_str))

    def to_text(self) -> str:
        raise NotImplementedError

    def render(self, output_format: OutputFormat) -> str:
        if output_format == OutputFormat.JSON:
            return self.to_json()
        return self.to_text()


@dataclass
class ComputeResult(SerializableModel):
    """One bracket/mu/cobracket evaluation"""
    operation: str
    model: str
    inputs: List[str]
    text: str
    result: Dict[str, Any] = field(default_factory=dict)

    def to_text(self) -> str:
        return self.text


@dataclass
class SuiteReport(SerializableModel):
    """Pass/fail summary of a crosscheck or property suite"""
    suite: str
    cases: int = 0
    failures: int = 0
    inconclusive: int = 0
    counterexample: Optional[Dict[str, Any]] = None
    details: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, index: int, ok: bool, detail: Optional[Dict[str, Any]] = None) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = {'index': index, **(detail or {})}

    def record_inconclusive(self) -> None:
        self.inconclusive += 1

    def to_dict(self) -> dict:
        data = asdict(self)
        data['passed'] = self.passed
        return data

    @classmethod
    def from_dict(cls, data: dict):
        return cls(**{k: v for k, v in data.items() if k != "passed"})

    def to_text(self) -> str:
        if self.passed:
            if self.cases == 0:
                line = "PASS (trivial corpus)"
            else:
                line = f"PASS ({self.cases} cases)"
            if self.inconclusive:
                line += f", {self.inconclusive} inconclusive"
            return line
        lines = [f"FAIL ({self.failures} of {self.cases} cases)"]
        if self.counterexample:
            for key, value in self.counterexample.items():
                lines.append(f"  {key}: {value}")
        return "\n".join(lines)
