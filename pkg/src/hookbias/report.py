"""Structured pass/fail records emitted by the verification routines."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one verification run.

    ``counterexamples`` are genuine failures; ``exceptions`` are anomalies the
    run declared in advance (for example a known small-n violation of an
    inequality).  A report passes when there are no counterexamples.
    """

    kind: str
    params: dict
    checked: int = 0
    exceptions: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def fail(self, **payload) -> None:
        self.counterexamples.append(payload)

    def note_exception(self, **payload) -> None:
        self.exceptions.append(payload)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "status": self.status,
            "checked": self.checked,
            "exceptions": self.exceptions,
            "counterexamples": self.counterexamples,
            "info": self.info,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)
