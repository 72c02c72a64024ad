"""Three-valued answers with witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass
class Verdict:
    answer: str
    method: str
    witness: object = None
    reason: str = ""
    checks: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.answer not in (YES, NO, UNKNOWN):
            raise ValueError(f"bad verdict answer {self.answer!r}")

    @property
    def yes(self):
        return self.answer == YES

    @property
    def no(self):
        return self.answer == NO

    def as_dict(self):
        out = {"answer": self.answer, "method": self.method,
               "witness": None if self.witness is None else repr(self.witness),
               "reason": self.reason}
        if self.checks:
            out["checks"] = list(self.checks)
        if self.details:
            out["details"] = dict(self.details)
        return out
