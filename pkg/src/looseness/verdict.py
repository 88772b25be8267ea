"""Three-valued verdicts with a trace of the rules that produced them."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Optional

__all__ = ["Outcome", "RuleApplication", "Verdict"]

# Values allowed in RuleApplication.computed; keeps traces JSON-safe.
_SCALARS = (int, str, bool, type(None))


class Outcome(enum.Enum):
    LOOSE = "Loose"
    NOT_LOOSE = "NotLoose"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class RuleApplication:
    """One step of a decision.

    ``concludes`` is set on the step that fixes the outcome.  Glue steps
    (input bookkeeping, delegation) are marked ``plumbing``.
    """

    rule_id: str
    citation: str
    computed: dict[str, Any] = field(default_factory=dict)
    concludes: Optional[Outcome] = None
    plumbing: bool = False

    def __post_init__(self):
        if not self.plumbing and not self.citation:
            raise ValueError(f"rule {self.rule_id} needs a citation")
        for key, value in self.computed.items():
            if not isinstance(value, _SCALARS) and not (
                isinstance(value, list) and all(isinstance(v, _SCALARS) for v in value)
            ):
                raise TypeError(f"computed[{key!r}] must be a JSON scalar or list, got {value!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "rule_id": self.rule_id,
            "citation": self.citation,
            "computed": dict(self.computed),
            "concludes": self.concludes.value if self.concludes else None,
            "plumbing": self.plumbing,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RuleApplication:
        concludes = data.get("concludes")
        return cls(
            rule_id=data["rule_id"],
            citation=data["citation"],
            computed=dict(data.get("computed", {})),
            concludes=Outcome(concludes) if concludes else None,
            plumbing=bool(data.get("plumbing", False)),
        )


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    trace: tuple[RuleApplication, ...]

    def __post_init__(self):
        object.__setattr__(self, "trace", tuple(self.trace))
        if not self.trace:
            raise ValueError("a verdict needs a nonempty trace")
        if self.trace[-1].concludes is not self.outcome:
            raise ValueError(
                f"final rule {self.trace[-1].rule_id} does not conclude {self.outcome.value}"
            )

    @property
    def deciding_rule(self) -> str:
        return self.trace[-1].rule_id

    def to_dict(self) -> dict[str, Any]:
        return {"outcome": self.outcome.value, "trace": [step.to_dict() for step in self.trace]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Verdict:
        return cls(Outcome(data["outcome"]), tuple(RuleApplication.from_dict(s) for s in data["trace"]))

    def render(self) -> str:
        lines = [f"verdict: {self.outcome.value}"]
        for i, step in enumerate(self.trace, start=1):
            tag = " (plumbing)" if step.plumbing else ""
            lines.append(f"  [{i}] {step.rule_id}{tag}")
            if step.citation:
                lines.append(f"      {step.citation}")
            for key, value in step.computed.items():
                lines.append(f"      {key} = {value}")
            if step.concludes:
                lines.append(f"      => {step.concludes.value}")
        return "\n".join(lines)
