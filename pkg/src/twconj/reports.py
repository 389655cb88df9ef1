"""Structured outcome of a verification check."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class Report:
    """Result of checking one statement on concrete groups.

    ``hypothesis_status`` is ``"satisfied"`` when the statement's hypotheses
    were verified, ``"fails"`` when they do not hold (the conclusion is then
    not tested) and ``"not_applicable"`` for checks without hypotheses.
    ``passed`` is False only when a hypothesis held and the conclusion did not.
    """

    check: str
    passed: bool
    hypothesis_status: str = "not_applicable"
    counterexample: Any = None
    computed_order: int | None = None
    expected_order: int | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = asdict(self)
        out["details"] = _jsonable(self.details)
        out["counterexample"] = _jsonable(self.counterexample)
        return out


def _jsonable(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "tolist"):
        return obj.tolist()
    return obj
