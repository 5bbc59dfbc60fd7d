"""Report and parameter types shared by the extraction procedures."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class BoundParams:
    """Thresholds for the extraction pipelines.

    ``k`` bounds the clique number, ``xi`` is the assumed chromatic bound for
    clique number at most k-1, and ``alpha``/``beta``/``gamma`` are surrogate
    thresholds that replace the (astronomical) derived constants so the
    pipelines can run end to end on desk-scale inputs.  ``gamma=None`` means
    "use the real recurrence value".  ``n`` and ``t`` parametrize the clique
    system machinery.
    """

    k: int = 2
    xi: int = 1
    alpha: int = 0
    beta: int = 0
    n: int = 0
    t: int = 2
    gamma: int | None = None

    def __post_init__(self):
        if self.k < 1 or self.xi < 1:
            raise ValueError("k >= 1 and xi >= 1 required")
        if self.alpha < 0 or self.beta < 0 or self.n < 0:
            raise ValueError("alpha, beta, n must be nonnegative")
        if self.t < 2:
            raise ValueError("t >= 2 required")


def _jsonable(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, frozenset):
        return sorted(value)
    return value


@dataclass
class StepRecord:
    name: str
    chi_values: dict = field(default_factory=dict)
    chosen_ids: dict = field(default_factory=dict)

    def to_dict(self):
        return {"name": self.name,
                "chi_values": _jsonable(self.chi_values),
                "chosen_ids": _jsonable(self.chosen_ids)}


@dataclass
class ExtractionReport:
    """Outcome of an extraction run: the verified trace of every step, plus
    either the found structure or the first failed threshold."""

    outcome: str                    # "structure-found" | "step-failure"
    steps: list = field(default_factory=list)
    failure: dict | None = None     # {"step", "threshold", "measured"}
    result: dict | None = None      # serialized structure on success

    def to_dict(self):
        return {"outcome": self.outcome,
                "steps": [s.to_dict() for s in self.steps],
                "failure": _jsonable(self.failure),
                "result": _jsonable(self.result)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


class StepFailure(Exception):
    """Internal control flow: a measured value missed its threshold."""

    def __init__(self, step, measured=None, threshold=None):
        super().__init__(step)
        self.step = step
        self.measured = measured
        self.threshold = threshold

    def as_failure_dict(self):
        return {"step": self.step,
                "threshold": _jsonable(self.threshold),
                "measured": _jsonable(self.measured)}
