"""Machine-checkable verdicts with the rule invoked and witness values."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

#: Verdict vocabulary.  Decision rules use {abelian, non_abelian,
#: inconclusive}; bound checks use {bound_holds}; exclusion rules use
#: {excluded}; the cubic family checks use {s3, not_s3, applies,
#: does_not_apply}.
VERDICTS = frozenset(
    {
        "abelian",
        "non_abelian",
        "bound_holds",
        "excluded",
        "inconclusive",
        "s3",
        "not_s3",
        "applies",
        "does_not_apply",
    }
)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass(frozen=True)
class Certificate:
    """Outcome of one decision rule.

    ``theorem`` is the stable rule identifier embedded in reports and
    survey rows.  ``witnesses`` are the concrete numbers the verdict was
    decided on; every verdict other than ``inconclusive`` must carry at
    least one.  ``assumptions`` records any unverified external inputs.
    """

    verdict: str
    theorem: str
    witnesses: tuple[tuple[str, object], ...] = ()
    assumptions: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict != "inconclusive" and not self.witnesses:
            raise ValueError("non-inconclusive verdict needs a witness")

    def witness(self, name: str):
        for key, value in self.witnesses:
            if key == name:
                return value
        raise KeyError(name)

    def has_witness(self, name: str) -> bool:
        return any(key == name for key, _ in self.witnesses)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "theorem": self.theorem,
            "witnesses": [[k, _jsonable(v)] for k, v in self.witnesses],
            "assumptions": list(self.assumptions),
        }
