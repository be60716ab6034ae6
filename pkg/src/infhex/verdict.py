"""Three-valued truth with certificates, combined by Kleene connectives."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Iterable, Optional


class Truth(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @staticmethod
    def all(values: Iterable["Truth"]) -> "Truth":
        """Kleene conjunction: FALSE dominates, then UNKNOWN."""
        values = list(values)
        if any(v is Truth.FALSE for v in values):
            return Truth.FALSE
        if any(v is Truth.UNKNOWN for v in values):
            return Truth.UNKNOWN
        return Truth.TRUE

    @staticmethod
    def any(values: Iterable["Truth"]) -> "Truth":
        """Kleene disjunction: TRUE dominates, then UNKNOWN."""
        values = list(values)
        if any(v is Truth.TRUE for v in values):
            return Truth.TRUE
        if any(v is Truth.UNKNOWN for v in values):
            return Truth.UNKNOWN
        return Truth.FALSE


@dataclass(frozen=True)
class Verdict:
    """A Truth value plus the finite evidence that justifies it.

    Decided verdicts (TRUE or FALSE) always carry a witness and a
    certificate kind; UNKNOWN may carry a reason in ``certificate``.
    """

    truth: Truth
    witness: Any = None
    certificate: Optional[str] = None

    def __post_init__(self):
        if self.truth is not Truth.UNKNOWN and self.witness is None:
            raise ValueError("decided verdicts must carry a witness")

    @staticmethod
    def true(witness: Any, certificate: str) -> "Verdict":
        return Verdict(Truth.TRUE, witness, certificate)

    @staticmethod
    def false(witness: Any, certificate: str) -> "Verdict":
        return Verdict(Truth.FALSE, witness, certificate)

    @staticmethod
    def unknown(reason: str | None = None) -> "Verdict":
        return Verdict(Truth.UNKNOWN, None, reason)

    def is_true(self) -> bool:
        return self.truth is Truth.TRUE

    def is_false(self) -> bool:
        return self.truth is Truth.FALSE

    def is_unknown(self) -> bool:
        return self.truth is Truth.UNKNOWN

    def to_json(self) -> dict:
        return {
            "verdict": self.truth.value,
            "witness": self.witness,
            "certificate_kind": self.certificate,
        }


def kleene_and(verdicts: Iterable[Verdict]) -> Verdict:
    """Conjunction keeping the deciding operand's evidence."""
    verdicts = list(verdicts)
    truth = Truth.all(v.truth for v in verdicts)
    if truth is Truth.FALSE:
        deciding = next(v for v in verdicts if v.is_false())
        return Verdict(truth, deciding.witness, deciding.certificate)
    if truth is Truth.TRUE:
        return Verdict(truth, [v.witness for v in verdicts], "all-conjuncts")
    return Verdict.unknown("undecided conjunct")


def kleene_or(verdicts: Iterable[Verdict]) -> Verdict:
    """Disjunction keeping the deciding operand's evidence."""
    verdicts = list(verdicts)
    truth = Truth.any(v.truth for v in verdicts)
    if truth is Truth.TRUE:
        deciding = next(v for v in verdicts if v.is_true())
        return Verdict(truth, deciding.witness, deciding.certificate)
    if truth is Truth.FALSE:
        return Verdict(truth, [v.witness for v in verdicts], "all-disjuncts-false")
    return Verdict.unknown("undecided disjunct")
