"""Theorem report domain model."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple


class Verdict(str, Enum):
    HYPOTHESIS_NOT_MET = "HYPOTHESIS_NOT_MET"
    VERIFIED = "VERIFIED"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    NOT_APPLICABLE = "NOT_APPLICABLE"


class Statement(str, Enum):
    LEMMA_CENTRALIZER = "lemma_centralizer"
    PROP_COMMUTATOR_CENTRAL = "prop_commutator_central"
    THEOREM_A = "theorem_A"
    COROLLARY_B = "corollary_B"
    THEOREM_C = "theorem_C"
    CONJECTURE_1 = "conjecture_1"
    CONJECTURE_1PRIME = "conjecture_1prime"
    PROP_EQUIVALENCE = "prop_equivalence"
    PROP_FLAT = "prop_flat"
    CLASS_TWO_FLAT = "class_two_flat"

    @property
    def proved(self) -> bool:
        """Conjectures are open; everything else is a theorem."""
        return self not in (Statement.CONJECTURE_1, Statement.CONJECTURE_1PRIME)

    @classmethod
    def parse(cls, value: str) -> "Statement":
        try:
            return cls(value)
        except ValueError:
            names = ", ".join(s.value for s in cls)
            raise ValueError(f"Unknown statement {value!r}. Known: {names}")


@dataclass
class TheoremReport:
    """Verdict of one checker on one group (and one subgroup, if any)."""
    group_name: str
    statement: Statement
    hypotheses: List[Tuple[str, bool]] = field(default_factory=list)
    conclusion: Optional[bool] = None
    verdict: Verdict = Verdict.NOT_APPLICABLE
    witness: Dict[str, Any] = field(default_factory=dict)
    subject: Optional[str] = None
    degenerate: bool = False

    def __post_init__(self):
        """Check verdict/field consistency."""
        all_hold = all(value for _, value in self.hypotheses)
        if self.verdict in (Verdict.VERIFIED, Verdict.COUNTEREXAMPLE):
            if not all_hold:
                raise ValueError(f"{self.verdict.value} report with a failed hypothesis")
            if self.conclusion is None:
                raise ValueError(f"{self.verdict.value} report without a conclusion")
            if (self.verdict == Verdict.VERIFIED) != self.conclusion:
                raise ValueError(f"Verdict {self.verdict.value} contradicts conclusion {self.conclusion}")
        elif self.conclusion is not None:
            raise ValueError(f"{self.verdict.value} report must not carry a conclusion")
        if self.verdict == Verdict.HYPOTHESIS_NOT_MET and all_hold:
            raise ValueError("HYPOTHESIS_NOT_MET report with all hypotheses true")

    @classmethod
    def evaluate(cls, group_name: str, statement: Statement,
                 hypotheses: List[Tuple[str, bool]],
                 conclude: Callable[[], Tuple[bool, Dict[str, Any]]],
                 witness: Optional[Dict[str, Any]] = None,
                 subject: Optional[str] = None,
                 degenerate: bool = False) -> "TheoremReport":
        """Run `conclude` only when every hypothesis holds."""
        witness = dict(witness or {})
        if not all(value for _, value in hypotheses):
            return cls(group_name, statement, hypotheses, None, Verdict.HYPOTHESIS_NOT_MET,
                       witness, subject, degenerate)
        conclusion, extra = conclude()
        witness.update(extra)
        verdict = Verdict.VERIFIED if conclusion else Verdict.COUNTEREXAMPLE
        return cls(group_name, statement, hypotheses, conclusion, verdict, witness, subject, degenerate)

    @classmethod
    def not_applicable(cls, group_name: str, statement: Statement,
                       hypotheses: List[Tuple[str, bool]],
                       witness: Optional[Dict[str, Any]] = None,
                       subject: Optional[str] = None,
                       degenerate: bool = False) -> "TheoremReport":
        return cls(group_name, statement, hypotheses, None, Verdict.NOT_APPLICABLE,
                   dict(witness or {}), subject, degenerate)

    def to_dict(self) -> dict:
        return {
            "group": self.group_name,
            "statement": self.statement.value,
            "subject": self.subject,
            "hypotheses": [{"name": name, "holds": value} for name, value in self.hypotheses],
            "conclusion": self.conclusion,
            "verdict": self.verdict.value,
            "degenerate": self.degenerate,
            "witness": self.witness,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TheoremReport":
        return cls(
            group_name=data["group"],
            statement=Statement(data["statement"]),
            hypotheses=[(h["name"], h["holds"]) for h in data.get("hypotheses", [])],
            conclusion=data.get("conclusion"),
            verdict=Verdict(data["verdict"]),
            witness=data.get("witness", {}),
            subject=data.get("subject"),
            degenerate=data.get("degenerate", False),
        )
