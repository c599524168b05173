"""Identity registry and the report record produced by every check."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Any, Optional


class IdentityId(enum.Enum):
    DET_AB = "DET_AB"
    CAUCHY_BINET = "CAUCHY_BINET"
    ADJ_MUL = "ADJ_MUL"
    EQADJ_INVERTIBLE = "EQADJ_INVERTIBLE"
    JACOBI_INVERTIBLE = "JACOBI_INVERTIBLE"
    JACOBI = "JACOBI"
    JACOBI_TRACE = "JACOBI_TRACE"
    JACOBI_THIN_EQ = "JACOBI_THIN_EQ"
    STAR_SELF_DUAL = "STAR_SELF_DUAL"
    DEFBAR = "DEFBAR"
    NABCOM = "NABCOM"
    POWER_COMPOUND = "POWER_COMPOUND"
    TRACE_POWER = "TRACE_POWER"
    CONJ_TRACE = "CONJ_TRACE"
    SYLVESTER_FRANKE = "SYLVESTER_FRANKE"
    SF_MODULUS = "SF_MODULUS"
    KLEENE_DEFINITE = "KLEENE_DEFINITE"
    QUASI_IDENTITY = "QUASI_IDENTITY"
    FROBENIUS = "FROBENIUS"
    CHARPOLY_REL = "CHARPOLY_REL"
    CHARPOLY_THIN_EQ = "CHARPOLY_THIN_EQ"
    EIGEN_MAP = "EIGEN_MAP"
    MAJORIZATION = "MAJORIZATION"
    SIGN_LEMMAS = "SIGN_LEMMAS"
    DFS_LEMMA = "DFS_LEMMA"
    COMPOUND_DIAG = "COMPOUND_DIAG"


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass
class CheckReport:
    id: IdentityId
    status: Status
    relation: str
    inputs: dict[str, Any] = field(default_factory=dict)
    witness: Optional[dict[str, Any]] = None
    reason: str = ""
    notes: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status is Status.FAIL and self.witness is None:
            self.witness = {"detail": self.reason or "unspecified"}

    @property
    def passed(self) -> Optional[bool]:
        """True/False for evaluated checks, None for skipped ones."""
        if self.status is Status.SKIP:
            return None
        return self.status is Status.PASS

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        """JSON form. Timing is opt-in so identical runs print identical bytes."""
        from .io import to_jsonable

        d = {
            "id": self.id.value,
            "status": self.status.value,
            "passed": self.passed,
            "relation": self.relation,
            "inputs": to_jsonable(self.inputs),
        }
        if self.witness is not None:
            d["witness"] = to_jsonable(self.witness)
        if self.reason:
            d["reason"] = self.reason
        if self.notes:
            d["notes"] = to_jsonable(self.notes)
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, ensure_ascii=False)
