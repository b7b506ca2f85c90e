from typing import Any, Dict, Iterable, List, Optional

from pydantic import BaseModel, Field

from .exactalg.laurent import LaurentPoly


class Failure(BaseModel):
    J: List[int] = Field(default_factory=list)
    lhs: Optional[Dict[str, Any]] = None
    rhs: Optional[Dict[str, Any]] = None
    context: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def of(cls, J: Iterable[int], lhs: Optional[LaurentPoly] = None, rhs: Optional[LaurentPoly] = None, **context) -> "Failure":
        return cls(
            J=sorted(J),
            lhs=lhs.to_json() if lhs is not None else None,
            rhs=rhs.to_json() if rhs is not None else None,
            context=context,
        )


class Report(BaseModel):
    """Outcome of checking one claim over many instances; falsification is data, not an exception"""
    claim: str
    instances_checked: int = 0
    vacuous: int = 0
    failures: List[Failure] = Field(default_factory=list)
    verified: bool = True
    details: Dict[str, Any] = Field(default_factory=dict)

    def check(self, ok: bool, failure: Optional[Failure] = None) -> bool:
        self.instances_checked += 1
        if not ok:
            self.failures.append(failure or Failure())
            self.verified = False
        return ok

    def compare(self, J: Iterable[int], lhs: LaurentPoly, rhs: LaurentPoly, **context) -> bool:
        J = list(J)
        return self.check(lhs == rhs, Failure.of(J, lhs, rhs, **context))

    def skip(self) -> None:
        self.vacuous += 1

    def absorb(self, other: "Report") -> "Report":
        self.instances_checked += other.instances_checked
        self.vacuous += other.vacuous
        self.failures.extend(other.failures)
        self.verified = self.verified and other.verified
        return self

    def to_json(self) -> Dict[str, Any]:
        data = self.model_dump()
        if not data['details']:
            data.pop('details')
        return data


class SuiteRow(BaseModel):
    claim: str
    instances: int
    failures: int
    verified: bool
    expected_to_fail: bool = False
    seconds: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.verified != self.expected_to_fail

    @classmethod
    def from_report(cls, report: Report, seconds: Optional[float] = None, expected_to_fail: bool = False) -> "SuiteRow":
        return cls(
            claim=report.claim,
            instances=report.instances_checked,
            failures=len(report.failures),
            verified=report.verified,
            expected_to_fail=expected_to_fail,
            seconds=seconds,
        )
