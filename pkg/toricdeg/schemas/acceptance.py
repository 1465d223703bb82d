# toricdeg/schemas/acceptance.py
from typing import List, Optional

from pydantic import BaseModel


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: Optional[str] = None


class CriterionResult(BaseModel):
    criterion: int
    title: str
    passed: bool
    checks: List[CheckResult]


class AcceptanceSummary(BaseModel):
    seed: int
    corpus_dir: str
    criteria: List[CriterionResult]
    passed: bool
    failures: List[str]
