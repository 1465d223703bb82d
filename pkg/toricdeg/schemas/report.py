# toricdeg/schemas/report.py
from typing import Optional

from pydantic import BaseModel, SerializeAsAny

from toricdeg.schemas.problem import ProblemFile


class CommandReport(BaseModel):
    """Envelope written by every subcommand; `runtime_seconds` only with --timings."""

    command: str
    inputs: Optional[ProblemFile] = None
    seed: int
    results: SerializeAsAny[BaseModel]
    runtime_seconds: Optional[float] = None
