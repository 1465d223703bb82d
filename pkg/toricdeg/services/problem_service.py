# toricdeg/services/problem_service.py
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError

from toricdeg.core.config import settings
from toricdeg.core.exceptions import ProblemParseError
from toricdeg.models.binomial import Tiebreak
from toricdeg.models.semigroup import DegenerationContext, SemigroupPresentation
from toricdeg.schemas.problem import CorpusExpectation, ProblemFile
from toricdeg.services import toric_service

M = TypeVar("M", bound=BaseModel)


def _parse(model: Type[M], text: str, source: str) -> M:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemParseError(f"{source}: {exc.msg}", exc.lineno, exc.colno) from None
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first["loc"]) or "<root>"
        raise ProblemParseError(f"{source}: {where}: {first['msg']}") from None


def parse_problem(text: str, source: str = "<problem>") -> ProblemFile:
    return _parse(ProblemFile, text, source)


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemParseError(f"cannot read {path}: {exc.strerror}") from None


def load_problem(path: str | Path) -> ProblemFile:
    path = Path(path)
    return parse_problem(_read(path), str(path))


def dump_problem(problem: ProblemFile) -> str:
    return problem.model_dump_json(indent=2, exclude_none=True) + "\n"


def load_expectation(path: str | Path) -> CorpusExpectation:
    path = Path(path)
    return _parse(CorpusExpectation, _read(path), str(path))


def presentation_of(problem: ProblemFile) -> SemigroupPresentation:
    return toric_service.present(problem.matrix())


def context_of(problem: ProblemFile, S: Optional[SemigroupPresentation] = None) -> DegenerationContext:
    if problem.weights is None:
        raise ProblemParseError("weights: required for a degeneration")
    return toric_service.build_context(S or presentation_of(problem), problem.weights)


def order_of(problem: ProblemFile, tiebreak: Optional[str] = None) -> tuple[Tiebreak, tuple[int, ...]]:
    """Tiebreak and permutation, a command-line tiebreak taking precedence."""
    order = problem.order
    name = tiebreak or (order.tiebreak if order else settings.default_tiebreak)
    perm = tuple(order.permutation) if order and order.permutation else ()
    return Tiebreak(name), perm
