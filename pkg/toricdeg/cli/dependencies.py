# toricdeg/cli/dependencies.py
from __future__ import annotations

import functools
import time
from typing import Callable, Optional

import click
from pydantic import BaseModel

from toricdeg.core.config import settings
from toricdeg.core.exceptions import ProblemParseError, ToricError
from toricdeg.schemas.problem import ProblemFile
from toricdeg.schemas.report import CommandReport

json_option = click.option("--json", "as_json", is_flag=True, help="Write the report as JSON on stdout.")
timings_option = click.option("--timings", is_flag=True, help="Include the runtime in the JSON report.")
seed_option = click.option("--seed", type=int, default=None, help="Random seed (default from settings).")
max_n_option = click.option("--max-n", type=int, default=None, help="Largest n for subset enumeration.")
tiebreak_option = click.option(
    "--tiebreak",
    type=click.Choice(["lex", "degrevlex"]),
    default=None,
    help="Tiebreak after the weight (default from the file, then settings).",
)
order_option = click.option(
    "--order", "permutation", default=None, help="Variable priority as comma-separated 0-based indices."
)


def parse_vector(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise ProblemParseError(f"{what}: {text!r} is not a comma-separated list of integers") from None


def parse_permutation(text: Optional[str]) -> Optional[tuple[int, ...]]:
    return parse_vector(text, "--order") if text else None


def handle_errors(fn: Callable) -> Callable:
    """Domain errors become a message on stderr and the error's exit code."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ToricError as exc:
            click.echo(f"error: {exc.detail}", err=True)
            click.get_current_context().exit(exc.exit_code)

    return wrapper


class Clock:
    def __init__(self) -> None:
        self.start = time.perf_counter()

    def elapsed(self) -> float:
        return round(time.perf_counter() - self.start, 3)


def emit(
    command: str,
    results: BaseModel,
    *,
    inputs: Optional[ProblemFile],
    seed: Optional[int],
    as_json: bool,
    timings: bool,
    clock: Clock,
    render: Callable[[BaseModel], None],
) -> None:
    if not as_json:
        render(results)
        return
    report = CommandReport(
        command=command,
        inputs=inputs,
        seed=settings.random_seed if seed is None else seed,
        results=results,
        runtime_seconds=clock.elapsed() if timings else None,
    )
    click.echo(report.model_dump_json(indent=2, exclude_none=True))
