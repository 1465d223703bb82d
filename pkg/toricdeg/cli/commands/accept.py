# toricdeg/cli/commands/accept.py
import click

from toricdeg.cli.dependencies import (
    Clock,
    emit,
    handle_errors,
    json_option,
    max_n_option,
    parse_vector,
    seed_option,
    timings_option,
)
from toricdeg.core.exceptions import CertificationFailure
from toricdeg.schemas.acceptance import AcceptanceSummary
from toricdeg.services.acceptance_service import AcceptanceService


def _render(summary: AcceptanceSummary) -> None:
    for c in summary.criteria:
        passed = sum(1 for check in c.checks if check.passed)
        status = "ok  " if c.passed else "FAIL"
        click.echo(f"{status} {c.criterion:>2} {c.title:<45} {passed}/{len(c.checks)}")
    for name in summary.failures:
        click.echo(f"  failed: {name}")


@click.command("accept")
@click.argument("corpus_dir", type=click.Path(file_okay=False))
@click.option("--criteria", default=None, help="Run only these criteria, comma-separated (0 is the corpus).")
@seed_option
@max_n_option
@json_option
@timings_option
@handle_errors
def command(corpus_dir, criteria, seed, max_n, as_json, timings):
    """Run the acceptance suite against CORPUS_DIR."""
    clock = Clock()
    only = parse_vector(criteria, "--criteria") if criteria else None
    summary = AcceptanceService(corpus_dir, seed, max_n).run(only)
    emit("accept", summary, inputs=None, seed=seed, as_json=as_json, timings=timings, clock=clock, render=_render)
    if not summary.passed:
        raise CertificationFailure(f"{len(summary.failures)} acceptance checks failed")
