# toricdeg/cli/commands/degenerate.py
import click

from toricdeg.cli.dependencies import (
    Clock,
    emit,
    handle_errors,
    json_option,
    order_option,
    parse_permutation,
    tiebreak_option,
    timings_option,
)
from toricdeg.core.exceptions import TheoryViolation
from toricdeg.schemas.toric import TheoremMainReport
from toricdeg.services import problem_service, toric_service


def _render(report: TheoremMainReport) -> None:
    click.echo("A_w columns: " + " ".join(str(tuple(c)) for c in report.degenerated_columns))
    click.echo("G_t:")
    for g in report.degenerated_generators:
        click.echo(f"  {g.text}")
    click.echo(f"(I_A)_t = I_(A_w): {report.equal}")
    click.echo(f"t = 1 recovers I_A: {report.dehomogenized_generates}")


@click.command("degenerate")
@click.argument("file", type=click.Path(dir_okay=False))
@tiebreak_option
@order_option
@json_option
@timings_option
@handle_errors
def command(file, tiebreak, permutation, as_json, timings):
    """Build A_w, degenerate a Gröbner basis along w, and compare with I_(A_w)."""
    clock = Clock()
    problem = problem_service.load_problem(file)
    ctx = problem_service.context_of(problem)
    tb, perm = problem_service.order_of(problem, tiebreak)
    report = toric_service.verify_theorem_main(ctx, tb, parse_permutation(permutation) or perm)
    emit("degenerate", report, inputs=problem, seed=None, as_json=as_json, timings=timings, clock=clock, render=_render)
    if not report.equal:
        raise TheoryViolation("the degenerated ideal differs from the toric ideal of A_w")
