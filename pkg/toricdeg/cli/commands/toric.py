# toricdeg/cli/commands/toric.py
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
from toricdeg.schemas.toric import ToricIdealReport
from toricdeg.services import problem_service, toric_service


def _render(report: ToricIdealReport) -> None:
    click.echo(f"pointed: {report.pointed}  full lattice: {report.full_lattice}")
    click.echo(f"generators ({len(report.generators)}):")
    for g in report.generators:
        click.echo(f"  {g.text}")
    click.echo(f"basis, {report.tiebreak} ({len(report.groebner_basis)}):")
    for g in report.groebner_basis:
        click.echo(f"  {g.text}")


@click.command("toric")
@click.argument("file", type=click.Path(dir_okay=False))
@tiebreak_option
@order_option
@json_option
@timings_option
@handle_errors
def command(file, tiebreak, permutation, as_json, timings):
    """Generators and reduced Gröbner basis of the toric ideal of FILE."""
    clock = Clock()
    problem = problem_service.load_problem(file)
    S = problem_service.presentation_of(problem)
    tb, perm = problem_service.order_of(problem, tiebreak)
    report = toric_service.describe(
        S, problem.weights, tb, parse_permutation(permutation) or perm, problem.labels
    )
    emit("toric", report, inputs=problem, seed=None, as_json=as_json, timings=timings, clock=clock, render=_render)
