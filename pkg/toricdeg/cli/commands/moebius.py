# toricdeg/cli/commands/moebius.py
import click

from toricdeg.cli.dependencies import (
    Clock,
    emit,
    handle_errors,
    json_option,
    max_n_option,
    parse_vector,
    timings_option,
)
from toricdeg.schemas.moebius import MoebiusReport
from toricdeg.services import moebius_service, problem_service


def _render(report: MoebiusReport) -> None:
    point = tuple(report.z) if report.lam is None else tuple(report.z) + (report.lam,)
    click.echo(f"μ{point} by brute force: {report.brute_force}")
    if report.closed is not None:
        click.echo(f"closed formula: {report.closed} (agreement: {report.agreement})")
    if report.downgraded:
        click.echo(f"brute force only: {report.downgraded}")


@click.command("moebius")
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--z", "z_text", required=True, help="Point of Z^d, comma-separated.")
@click.option("--lam", type=int, default=None, help="Last coordinate λ: evaluate μ on S_w at (z, λ).")
@max_n_option
@json_option
@timings_option
@handle_errors
def command(file, z_text, lam, max_n, as_json, timings):
    """Möbius function by brute force, checked against the closed formulas."""
    clock = Clock()
    problem = problem_service.load_problem(file)
    S = problem_service.presentation_of(problem)
    z = parse_vector(z_text, "--z")
    report = moebius_service.moebius_report(S, z, lam, problem.weights, max_n)
    emit("moebius", report, inputs=problem, seed=None, as_json=as_json, timings=timings, clock=clock, render=_render)
