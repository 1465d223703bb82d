# toricdeg/cli/commands/invariants.py
import click
from pydantic import BaseModel

from toricdeg.cli.dependencies import (
    Clock,
    emit,
    handle_errors,
    json_option,
    seed_option,
    tiebreak_option,
    timings_option,
)
from toricdeg.core.exceptions import ProblemParseError
from toricdeg.models.binomial import Tiebreak
from toricdeg.schemas.invariants import (
    ApproximationReport,
    BettiReport,
    SaturationReport,
    UniquenessReport,
)
from toricdeg.schemas.problem import ProblemFile
from toricdeg.services import problem_service, semigroup_service, toric_service
from toricdeg.services.semigroup_service import SemigroupService


def _render(report: BaseModel) -> None:
    if isinstance(report, BettiReport):
        click.echo("Betti elements: " + ", ".join(str(tuple(b)) for b in report.betti))
        click.echo("minimal: " + ", ".join(str(tuple(b)) for b in report.betti_minimal))
        click.echo(f"uniquely presented: {report.uniquely_presented}")
    elif isinstance(report, SaturationReport):
        click.echo(f"saturated: {report.saturated} ({report.checked_points} zonotope points)")
        if report.witness is not None:
            click.echo(f"witness: {tuple(report.witness)}")
        if report.witness_multiple is not None:
            click.echo(f"{report.witness_multiple}·witness lies in S")
    elif isinstance(report, ApproximationReport):
        click.echo(f"a = {tuple(report.a)}")
        if report.certificate is not None:
            click.echo(f"δ = {report.certificate.delta} over {len(report.certificate.entries)} points")
    else:
        for key, value in report.model_dump(exclude_none=True).items():
            click.echo(f"{key}: {value}")


def _interval_q(problem: ProblemFile):
    cols = [tuple(c) for c in problem.generators]
    if len(cols) == 3 and all(len(c) == 1 for c in cols):
        a = cols[0][0]
        if a >= 4 and a % 2 == 0 and cols == [(a,), (a + 1,), (a + 2,)]:
            return (a - 2) // 2
    return None


def _uniqueness(problem: ProblemFile, S, tiebreak: Tiebreak) -> BaseModel:
    q = _interval_q(problem)
    if q is not None and problem.weights is not None:
        return semigroup_service.check_unique_presentation_family(q, problem.weights)
    report = UniquenessReport(uniquely_presented=SemigroupService(S).betti_elements().uniquely_presented)
    if problem.weights is not None:
        ctx = toric_service.build_context(S, problem.weights)
        lifted = SemigroupService(ctx.degenerated).betti_elements()
        gb = toric_service.degeneration_basis(ctx, tiebreak)
        gens_t = [toric_service.degenerate_binomial(g, ctx.weight, gb.order) for g in gb.elements]
        report.uniquely_presented_w = lifted.uniquely_presented
        report.minimal_is_groebner = semigroup_service.is_minimal_gb(S, ctx.weight, tiebreak)
        report.mon_deg = semigroup_service.mon_deg_certificate(gens_t, ctx.matrix_w)
    return report


@click.command("invariants")
@click.argument("file", type=click.Path(dir_okay=False))
@click.option(
    "--which",
    type=click.Choice(["betti", "saturation", "approx", "unique"]),
    required=True,
)
@click.option("--lifted", is_flag=True, help="Work on S_w instead of S (needs weights).")
@click.option("--max-multiple", type=int, default=0, help="Search k·witness ∈ S for k up to this bound.")
@tiebreak_option
@seed_option
@json_option
@timings_option
@handle_errors
def command(file, which, lifted, max_multiple, tiebreak, seed, as_json, timings):
    """Betti elements, saturation, approximation elements or unique presentation."""
    clock = Clock()
    problem = problem_service.load_problem(file)
    S = problem_service.presentation_of(problem)
    tb, _ = problem_service.order_of(problem, tiebreak)
    target = S
    if lifted:
        if problem.weights is None:
            raise ProblemParseError("weights: required with --lifted")
        target = toric_service.build_context(S, problem.weights).degenerated

    if which == "betti":
        report = SemigroupService(target).betti_elements()
    elif which == "saturation":
        report = SemigroupService(target).is_saturated(max_multiple)
    elif which == "approx":
        a = SemigroupService(S).approximation_element()
        report = ApproximationReport(a=list(a))
        if problem.weights is not None:
            ctx = toric_service.build_context(S, problem.weights)
            cert = semigroup_service.approx_degeneration(ctx, a)
            report.certificate = semigroup_service.verify_certificate_samples(ctx, cert, seed=seed)
    else:
        report = _uniqueness(problem, S, tb)
    emit("invariants", report, inputs=problem, seed=seed, as_json=as_json, timings=timings, clock=clock, render=_render)
