# toricdeg/cli/commands/family.py
import click

from toricdeg.cli.dependencies import handle_errors
from toricdeg.models.corpus import FamilyName
from toricdeg.schemas.problem import ProblemFile
from toricdeg.services import corpus_service, problem_service


@click.command("family")
@click.argument("name", type=click.Choice([f.value for f in FamilyName]))
@click.argument("params", nargs=-1, type=int, required=True)
@handle_errors
def command(name, params):
    """Print the problem file of a named family instance."""
    instance = corpus_service.corpus_family(name, params)
    problem = ProblemFile(
        generators=[list(c) for c in instance.presentation.columns],
        weights=list(instance.weight) if instance.weight is not None else None,
    )
    click.echo(problem_service.dump_problem(problem), nl=False)
    for note in instance.expected.notes:
        click.echo(note, err=True)
