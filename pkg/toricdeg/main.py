# toricdeg/main.py
import click

from toricdeg.cli.commands import accept, degenerate, family, invariants, moebius, toric
from toricdeg.core.config import settings
from toricdeg.core.logging import configure_logging


def create_app() -> click.Group:
    @click.group(name="toricdeg")
    @click.option("--log-level", default=None, help="Override TORICDEG_LOG_LEVEL for this run.")
    @click.version_option("0.1.0", prog_name="toricdeg")
    def app(log_level):
        """Gröbner degenerations of toric ideals and the semigroup invariants they control."""
        configure_logging(level=(log_level or settings.log_level).upper())

    for module in (toric, degenerate, invariants, moebius, accept, family):
        app.add_command(module.command)
    return app


app = create_app()
