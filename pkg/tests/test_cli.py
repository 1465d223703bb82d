import inspect
import json

import click
import pytest
from click.testing import CliRunner

from toricdeg.main import create_app


@pytest.fixture
def runner(monkeypatch):
    # keep loguru off the runner's captured streams
    monkeypatch.setattr("toricdeg.core.logging._configured", True)
    return separated_runner()


def separated_runner():
    # click 8.2 always keeps stderr apart and dropped the flag
    if "mix_stderr" in inspect.signature(CliRunner.__init__).parameters:
        return CliRunner(mix_stderr=False)
    return CliRunner()


def test_runner_keeps_streams_apart():
    @click.command()
    def emit():
        click.echo("out")
        click.echo("err", err=True)

    result = separated_runner().invoke(emit)
    assert result.stdout == "out\n"
    assert result.stderr == "err\n"


@pytest.fixture
def app():
    return create_app()


def run_json(runner, app, *args):
    result = runner.invoke(app, [*args, "--json"])
    assert result.exit_code == 0, result.stderr
    return json.loads(result.stdout)


def test_toric_text_output(runner, app, corpus_dir):
    result = runner.invoke(app, ["toric", str(corpus_dir / "scroll.json"), "--tiebreak", "degrevlex"])
    assert result.exit_code == 0, result.stderr
    assert "pointed: True" in result.stdout
    assert "degrevlex" in result.stdout


def test_degenerate_json(runner, app, corpus_dir):
    data = run_json(runner, app, "degenerate", str(corpus_dir / "1-1.json"))
    assert data["command"] == "degenerate"
    assert data["inputs"]["generators"] == [["6"], ["10"], ["15"]]
    assert data["results"]["equal"] is True
    assert data["results"]["degenerated_columns"][-1] == ["0", "1"]
    assert "runtime_seconds" not in data


def test_timings_flag(runner, app, corpus_dir):
    result = runner.invoke(app, ["degenerate", str(corpus_dir / "1-1.json"), "--json", "--timings"])
    assert "runtime_seconds" in json.loads(result.stdout)


def test_invariants_betti(runner, app, corpus_dir):
    data = run_json(runner, app, "invariants", str(corpus_dir / "1-1.json"), "--which", "betti")
    assert data["results"]["betti"] == [["30"]]
    assert data["results"]["uniquely_presented"] is False


def test_invariants_saturation_on_lifted_semigroup(runner, app, corpus_dir):
    path = str(corpus_dir / "saturation-m3.json")
    data = run_json(runner, app, "invariants", path, "--which", "saturation", "--lifted")
    assert data["results"]["saturated"] is False
    assert data["results"]["witness"] == ["2", "2", "1"]

    plain = run_json(runner, app, "invariants", path, "--which", "saturation")
    assert plain["results"]["saturated"] is True


def test_invariants_unique_for_interval_family(runner, app, corpus_dir):
    data = run_json(runner, app, "invariants", str(corpus_dir / "exam-uniq-pres.json"), "--which", "unique")
    assert data["results"]["case"] == "1"
    assert data["results"]["uniquely_presented"] is True


def test_lifted_needs_weights(runner, app, tmp_path):
    path = tmp_path / "p.json"
    path.write_text('{"generators": [["2"], ["3"]]}', encoding="utf-8")
    result = runner.invoke(app, ["invariants", str(path), "--which", "betti", "--lifted"])
    assert result.exit_code == 2
    assert "weights" in result.stderr


def test_moebius(runner, app, tmp_path):
    path = tmp_path / "p.json"
    path.write_text('{"generators": [["2"], ["3"]]}', encoding="utf-8")
    data = run_json(runner, app, "moebius", str(path), "--z", "5")
    assert data["results"]["brute_force"] == "1"
    assert data["results"]["closed"] == "1"
    assert data["results"]["agreement"] is True


def test_family_prints_problem(runner, app):
    result = runner.invoke(app, ["family", "A_of_m", "3"])
    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout)["generators"] == [["1", "0"], ["1", "1"], ["3", "4"]]
    assert "(2,2,1)" in result.stderr


def test_missing_file_exits_with_usage_code(runner, app, tmp_path):
    result = runner.invoke(app, ["toric", str(tmp_path / "absent.json")])
    assert result.exit_code == 2
    assert result.stderr.startswith("error:")


def test_bad_vector_option(runner, app, corpus_dir):
    result = runner.invoke(app, ["moebius", str(corpus_dir / "1-1.json"), "--z", "a,b"])
    assert result.exit_code == 2
    assert "--z" in result.stderr


@pytest.mark.slow
def test_accept_corpus_criterion(runner, app, corpus_dir):
    data = run_json(runner, app, "accept", str(corpus_dir), "--criteria", "0", "--seed", "0")
    assert data["results"]["passed"] is True
    assert [c["criterion"] for c in data["results"]["criteria"]] == [0]
