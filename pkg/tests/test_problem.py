import json

import pytest

from toricdeg.core.exceptions import ProblemParseError
from toricdeg.models.binomial import Tiebreak
from toricdeg.services import problem_service

PROBLEM = """{
  "generators": [["6"], ["10"], ["15"]],
  "weights": ["1", "1", "1"],
  "order": {"tiebreak": "degrevlex", "permutation": [2, 1, 0]}
}"""


def test_parse_accepts_strings_and_ints():
    problem = problem_service.parse_problem('{"generators": [[6], ["10"], ["-15"]]}')
    assert problem.generators == [[6], [10], [-15]]
    assert problem.weights is None


def test_dump_writes_decimal_strings():
    problem = problem_service.parse_problem(PROBLEM)
    data = json.loads(problem_service.dump_problem(problem))
    assert data["generators"] == [["6"], ["10"], ["15"]]
    assert data["weights"] == ["1", "1", "1"]
    assert problem_service.parse_problem(problem_service.dump_problem(problem)) == problem


def test_big_integers_survive():
    big = str(10**40 + 7)
    problem = problem_service.parse_problem(f'{{"generators": [["{big}"]]}}')
    assert problem.generators[0][0] == 10**40 + 7


def test_json_syntax_error_reports_position():
    with pytest.raises(ProblemParseError) as info:
        problem_service.parse_problem('{\n  "generators": [[1],\n}')
    assert info.value.line == 3
    assert "line 3" in info.value.detail


@pytest.mark.parametrize(
    "text,fragment",
    [
        ('{"generators": []}', "generators"),
        ('{"generators": [[1], [1, 2]]}', "one length"),
        ('{"generators": [[1], [2]], "weights": [1]}', "weights has length"),
        ('{"generators": [[1], [2]], "weights": [1, -1]}', "nonnegative"),
        ('{"generators": [[1], [2]], "labels": ["x"]}', "labels has length"),
        ('{"generators": [[1], [2]], "order": {"permutation": [0, 0]}}', "permutation"),
        ('{"generators": [["1.5"]]}', "decimal integer"),
        ('{"generators": [[true]]}', "booleans"),
        ('{"generators": [[1]], "extra": 1}', "extra"),
    ],
)
def test_validation_errors(text, fragment):
    with pytest.raises(ProblemParseError) as info:
        problem_service.parse_problem(text)
    assert fragment in info.value.detail


def test_order_precedence(monkeypatch):
    problem = problem_service.parse_problem(PROBLEM)
    assert problem_service.order_of(problem) == (Tiebreak.degrevlex, (2, 1, 0))
    assert problem_service.order_of(problem, "lex") == (Tiebreak.lex, (2, 1, 0))

    bare = problem_service.parse_problem('{"generators": [[2], [3]]}')
    monkeypatch.setattr(problem_service.settings, "default_tiebreak", "degrevlex")
    assert problem_service.order_of(bare) == (Tiebreak.degrevlex, ())


def test_context_needs_weights():
    problem = problem_service.parse_problem('{"generators": [[2], [3]]}')
    with pytest.raises(ProblemParseError):
        problem_service.context_of(problem)


def test_context_of_weighted_problem():
    ctx = problem_service.context_of(problem_service.parse_problem(PROBLEM))
    assert ctx.weight == (1, 1, 1)
    assert ctx.matrix_w.columns[-1] == (0, 1)


def test_load_missing_file(tmp_path):
    with pytest.raises(ProblemParseError) as info:
        problem_service.load_problem(tmp_path / "absent.json")
    assert "cannot read" in info.value.detail


def test_load_problem_names_the_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"generators": "no"}', encoding="utf-8")
    with pytest.raises(ProblemParseError) as info:
        problem_service.load_problem(path)
    assert str(path) in info.value.detail


def test_load_corpus_files(corpus_dir):
    problem = problem_service.load_problem(corpus_dir / "1-1.json")
    assert problem.generators == [[6], [10], [15]]
    expected = problem_service.load_expectation(corpus_dir / "1-1.expected.json")
    assert expected.betti == [[30]]
