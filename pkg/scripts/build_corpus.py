"""
One-off script that writes the shipped corpus: one problem file per worked
example plus its `.expected.json` sidecar.
Run from project root: python -m scripts.build_corpus [target_dir]
"""
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, "")

from toricdeg.schemas.problem import BinomialPair, CorpusExpectation, OrderSpec, ProblemFile
from toricdeg.services import problem_service


def pair(lead, trail) -> BinomialPair:
    return BinomialPair(lead=list(lead), trail=list(trail))


ENTRIES = {
    "1-1": (
        ProblemFile(generators=[[6], [10], [15]], weights=[1, 1, 1]),
        CorpusExpectation(
            source="numerical semigroup <6,10,15>, unit weight",
            generators=[pair((5, 0, 0), (0, 3, 0)), pair((0, 3, 0), (0, 0, 2))],
            degenerated_generators=[
                pair((5, 0, 0, 0), (0, 3, 0, 2)),
                pair((0, 3, 0, 0), (0, 0, 2, 1)),
            ],
            theorem_main=True,
            betti=[[30]],
            betti_w=[[30, 3], [30, 5]],
            inclusion={"30": [3, 5]},
        ),
    ),
    "scroll": (
        ProblemFile(
            generators=[[1, 0], [1, 1], [1, 2], [1, 3]],
            weights=[3, 7, 2, 5],
            order=OrderSpec(tiebreak="lex"),
            labels=["a", "b", "c", "d"],
        ),
        CorpusExpectation(
            source="twisted cubic, weight (3,7,2,5)",
            reduced_degeneration_basis=[
                pair((0, 2, 0, 0), (1, 0, 1, 0)),
                pair((0, 1, 1, 0), (1, 0, 0, 1)),
                pair((0, 1, 0, 1), (0, 0, 2, 0)),
                pair((1, 0, 0, 2), (0, 0, 3, 0)),
            ],
            theorem_main=True,
            betti=[[2, 2], [2, 3], [2, 4]],
            betti_w=[[2, 2, 14], [2, 3, 9], [2, 4, 12], [3, 6, 13]],
            inclusion={"2,2": [14], "2,3": [9], "2,4": [12]},
        ),
    ),
    "saturation-m1": (
        ProblemFile(generators=[[1, 0], [1, 1], [1, 2]], weights=[1, 1, 1]),
        CorpusExpectation(source="A(1), unit weight", theorem_main=True, saturated_w=True),
    ),
    "saturation-m2": (
        ProblemFile(generators=[[1, 0], [1, 1], [2, 3]], weights=[1, 1, 1]),
        CorpusExpectation(source="A(2), unit weight", theorem_main=True, saturated_w=True),
    ),
    "saturation-m3": (
        ProblemFile(generators=[[1, 0], [1, 1], [3, 4]], weights=[1, 1, 1]),
        CorpusExpectation(
            source="A(3), unit weight",
            theorem_main=True,
            saturated_w=False,
            witness_w=[2, 2, 1],
        ),
    ),
    "un-betti-w": (
        ProblemFile(generators=[[15], [10], [6]], weights=[15, 10, 6]),
        CorpusExpectation(
            source="pairwise coprime (2,3,5) with equal products b_i w_i",
            theorem_main=True,
            betti=[[30]],
            betti_w=[[30, 30]],
            inclusion={"30": [30]},
            uniquely_presented_w=False,
        ),
    ),
    "exam-uniq-pres": (
        ProblemFile(generators=[[4], [5], [6]], weights=[1, 3, 1], labels=["x", "y", "z"]),
        CorpusExpectation(
            source="<2q, 2q+1, 2q+2> at q = 2 with 2w2 > w1 + w3",
            generators=[pair((0, 2, 0), (1, 0, 1)), pair((3, 0, 0), (0, 0, 2))],
            theorem_main=True,
            betti=[[10], [12]],
            uniquely_presented_w=True,
        ),
    ),
    "grob1-q1": (
        ProblemFile(
            generators=[[4], [5], [6]],
            weights=[2, 1, 2],
            order=OrderSpec(tiebreak="degrevlex", permutation=[0, 1, 2]),
            labels=["x", "y", "z"],
        ),
        CorpusExpectation(
            source="<2q+2, 2q+3, 2q+4> at q = 1, weight case 2(a)",
            generators=[pair((0, 2, 0), (1, 0, 1)), pair((3, 0, 0), (0, 0, 2))],
            reduced_degeneration_basis=[
                pair((1, 0, 1), (0, 2, 0)),
                pair((3, 0, 0), (0, 0, 2)),
                pair((2, 2, 0), (0, 0, 3)),
                pair((0, 0, 4), (1, 4, 0)),
            ],
            theorem_main=True,
            betti=[[10], [12]],
            uniquely_presented_w=True,
        ),
    ),
    "lawrence": (
        ProblemFile(generators=[[1, 1, 0], [2, 0, 1], [0, 1, 0], [0, 0, 1]], weights=[1, 2, 3, 1]),
        CorpusExpectation(
            source="Lawrence lifting of <1,2>",
            generators=[pair((2, 0, 0, 1), (0, 1, 2, 0))],
            theorem_main=True,
            uniquely_presented_w=True,
        ),
    ),
}


if __name__ == "__main__":
    target = Path(sys.argv[1] if len(sys.argv) > 1 else "corpus")
    target.mkdir(parents=True, exist_ok=True)
    for name, (problem, expected) in ENTRIES.items():
        (target / f"{name}.json").write_text(problem_service.dump_problem(problem), encoding="utf-8")
        (target / f"{name}.expected.json").write_text(
            expected.model_dump_json(indent=2, exclude_none=True) + "\n", encoding="utf-8"
        )
        print(f"Wrote {name}")
    print("Done.")
