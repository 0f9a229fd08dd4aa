# File: test_Acceptance.py
# Path: Tests/Integration/test_Acceptance.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  10:30PM
# Description: Desk-scale reproduction bands for the surrogates and both frameworks

"""
Long-running checks, deselected by default. Run with:

    pytest -m slow Tests/Integration
"""

import numpy as np
import pytest

from KanSaea.Experiments import RunSingle, Viz2d
from KanSaea.Frameworks import RunKanSas, RunKanSps
from KanSaea.Problems import PROBLEMS, MakeProblem
from KanSaea.Settings import CLI_ALGORITHMS
from KanSaea.Statistics import WORSE, WilcoxonRankSum
from KanSaea.Surrogate import Backend, SurrogateSpec, Task

pytestmark = pytest.mark.slow

SEEDS = range(10)


def _CheckBudget(Problem, Result):
    Bests = [Best for _, Best in Result.Trace]
    assert Problem.Fes == Problem.FesMax
    assert len(Result.Trace) == Problem.FesMax
    assert all(Later <= Earlier for Earlier, Later in zip(Bests, Bests[1:]))


@pytest.fixture(scope="module")
def Viz2dScores():
    return {Name: [Viz2d(Name, Samples=50, Steps=50, Resolution=101, Seed=Seed).Scores for Seed in range(20)]
            for Name in sorted(PROBLEMS)}


@pytest.mark.parametrize("Name", sorted(PROBLEMS))
def test_KanRegressionBeatsMlp(Name, Viz2dScores):
    Wins = sum(Scores["kan_r2"] > Scores["mlp_r2"] for Scores in Viz2dScores[Name])
    assert Wins >= 15


@pytest.mark.parametrize("Name", sorted(PROBLEMS))
def test_KanClassificationMatchesOrBeatsMlp(Name, Viz2dScores):
    Wins = sum(Scores["kan_accuracy"] >= Scores["mlp_accuracy"] for Scores in Viz2dScores[Name])
    assert Wins >= 15


def test_SpsReproductionBand():
    Surrogate, Random = [], []
    for Seed in SEEDS:
        Problem = MakeProblem("ellipsoid", 5, 2000)
        Result = RunKanSps(Problem, SurrogateSpec(Backend.KAN, Task.REGRESSION), PopSize=50, Trials=3, Seed=Seed)
        _CheckBudget(Problem, Result)
        Surrogate.append(Result.BestValue)

        Problem = MakeProblem("ellipsoid", 5, 2000)
        Result = RunKanSps(Problem, None, PopSize=50, Trials=3, Seed=Seed)
        _CheckBudget(Problem, Result)
        Random.append(Result.BestValue)

    assert np.median(Surrogate) <= 1e-2
    assert np.median(Surrogate) < np.median(Random)
    assert WilcoxonRankSum(Surrogate, Random).Verdict == WORSE


def test_SasReproductionBand():
    Finals = []
    for Seed in SEEDS:
        Problem = MakeProblem("ellipsoid", 5, 300)
        Result = RunKanSas(Problem, 1, PopSize=50, Tau=50, Seed=Seed)
        _CheckBudget(Problem, Result)
        Finals.append(Result.BestValue)
    assert np.median(Finals) <= 1e-3


@pytest.mark.parametrize("Algorithm", CLI_ALGORITHMS)
def test_RunIsByteIdenticalPerSeed(Algorithm, tmp_path):
    Documents = []
    for Attempt in ("first", "second"):
        Result, _ = RunSingle(Algorithm, "rosenbrock", 3, 11, FesMax=70, PopSize=10, Tau=10,
                              OutputDir=str(tmp_path / Attempt))
        Documents.append(Result.ToJson(IncludeWallTime=False))
    assert Documents[0] == Documents[1]
