# File: test_Problems.py
# Path: Tests/Unit/test_Problems.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  08:10PM
# Description: Benchmark formulas, minima and evaluation-budget tests

import csv
import math

import numpy as np
import pytest

from KanSaea.Errors import (BoundsViolationError, BudgetExhaustedError, ConfigError,
                            DimensionError, InputShapeError)
from KanSaea.Problems import (PROBLEMS, EvalAckley, EvalEllipsoid, EvalGriewank, EvalRosenbrock,
                              Evaluate, GetDefinition, MakeProblem, UniformInit)


def _LoopEllipsoid(x):
    return sum((i + 1) * v * v for i, v in enumerate(x))


def _LoopRosenbrock(x):
    return sum(100.0 * (x[i + 1] - x[i] ** 2) ** 2 + (x[i] - 1.0) ** 2 for i in range(len(x) - 1))


def _LoopAckley(x):
    n = len(x)
    First = math.sqrt(sum(v * v for v in x) / n)
    Second = sum(math.cos(2.0 * math.pi * v) for v in x) / n
    return -20.0 * math.exp(-0.2 * First) - math.exp(Second) + 20.0 + math.e


def _LoopGriewank(x):
    Product = 1.0
    for i, v in enumerate(x):
        Product *= math.cos(v / math.sqrt(i + 1))
    return 1.0 + sum(v * v for v in x) / 4000.0 - Product


@pytest.mark.parametrize("Name,Vectorized,Loop", [
    ("ellipsoid", EvalEllipsoid, _LoopEllipsoid),
    ("rosenbrock", EvalRosenbrock, _LoopRosenbrock),
    ("ackley", EvalAckley, _LoopAckley),
    ("griewank", EvalGriewank, _LoopGriewank),
])
def test_FormulasMatchLoopEvaluators(Name, Vectorized, Loop):
    Bound = PROBLEMS[Name].Bound
    Generator = np.random.default_rng(17)
    Points = Generator.uniform(-Bound, Bound, size=(1000, 5))
    Batch = Vectorized(Points)
    assert Batch.shape == (1000,)
    for Row, Value in zip(Points, Batch):
        Expected = Loop(Row.tolist())
        assert abs(Value - Expected) <= 1e-12 * max(1.0, abs(Expected))
    assert isinstance(Vectorized(Points[0]), float)


@pytest.mark.parametrize("Name", sorted(PROBLEMS))
def test_GlobalMinimumIsZero(Name):
    for Dimension in (2, 5, 10):
        Problem = MakeProblem(Name, Dimension, 5)
        assert Evaluate(Problem, Problem.Optimum) == pytest.approx(0.0, abs=1e-12)


def test_KnownValues():
    assert EvalEllipsoid([1.0, 1.0, 1.0]) == 6.0
    assert EvalRosenbrock([0.0, 0.0]) == 1.0
    assert EvalGriewank([0.0, 0.0, 0.0]) == 0.0


def test_RosenbrockNeedsTwoDimensions():
    with pytest.raises(DimensionError):
        EvalRosenbrock([0.5])
    with pytest.raises(DimensionError):
        MakeProblem("rosenbrock", 1, 10)


def test_UnknownProblemRejected():
    with pytest.raises(ConfigError):
        GetDefinition("sphere")
    assert GetDefinition(" Ackley ").Bound == 32.768


def test_BudgetIsEnforced():
    Problem = MakeProblem("ellipsoid", 3, 2)
    Evaluate(Problem, np.zeros(3))
    Evaluate(Problem, np.ones(3))
    assert Problem.Fes == 2 and Problem.Remaining == 0
    with pytest.raises(BudgetExhaustedError):
        Evaluate(Problem, np.zeros(3))
    assert Problem.Fes == 2
    assert Problem.Log == [(1, 0.0), (2, 6.0)]


def test_RejectedCallsDoNotCount():
    Problem = MakeProblem("ackley", 2, 10)
    with pytest.raises(BoundsViolationError):
        Evaluate(Problem, np.array([40.0, 0.0]))
    with pytest.raises(InputShapeError):
        Evaluate(Problem, np.zeros(3))
    assert Problem.Fes == 0 and Problem.Log == []


def test_BoundaryPointsAreInside():
    Problem = MakeProblem("griewank", 2, 2)
    Evaluate(Problem, np.array([600.0, -600.0]))
    assert Problem.Fes == 1


def test_ExportLogWritesBestSoFar(tmp_path):
    Problem = MakeProblem("ellipsoid", 2, 5)
    for Point in ([1.0, 1.0], [0.0, 0.0], [2.0, 0.0]):
        Evaluate(Problem, np.array(Point))
    OutputPath = Problem.ExportLog(tmp_path / "logs" / "trace.csv")
    with open(OutputPath, newline="") as Handle:
        Rows = list(csv.reader(Handle))
    assert Rows[0] == ["fes", "value", "best_so_far"]
    assert [float(Row[2]) for Row in Rows[1:]] == [3.0, 0.0, 0.0]
    assert [int(Row[0]) for Row in Rows[1:]] == [1, 2, 3]


@pytest.mark.parametrize("LatinHypercube", [False, True])
def test_UniformInitStaysInBox(LatinHypercube, Rng):
    Problem = MakeProblem("ackley", 4, 100)
    Points = UniformInit(Problem, 30, Rng, LatinHypercube=LatinHypercube)
    assert Points.shape == (30, 4)
    assert np.all(Points >= Problem.Lower) and np.all(Points <= Problem.Upper)
    assert Problem.Fes == 0


def test_LatinHypercubeCoversEveryStratum(Rng):
    Problem = MakeProblem("ellipsoid", 3, 100)
    Points = UniformInit(Problem, 10, Rng, LatinHypercube=True)
    Strata = np.floor((Points - Problem.Lower) / (Problem.Upper - Problem.Lower) * 10).astype(int)
    for Column in Strata.T:
        assert sorted(Column.tolist()) == list(range(10))
