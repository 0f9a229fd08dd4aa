# File: Problems.py
# Path: KanSaea/Problems.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  01:30PM
# Description: Benchmark objectives and the budget-counting expensive evaluator

"""
Benchmark Problems

Ellipsoid, Rosenbrock, Ackley and Griewank with their standard boxes.
Each Eval* function accepts one point (1-D) or a batch (2-D, one row per
point). BudgetedProblem wraps one of them as the expensive objective:
every call increments fes, is logged, and is refused once fes_max is hit.
"""

import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Tuple

import numpy as np
from scipy.stats import qmc

from KanSaea.Errors import (BoundsViolationError, BudgetExhaustedError, ConfigError,
                            DimensionError, InputShapeError)

Logger = logging.getLogger(__name__)


def _Rows(X) -> Tuple[np.ndarray, bool]:
    Array = np.asarray(X, dtype=float)
    return np.atleast_2d(Array), Array.ndim == 1


def _Result(Values: np.ndarray, Single: bool):
    return float(Values[0]) if Single else Values


def EvalEllipsoid(X):
    """sum_i i * x_i^2, i from 1."""
    Rows, Single = _Rows(X)
    Weights = np.arange(1, Rows.shape[1] + 1, dtype=float)
    return _Result(np.sum(Weights * Rows ** 2, axis=1), Single)


def EvalRosenbrock(X):
    Rows, Single = _Rows(X)
    if Rows.shape[1] < 2:
        raise DimensionError(f"Rosenbrock needs n >= 2, got {Rows.shape[1]}")
    Head, Tail = Rows[:, :-1], Rows[:, 1:]
    return _Result(np.sum(100.0 * (Tail - Head ** 2) ** 2 + (Head - 1.0) ** 2, axis=1), Single)


def EvalAckley(X):
    Rows, Single = _Rows(X)
    SquareMean = np.mean(Rows ** 2, axis=1)
    CosineMean = np.mean(np.cos(2.0 * np.pi * Rows), axis=1)
    Values = -20.0 * np.exp(-0.2 * np.sqrt(SquareMean)) - np.exp(CosineMean) + 20.0 + np.e
    return _Result(Values, Single)


def EvalGriewank(X):
    Rows, Single = _Rows(X)
    Roots = np.sqrt(np.arange(1, Rows.shape[1] + 1, dtype=float))
    Values = 1.0 + np.sum(Rows ** 2, axis=1) / 4000.0 - np.prod(np.cos(Rows / Roots), axis=1)
    return _Result(Values, Single)


@dataclass(frozen=True)
class ProblemDefinition:
    Name: str
    Function: Callable
    Bound: float
    Optimum: float  # coordinate value of the global minimizer
    MinDimension: int = 1


PROBLEMS: Dict[str, ProblemDefinition] = {
    "ellipsoid": ProblemDefinition("Ellipsoid", EvalEllipsoid, 5.12, 0.0),
    "rosenbrock": ProblemDefinition("Rosenbrock", EvalRosenbrock, 2.048, 1.0, MinDimension=2),
    "ackley": ProblemDefinition("Ackley", EvalAckley, 32.768, 0.0),
    "griewank": ProblemDefinition("Griewank", EvalGriewank, 600.0, 0.0),
}


def GetDefinition(Name: str) -> ProblemDefinition:
    Key = str(Name).strip().lower()
    if Key not in PROBLEMS:
        raise ConfigError(f"unknown problem '{Name}', choose one of {sorted(PROBLEMS)}")
    return PROBLEMS[Key]


@dataclass
class BudgetedProblem:
    """Expensive objective with a hard evaluation budget.

    Attributes:
        Name: Lower-case problem key
        Dimension: n
        FesMax: Evaluation budget
        Fes: Evaluations consumed so far
        Log: (fes, value) per evaluation, in call order
    """

    Name: str
    Dimension: int
    FesMax: int
    Fes: int = 0
    Log: List[Tuple[int, float]] = field(default_factory=list)

    def __post_init__(self):
        self.Definition = GetDefinition(self.Name)
        self.Name = self.Definition.Name.lower()
        if self.Dimension < self.Definition.MinDimension:
            raise DimensionError(
                f"{self.Definition.Name} needs n >= {self.Definition.MinDimension}, got {self.Dimension}")
        if self.FesMax < 1:
            raise ConfigError(f"fes_max must be positive, got {self.FesMax}")
        self.Lower = np.full(self.Dimension, -self.Definition.Bound)
        self.Upper = np.full(self.Dimension, self.Definition.Bound)

    @property
    def Bounds(self) -> Tuple[np.ndarray, np.ndarray]:
        return self.Lower, self.Upper

    @property
    def Remaining(self) -> int:
        return self.FesMax - self.Fes

    @property
    def Optimum(self) -> np.ndarray:
        return np.full(self.Dimension, self.Definition.Optimum)

    def Evaluate(self, X) -> float:
        """One expensive call: fes += 1 and the value is logged.

        Raises:
            BudgetExhaustedError: fes already equals fes_max
            BoundsViolationError: X leaves the box (repair before calling)
        """
        if self.Fes >= self.FesMax:
            raise BudgetExhaustedError(f"budget of {self.FesMax} evaluations exhausted")
        Point = np.asarray(X, dtype=float)
        if Point.shape != (self.Dimension,):
            raise InputShapeError(f"{self.Name} expects a vector of length {self.Dimension}, got {Point.shape}")
        if np.any(Point < self.Lower) or np.any(Point > self.Upper):
            raise BoundsViolationError(f"solution leaves [{self.Lower[0]}, {self.Upper[0]}]^{self.Dimension}")

        Value = float(self.Definition.Function(Point))
        self.Fes += 1
        self.Log.append((self.Fes, Value))
        return Value

    def BestSoFarTrace(self) -> List[Tuple[int, float]]:
        Trace = []
        Best = np.inf
        for Count, Value in self.Log:
            Best = min(Best, Value)
            Trace.append((Count, Best))
        return Trace

    def ExportLog(self, OutputPath) -> Path:
        """CSV with columns fes,value,best_so_far."""
        OutputPath = Path(OutputPath)
        OutputPath.parent.mkdir(parents=True, exist_ok=True)
        with open(OutputPath, "w", newline="") as Handle:
            Writer = csv.writer(Handle)
            Writer.writerow(["fes", "value", "best_so_far"])
            for (Count, Value), (_, Best) in zip(self.Log, self.BestSoFarTrace()):
                Writer.writerow([Count, repr(Value), repr(Best)])
        return OutputPath


def MakeProblem(Name: str, Dimension: int, FesMax: int) -> BudgetedProblem:
    return BudgetedProblem(Name, int(Dimension), int(FesMax))


def Evaluate(Problem: BudgetedProblem, X) -> float:
    return Problem.Evaluate(X)


def UniformInit(Problem: BudgetedProblem, Count: int, Rng: np.random.Generator,
                LatinHypercube: bool = False) -> np.ndarray:
    """Count x n points inside the box; i.i.d. uniform or Latin-hypercube."""
    if Count < 1:
        raise ConfigError(f"population size must be at least 1, got {Count}")
    if LatinHypercube:
        Sampler = qmc.LatinHypercube(d=Problem.Dimension, seed=Rng)
        return qmc.scale(Sampler.random(Count), Problem.Lower, Problem.Upper)
    return Rng.uniform(Problem.Lower, Problem.Upper, size=(Count, Problem.Dimension))
