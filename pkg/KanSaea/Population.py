# File: Population.py
# Path: KanSaea/Population.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  02:35PM
# Description: Evaluated population, sorted archive and unevaluated pool containers

"""
Population Containers

EvaluatedPopulation and Archive hold solutions with true objective values;
UnevaluatedPool holds solutions that were never sent to the expensive
objective and therefore has no value field at all. Only the first two can
produce a TrainingSet.
"""

import bisect
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from KanSaea.Datasets import TrainingSet
from KanSaea.Errors import InputShapeError, SizeError


@dataclass
class EvaluatedPopulation:
    Solutions: np.ndarray
    Values: np.ndarray

    def __post_init__(self):
        self.Solutions = np.atleast_2d(np.asarray(self.Solutions, dtype=float)).copy()
        self.Values = np.asarray(self.Values, dtype=float).reshape(-1).copy()
        if self.Solutions.shape[0] != self.Values.shape[0]:
            raise InputShapeError(f"{self.Solutions.shape[0]} solutions but {self.Values.shape[0]} values")
        if not (np.all(np.isfinite(self.Solutions)) and np.all(np.isfinite(self.Values))):
            raise InputShapeError("population holds non-finite entries")

    @property
    def Size(self) -> int:
        return int(self.Values.shape[0])

    @property
    def BestIndex(self) -> int:
        return int(np.argmin(self.Values))

    def Replace(self, Index: int, Solution: np.ndarray, Value: float) -> None:
        self.Solutions[Index] = Solution
        self.Values[Index] = Value

    def ToTrainingSet(self) -> TrainingSet:
        return TrainingSet(self.Solutions, self.Values)


@dataclass
class Archive:
    """Every evaluated solution, kept ascending by value. Equal values keep insertion order."""

    Solutions: List[np.ndarray] = field(default_factory=list)
    Values: List[float] = field(default_factory=list)

    @classmethod
    def FromPopulation(cls, Population: EvaluatedPopulation) -> "Archive":
        Store = cls()
        for Solution, Value in zip(Population.Solutions, Population.Values):
            Store.Insert(Solution, float(Value))
        return Store

    def __len__(self) -> int:
        return len(self.Values)

    def Insert(self, Solution: np.ndarray, Value: float) -> int:
        Position = bisect.bisect_right(self.Values, Value)
        self.Values.insert(Position, float(Value))
        self.Solutions.insert(Position, np.asarray(Solution, dtype=float).copy())
        return Position

    def Top(self, Count: int) -> EvaluatedPopulation:
        """The Count best entries; Count beyond the archive size returns all of it."""
        if Count < 1:
            raise SizeError(f"window size must be positive, got {Count}")
        Count = min(Count, len(self))
        return EvaluatedPopulation(np.vstack(self.Solutions[:Count]), np.asarray(self.Values[:Count]))

    def Window(self, Tau: int) -> TrainingSet:
        return self.Top(Tau).ToTrainingSet()

    @property
    def Best(self) -> Tuple[np.ndarray, float]:
        return self.Solutions[0], self.Values[0]


@dataclass
class UnevaluatedPool:
    """At most Capacity solutions without objective values."""

    Capacity: int
    Solutions: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.Capacity < 0:
            raise SizeError(f"pool capacity must be non-negative, got {self.Capacity}")
        if self.Solutions is None:
            self.Solutions = np.empty((0, 0))
        self.Assign(self.Solutions)

    def Assign(self, Solutions: np.ndarray) -> None:
        Solutions = np.asarray(Solutions, dtype=float)
        if Solutions.size and Solutions.ndim == 1:
            Solutions = Solutions.reshape(1, -1)
        if Solutions.shape[0] > self.Capacity:
            raise SizeError(f"pool holds at most {self.Capacity} solutions, got {Solutions.shape[0]}")
        self.Solutions = Solutions.copy()

    def Clear(self) -> None:
        self.Solutions = np.empty((0, self.Solutions.shape[1] if self.Solutions.ndim == 2 else 0))

    @property
    def Size(self) -> int:
        return int(self.Solutions.shape[0]) if self.Solutions.ndim == 2 else 0
