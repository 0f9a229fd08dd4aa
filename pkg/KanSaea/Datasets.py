# File: Datasets.py
# Path: KanSaea/Datasets.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  09:20AM
# Description: Training and candidate sets exchanged between frameworks and surrogates

"""
Datasets

TrainingSet pairs evaluated solutions with regression targets or binary
labels; CandidateSet holds unevaluated solutions to be ranked.
"""

from dataclasses import dataclass

import numpy as np

from KanSaea.Errors import InputShapeError


@dataclass(frozen=True)
class TrainingSet:
    """Rows of Inputs are solutions x_i; Targets holds y_i or labels l_i."""

    Inputs: np.ndarray
    Targets: np.ndarray

    def __post_init__(self):
        Inputs = np.asarray(self.Inputs, dtype=float)
        # an empty vector means no rows, not one row of width zero
        Inputs = np.empty((0, 0)) if Inputs.size == 0 and Inputs.ndim < 2 else np.atleast_2d(Inputs)
        Targets = np.asarray(self.Targets, dtype=float).reshape(-1)
        if Inputs.shape[0] != Targets.shape[0]:
            raise InputShapeError(
                f"{Inputs.shape[0]} input rows but {Targets.shape[0]} targets")
        if not (np.all(np.isfinite(Inputs)) and np.all(np.isfinite(Targets))):
            raise InputShapeError("training set contains non-finite entries")
        object.__setattr__(self, "Inputs", Inputs)
        object.__setattr__(self, "Targets", Targets)

    @property
    def Size(self) -> int:
        return int(self.Inputs.shape[0])

    @property
    def Dimension(self) -> int:
        return int(self.Inputs.shape[1])


@dataclass(frozen=True)
class CandidateSet:
    """Non-empty matrix of unevaluated solutions."""

    Inputs: np.ndarray

    def __post_init__(self):
        Inputs = np.atleast_2d(np.asarray(self.Inputs, dtype=float))
        if Inputs.shape[0] == 0:
            raise InputShapeError("candidate set is empty")
        object.__setattr__(self, "Inputs", Inputs)

    @property
    def Size(self) -> int:
        return int(self.Inputs.shape[0])

    @property
    def Dimension(self) -> int:
        return int(self.Inputs.shape[1])
