# File: Surrogate.py
# Path: KanSaea/Surrogate.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  11:10PM
# Description: Fit/predict/select surrogate layer over the KAN and MLP backends

"""
Surrogate Models

A Surrogate wraps one network (KAN or MLP) trained either as a regression
model on objective values or as a two-class model on quantile labels.
Inputs are standardized per dimension and regression targets are
standardized before training; both transforms are stored with the model
and undone on prediction. Candidates are clamped per dimension to the
training span widened by 10% on each side (the first-layer grid range)
before prediction, so far-off candidates are scored like the nearest edge
of the data instead of by an unconstrained extrapolation. For KAN models
the hidden-layer grids follow the hidden activations during training.

Selection rules:
    regression      -> smallest predicted value
    classification  -> a label-1 candidate chosen uniformly at random,
                       falling back to any candidate
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np

from KanSaea.Datasets import CandidateSet, TrainingSet
from KanSaea.Errors import (ConfigError, EmptyTrainingSetError, InputShapeError, NotFittedError,
                            SizeError, TrainingDivergedError, UndefinedScoreError)
from KanSaea.KanCore import (DEFAULT_GRID_UPDATES, DEFAULT_INTERVALS, DEFAULT_ORDER, Fit, FitReport,
                             GridFromSamples, Head, KanNetwork, NetworkBase)
from KanSaea.Mlp import MlpNetwork

Logger = logging.getLogger(__name__)

Candidates = Union[CandidateSet, np.ndarray]


class Backend(Enum):
    KAN = "kan"
    MLP = "mlp"


class Task(Enum):
    REGRESSION = "regression"
    CLASSIFICATION = "classification"

    @property
    def Head(self) -> Head:
        return Head.REGRESSION if self is Task.REGRESSION else Head.CLASSIFICATION


@dataclass(frozen=True)
class SurrogateSpec:
    """Which surrogate a framework trains each generation."""

    ModelBackend: Backend = Backend.KAN
    ModelTask: Task = Task.REGRESSION
    Steps: int = 50
    Intervals: int = DEFAULT_INTERVALS
    Order: int = DEFAULT_ORDER
    GridUpdates: int = DEFAULT_GRID_UPDATES


def LabelByQuantile(Values: np.ndarray, TopFraction: float) -> np.ndarray:
    """Label the ceil(TopFraction * N) smallest values 1, the rest 0.

    Ties at the cutoff go to the earlier index.
    """
    Values = np.asarray(Values, dtype=float).reshape(-1)
    if Values.shape[0] == 0:
        raise InputShapeError("cannot label an empty population")
    if not 0.0 < TopFraction < 1.0:
        raise ConfigError(f"top fraction must lie in (0, 1), got {TopFraction}")

    # round first so 0.3 * 10 counts as 3, not 3.0000000000000004
    Count = math.ceil(round(TopFraction * Values.shape[0], 9))
    Order = np.argsort(Values, kind="stable")
    Labels = np.zeros(Values.shape[0], dtype=int)
    Labels[Order[:Count]] = 1
    return Labels


def _AsMatrix(U: Candidates) -> np.ndarray:
    return U.Inputs if isinstance(U, CandidateSet) else CandidateSet(U).Inputs


class Surrogate:
    """Trained model plus its input and target standardization."""

    def __init__(self, ModelBackend: Backend = Backend.KAN, ModelTask: Task = Task.REGRESSION,
                 Steps: int = 50, Seed: int = 0,
                 Intervals: int = DEFAULT_INTERVALS, Order: int = DEFAULT_ORDER,
                 GridUpdates: int = DEFAULT_GRID_UPDATES):
        self.Backend = Backend(ModelBackend)
        self.Task = Task(ModelTask)
        self.Steps = int(Steps)
        self.Seed = int(Seed)
        self.Intervals = int(Intervals)
        self.Order = int(Order)
        self.GridUpdates = int(GridUpdates)

        self.Model: Optional[NetworkBase] = None
        self.InputMean: Optional[np.ndarray] = None
        self.InputScale: Optional[np.ndarray] = None
        self.InputLow: Optional[np.ndarray] = None
        self.InputHigh: Optional[np.ndarray] = None
        self.TargetMean = 0.0
        self.TargetScale = 1.0
        self.Report: Optional[FitReport] = None

    @classmethod
    def FromSpec(cls, Spec: SurrogateSpec, Seed: int = 0) -> "Surrogate":
        return cls(Spec.ModelBackend, Spec.ModelTask, Spec.Steps, Seed, Spec.Intervals, Spec.Order,
                   Spec.GridUpdates)

    @property
    def IsFitted(self) -> bool:
        return self.Model is not None

    def _Standardize(self, Inputs: np.ndarray) -> np.ndarray:
        return (Inputs - self.InputMean) / self.InputScale

    def _Prepare(self, U: Candidates) -> np.ndarray:
        Inputs = _AsMatrix(U)
        if Inputs.shape[1] != self.InputMean.shape[0]:
            raise InputShapeError(
                f"surrogate was fitted on dimension {self.InputMean.shape[0]}, got {Inputs.shape[1]}")
        return np.clip(self._Standardize(Inputs), self.InputLow, self.InputHigh)

    def _BuildNetwork(self, Inputs: np.ndarray) -> NetworkBase:
        Dimension = Inputs.shape[1]
        NetworkHead = self.Task.Head
        if self.Backend is Backend.MLP:
            return MlpNetwork.Default(Dimension, NetworkHead, Seed=self.Seed)

        Widths = [Dimension, 2 * Dimension + 1, NetworkHead.Width]
        Options = dict(Intervals=self.Intervals, Order=self.Order, Seed=self.Seed)
        if Inputs.shape[0] < 2:
            return KanNetwork.Create(Widths, NetworkHead, **Options)

        # second-layer grids start on the initial hidden activations and are
        # re-placed during training; both builds draw identical initial
        # parameters from the same seed
        InputGrids = GridFromSamples(Inputs, self.Intervals, self.Order)
        Draft = KanNetwork.Create(Widths, NetworkHead, Grids=[InputGrids], **Options)
        HiddenGrids = GridFromSamples(Draft.HiddenActivations(Inputs), self.Intervals, self.Order)
        return KanNetwork.Create(Widths, NetworkHead, Grids=[InputGrids, HiddenGrids], **Options)

    def Fit(self, Data: TrainingSet) -> FitReport:
        """Train on Data (targets: values for regression, {0,1} labels for classification).

        Raises:
            TrainingDivergedError: with `Model` set to this surrogate holding the
                last finite parameters
        """
        if Data.Size == 0:
            raise EmptyTrainingSetError("cannot fit a surrogate on an empty training set")
        Inputs = Data.Inputs
        self.InputMean = Inputs.mean(axis=0)
        Scale = Inputs.std(axis=0)
        self.InputScale = np.where(Scale > 1e-12, Scale, 1.0)
        Standardized = self._Standardize(Inputs)
        if Data.Size >= 2:
            Span = GridFromSamples(Standardized, self.Intervals, self.Order)
            self.InputLow = np.array([Grid.Lower for Grid in Span])
            self.InputHigh = np.array([Grid.Upper for Grid in Span])
        else:
            self.InputLow, self.InputHigh = Standardized[0] - 0.5, Standardized[0] + 0.5

        Targets = Data.Targets
        if self.Task is Task.REGRESSION:
            self.TargetMean = float(Targets.mean())
            Spread = float(Targets.std())
            self.TargetScale = Spread if Spread > 1e-12 else 1.0
            Targets = (Targets - self.TargetMean) / self.TargetScale

        Network = self._BuildNetwork(Standardized)
        try:
            self.Report = Fit(Network, TrainingSet(Standardized, Targets), self.Steps,
                              GridUpdates=self.GridUpdates)
        except TrainingDivergedError as Ex:
            self.Model = Network
            Ex.Model = self
            raise
        self.Model = Network
        return self.Report

    def _RequireFitted(self, Expected: Task) -> None:
        if not self.IsFitted:
            raise NotFittedError("surrogate has not been fitted")
        if self.Task is not Expected:
            raise ConfigError(f"operation needs a {Expected.value} surrogate, this one is {self.Task.value}")

    def PredictValues(self, U: Candidates) -> np.ndarray:
        self._RequireFitted(Task.REGRESSION)
        Raw = self.Model.Predict(self._Prepare(U))
        return Raw * self.TargetScale + self.TargetMean

    def PredictLabels(self, U: Candidates) -> Tuple[np.ndarray, np.ndarray]:
        """Returns (labels, class-1 probabilities); probability 0.5 counts as class 1."""
        self._RequireFitted(Task.CLASSIFICATION)
        Probabilities = self.Model.Predict(self._Prepare(U))[:, 1]
        return (Probabilities >= 0.5).astype(int), Probabilities

    def SelectBest(self, U: Candidates, Rng: np.random.Generator) -> int:
        Inputs = _AsMatrix(U)
        if self.Task is Task.REGRESSION:
            return int(np.argmin(self.PredictValues(Inputs)))

        Labels, _ = self.PredictLabels(Inputs)
        Promising = np.flatnonzero(Labels == 1)
        if Promising.size:
            return int(Rng.choice(Promising))
        return int(Rng.integers(Inputs.shape[0]))

    def SelectTopK(self, U: Candidates, K: int, Rng: Optional[np.random.Generator] = None) -> np.ndarray:
        """K best candidates: ascending prediction, or descending class-1 probability.

        Both rankings are deterministic, so Rng is accepted only to keep the
        selection calls interchangeable.
        """
        Inputs = _AsMatrix(U)
        if K < 0 or K > Inputs.shape[0]:
            raise SizeError(f"cannot select {K} of {Inputs.shape[0]} candidates")
        if self.Task is Task.REGRESSION:
            Ranking = np.argsort(self.PredictValues(Inputs), kind="stable")
        else:
            _, Probabilities = self.PredictLabels(Inputs)
            Ranking = np.argsort(-Probabilities, kind="stable")
        return Ranking[:K].astype(int)


def FitSurrogate(ModelBackend: Backend, ModelTask: Task, Data: TrainingSet, Steps: int = 50,
                 Seed: int = 0, **Options) -> Surrogate:
    Model = Surrogate(ModelBackend, ModelTask, Steps, Seed, **Options)
    Model.Fit(Data)
    return Model


def PredictValues(Model: Surrogate, U: Candidates) -> np.ndarray:
    return Model.PredictValues(U)


def PredictLabels(Model: Surrogate, U: Candidates) -> Tuple[np.ndarray, np.ndarray]:
    return Model.PredictLabels(U)


def SelectBest(Model: Surrogate, U: Candidates, Rng: np.random.Generator) -> int:
    return Model.SelectBest(U, Rng)


def SelectTopK(Model: Surrogate, U: Candidates, K: int,
               Rng: Optional[np.random.Generator] = None) -> np.ndarray:
    return Model.SelectTopK(U, K, Rng)


def R2Score(YTrue: np.ndarray, YPred: np.ndarray) -> float:
    """1 - SS_res / SS_tot."""
    YTrue = np.asarray(YTrue, dtype=float).reshape(-1)
    YPred = np.asarray(YPred, dtype=float).reshape(-1)
    if YTrue.shape[0] == 0 or YTrue.shape != YPred.shape:
        raise InputShapeError(f"R2 needs equal non-empty lengths, got {YTrue.shape} and {YPred.shape}")
    Total = float(np.sum((YTrue - YTrue.mean()) ** 2))
    if Total == 0.0:
        raise UndefinedScoreError("R2 is undefined when the true values have zero variance")
    return 1.0 - float(np.sum((YTrue - YPred) ** 2)) / Total


def AccuracyScore(LabelsTrue: np.ndarray, LabelsPred: np.ndarray) -> float:
    LabelsTrue = np.asarray(LabelsTrue).reshape(-1)
    LabelsPred = np.asarray(LabelsPred).reshape(-1)
    if LabelsTrue.shape[0] == 0 or LabelsTrue.shape != LabelsPred.shape:
        raise InputShapeError("accuracy needs equal non-empty label vectors")
    return float(np.mean(LabelsTrue == LabelsPred))
