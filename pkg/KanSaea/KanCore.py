# File: KanCore.py
# Path: KanSaea/KanCore.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  11:20PM
# Description: Kolmogorov-Arnold network with B-spline edge functions, trained by L-BFGS

"""
KAN Core

A Kolmogorov-Arnold network carries one learnable univariate function on
every edge instead of a scalar weight. Each edge function is

    phi(x) = w_b * silu(x) + w_s * sum_i c_i B_i(x)

with B_i the degree-k B-spline basis on a uniform grid of G cells extended
by k knots on each side. Node j of a layer sums phi_ij(x_i) over inputs i.

Networks expose a flat parameter view, an exact analytic gradient for the
mean-squared-error (regression head) or softmax cross-entropy (two-class
head) loss, and an L-BFGS `Fit`.
"""

import copy
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np
import yaml
from scipy.special import expit, logsumexp, softmax

from KanSaea.Datasets import TrainingSet
from KanSaea.Errors import (ConfigError, EmptyTrainingSetError, InputShapeError,
                            TrainingDivergedError)
from KanSaea.Lbfgs import LbfgsMinimize

Logger = logging.getLogger(__name__)

DEFAULT_INTERVALS = 5
DEFAULT_ORDER = 3
DEFAULT_GRID_UPDATES = 4
GRID_SMOOTHING = 1e-4


class Head(Enum):
    """Output head of a surrogate network."""

    REGRESSION = "regression-scalar"
    CLASSIFICATION = "classification-softmax-2"

    @property
    def Width(self) -> int:
        return 1 if self is Head.REGRESSION else 2


@dataclass(frozen=True)
class SplineGrid:
    """Uniform B-spline grid on [Lower, Upper] with G cells and degree k."""

    Lower: float
    Upper: float
    Intervals: int = DEFAULT_INTERVALS
    Order: int = DEFAULT_ORDER

    def __post_init__(self):
        if not (np.isfinite(self.Lower) and np.isfinite(self.Upper)) or self.Lower >= self.Upper:
            raise ConfigError(f"grid needs finite lower < upper, got [{self.Lower}, {self.Upper}]")
        if self.Intervals < 1:
            raise ConfigError(f"grid needs at least one interval, got {self.Intervals}")
        if self.Order < 0:
            raise ConfigError(f"spline order must be non-negative, got {self.Order}")

    @property
    def Step(self) -> float:
        return (self.Upper - self.Lower) / self.Intervals

    @property
    def BasisCount(self) -> int:
        return self.Intervals + self.Order

    @property
    def Knots(self) -> np.ndarray:
        """G + 2k + 1 knots; the interior ones hit Lower and Upper exactly."""
        Interior = np.linspace(self.Lower, self.Upper, self.Intervals + 1)
        Offsets = self.Step * np.arange(1, self.Order + 1, dtype=float)
        return np.concatenate([self.Lower - Offsets[::-1], Interior, self.Upper + Offsets])


@dataclass
class EdgeFunction:
    """One learnable univariate function phi_ij."""

    Grid: SplineGrid
    Coeffs: np.ndarray
    BaseWeight: float
    SplineWeight: float

    def __post_init__(self):
        self.Coeffs = np.asarray(self.Coeffs, dtype=float).reshape(-1)
        if self.Coeffs.shape[0] != self.Grid.BasisCount:
            raise InputShapeError(
                f"edge needs {self.Grid.BasisCount} coefficients, got {self.Coeffs.shape[0]}")
        if not (np.all(np.isfinite(self.Coeffs)) and np.isfinite(self.BaseWeight)
                and np.isfinite(self.SplineWeight)):
            raise InputShapeError("edge parameters must be finite")


def _BasisTables(Inputs: np.ndarray, Knots: np.ndarray, Order: int,
                 Uppers: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Cox-de Boor recursion for a batch.

    Args:
        Inputs: (S, I) points
        Knots: (I, G + 2k + 1) knot vectors, one per input
        Order: spline degree k
        Uppers: (I,) upper grid edges

    Returns:
        (basis, derivative), both (S, I, G + k)
    """
    X = Inputs[:, :, None]
    Basis = ((X >= Knots[None, :, :-1]) & (X < Knots[None, :, 1:])).astype(float)

    # x == upper belongs to the last interior cell, not the first extension cell
    AtUpper = Inputs == Uppers[None, :]
    if np.any(AtUpper):
        LastCell = Knots.shape[1] - Order - 2
        Basis[AtUpper, LastCell] = 1.0
        if LastCell + 1 < Basis.shape[2]:
            Basis[AtUpper, LastCell + 1] = 0.0

    Previous = Basis
    for d in range(1, Order + 1):
        Previous = Basis
        Left = (X - Knots[None, :, :-(d + 1)]) / (Knots[None, :, d:-1] - Knots[None, :, :-(d + 1)])
        Right = (Knots[None, :, d + 1:] - X) / (Knots[None, :, d + 1:] - Knots[None, :, 1:-d])
        Basis = Left * Basis[:, :, :-1] + Right * Basis[:, :, 1:]

    if Order == 0:
        return Basis, np.zeros_like(Basis)

    LeftSpan = Knots[None, :, Order:-1] - Knots[None, :, :-(Order + 1)]
    RightSpan = Knots[None, :, Order + 1:] - Knots[None, :, 1:-Order]
    Derivative = Order * (Previous[:, :, :-1] / LeftSpan - Previous[:, :, 1:] / RightSpan)
    return Basis, Derivative


def BsplineBasis(x: float, Grid: SplineGrid) -> np.ndarray:
    """All G + k basis values B_{i,k}(x). Points outside the grid use the extended knots."""
    Basis, _ = _BasisTables(np.array([[float(x)]]), Grid.Knots[None, :], Grid.Order,
                            np.array([Grid.Upper]))
    return Basis[0, 0]


def BsplineBasisDerivative(x: float, Grid: SplineGrid) -> np.ndarray:
    _, Derivative = _BasisTables(np.array([[float(x)]]), Grid.Knots[None, :], Grid.Order,
                                 np.array([Grid.Upper]))
    return Derivative[0, 0]


def Silu(X):
    return X * expit(X)


def SiluDerivative(X):
    Sigmoid = expit(X)
    return Sigmoid * (1.0 + X * (1.0 - Sigmoid))


def EdgeEval(Edge: EdgeFunction, x: float) -> float:
    """w_b * silu(x) + w_s * <coeffs, basis(x)>."""
    return float(Edge.BaseWeight * Silu(float(x))
                 + Edge.SplineWeight * float(Edge.Coeffs @ BsplineBasis(x, Edge.Grid)))


def GridFromSamples(Inputs: np.ndarray, Intervals: int = DEFAULT_INTERVALS,
                    Order: int = DEFAULT_ORDER) -> List[SplineGrid]:
    """One grid per column: [min, max] widened by 10% of the range on each side.

    A constant column gets [value - 0.5, value + 0.5].
    """
    Inputs = np.atleast_2d(np.asarray(Inputs, dtype=float))
    if Inputs.shape[0] < 2:
        raise InputShapeError(f"need at least 2 samples to place a grid, got {Inputs.shape[0]}")

    Grids = []
    for Column in Inputs.T:
        Low, High = float(Column.min()), float(Column.max())
        if High == Low:
            Grids.append(SplineGrid(Low - 0.5, High + 0.5, Intervals, Order))
        else:
            Margin = 0.1 * (High - Low)
            Grids.append(SplineGrid(Low - Margin, High + Margin, Intervals, Order))
    return Grids


class KanLayer:
    """Matrix of in_dim x out_dim edge functions sharing one grid per input."""

    def __init__(self, Grids: Sequence[SplineGrid], OutputDim: int,
                 Coeffs: np.ndarray, BaseWeight: np.ndarray, SplineWeight: np.ndarray):
        if not Grids:
            raise InputShapeError("a layer needs at least one input")
        Shapes = {(Grid.Intervals, Grid.Order) for Grid in Grids}
        if len(Shapes) != 1:
            raise ConfigError("all grids of a layer must share intervals and order")

        self.Grids = list(Grids)
        self.InputDim = len(self.Grids)
        self.OutputDim = int(OutputDim)
        self.Intervals, self.Order = Shapes.pop()
        self.BasisCount = self.Intervals + self.Order
        self.Knots = np.stack([Grid.Knots for Grid in self.Grids])
        self.Uppers = np.array([Grid.Upper for Grid in self.Grids])

        self.Coeffs = np.asarray(Coeffs, dtype=float).reshape(self.InputDim, self.OutputDim, self.BasisCount)
        self.BaseWeight = np.asarray(BaseWeight, dtype=float).reshape(self.InputDim, self.OutputDim)
        self.SplineWeight = np.asarray(SplineWeight, dtype=float).reshape(self.InputDim, self.OutputDim)

    @classmethod
    def Initialize(cls, Grids: Sequence[SplineGrid], OutputDim: int,
                   Rng: np.random.Generator) -> "KanLayer":
        """Coefficients ~ N(0, 0.1), w_s = 1, w_b Xavier-uniform."""
        InputDim = len(Grids)
        BasisCount = Grids[0].BasisCount
        Limit = np.sqrt(6.0 / (InputDim + OutputDim))
        Coeffs = Rng.normal(0.0, 0.1, size=(InputDim, OutputDim, BasisCount))
        BaseWeight = Rng.uniform(-Limit, Limit, size=(InputDim, OutputDim))
        SplineWeight = np.ones((InputDim, OutputDim))
        return cls(Grids, OutputDim, Coeffs, BaseWeight, SplineWeight)

    @property
    def ParameterCount(self) -> int:
        return self.Coeffs.size + self.BaseWeight.size + self.SplineWeight.size

    def GetParameters(self) -> np.ndarray:
        return np.concatenate([self.Coeffs.ravel(), self.BaseWeight.ravel(), self.SplineWeight.ravel()])

    def SetParameters(self, Flat: np.ndarray) -> None:
        Flat = np.asarray(Flat, dtype=float)
        CoeffEnd = self.Coeffs.size
        BaseEnd = CoeffEnd + self.BaseWeight.size
        self.Coeffs = Flat[:CoeffEnd].reshape(self.Coeffs.shape).copy()
        self.BaseWeight = Flat[CoeffEnd:BaseEnd].reshape(self.BaseWeight.shape).copy()
        self.SplineWeight = Flat[BaseEnd:BaseEnd + self.SplineWeight.size].reshape(self.SplineWeight.shape).copy()

    def Edge(self, i: int, j: int) -> EdgeFunction:
        return EdgeFunction(self.Grids[i], self.Coeffs[i, j].copy(),
                            float(self.BaseWeight[i, j]), float(self.SplineWeight[i, j]))

    def UpdateGrid(self, Inputs: np.ndarray, Smoothing: float = GRID_SMOOTHING) -> None:
        """Re-place each input grid on the span of `Inputs` (same G and k) and refit
        the coefficients so every spline keeps its values at those points.

        The refit is least squares with a small second-difference penalty, so
        basis functions no sample reaches continue the fitted curve smoothly.
        """
        Inputs = np.atleast_2d(np.asarray(Inputs, dtype=float))
        Basis, _ = _BasisTables(Inputs, self.Knots, self.Order, self.Uppers)
        Spline = np.einsum("sim,ijm->sij", Basis, self.Coeffs)

        Grids = GridFromSamples(Inputs, self.Intervals, self.Order)
        Knots = np.stack([Grid.Knots for Grid in Grids])
        Uppers = np.array([Grid.Upper for Grid in Grids])
        NewBasis, _ = _BasisTables(Inputs, Knots, self.Order, Uppers)

        Penalty = np.sqrt(Smoothing) * np.diff(np.eye(self.BasisCount), n=2, axis=0)
        Zeros = np.zeros((Penalty.shape[0], self.OutputDim))
        Coeffs = np.empty_like(self.Coeffs)
        for i in range(self.InputDim):
            Design = np.vstack([NewBasis[:, i, :], Penalty])
            Targets = np.vstack([Spline[:, i, :], Zeros])
            Coeffs[i] = np.linalg.lstsq(Design, Targets, rcond=None)[0].T

        self.Grids = list(Grids)
        self.Knots = Knots
        self.Uppers = Uppers
        self.Coeffs = Coeffs

    def Forward(self, Inputs: np.ndarray) -> Tuple[np.ndarray, tuple]:
        Basis, Derivative = _BasisTables(Inputs, self.Knots, self.Order, self.Uppers)
        Spline = np.einsum("sim,ijm->sij", Basis, self.Coeffs)
        Activated = Silu(Inputs)
        Edges = Activated[:, :, None] * self.BaseWeight[None, :, :] + self.SplineWeight[None, :, :] * Spline

        # summation over inputs in ascending i
        Outputs = Edges[:, 0, :].copy()
        for i in range(1, self.InputDim):
            Outputs += Edges[:, i, :]
        return Outputs, (Inputs, Activated, Basis, Derivative, Spline)

    def Backward(self, Cache: tuple, OutputGrad: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Returns (gradient w.r.t. inputs, flat gradient w.r.t. this layer's parameters)."""
        Inputs, Activated, Basis, Derivative, Spline = Cache
        CoeffGrad = np.einsum("sj,sim->ijm", OutputGrad, Basis) * self.SplineWeight[:, :, None]
        BaseGrad = np.einsum("sj,si->ij", OutputGrad, Activated)
        SplineWeightGrad = np.einsum("sj,sij->ij", OutputGrad, Spline)

        SplineSlope = np.einsum("sim,ijm->sij", Derivative, self.Coeffs) * self.SplineWeight[None, :, :]
        InputGrad = (SiluDerivative(Inputs) * (OutputGrad @ self.BaseWeight.T)
                     + np.einsum("sj,sij->si", OutputGrad, SplineSlope))
        return InputGrad, np.concatenate([CoeffGrad.ravel(), BaseGrad.ravel(), SplineWeightGrad.ravel()])


class NetworkBase(ABC):
    """Flat-parameter network with a regression or two-class softmax head.

    Subclasses provide the raw forward pass (outputs before softmax) and its
    backward pass; the head loss and its gradient live here.
    """

    Head: Head

    @property
    @abstractmethod
    def InputDim(self) -> int: ...

    @property
    @abstractmethod
    def ParameterCount(self) -> int: ...

    @abstractmethod
    def GetParameters(self) -> np.ndarray: ...

    @abstractmethod
    def SetParameters(self, Flat: np.ndarray) -> None: ...

    @abstractmethod
    def ForwardRaw(self, Inputs: np.ndarray) -> Tuple[np.ndarray, list]: ...

    @abstractmethod
    def BackwardRaw(self, Caches: list, OutputGrad: np.ndarray) -> np.ndarray: ...

    def _CheckInputs(self, Inputs) -> np.ndarray:
        Inputs = np.atleast_2d(np.asarray(Inputs, dtype=float))
        if Inputs.shape[1] != self.InputDim:
            raise InputShapeError(f"network expects {self.InputDim} inputs, got {Inputs.shape[1]}")
        return Inputs

    def Predict(self, Inputs: np.ndarray) -> np.ndarray:
        """Regression: (S,) values. Classification: (S, 2) softmax probabilities."""
        Outputs, _ = self.ForwardRaw(self._CheckInputs(Inputs))
        if self.Head is Head.REGRESSION:
            return Outputs[:, 0]
        return softmax(Outputs, axis=1)

    def LossAndGradient(self, Inputs: np.ndarray, Targets: np.ndarray) -> Tuple[float, np.ndarray]:
        Inputs = self._CheckInputs(Inputs)
        Targets = np.asarray(Targets, dtype=float).reshape(-1)
        Count = Inputs.shape[0]
        if Count == 0:
            raise EmptyTrainingSetError("cannot compute a loss on an empty training set")
        if Targets.shape[0] != Count:
            raise InputShapeError(f"{Count} inputs but {Targets.shape[0]} targets")

        Outputs, Caches = self.ForwardRaw(Inputs)
        if self.Head is Head.REGRESSION:
            Residual = Outputs[:, 0] - Targets
            Loss = float(np.mean(Residual ** 2))
            OutputGrad = (2.0 / Count) * Residual[:, None]
        else:
            if not np.all((Targets == 0.0) | (Targets == 1.0)):
                raise InputShapeError("classification targets must be labels in {0, 1}")
            Labels = Targets.astype(int)
            Picked = Outputs[np.arange(Count), Labels]
            Loss = float(np.mean(logsumexp(Outputs, axis=1) - Picked))
            OutputGrad = softmax(Outputs, axis=1)
            OutputGrad[np.arange(Count), Labels] -= 1.0
            OutputGrad /= Count
        return Loss, self.BackwardRaw(Caches, OutputGrad)


class KanNetwork(NetworkBase):
    """Layered composition of KanLayer blocks."""

    def __init__(self, Layers: Sequence[KanLayer], NetworkHead: Head):
        if not Layers:
            raise ConfigError("a network needs at least one layer")
        for Previous, Next in zip(Layers, Layers[1:]):
            if Previous.OutputDim != Next.InputDim:
                raise ConfigError(
                    f"layer widths disagree: {Previous.OutputDim} outputs feed {Next.InputDim} inputs")
        if Layers[-1].OutputDim != NetworkHead.Width:
            raise ConfigError(f"{NetworkHead.value} head needs {NetworkHead.Width} outputs")
        self.Layers = list(Layers)
        self.Head = NetworkHead

    @classmethod
    def Create(cls, Widths: Sequence[int], NetworkHead: Head = Head.REGRESSION,
               Grids: Optional[Sequence[Optional[Sequence[SplineGrid]]]] = None,
               Intervals: int = DEFAULT_INTERVALS, Order: int = DEFAULT_ORDER,
               Seed: int = 0) -> "KanNetwork":
        """Build and initialize a network.

        Args:
            Widths: Layer widths, e.g. [n, 2n+1, 1]
            NetworkHead: Output head; the last width must match it
            Grids: Optional per-layer list of per-input grids; None entries default to [-1, 1]
            Intervals: Grid cells G
            Order: Spline degree k
            Seed: Initialization seed
        """
        if len(Widths) < 2 or any(Width < 1 for Width in Widths):
            raise ConfigError(f"invalid layer widths {list(Widths)}")
        Rng = np.random.default_rng(Seed)
        Layers = []
        for Index, (InputDim, OutputDim) in enumerate(zip(Widths, Widths[1:])):
            LayerGrids = Grids[Index] if Grids is not None and Index < len(Grids) else None
            if LayerGrids is None:
                LayerGrids = [SplineGrid(-1.0, 1.0, Intervals, Order)] * InputDim
            if len(LayerGrids) != InputDim:
                raise InputShapeError(f"layer {Index} needs {InputDim} grids, got {len(LayerGrids)}")
            Layers.append(KanLayer.Initialize(LayerGrids, OutputDim, Rng))
        return cls(Layers, NetworkHead)

    @classmethod
    def Default(cls, InputDim: int, NetworkHead: Head = Head.REGRESSION, **Options) -> "KanNetwork":
        """[n, 2n+1, 1] or [n, 2n+1, 2]."""
        return cls.Create([InputDim, 2 * InputDim + 1, NetworkHead.Width], NetworkHead, **Options)

    @property
    def InputDim(self) -> int:
        return self.Layers[0].InputDim

    @property
    def Widths(self) -> List[int]:
        return [self.Layers[0].InputDim] + [Layer.OutputDim for Layer in self.Layers]

    @property
    def ParameterCount(self) -> int:
        return sum(Layer.ParameterCount for Layer in self.Layers)

    def GetParameters(self) -> np.ndarray:
        return np.concatenate([Layer.GetParameters() for Layer in self.Layers])

    def SetParameters(self, Flat: np.ndarray) -> None:
        Flat = np.asarray(Flat, dtype=float).reshape(-1)
        if Flat.shape[0] != self.ParameterCount:
            raise InputShapeError(f"expected {self.ParameterCount} parameters, got {Flat.shape[0]}")
        Offset = 0
        for Layer in self.Layers:
            Layer.SetParameters(Flat[Offset:Offset + Layer.ParameterCount])
            Offset += Layer.ParameterCount

    def ForwardRaw(self, Inputs: np.ndarray) -> Tuple[np.ndarray, list]:
        Caches = []
        Values = Inputs
        for Layer in self.Layers:
            Values, Cache = Layer.Forward(Values)
            Caches.append(Cache)
        return Values, Caches

    def BackwardRaw(self, Caches: list, OutputGrad: np.ndarray) -> np.ndarray:
        Pieces = []
        Grad = OutputGrad
        for Layer, Cache in zip(reversed(self.Layers), reversed(Caches)):
            Grad, LayerGrad = Layer.Backward(Cache, Grad)
            Pieces.append(LayerGrad)
        return np.concatenate(Pieces[::-1])

    def HiddenActivations(self, Inputs: np.ndarray, Depth: int = 1) -> np.ndarray:
        """Outputs of the first `Depth` layers."""
        Values = self._CheckInputs(Inputs)
        for Layer in self.Layers[:Depth]:
            Values, _ = Layer.Forward(Values)
        return Values

    def UpdateHiddenGrids(self, Inputs: np.ndarray) -> None:
        """Move the grids of every layer after the first onto the activations
        that reach it for `Inputs`. The first layer's grids stay where they are."""
        Values = self._CheckInputs(Inputs)
        if Values.shape[0] < 2:
            return
        Values, _ = self.Layers[0].Forward(Values)
        for Layer in self.Layers[1:]:
            Layer.UpdateGrid(Values)
            Values, _ = Layer.Forward(Values)


@dataclass(frozen=True)
class FitReport:
    FinalLoss: float
    InitialLoss: float
    Iterations: int


def NetworkForward(Net: NetworkBase, x) -> np.ndarray:
    """Evaluate one input vector: length-1 value or the two class probabilities."""
    Vector = np.asarray(x, dtype=float)
    if Vector.ndim != 1 or Vector.shape[0] != Net.InputDim:
        raise InputShapeError(f"network expects a vector of length {Net.InputDim}, got shape {Vector.shape}")
    Result = Net.Predict(Vector[None, :])
    return np.atleast_1d(Result[0])


def LossAndGradient(Net: NetworkBase, Data: TrainingSet) -> Tuple[float, np.ndarray]:
    if Data.Size == 0:
        raise EmptyTrainingSetError("cannot compute a loss on an empty training set")
    return Net.LossAndGradient(Data.Inputs, Data.Targets)


def _RoundBudgets(Steps: int, GridUpdates: int) -> List[int]:
    """Split Steps into GridUpdates + 1 nearly equal rounds of at least one iteration."""
    Rounds = min(GridUpdates, Steps - 1) + 1
    Marks = np.round(np.linspace(0, Steps, Rounds + 1)).astype(int)
    return [int(Budget) for Budget in np.diff(Marks) if Budget > 0]


def Fit(Net: NetworkBase, Data: TrainingSet, Steps: int = 50, History: int = 10,
        C1: float = 1e-4, C2: float = 0.9, GridUpdates: int = 0) -> FitReport:
    """Train `Net` in place with at most `Steps` L-BFGS iterations.

    With GridUpdates > 0 a multi-layer KanNetwork is trained in
    GridUpdates + 1 rounds; before each round after the first, the hidden
    layers' grids move onto the current hidden activations
    (KanNetwork.UpdateHiddenGrids). The network ends in the state with the
    lowest loss seen, so the final loss never exceeds the initial one.

    On divergence the network keeps the last finite parameters and the
    TrainingDivergedError is re-raised.
    """
    if Steps < 1:
        raise ConfigError(f"steps must be at least 1, got {Steps}")
    if GridUpdates < 0:
        raise ConfigError(f"grid updates must be non-negative, got {GridUpdates}")
    if Data.Size == 0:
        raise EmptyTrainingSetError("cannot fit on an empty training set")

    def Objective(Flat: np.ndarray) -> Tuple[float, np.ndarray]:
        Net.SetParameters(Flat)
        return Net.LossAndGradient(Data.Inputs, Data.Targets)

    Updating = isinstance(Net, KanNetwork) and len(Net.Layers) > 1 and Data.Size >= 2
    Budgets = _RoundBudgets(Steps, GridUpdates if Updating else 0)

    InitialLoss: Optional[float] = None
    BestLoss = np.inf
    BestLayers = None
    Iterations = 0
    for Round, Budget in enumerate(Budgets):
        if Round:
            Net.UpdateHiddenGrids(Data.Inputs)
        Start = Net.GetParameters()
        try:
            Result = LbfgsMinimize(Objective, Start, MaxIter=Budget, History=History, C1=C1, C2=C2)
        except TrainingDivergedError as Ex:
            Net.SetParameters(Ex.Parameters if Ex.Parameters is not None else Start)
            raise

        Net.SetParameters(Result.Parameters)
        Iterations += Result.Iterations
        if InitialLoss is None:
            InitialLoss = Result.InitialLoss
        if Result.Loss <= BestLoss:
            BestLoss = Result.Loss
            BestLayers = copy.deepcopy(Net.Layers) if len(Budgets) > 1 else None

    if BestLayers is not None:
        Net.Layers = BestLayers
    Logger.debug("fit: loss %.3e -> %.3e in %d iterations over %d rounds",
                 InitialLoss, BestLoss, Iterations, len(Budgets))
    return FitReport(FinalLoss=float(BestLoss), InitialLoss=float(InitialLoss), Iterations=Iterations)


def DumpNetwork(Net: KanNetwork) -> str:
    """YAML debug dump: layer shapes, grids and coefficient arrays."""
    Document = {
        "head": Net.Head.value,
        "widths": Net.Widths,
        "layers": [
            {
                "in_dim": Layer.InputDim,
                "out_dim": Layer.OutputDim,
                "grids": [{"lower": Grid.Lower, "upper": Grid.Upper,
                           "intervals": Grid.Intervals, "order": Grid.Order} for Grid in Layer.Grids],
                "coeffs": Layer.Coeffs.tolist(),
                "base_weight": Layer.BaseWeight.tolist(),
                "spline_weight": Layer.SplineWeight.tolist(),
            }
            for Layer in Net.Layers
        ],
    }
    return yaml.safe_dump(Document, sort_keys=False, default_flow_style=None)
