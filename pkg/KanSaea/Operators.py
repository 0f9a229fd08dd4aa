# File: Operators.py
# Path: KanSaea/Operators.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  02:10PM
# Description: CoDE trial generation, variable-width histogram EDA and bound repair

"""
Reproduction Operators

CoDE builds t trial vectors for one target from three DE strategies:

    rand/1/bin          v = x_r1 + F (x_r2 - x_r3)                   + crossover
    rand/2/bin          v = x_r1 + F (x_r2 - x_r3) + F (x_r4 - x_r5)   + crossover
    current-to-rand/1   u = x_i + K (x_r1 - x_i) + F (x_r2 - x_r3)     (K ~ U[0,1], no crossover)

each paired with an (F, CR) drawn from a fixed pool. The variable-width
histogram (VWH) model places fine bins over the region the population
occupies and two coarse, low-mass bins over the rest of the box.

All functions take a numpy Generator and have no other source of randomness.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from KanSaea.Errors import ConfigError, InputShapeError, OperatorArityError

RAND_1 = "rand/1/bin"
RAND_2 = "rand/2/bin"
CURRENT_TO_RAND_1 = "current-to-rand/1"

# donors needed by each strategy, all distinct from the target
DONOR_COUNT = {RAND_1: 3, RAND_2: 5, CURRENT_TO_RAND_1: 3}

END_BIN_FACTOR = 0.1

Bounds = Tuple[np.ndarray, np.ndarray]


@dataclass(frozen=True)
class CoDEConfig:
    Strategies: Tuple[str, ...] = (RAND_1, RAND_2, CURRENT_TO_RAND_1)
    ParamPool: Tuple[Tuple[float, float], ...] = ((1.0, 0.1), (1.0, 0.9), (0.8, 0.2))

    def __post_init__(self):
        if len(self.Strategies) != 3 or len(self.ParamPool) != 3:
            raise ConfigError("CoDE needs exactly 3 strategies and 3 (F, CR) pairs")
        Unknown = [Name for Name in self.Strategies if Name not in DONOR_COUNT]
        if Unknown:
            raise ConfigError(f"unknown CoDE strategies {Unknown}")

    @property
    def MinPopulation(self) -> int:
        return max(DONOR_COUNT[Name] for Name in self.Strategies) + 1


def _AsBounds(BoxBounds, Dimension: int) -> Bounds:
    Lower, Upper = BoxBounds
    Lower = np.broadcast_to(np.asarray(Lower, dtype=float), (Dimension,)).copy()
    Upper = np.broadcast_to(np.asarray(Upper, dtype=float), (Dimension,)).copy()
    if np.any(Lower >= Upper):
        raise ConfigError("every lower bound must be below its upper bound")
    return Lower, Upper


def MutateRand1(Base: np.ndarray, Diff1: np.ndarray, Diff2: np.ndarray, F: float) -> np.ndarray:
    return Base + F * (Diff1 - Diff2)


def MutateRand2(Base: np.ndarray, Diff1: np.ndarray, Diff2: np.ndarray,
                Diff3: np.ndarray, Diff4: np.ndarray, F: float) -> np.ndarray:
    return Base + F * (Diff1 - Diff2) + F * (Diff3 - Diff4)


def CurrentToRand1(Target: np.ndarray, Rand1: np.ndarray, Diff1: np.ndarray, Diff2: np.ndarray,
                   K: float, F: float) -> np.ndarray:
    return Target + K * (Rand1 - Target) + F * (Diff1 - Diff2)


def BinomialCrossover(Target: np.ndarray, Mutant: np.ndarray, CR: float,
                      Rng: np.random.Generator) -> np.ndarray:
    """Take each gene from the mutant with probability CR; gene j_rand always."""
    Draws = Rng.random(Target.shape[0])
    Draws[Rng.integers(Target.shape[0])] = 0.0
    return np.where(Draws <= CR, Mutant, Target)


def RepairBounds(X: np.ndarray, BoxBounds, Rng: np.random.Generator,
                 Parent: Optional[np.ndarray] = None) -> np.ndarray:
    """Resample violated coordinates; in-bounds coordinates are returned as is.

    With a parent, a coordinate below `low` is drawn from [low, (low + parent) / 2]
    (symmetrically above `high`); without one, from [low, high].
    """
    X = np.array(X, dtype=float)
    Lower, Upper = _AsBounds(BoxBounds, X.shape[0])
    TooLow = X < Lower
    TooHigh = X > Upper
    if not (TooLow.any() or TooHigh.any()):
        return X

    if Parent is None:
        Fresh = Rng.uniform(Lower, Upper)
        X[TooLow | TooHigh] = Fresh[TooLow | TooHigh]
        return X

    Parent = np.clip(np.asarray(Parent, dtype=float), Lower, Upper)
    LowEnd = (Lower + Parent) / 2.0
    HighEnd = (Upper + Parent) / 2.0
    FromBelow = Rng.uniform(Lower, LowEnd)
    FromAbove = Rng.uniform(HighEnd, Upper)
    X[TooLow] = FromBelow[TooLow]
    X[TooHigh] = FromAbove[TooHigh]
    return X


def _Donors(TargetIndex: int, PopSize: int, Count: int, Rng: np.random.Generator) -> np.ndarray:
    Pool = np.delete(np.arange(PopSize), TargetIndex)
    return Rng.choice(Pool, size=Count, replace=False)


def _Trial(Strategy: str, TargetIndex: int, Pop: np.ndarray, F: float, CR: float,
           Rng: np.random.Generator) -> np.ndarray:
    Target = Pop[TargetIndex]
    Donors = Pop[_Donors(TargetIndex, Pop.shape[0], DONOR_COUNT[Strategy], Rng)]
    if Strategy == RAND_1:
        return BinomialCrossover(Target, MutateRand1(Donors[0], Donors[1], Donors[2], F), CR, Rng)
    if Strategy == RAND_2:
        Mutant = MutateRand2(Donors[0], Donors[1], Donors[2], Donors[3], Donors[4], F)
        return BinomialCrossover(Target, Mutant, CR, Rng)
    return CurrentToRand1(Target, Donors[0], Donors[1], Donors[2], Rng.random(), F)


def CodeTrials(TargetIndex: int, Pop: np.ndarray, BoxBounds, T: int, Rng: np.random.Generator,
               Config: Optional[CoDEConfig] = None) -> np.ndarray:
    """T repaired trial vectors for Pop[TargetIndex].

    With T = 3 each strategy is used once, in order; otherwise strategies are
    drawn uniformly. (F, CR) is drawn uniformly from the pool per trial.

    Raises:
        OperatorArityError: Pop has fewer rows than rand/2 needs (target + 5 donors)
    """
    Config = Config or CoDEConfig()
    Pop = np.atleast_2d(np.asarray(Pop, dtype=float))
    if Pop.shape[0] < Config.MinPopulation:
        raise OperatorArityError(
            f"CoDE needs at least {Config.MinPopulation} solutions, got {Pop.shape[0]}")
    if T < 1:
        raise ConfigError(f"trial count must be at least 1, got {T}")
    if not 0 <= TargetIndex < Pop.shape[0]:
        raise InputShapeError(f"target index {TargetIndex} outside population of {Pop.shape[0]}")

    Box = _AsBounds(BoxBounds, Pop.shape[1])
    Trials = np.empty((T, Pop.shape[1]))
    for Index in range(T):
        if T == len(Config.Strategies):
            Strategy = Config.Strategies[Index]
        else:
            Strategy = Config.Strategies[Rng.integers(len(Config.Strategies))]
        F, CR = Config.ParamPool[Rng.integers(len(Config.ParamPool))]
        Trial = _Trial(Strategy, TargetIndex, Pop, F, CR, Rng)
        Trials[Index] = RepairBounds(Trial, Box, Rng, Parent=Pop[TargetIndex])
    return Trials


@dataclass
class VwhModel:
    """Per-dimension histogram: ascending edges from low to high and bin masses.

    End bins of zero width are left out, so dimensions may hold M - 2, M - 1
    or M bins.
    """

    Edges: List[np.ndarray] = field(default_factory=list)
    Probabilities: List[np.ndarray] = field(default_factory=list)

    def __post_init__(self):
        if len(self.Edges) != len(self.Probabilities) or not self.Edges:
            raise InputShapeError("VWH model needs one edge and one probability vector per dimension")
        for Edges, Mass in zip(self.Edges, self.Probabilities):
            if Edges.shape[0] != Mass.shape[0] + 1:
                raise InputShapeError("VWH edges must outnumber bins by one")
            if np.any(np.diff(Edges) <= 0.0):
                raise InputShapeError("VWH edges must be strictly ascending")
            if np.any(Mass < 0.0) or abs(Mass.sum() - 1.0) > 1e-12:
                raise InputShapeError("VWH bin probabilities must be non-negative and sum to 1")

    @property
    def Dimension(self) -> int:
        return len(self.Edges)


def _InteriorWindow(Column: np.ndarray, Low: float, High: float, Bins: int) -> Tuple[float, float]:
    Least, Most = float(Column.min()), float(Column.max())
    Spread = Most - Least
    if Spread <= 1e-12 * max(1.0, High - Low):
        HalfWindow = (High - Low) / (Bins + 2) / 4.0
        Start, Stop = Least - HalfWindow, Least + HalfWindow
    else:
        HalfCell = Spread / Bins / 2.0
        Start, Stop = Least - HalfCell, Most + HalfCell
    return max(Start, Low), min(Stop, High)


def _DimensionHistogram(Column: np.ndarray, Low: float, High: float,
                        Interior: int) -> Tuple[np.ndarray, np.ndarray]:
    Start, Stop = _InteriorWindow(Column, Low, High, Interior)
    InteriorEdges = np.linspace(Start, Stop, Interior + 1)
    Counts, _ = np.histogram(np.clip(Column, Start, Stop), bins=InteriorEdges)
    Weights = Counts.astype(float) + 1.0
    EndWeight = END_BIN_FACTOR * Weights.sum() / Interior

    Edges = list(InteriorEdges)
    Masses = list(Weights)
    if Start > Low:
        Edges = [Low] + Edges
        Masses = [EndWeight] + Masses
    if Stop < High:
        Edges = Edges + [High]
        Masses = Masses + [EndWeight]
    Masses = np.asarray(Masses)
    return np.asarray(Edges), Masses / Masses.sum()


def VwhBuild(Pop: np.ndarray, BoxBounds, M: int = 10) -> VwhModel:
    """Histogram model of Pop with M - 2 interior bins per dimension."""
    Pop = np.atleast_2d(np.asarray(Pop, dtype=float))
    if Pop.shape[0] == 0:
        raise InputShapeError("cannot build a histogram from an empty population")
    if M < 3:
        raise ConfigError(f"VWH needs at least 3 bins, got {M}")
    Lower, Upper = _AsBounds(BoxBounds, Pop.shape[1])
    Clipped = np.clip(Pop, Lower, Upper)

    Edges, Probabilities = [], []
    for Dim in range(Pop.shape[1]):
        DimEdges, DimMass = _DimensionHistogram(Clipped[:, Dim], Lower[Dim], Upper[Dim], M - 2)
        Edges.append(DimEdges)
        Probabilities.append(DimMass)
    return VwhModel(Edges, Probabilities)


def VwhSample(Model: VwhModel, Count: int, Rng: np.random.Generator) -> np.ndarray:
    """Count x n samples; per dimension pick a bin by mass, then uniform inside it."""
    if Count < 1:
        raise ConfigError(f"sample count must be at least 1, got {Count}")
    Samples = np.empty((Count, Model.Dimension))
    for Dim, (Edges, Mass) in enumerate(zip(Model.Edges, Model.Probabilities)):
        Chosen = Rng.choice(Mass.shape[0], size=Count, p=Mass)
        Samples[:, Dim] = Rng.uniform(Edges[Chosen], Edges[Chosen + 1])
    return Samples
