# File: Lbfgs.py
# Path: KanSaea/Lbfgs.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  09:40AM
# Description: Limited-memory BFGS with strong-Wolfe steps for network training

"""
L-BFGS Minimizer

Two-loop recursion over the last `History` curvature pairs, with the
initial inverse Hessian scaled by s'y / y'y. Step lengths come from
scipy's strong-Wolfe line search. Used by every surrogate network.
"""

import logging
import warnings
from collections import deque
from dataclasses import dataclass
from typing import Callable, Deque, Optional, Tuple

import numpy as np
from scipy.optimize import line_search

from KanSaea.Errors import TrainingDivergedError

Logger = logging.getLogger(__name__)

Objective = Callable[[np.ndarray], Tuple[float, np.ndarray]]


@dataclass
class LbfgsResult:
    """Outcome of one minimization."""

    Parameters: np.ndarray
    Loss: float
    InitialLoss: float
    Iterations: int
    Evaluations: int


class _CachedObjective:
    """Memoizes the last (loss, gradient) pair.

    scipy's line search asks for loss and gradient through separate
    callables at the same point.
    """

    def __init__(self, Function: Objective):
        self.Function = Function
        self.LastPoint: Optional[np.ndarray] = None
        self.LastValue: Tuple[float, np.ndarray] = (np.inf, np.empty(0))
        self.Evaluations = 0

    def Evaluate(self, Point: np.ndarray) -> Tuple[float, np.ndarray]:
        if self.LastPoint is None or not np.array_equal(Point, self.LastPoint):
            Loss, Gradient = self.Function(Point)
            self.LastPoint = np.array(Point, copy=True)
            self.LastValue = (float(Loss), np.asarray(Gradient, dtype=float))
            self.Evaluations += 1
        return self.LastValue

    def Loss(self, Point: np.ndarray) -> float:
        return self.Evaluate(Point)[0]

    def Gradient(self, Point: np.ndarray) -> np.ndarray:
        return self.Evaluate(Point)[1]


def _TwoLoopDirection(Gradient: np.ndarray,
                      Pairs: Deque[Tuple[np.ndarray, np.ndarray, float]]) -> np.ndarray:
    Q = Gradient.copy()
    Alphas = []
    for S, Y, Rho in reversed(Pairs):
        Alpha = Rho * float(S @ Q)
        Q -= Alpha * Y
        Alphas.append(Alpha)

    SLast, YLast, _ = Pairs[-1]
    Gamma = float(SLast @ YLast) / float(YLast @ YLast)
    R = Gamma * Q

    for (S, Y, Rho), Alpha in zip(Pairs, reversed(Alphas)):
        Beta = Rho * float(Y @ R)
        R += S * (Alpha - Beta)
    return -R


def _SteepestDirection(Gradient: np.ndarray) -> np.ndarray:
    # first step is bounded to unit length in l1
    Scale = min(1.0, 1.0 / max(float(np.abs(Gradient).sum()), 1e-300))
    return -Gradient * Scale


def LbfgsMinimize(Function: Objective,
                  Start: np.ndarray,
                  MaxIter: int = 50,
                  History: int = 10,
                  C1: float = 1e-4,
                  C2: float = 0.9,
                  TolGrad: float = 1e-12,
                  TolChange: float = 1e-15) -> LbfgsResult:
    """Minimize `Function` from `Start`.

    Args:
        Function: Maps a flat parameter vector to (loss, gradient)
        Start: Initial parameters (not modified)
        MaxIter: Maximum number of accepted L-BFGS steps
        History: Number of curvature pairs kept
        C1: Sufficient-decrease constant of the Wolfe conditions
        C2: Curvature constant of the strong Wolfe conditions
        TolGrad: Stop when the largest gradient entry falls below this
        TolChange: Stop when the loss decrease is below this, relative to max(1, |loss|)

    Returns:
        LbfgsResult; its Loss never exceeds InitialLoss

    Raises:
        TrainingDivergedError: an accepted step produced a non-finite loss or
            gradient; carries the last finite parameters
    """
    Cached = _CachedObjective(Function)
    Point = np.array(Start, dtype=float, copy=True)
    Loss, Gradient = Cached.Evaluate(Point)
    if not (np.isfinite(Loss) and np.all(np.isfinite(Gradient))):
        raise TrainingDivergedError("initial loss is not finite", Parameters=Point.copy())

    InitialLoss = Loss
    Pairs: Deque[Tuple[np.ndarray, np.ndarray, float]] = deque(maxlen=History)
    PreviousLoss: Optional[float] = None
    Iterations = 0

    for _ in range(MaxIter):
        if float(np.max(np.abs(Gradient), initial=0.0)) <= TolGrad:
            break

        Direction = _TwoLoopDirection(Gradient, Pairs) if Pairs else _SteepestDirection(Gradient)
        if float(Gradient @ Direction) >= 0.0:
            Pairs.clear()
            Direction = _SteepestDirection(Gradient)

        with warnings.catch_warnings(), np.errstate(all="ignore"):
            warnings.simplefilter("ignore")
            Step = line_search(Cached.Loss, Cached.Gradient, Point, Direction,
                               gfk=Gradient, old_fval=Loss, old_old_fval=PreviousLoss,
                               c1=C1, c2=C2)
        Alpha = Step[0]
        if Alpha is None:
            Logger.debug("line search found no strong-Wolfe step after %d iterations", Iterations)
            break

        NewPoint = Point + Alpha * Direction
        NewLoss, NewGradient = Cached.Evaluate(NewPoint)
        if not (np.isfinite(NewLoss) and np.all(np.isfinite(NewGradient))):
            raise TrainingDivergedError(
                f"non-finite loss after {Iterations} iterations", Parameters=Point.copy())
        if NewLoss > Loss:
            break

        S = NewPoint - Point
        Y = NewGradient - Gradient
        Curvature = float(S @ Y)
        if Curvature > 1e-12 * float(Y @ Y):
            Pairs.append((S, Y, 1.0 / Curvature))

        PreviousLoss = Loss
        Point, Loss, Gradient = NewPoint, NewLoss, NewGradient
        Iterations += 1

        if abs(PreviousLoss - Loss) <= TolChange * max(1.0, abs(Loss)):
            break

    return LbfgsResult(Parameters=Point, Loss=float(Loss), InitialLoss=float(InitialLoss),
                       Iterations=Iterations, Evaluations=Cached.Evaluations)
