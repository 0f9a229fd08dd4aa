# File: Mlp.py
# Path: KanSaea/Mlp.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  11:25AM
# Description: One-hidden-layer tanh perceptron used as the baseline surrogate

"""
MLP Baseline

Same shape as the default KAN (n -> 2n+1 -> 1 or 2) and the same flat
parameter and loss contract, so KanCore.Fit trains both.
"""

from typing import List, Tuple

import numpy as np

from KanSaea.Errors import ConfigError, InputShapeError
from KanSaea.KanCore import Head, NetworkBase


class MlpNetwork(NetworkBase):
    """n -> hidden (tanh) -> head."""

    def __init__(self, InputDim: int, HiddenDim: int, NetworkHead: Head = Head.REGRESSION, Seed: int = 0):
        if InputDim < 1 or HiddenDim < 1:
            raise ConfigError(f"invalid MLP shape {InputDim} -> {HiddenDim}")
        self.Head = NetworkHead
        self._InputDim = int(InputDim)
        self.HiddenDim = int(HiddenDim)
        OutputDim = NetworkHead.Width

        Rng = np.random.default_rng(Seed)
        HiddenLimit = np.sqrt(6.0 / (InputDim + HiddenDim))
        OutputLimit = np.sqrt(6.0 / (HiddenDim + OutputDim))
        self.W1 = Rng.uniform(-HiddenLimit, HiddenLimit, size=(HiddenDim, InputDim))
        self.B1 = np.zeros(HiddenDim)
        self.W2 = Rng.uniform(-OutputLimit, OutputLimit, size=(OutputDim, HiddenDim))
        self.B2 = np.zeros(OutputDim)

    @classmethod
    def Default(cls, InputDim: int, NetworkHead: Head = Head.REGRESSION, Seed: int = 0) -> "MlpNetwork":
        return cls(InputDim, 2 * InputDim + 1, NetworkHead, Seed)

    @property
    def InputDim(self) -> int:
        return self._InputDim

    @property
    def ParameterCount(self) -> int:
        return self.W1.size + self.B1.size + self.W2.size + self.B2.size

    def GetParameters(self) -> np.ndarray:
        return np.concatenate([self.W1.ravel(), self.B1, self.W2.ravel(), self.B2])

    def SetParameters(self, Flat: np.ndarray) -> None:
        Flat = np.asarray(Flat, dtype=float).reshape(-1)
        if Flat.shape[0] != self.ParameterCount:
            raise InputShapeError(f"expected {self.ParameterCount} parameters, got {Flat.shape[0]}")
        Offset = 0
        Pieces = []
        for Current in (self.W1, self.B1, self.W2, self.B2):
            Pieces.append(Flat[Offset:Offset + Current.size].reshape(Current.shape).copy())
            Offset += Current.size
        self.W1, self.B1, self.W2, self.B2 = Pieces

    def ForwardRaw(self, Inputs: np.ndarray) -> Tuple[np.ndarray, List[np.ndarray]]:
        Hidden = np.tanh(Inputs @ self.W1.T + self.B1)
        return Hidden @ self.W2.T + self.B2, [Inputs, Hidden]

    def BackwardRaw(self, Caches: List[np.ndarray], OutputGrad: np.ndarray) -> np.ndarray:
        Inputs, Hidden = Caches
        W2Grad = OutputGrad.T @ Hidden
        B2Grad = OutputGrad.sum(axis=0)
        HiddenGrad = (OutputGrad @ self.W2) * (1.0 - Hidden ** 2)
        W1Grad = HiddenGrad.T @ Inputs
        B1Grad = HiddenGrad.sum(axis=0)
        return np.concatenate([W1Grad.ravel(), B1Grad, W2Grad.ravel(), B2Grad])
