# File: conftest.py
# Path: conftest.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  07:00PM
# Description: Shared pytest fixtures; puts the repository root on sys.path

import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from KanSaea.Datasets import TrainingSet  # noqa: E402


@pytest.fixture
def Rng():
    return np.random.default_rng(12345)


@pytest.fixture
def SphereData():
    """40 points in [-1, 1]^2 with y = x1^2 + x2^2."""
    Generator = np.random.default_rng(7)
    Inputs = Generator.uniform(-1.0, 1.0, size=(40, 2))
    return TrainingSet(Inputs, np.sum(Inputs ** 2, axis=1))


@pytest.fixture
def Box():
    return np.full(3, -5.0), np.full(3, 5.0)
