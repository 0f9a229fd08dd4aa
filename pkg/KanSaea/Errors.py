# File: Errors.py
# Path: KanSaea/Errors.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  09:05AM
# Description: Exception hierarchy shared by every KanSaea module

"""
KanSaea Errors

Every failure a caller can act on is one class below, rooted at
KanSaeaError so the command line can report any of them uniformly.
"""

from typing import Any, Optional

import numpy as np


class KanSaeaError(Exception):
    """Base class for all KanSaea errors."""


class ConfigError(KanSaeaError, ValueError):
    """Invalid configuration value or document."""


class InputShapeError(KanSaeaError, ValueError):
    """Input vector or matrix does not match the expected dimension."""


class EmptyTrainingSetError(KanSaeaError, ValueError):
    """A training set with no rows was supplied."""


class TrainingDivergedError(KanSaeaError):
    """Training produced a non-finite loss.

    Attributes:
        Parameters: Last flat parameter vector with a finite loss
        Model: Last usable model (set by the surrogate layer), if any
    """

    def __init__(self, Message: str, Parameters: Optional[np.ndarray] = None,
                 Model: Any = None):
        super().__init__(Message)
        self.Parameters = Parameters
        self.Model = Model


class NotFittedError(KanSaeaError):
    """Prediction requested from a surrogate that has not been fitted."""


class UndefinedScoreError(KanSaeaError, ValueError):
    """Score is undefined for the given inputs (e.g. zero target variance)."""


class SizeError(KanSaeaError, ValueError):
    """Requested selection size does not fit the candidate set."""


class DimensionError(KanSaeaError, ValueError):
    """Problem dimension is not valid for the chosen objective."""


class BudgetExhaustedError(KanSaeaError):
    """The expensive-evaluation budget fes_max has been consumed."""


class BoundsViolationError(KanSaeaError, ValueError):
    """A solution outside the box bounds was sent to the expensive objective."""


class OperatorArityError(KanSaeaError, ValueError):
    """Population too small for the reproduction operator."""


class SampleSizeError(KanSaeaError, ValueError):
    """Too few samples for the statistical test."""


class ShapeError(KanSaeaError, ValueError):
    """Result collections have mismatched repetition counts."""


class CampaignIOError(KanSaeaError):
    """Campaign output directory cannot be written."""


class ReportParseError(KanSaeaError):
    """Campaign CSV is malformed.

    Attributes:
        LineNumber: 1-based line number of the offending line
    """

    def __init__(self, Message: str, LineNumber: int):
        super().__init__(f"line {LineNumber}: {Message}")
        self.LineNumber = LineNumber
