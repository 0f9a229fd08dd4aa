# File: __init__.py
# Path: KanSaea/__init__.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  06:15PM
# Description: Package exports

"""
KanSaea

Kolmogorov-Arnold network surrogates inside surrogate-assisted
evolutionary algorithms: spline networks trained with L-BFGS, an MLP
baseline, CoDE pre-selection (SPS) and archive-based selection (SAS)
frameworks, benchmark problems and the experiment harness around them.
"""

from KanSaea.Errors import KanSaeaError
from KanSaea.Frameworks import RunKanSas, RunKanSps, RunResult
from KanSaea.KanCore import Fit, KanNetwork, NetworkForward, SplineGrid
from KanSaea.Problems import MakeProblem
from KanSaea.Surrogate import Backend, FitSurrogate, Surrogate, SurrogateSpec, Task

__version__ = "1.0.0"

__all__ = [
    "Backend", "Fit", "FitSurrogate", "KanNetwork", "KanSaeaError", "MakeProblem", "NetworkForward",
    "RunKanSas", "RunKanSps", "RunResult", "SplineGrid", "Surrogate", "SurrogateSpec", "Task",
]
