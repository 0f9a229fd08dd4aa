# File: Settings.py
# Path: KanSaea/Settings.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  11:10PM
# Description: Experiment configuration documents, algorithm ids and environment defaults

"""
Experiment Settings

An ExperimentConfig is read from a YAML (or JSON) document whose keys are:

    algorithm, problem, n, N, t, tau, fes_max, backend, task, variant,
    repetitions, base_seed, output_dir, workers, steps, grid_intervals,
    spline_order, grid_updates, vwh_bins, latin_hypercube, swap_variants

`algorithm`, `problem` and `n` may be single values or lists. An algorithm
is either a full id such as kan-sps-reg or kan-sas-1, or a family
("sps", "sas") completed from the backend/task/variant keys.

Environment defaults come from a .env file when present:

    KANSAEA_WORKERS      worker processes for campaigns
    KANSAEA_OUTPUT_DIR   default output directory
    KANSAEA_LOG_LEVEL    root log level for the command line
"""

import itertools
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml
from dotenv import load_dotenv

from KanSaea.Errors import ConfigError
from KanSaea.Problems import GetDefinition
from KanSaea.Surrogate import Backend, Task

Logger = logging.getLogger(__name__)

SPS = "sps"
SAS = "sas"

SPS_DEFAULT_FES = 2000
SAS_DEFAULT_FES = 300


@dataclass(frozen=True)
class AlgorithmSpec:
    """Framework plus surrogate wiring behind one algorithm id."""

    Id: str
    Framework: str
    ModelBackend: Optional[Backend] = None  # None: random pre-selection
    ModelTask: Optional[Task] = None
    Variant: Optional[int] = None

    @property
    def DefaultFesMax(self) -> int:
        return SPS_DEFAULT_FES if self.Framework == SPS else SAS_DEFAULT_FES


ALGORITHMS: Dict[str, AlgorithmSpec] = {
    "kan-sps-reg": AlgorithmSpec("kan-sps-reg", SPS, Backend.KAN, Task.REGRESSION),
    "kan-sps-cla": AlgorithmSpec("kan-sps-cla", SPS, Backend.KAN, Task.CLASSIFICATION),
    "mlp-sps-reg": AlgorithmSpec("mlp-sps-reg", SPS, Backend.MLP, Task.REGRESSION),
    "mlp-sps-cla": AlgorithmSpec("mlp-sps-cla", SPS, Backend.MLP, Task.CLASSIFICATION),
    "sps-random": AlgorithmSpec("sps-random", SPS),
    "kan-sas-1": AlgorithmSpec("kan-sas-1", SAS, Backend.KAN, Variant=1),
    "kan-sas-2": AlgorithmSpec("kan-sas-2", SAS, Backend.KAN, Variant=2),
    "mlp-sas-1": AlgorithmSpec("mlp-sas-1", SAS, Backend.MLP, Variant=1),
    "mlp-sas-2": AlgorithmSpec("mlp-sas-2", SAS, Backend.MLP, Variant=2),
}

CLI_ALGORITHMS = ["kan-sps-reg", "kan-sps-cla", "mlp-sps-reg", "mlp-sps-cla", "sps-random",
                  "kan-sas-1", "kan-sas-2"]


def GetAlgorithm(Id: str) -> AlgorithmSpec:
    Key = str(Id).strip().lower()
    if Key not in ALGORITHMS:
        raise ConfigError(f"unknown algorithm '{Id}', choose one of {sorted(ALGORITHMS)}")
    return ALGORITHMS[Key]


def LoadEnvironment(EnvPath: Optional[str] = None) -> Dict[str, Optional[str]]:
    """Read .env (without overriding the process environment) and return the KANSAEA_* values."""
    load_dotenv(EnvPath, override=False)
    return {
        "workers": os.getenv("KANSAEA_WORKERS"),
        "output_dir": os.getenv("KANSAEA_OUTPUT_DIR"),
        "log_level": os.getenv("KANSAEA_LOG_LEVEL"),
    }


def DefaultWorkers() -> int:
    Value = LoadEnvironment()["workers"]
    if not Value:
        return 1
    try:
        return max(1, int(Value))
    except ValueError as Ex:
        raise ConfigError(f"KANSAEA_WORKERS must be an integer, got '{Value}'") from Ex


def DefaultOutputDir() -> str:
    return LoadEnvironment()["output_dir"] or "Results"


def DefaultLogLevel() -> str:
    return (LoadEnvironment()["log_level"] or "WARNING").upper()


def _AsList(Value) -> List[Any]:
    return list(Value) if isinstance(Value, (list, tuple)) else [Value]


def _Integer(Key: str, Value, Minimum: int) -> int:
    if isinstance(Value, bool) or not isinstance(Value, int):
        raise ConfigError(f"'{Key}' must be an integer, got {Value!r}")
    if Value < Minimum:
        raise ConfigError(f"'{Key}' must be at least {Minimum}, got {Value}")
    return Value


def _Flag(Key: str, Value) -> bool:
    if not isinstance(Value, bool):
        raise ConfigError(f"'{Key}' must be true or false, got {Value!r}")
    return Value


@dataclass
class ExperimentConfig:
    """One campaign: the cartesian product Algorithms x Problems x Dimensions, Repetitions seeds each."""

    Algorithms: List[str] = field(default_factory=lambda: ["kan-sps-reg"])
    Problems: List[str] = field(default_factory=lambda: ["ellipsoid"])
    Dimensions: List[int] = field(default_factory=lambda: [5, 10])
    PopSize: int = 50
    Trials: int = 3
    Tau: int = 50
    FesMax: Optional[int] = None  # None: 2000 for SPS, 300 for SAS
    Repetitions: int = 30
    BaseSeed: int = 0
    OutputDir: str = field(default_factory=DefaultOutputDir)
    Workers: int = field(default_factory=DefaultWorkers)
    Steps: int = 50
    GridIntervals: int = 5
    SplineOrder: int = 3
    GridUpdates: int = 4
    VwhBins: int = 10
    LatinHypercube: bool = False
    SwapVariants: bool = False

    def __post_init__(self):
        self.Algorithms = [GetAlgorithm(Name).Id for Name in self.Algorithms]
        self.Problems = [GetDefinition(Name).Name.lower() for Name in self.Problems]
        self.Dimensions = [_Integer("n", Value, 1) for Value in self.Dimensions]
        if not (self.Algorithms and self.Problems and self.Dimensions):
            raise ConfigError("algorithm, problem and n must each name at least one value")
        for Key, Value, Minimum in (("N", self.PopSize, 2), ("t", self.Trials, 1), ("tau", self.Tau, 1),
                                    ("repetitions", self.Repetitions, 1), ("base_seed", self.BaseSeed, 0),
                                    ("workers", self.Workers, 1), ("steps", self.Steps, 1),
                                    ("grid_intervals", self.GridIntervals, 1),
                                    ("spline_order", self.SplineOrder, 0), ("grid_updates", self.GridUpdates, 0),
                                    ("vwh_bins", self.VwhBins, 3)):
            _Integer(Key, Value, Minimum)
        if self.FesMax is not None and _Integer("fes_max", self.FesMax, 1) <= self.PopSize:
            raise ConfigError(f"'fes_max' must exceed N ({self.PopSize}), got {self.FesMax}")

    @classmethod
    def FromDocument(cls, Document: Dict[str, Any]) -> "ExperimentConfig":
        if not isinstance(Document, dict):
            raise ConfigError("configuration document must be a mapping")
        Unknown = sorted(str(Key) for Key in set(Document) - set(DOCUMENT_KEYS))
        if Unknown:
            raise ConfigError(f"unknown configuration keys: {', '.join(Unknown)}")

        Options: Dict[str, Any] = {}
        for Key, Value in Document.items():
            if Key in ("algorithm", "backend", "task", "variant"):
                continue
            Attribute = DOCUMENT_KEYS[Key]
            if Key in ("problem", "n"):
                Value = _AsList(Value)
            elif Key in ("latin_hypercube", "swap_variants"):
                Value = _Flag(Key, Value)
            elif Key == "output_dir":
                Value = str(Value)
            Options[Attribute] = Value

        if "algorithm" in Document or any(Key in Document for Key in ("backend", "task", "variant")):
            Options["Algorithms"] = [
                _ComposeAlgorithm(Name, Document.get("backend"), Document.get("task"), Document.get("variant"))
                for Name in _AsList(Document.get("algorithm", SPS))]
        return cls(**Options)

    @classmethod
    def Load(cls, ConfigPath) -> "ExperimentConfig":
        ConfigPath = Path(ConfigPath)
        try:
            with open(ConfigPath) as Handle:
                Document = yaml.safe_load(Handle)
        except yaml.YAMLError as Ex:
            raise ConfigError(f"{ConfigPath}: not a valid YAML/JSON document ({Ex})") from Ex
        return cls.FromDocument(Document or {})

    def ToDocument(self) -> Dict[str, Any]:
        return {Key: getattr(self, Attribute) for Key, Attribute in DOCUMENT_KEYS.items()
                if Attribute is not None}

    def Save(self, ConfigPath) -> Path:
        ConfigPath = Path(ConfigPath)
        ConfigPath.parent.mkdir(parents=True, exist_ok=True)
        with open(ConfigPath, "w") as Handle:
            yaml.safe_dump(self.ToDocument(), Handle, sort_keys=False, default_flow_style=False)
        return ConfigPath

    @property
    def Seeds(self) -> List[int]:
        return list(range(self.BaseSeed, self.BaseSeed + self.Repetitions))

    def Cells(self) -> List[Tuple[str, str, int]]:
        """(algorithm, problem, n) combinations in a stable order."""
        return list(itertools.product(self.Algorithms, self.Problems, self.Dimensions))

    def RunConfig(self, Algorithm: str, Problem: str, Dimension: int) -> Dict[str, Any]:
        """Everything that determines one run except the seed; fingerprinted for idempotency."""
        Spec = GetAlgorithm(Algorithm)
        Document: Dict[str, Any] = {
            "algorithm": Spec.Id,
            "problem": Problem,
            "n": int(Dimension),
            "N": self.PopSize,
            "fes_max": self.FesMax if self.FesMax is not None else Spec.DefaultFesMax,
            "backend": Spec.ModelBackend.value if Spec.ModelBackend else None,
            "latin_hypercube": self.LatinHypercube,
        }
        if Spec.ModelBackend is not None:
            Document.update(steps=self.Steps, grid_intervals=self.GridIntervals, spline_order=self.SplineOrder,
                            grid_updates=self.GridUpdates)
        if Spec.Framework == SPS:
            Document.update(t=self.Trials, task=Spec.ModelTask.value if Spec.ModelTask else None)
        else:
            Document.update(tau=self.Tau, variant=Spec.Variant, vwh_bins=self.VwhBins,
                            swap_variants=self.SwapVariants)
        return Document


def _ComposeAlgorithm(Name: str, BackendName, TaskName, Variant) -> str:
    Key = str(Name).strip().lower()
    if Key in ALGORITHMS:
        return Key
    try:
        ModelBackend = Backend(str(BackendName or "kan").lower())
    except ValueError as Ex:
        raise ConfigError(f"'backend' must be kan or mlp, got {BackendName!r}") from Ex
    if Key == SPS:
        if str(TaskName or "regression").lower() == "random":
            return "sps-random"
        try:
            ModelTask = Task(str(TaskName or "regression").lower())
        except ValueError as Ex:
            raise ConfigError(f"'task' must be regression, classification or random, got {TaskName!r}") from Ex
        Suffix = "reg" if ModelTask is Task.REGRESSION else "cla"
        return f"{ModelBackend.value}-sps-{Suffix}"
    if Key == SAS:
        Level = 1 if Variant is None else Variant
        if Level not in (1, 2, "1", "2", "I", "II"):
            raise ConfigError(f"'variant' must be 1 or 2, got {Variant!r}")
        Level = 2 if str(Level) in ("2", "II") else 1
        return f"{ModelBackend.value}-sas-{Level}"
    raise ConfigError(f"unknown algorithm '{Name}', choose one of {sorted(ALGORITHMS)} or sps/sas")


DOCUMENT_KEYS: Dict[str, Optional[str]] = {
    "algorithm": "Algorithms",
    "problem": "Problems",
    "n": "Dimensions",
    "N": "PopSize",
    "t": "Trials",
    "tau": "Tau",
    "fes_max": "FesMax",
    "backend": None,
    "task": None,
    "variant": None,
    "repetitions": "Repetitions",
    "base_seed": "BaseSeed",
    "output_dir": "OutputDir",
    "workers": "Workers",
    "steps": "Steps",
    "grid_intervals": "GridIntervals",
    "spline_order": "SplineOrder",
    "grid_updates": "GridUpdates",
    "vwh_bins": "VwhBins",
    "latin_hypercube": "LatinHypercube",
    "swap_variants": "SwapVariants",
}
