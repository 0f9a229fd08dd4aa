# File: Experiments.py
# Path: KanSaea/Experiments.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  11:10PM
# Description: Single runs, seeded campaigns, comparison input loading and 2-D surrogate exports

"""
Experiment Harness

ExecuteRun turns one per-run configuration (see ExperimentConfig.RunConfig)
and a seed into a RunResult. RunCampaign executes the whole cartesian
product of a config, one JSON file per (fingerprint, seed), skipping files
that already exist, and rewrites the campaign CSV from all of its runs.
"""

import csv
import json
import logging
import tempfile
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from KanSaea.Datasets import TrainingSet
from KanSaea.Errors import CampaignIOError, ConfigError
from KanSaea.KanCore import DEFAULT_GRID_UPDATES, DEFAULT_INTERVALS, DEFAULT_ORDER
from KanSaea.Frameworks import ConfigFingerprint, RunKanSas, RunKanSps, RunResult
from KanSaea.Problems import GetDefinition, MakeProblem
from KanSaea.Settings import SPS, ExperimentConfig, GetAlgorithm
from KanSaea.Statistics import (CAMPAIGN_COLUMNS, DEFAULT_ALPHA, BuildComparison, ComparisonTable,
                                WriteComparisonCsv)
from KanSaea.Surrogate import (AccuracyScore, Backend, R2Score, Surrogate, SurrogateSpec, Task)

Logger = logging.getLogger(__name__)

CAMPAIGN_CSV = "campaign.csv"
RUN_RESULT_KEYS = {"algorithm", "problem", "n", "seed", "best_value"}
VIZ2D_COLUMNS = ["x1", "x2", "truth", "kan_reg", "mlp_reg", "truth_label", "kan_label", "mlp_label"]


def ExecuteRun(RunConfig: Dict[str, Any], Seed: int) -> RunResult:
    """Run one configuration with one seed; the config is embedded in the result."""
    Spec = GetAlgorithm(RunConfig["algorithm"])
    Problem = MakeProblem(RunConfig["problem"], RunConfig["n"], RunConfig["fes_max"])
    Common = dict(PopSize=RunConfig["N"], Seed=int(Seed), LatinHypercube=RunConfig.get("latin_hypercube", False),
                  Config=RunConfig, Algorithm=Spec.Id)
    SpecOptions = dict(Intervals=RunConfig.get("grid_intervals", DEFAULT_INTERVALS),
                       Order=RunConfig.get("spline_order", DEFAULT_ORDER),
                       GridUpdates=RunConfig.get("grid_updates", DEFAULT_GRID_UPDATES))

    if Spec.Framework == SPS:
        Surrogates = None
        if Spec.ModelBackend is not None:
            Surrogates = SurrogateSpec(Spec.ModelBackend, Spec.ModelTask, RunConfig.get("steps", 50), **SpecOptions)
        Result = RunKanSps(Problem, Surrogates, Trials=RunConfig["t"], **Common)
    else:
        Result = RunKanSas(Problem, Spec.Variant, Spec.ModelBackend, Tau=RunConfig["tau"],
                           SwapVariants=RunConfig.get("swap_variants", False), Steps=RunConfig.get("steps", 50),
                           VwhBins=RunConfig.get("vwh_bins", 10), **Common, **SpecOptions)

    if Problem.Fes != Problem.FesMax:
        Logger.warning("%s on %s used %d of %d evaluations", Spec.Id, Problem.Name, Problem.Fes, Problem.FesMax)
    return Result


def RunSingle(Algorithm: str, ProblemName: str, Dimension: int, Seed: int,
              FesMax: Optional[int] = None, PopSize: int = 50, Trials: int = 3, Tau: int = 50,
              OutputDir: Optional[str] = None) -> Tuple[RunResult, Optional[Path]]:
    """One run with the command-line defaults; writes its JSON when OutputDir is given."""
    Config = ExperimentConfig(Algorithms=[Algorithm], Problems=[ProblemName], Dimensions=[Dimension],
                              PopSize=PopSize, Trials=Trials, Tau=Tau, FesMax=FesMax, Repetitions=1,
                              BaseSeed=Seed, OutputDir=OutputDir or ".", Workers=1)
    RunConfig = Config.RunConfig(Config.Algorithms[0], Config.Problems[0], Dimension)
    Result = ExecuteRun(RunConfig, Seed)
    if OutputDir is None:
        return Result, None
    return Result, WriteResult(Result, Path(OutputDir))


def ResultFileName(RunConfig: Dict[str, Any], Seed: int) -> str:
    Fingerprint = ConfigFingerprint(RunConfig)[:12]
    return f"{RunConfig['algorithm']}_{RunConfig['problem']}_n{RunConfig['n']}_{Fingerprint}_s{Seed}.json"


def WriteResult(Result: RunResult, OutputDir: Path) -> Path:
    OutputDir.mkdir(parents=True, exist_ok=True)
    OutputPath = OutputDir / ResultFileName(Result.Config, Result.Seed)
    OutputPath.write_text(Result.ToJson() + "\n")
    return OutputPath


def _CheckWritable(OutputDir: Path) -> None:
    try:
        OutputDir.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile(dir=OutputDir, prefix=".write_check_"):
            pass
    except OSError as Ex:
        raise CampaignIOError(f"output directory {OutputDir} is not writable: {Ex}") from Ex


@dataclass
class CampaignOutcome:
    Results: List[RunResult] = field(default_factory=list)
    Executed: int = 0
    Skipped: int = 0
    CsvPath: Optional[Path] = None


def _ExecuteTask(Job: Tuple[Dict[str, Any], int]) -> RunResult:
    RunConfig, Seed = Job
    return ExecuteRun(RunConfig, Seed)


def WriteCampaignCsv(Results: Iterable[RunResult], OutputPath: Path) -> Path:
    Ordered = sorted(Results, key=lambda Item: (Item.Problem, Item.Dimension, Item.Algorithm, Item.Seed))
    with open(OutputPath, "w", newline="") as Handle:
        Writer = csv.writer(Handle)
        Writer.writerow(CAMPAIGN_COLUMNS)
        for Result in Ordered:
            Writer.writerow([Result.Problem, Result.Dimension, Result.Algorithm, Result.Seed,
                             repr(Result.BestValue), Result.FesUsed])
    return OutputPath


def RunCampaign(Config: ExperimentConfig, ShowProgress: bool = True) -> CampaignOutcome:
    """Run every (algorithm, problem, n, seed) not yet on disk, then rewrite the campaign CSV.

    Raises:
        CampaignIOError: the output directory cannot be written (checked before any run)
    """
    OutputDir = Path(Config.OutputDir)
    _CheckWritable(OutputDir)

    Outcome = CampaignOutcome()
    Pending: List[Tuple[Dict[str, Any], int]] = []
    for Algorithm, ProblemName, Dimension in Config.Cells():
        RunConfig = Config.RunConfig(Algorithm, ProblemName, Dimension)
        for Seed in Config.Seeds:
            Existing = OutputDir / ResultFileName(RunConfig, Seed)
            if Existing.exists():
                Outcome.Results.append(RunResult.FromJson(Existing.read_text()))
                Outcome.Skipped += 1
            else:
                Pending.append((RunConfig, Seed))
    Logger.info("campaign: %d runs pending, %d already on disk", len(Pending), Outcome.Skipped)

    Progress = tqdm(total=len(Pending), desc="campaign", unit="run", disable=not ShowProgress or not Pending)
    if Config.Workers > 1 and len(Pending) > 1:
        with ProcessPoolExecutor(max_workers=Config.Workers) as Pool:
            Futures = [Pool.submit(_ExecuteTask, Job) for Job in Pending]
            for Future in as_completed(Futures):
                Result = Future.result()
                WriteResult(Result, OutputDir)
                Outcome.Results.append(Result)
                Progress.update(1)
    else:
        for Job in Pending:
            Result = _ExecuteTask(Job)
            WriteResult(Result, OutputDir)
            Outcome.Results.append(Result)
            Progress.update(1)
    Progress.close()

    Outcome.Executed = len(Pending)
    Outcome.CsvPath = WriteCampaignCsv(Outcome.Results, OutputDir / CAMPAIGN_CSV)
    return Outcome


def LoadResults(Directories: Iterable) -> Dict[str, List[RunResult]]:
    """Every RunResult JSON under the given directories, keyed by algorithm id.

    Other JSON documents in the tree (viz2d scores, notes) are skipped.
    """
    Grouped: Dict[str, List[RunResult]] = {}
    for Directory in Directories:
        Directory = Path(Directory)
        if not Directory.is_dir():
            raise ConfigError(f"{Directory} is not a directory")
        for ResultPath in sorted(Directory.rglob("*.json")):
            try:
                Document = json.loads(ResultPath.read_text())
            except json.JSONDecodeError as Ex:
                raise ConfigError(f"{ResultPath} is not valid JSON: {Ex}") from Ex
            if not isinstance(Document, dict) or not RUN_RESULT_KEYS <= set(Document):
                Logger.debug("skipping %s: not a run result", ResultPath)
                continue
            Result = RunResult.FromDict(Document)
            Grouped.setdefault(Result.Algorithm, []).append(Result)
    if not Grouped:
        raise ConfigError("no run results found in the given directories")
    return Grouped


def Compare(Directories: Iterable, Reference: str, Alpha: float = DEFAULT_ALPHA,
            OutputPath=None) -> ComparisonTable:
    Table = BuildComparison(LoadResults(Directories), Reference, Alpha)
    if OutputPath is not None:
        WriteComparisonCsv(Table, OutputPath)
    return Table


@dataclass
class Viz2dData:
    Lattice: np.ndarray  # (resolution^2, 2)
    Columns: Dict[str, np.ndarray]
    Scores: Dict[str, Any]


def _Fit(ModelBackend: Backend, ModelTask: Task, Inputs: np.ndarray, Targets: np.ndarray,
         Steps: int, Seed: int) -> Surrogate:
    Model = Surrogate(ModelBackend, ModelTask, Steps, Seed)
    Model.Fit(TrainingSet(Inputs, Targets))
    return Model


def Viz2d(ProblemName: str, Samples: int = 50, Steps: int = 50, Resolution: int = 101,
          Seed: int = 0) -> Viz2dData:
    """Train KAN and MLP (regression and classification) on uniform samples of a 2-D problem
    and evaluate them on a Resolution x Resolution lattice over the box."""
    if Resolution < 2:
        raise ConfigError(f"resolution must be at least 2, got {Resolution}")
    if Samples < 2:
        raise ConfigError(f"at least 2 training samples are needed, got {Samples}")
    Definition = GetDefinition(ProblemName)
    Rng = np.random.default_rng(Seed)
    Bound = Definition.Bound

    Inputs = Rng.uniform(-Bound, Bound, size=(Samples, 2))
    Values = Definition.Function(Inputs)
    Threshold = float(np.median(Values))
    Labels = (Values <= Threshold).astype(int)

    Axis = np.linspace(-Bound, Bound, Resolution)
    Grid1, Grid2 = np.meshgrid(Axis, Axis, indexing="ij")
    Lattice = np.column_stack([Grid1.ravel(), Grid2.ravel()])
    Truth = Definition.Function(Lattice)
    TruthLabels = (Truth <= Threshold).astype(int)

    Columns: Dict[str, np.ndarray] = {"truth": Truth, "truth_label": TruthLabels}
    Scores: Dict[str, Any] = {"problem": Definition.Name.lower(), "samples": Samples, "steps": Steps,
                              "resolution": Resolution, "seed": Seed}
    for ModelBackend in (Backend.KAN, Backend.MLP):
        Name = ModelBackend.value
        Regressor = _Fit(ModelBackend, Task.REGRESSION, Inputs, Values, Steps, Seed)
        Columns[f"{Name}_reg"] = Regressor.PredictValues(Lattice)
        Scores[f"{Name}_r2"] = R2Score(Truth, Columns[f"{Name}_reg"])

        Classifier = _Fit(ModelBackend, Task.CLASSIFICATION, Inputs, Labels, Steps, Seed)
        Columns[f"{Name}_label"], _ = Classifier.PredictLabels(Lattice)
        Scores[f"{Name}_accuracy"] = AccuracyScore(TruthLabels, Columns[f"{Name}_label"])
    return Viz2dData(Lattice, Columns, Scores)


def ExportViz2d(ProblemName: str, Samples: int = 50, Steps: int = 50, Resolution: int = 101,
                Seed: int = 0, OutputDir=".") -> Tuple[Path, Path, Dict[str, Any]]:
    """Write the lattice CSV and the scores JSON; returns both paths and the scores."""
    Data = Viz2d(ProblemName, Samples, Steps, Resolution, Seed)
    OutputDir = Path(OutputDir)
    OutputDir.mkdir(parents=True, exist_ok=True)
    Stem = f"viz2d_{Data.Scores['problem']}_s{Seed}"

    CsvPath = OutputDir / f"{Stem}.csv"
    with open(CsvPath, "w", newline="") as Handle:
        Writer = csv.writer(Handle)
        Writer.writerow(VIZ2D_COLUMNS)
        for Index, (X1, X2) in enumerate(Data.Lattice):
            Writer.writerow([repr(float(X1)), repr(float(X2))] + [
                repr(float(Data.Columns[Name][Index])) if not Name.endswith("label")
                else int(Data.Columns[Name][Index]) for Name in VIZ2D_COLUMNS[2:]])

    ScoresPath = OutputDir / f"{Stem}_scores.json"
    ScoresPath.write_text(json.dumps(Data.Scores, indent=2) + "\n")
    return CsvPath, ScoresPath, Data.Scores
