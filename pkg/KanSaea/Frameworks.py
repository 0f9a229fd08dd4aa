# File: Frameworks.py
# Path: KanSaea/Frameworks.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  03:20PM
# Description: Surrogate pre-selection (SPS) and surrogate-assisted selection (SAS) loops

"""
Optimization Frameworks

RunKanSps
    Each generation retrains the surrogate on the population, builds t CoDE
    trials per member, lets the surrogate pick one (or picks at random when
    no surrogate is given), evaluates it and keeps it on strict improvement.

RunKanSas
    Keeps every evaluated solution in a sorted archive. Each generation
    trains on the tau best entries, samples N offspring from a VWH model of
    the elite plus the unevaluated pool, evaluates only the best-predicted
    offspring and refills the pool with the next N/2.

Both loops stop the moment the problem refuses an evaluation, so a run
consumes exactly fes_max expensive calls. Traces come from the problem's
own log.
"""

import hashlib
import json
import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from KanSaea.Datasets import TrainingSet
from KanSaea.Errors import (BudgetExhaustedError, ConfigError, OperatorArityError,
                            TrainingDivergedError)
from KanSaea.Operators import CoDEConfig, CodeTrials, VwhBuild, VwhSample
from KanSaea.Population import Archive, EvaluatedPopulation, UnevaluatedPool
from KanSaea.Problems import BudgetedProblem, UniformInit
from KanSaea.Surrogate import Backend, LabelByQuantile, Surrogate, SurrogateSpec, Task

Logger = logging.getLogger(__name__)

SPS_TOP_FRACTION = 0.5
SAS_TOP_FRACTION = 0.3


def ConfigFingerprint(Config: Dict[str, Any]) -> str:
    """SHA-256 of the canonical JSON form (sorted keys, no whitespace)."""
    Canonical = json.dumps(Config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(Canonical.encode("utf-8")).hexdigest()


@dataclass
class RunResult:
    Algorithm: str
    Problem: str
    Dimension: int
    Seed: int
    Config: Dict[str, Any]
    BestValue: float
    BestSolution: List[float]
    Trace: List[Tuple[int, float]] = field(default_factory=list)
    WallTime: float = 0.0

    @property
    def Fingerprint(self) -> str:
        return ConfigFingerprint(self.Config)

    @property
    def FesUsed(self) -> int:
        return int(self.Trace[-1][0]) if self.Trace else 0

    def ToDict(self, IncludeWallTime: bool = True) -> Dict[str, Any]:
        Document = {
            "algorithm": self.Algorithm,
            "problem": self.Problem,
            "n": self.Dimension,
            "seed": self.Seed,
            "config": self.Config,
            "best_value": self.BestValue,
            "best_solution": list(self.BestSolution),
            "trace": [[int(Count), float(Best)] for Count, Best in self.Trace],
        }
        if IncludeWallTime:
            Document["wall_time"] = self.WallTime
        return Document

    def ToJson(self, IncludeWallTime: bool = True) -> str:
        return json.dumps(self.ToDict(IncludeWallTime), indent=2)

    @classmethod
    def FromDict(cls, Document: Dict[str, Any]) -> "RunResult":
        try:
            return cls(
                Algorithm=str(Document["algorithm"]),
                Problem=str(Document["problem"]),
                Dimension=int(Document["n"]),
                Seed=int(Document["seed"]),
                Config=dict(Document["config"]),
                BestValue=float(Document["best_value"]),
                BestSolution=[float(Value) for Value in Document["best_solution"]],
                Trace=[(int(Count), float(Best)) for Count, Best in Document["trace"]],
                WallTime=float(Document.get("wall_time", 0.0)),
            )
        except (KeyError, TypeError, ValueError) as Ex:
            raise ConfigError(f"malformed run result document: {Ex}") from Ex

    @classmethod
    def FromJson(cls, Text: str) -> "RunResult":
        try:
            return cls.FromDict(json.loads(Text))
        except json.JSONDecodeError as Ex:
            raise ConfigError(f"run result is not valid JSON: {Ex}") from Ex


def SpsAlgorithmId(Spec: Optional[SurrogateSpec]) -> str:
    if Spec is None:
        return "sps-random"
    Suffix = "reg" if Spec.ModelTask is Task.REGRESSION else "cla"
    return f"{Spec.ModelBackend.value}-sps-{Suffix}"


def SasAlgorithmId(Variant: int, ModelBackend: Backend = Backend.KAN) -> str:
    return f"{Backend(ModelBackend).value}-sas-{Variant}"


def _FitOrCarry(Spec: SurrogateSpec, Data: TrainingSet, Seed: int,
                Previous: Optional[Surrogate]) -> Optional[Surrogate]:
    """Fit a fresh surrogate; after divergence fall back to the last usable model."""
    Model = Surrogate.FromSpec(Spec, Seed)
    try:
        Model.Fit(Data)
        return Model
    except TrainingDivergedError as Ex:
        Carried = Ex.Model if Ex.Model is not None and Ex.Model.IsFitted else Previous
        Logger.warning("surrogate fit diverged (%s); continuing with the last usable model", Ex)
        return Carried


def _SpecDocument(Spec: SurrogateSpec) -> Dict[str, Any]:
    Document = asdict(Spec)
    Document["ModelBackend"] = Spec.ModelBackend.value
    Document["ModelTask"] = Spec.ModelTask.value
    return {Key.lower(): Value for Key, Value in Document.items()}


def _NextSeed(Rng: np.random.Generator) -> int:
    return int(Rng.integers(2 ** 31 - 1))


def _EvaluateAll(Problem: BudgetedProblem, Solutions: np.ndarray) -> EvaluatedPopulation:
    return EvaluatedPopulation(Solutions, [Problem.Evaluate(Row) for Row in Solutions])


def _CheckBudget(Problem: BudgetedProblem, PopSize: int) -> None:
    if Problem.FesMax <= PopSize:
        raise ConfigError(f"fes_max ({Problem.FesMax}) must exceed the population size ({PopSize})")
    if Problem.Fes:
        raise ConfigError(f"problem already consumed {Problem.Fes} evaluations")


def RunKanSps(Problem: BudgetedProblem, Spec: Optional[SurrogateSpec] = None, PopSize: int = 50,
              Trials: int = 3, Seed: int = 0, Rng: Optional[np.random.Generator] = None,
              LatinHypercube: bool = False, Config: Optional[Dict[str, Any]] = None,
              Algorithm: Optional[str] = None) -> RunResult:
    """Surrogate pre-selection with CoDE; Spec None selects among trials at random."""
    Operator = CoDEConfig()
    if PopSize < Operator.MinPopulation:
        raise OperatorArityError(f"CoDE needs a population of at least {Operator.MinPopulation}, got {PopSize}")
    if Trials < 1:
        raise ConfigError(f"trial count must be at least 1, got {Trials}")
    _CheckBudget(Problem, PopSize)
    Rng = Rng if Rng is not None else np.random.default_rng(Seed)
    Algorithm = Algorithm or SpsAlgorithmId(Spec)
    if Config is None:
        Config = {"algorithm": Algorithm, "problem": Problem.Name, "n": Problem.Dimension,
                  "N": PopSize, "t": Trials, "fes_max": Problem.FesMax,
                  "surrogate": None if Spec is None else _SpecDocument(Spec),
                  "latin_hypercube": LatinHypercube}

    Started = time.perf_counter()
    Population = _EvaluateAll(Problem, UniformInit(Problem, PopSize, Rng, LatinHypercube))
    Model: Optional[Surrogate] = None
    Generation = 0
    try:
        while Problem.Remaining > 0:
            Generation += 1
            if Spec is not None:
                Targets = Population.Values
                if Spec.ModelTask is Task.CLASSIFICATION:
                    Targets = LabelByQuantile(Population.Values, SPS_TOP_FRACTION)
                Model = _FitOrCarry(Spec, TrainingSet(Population.Solutions, Targets), _NextSeed(Rng), Model)

            for Index in range(Population.Size):
                Candidates = CodeTrials(Index, Population.Solutions, Problem.Bounds, Trials, Rng, Operator)
                if Model is None:
                    Pick = int(Rng.integers(Trials))
                else:
                    Pick = Model.SelectBest(Candidates, Rng)
                Value = Problem.Evaluate(Candidates[Pick])
                if Value < Population.Values[Index]:
                    Population.Replace(Index, Candidates[Pick], Value)
            Logger.debug("%s gen %d: fes %d, best %.6e", Algorithm, Generation, Problem.Fes,
                         Population.Values.min())
    except BudgetExhaustedError:
        Logger.debug("%s stopped at fes %d in generation %d", Algorithm, Problem.Fes, Generation)

    Best = Population.BestIndex
    return RunResult(
        Algorithm=Algorithm, Problem=Problem.Name, Dimension=Problem.Dimension, Seed=int(Seed),
        Config=Config, BestValue=float(Population.Values[Best]),
        BestSolution=Population.Solutions[Best].tolist(), Trace=Problem.BestSoFarTrace(),
        WallTime=time.perf_counter() - Started)


def RunKanSas(Problem: BudgetedProblem, Variant: int = 1, ModelBackend: Backend = Backend.KAN,
              PopSize: int = 50, Tau: int = 50, Seed: int = 0, Rng: Optional[np.random.Generator] = None,
              SwapVariants: bool = False, Steps: int = 50, VwhBins: int = 10,
              LatinHypercube: bool = False, Config: Optional[Dict[str, Any]] = None,
              Algorithm: Optional[str] = None, **SpecOptions) -> RunResult:
    """Surrogate-assisted selection with a sorted archive and VWH offspring.

    Variant 1 ranks offspring with the regression model for both o* and the
    pool; variant 2 fills the pool with a top-30% classifier. SwapVariants
    exchanges the two wirings.
    """
    if Variant not in (1, 2):
        raise ConfigError(f"SAS variant must be 1 or 2, got {Variant}")
    if PopSize < 2:
        raise ConfigError(f"population size must be at least 2, got {PopSize}")
    if Tau < 1:
        raise ConfigError(f"tau must be at least 1, got {Tau}")
    _CheckBudget(Problem, PopSize)
    Rng = Rng if Rng is not None else np.random.default_rng(Seed)
    ModelBackend = Backend(ModelBackend)
    Algorithm = Algorithm or SasAlgorithmId(Variant, ModelBackend)
    UseClassifier = (Variant == 2) != bool(SwapVariants)
    Regression = SurrogateSpec(ModelBackend, Task.REGRESSION, Steps, **SpecOptions)
    Classification = SurrogateSpec(ModelBackend, Task.CLASSIFICATION, Steps, **SpecOptions)
    if Config is None:
        Config = {"algorithm": Algorithm, "problem": Problem.Name, "n": Problem.Dimension,
                  "N": PopSize, "tau": Tau, "fes_max": Problem.FesMax, "variant": Variant,
                  "surrogate": _SpecDocument(Regression), "swap_variants": bool(SwapVariants),
                  "vwh_bins": VwhBins, "latin_hypercube": LatinHypercube}

    Started = time.perf_counter()
    Elite = _EvaluateAll(Problem, UniformInit(Problem, PopSize, Rng, LatinHypercube))
    Store = Archive.FromPopulation(Elite)
    Pool = UnevaluatedPool(PopSize // 2)
    Regressor: Optional[Surrogate] = None
    Classifier: Optional[Surrogate] = None
    Generation = 0
    try:
        while Problem.Remaining > 0:
            Generation += 1
            Window = Store.Window(Tau)
            Regressor = _FitOrCarry(Regression, Window, _NextSeed(Rng), Regressor)
            if UseClassifier:
                Labels = LabelByQuantile(Window.Targets, SAS_TOP_FRACTION)
                Classifier = _FitOrCarry(Classification, TrainingSet(Window.Inputs, Labels),
                                         _NextSeed(Rng), Classifier)
            PoolModel = Classifier if UseClassifier else Regressor

            Sources = Elite.Solutions if Pool.Size == 0 else np.vstack([Elite.Solutions, Pool.Solutions])
            Offspring = VwhSample(VwhBuild(Sources, Problem.Bounds, VwhBins), PopSize, Rng)

            Chosen = Regressor.SelectBest(Offspring, Rng) if Regressor is not None else int(Rng.integers(PopSize))
            Rest = np.delete(Offspring, Chosen, axis=0)
            if PoolModel is None:
                Ranking = Rng.permutation(Rest.shape[0])[:Pool.Capacity]
            else:
                Ranking = PoolModel.SelectTopK(Rest, min(Pool.Capacity, Rest.shape[0]), Rng)
            Pool.Assign(Rest[Ranking])

            Value = Problem.Evaluate(Offspring[Chosen])
            Store.Insert(Offspring[Chosen], Value)
            Elite = Store.Top(PopSize)
            Logger.debug("%s gen %d: fes %d, archive %d, best %.6e", Algorithm, Generation,
                         Problem.Fes, len(Store), Store.Best[1])
    except BudgetExhaustedError:
        Logger.debug("%s stopped at fes %d in generation %d", Algorithm, Problem.Fes, Generation)

    BestSolution, BestValue = Store.Best
    return RunResult(
        Algorithm=Algorithm, Problem=Problem.Name, Dimension=Problem.Dimension, Seed=int(Seed),
        Config=Config, BestValue=float(BestValue), BestSolution=BestSolution.tolist(),
        Trace=Problem.BestSoFarTrace(), WallTime=time.perf_counter() - Started)
