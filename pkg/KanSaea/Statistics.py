# File: Statistics.py
# Path: KanSaea/Statistics.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  04:05PM
# Description: Rank-sum test, comparison tables and campaign summaries

"""
Result Statistics

WilcoxonRankSum compares two samples of final best values (minimization).
Verdicts are read from the point of view of the second sample b:

    "−"  b is significantly worse than a
    "+"  b is significantly better than a
    "≈"  no significant difference

Samples of at most EXACT_LIMIT values each are tested by exact
enumeration, larger ones by the normal approximation.

BuildComparison applies it with the reference algorithm as a, producing the
mean(std)[rank](verdict) table; MeanBestReport summarizes a campaign CSV.
"""

import csv
import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import norm, rankdata

from KanSaea.Errors import ConfigError, ReportParseError, SampleSizeError, ShapeError
from KanSaea.Frameworks import RunResult

Logger = logging.getLogger(__name__)

WORSE = "−"
BETTER = "+"
SIMILAR = "≈"
VERDICTS = (BETTER, WORSE, SIMILAR)

DEFAULT_ALPHA = 0.05
MIN_SAMPLES = 3
EXACT_LIMIT = 8
RANK_SUM_METHODS = ("auto", "asymptotic", "exact")

CAMPAIGN_COLUMNS = ["problem", "n", "algorithm", "seed", "best_value", "fes_used"]
REPORT_COLUMNS = ["problem", "n", "algorithm", "count", "mean", "std", "median", "min"]


class RankSumResult(NamedTuple):
    PValue: float
    Verdict: str
    Statistic: float  # U for the first sample


def _Sample(Values, Label: str) -> np.ndarray:
    Values = np.asarray(Values, dtype=float).reshape(-1)
    if Values.shape[0] < MIN_SAMPLES:
        raise SampleSizeError(f"sample {Label} has {Values.shape[0]} values, need at least {MIN_SAMPLES}")
    if not np.all(np.isfinite(Values)):
        raise SampleSizeError(f"sample {Label} contains non-finite values")
    return Values


def _AsymptoticPValue(Statistic: float, Ranks: np.ndarray, SizeA: int, SizeB: int) -> float:
    Total = SizeA + SizeB
    _, TieCounts = np.unique(Ranks, return_counts=True)
    TieTerm = float(np.sum(TieCounts ** 3 - TieCounts)) / (Total * (Total - 1))
    Variance = SizeA * SizeB / 12.0 * ((Total + 1) - TieTerm)
    if Variance <= 0.0:
        return 1.0
    Mean = SizeA * SizeB / 2.0
    Z = max(0.0, abs(Statistic - Mean) - 0.5) / np.sqrt(Variance)
    return float(min(1.0, 2.0 * norm.sf(Z)))


def _ExactPValue(Statistic: float, Ranks: np.ndarray, SizeA: int) -> float:
    """Enumerate every split of the pooled ranks into |a| and |b| positions."""
    Offset = SizeA * (SizeA + 1) / 2.0
    Splits = np.array(list(itertools.combinations(range(Ranks.shape[0]), SizeA)))
    Null = Ranks[Splits].sum(axis=1) - Offset
    Lower = np.mean(Null <= Statistic + 1e-9)
    Upper = np.mean(Null >= Statistic - 1e-9)
    return float(min(1.0, 2.0 * min(Lower, Upper)))


def WilcoxonRankSum(A, B, Alpha: float = DEFAULT_ALPHA, Method: str = "auto") -> RankSumResult:
    """Two-sided Mann-Whitney U test with midranks.

    Method "asymptotic" uses the normal approximation with tie and continuity
    corrections; "exact" enumerates all rank splits (keep both samples small);
    "auto" picks "exact" when neither sample exceeds EXACT_LIMIT values.

    Raises:
        SampleSizeError: either sample has fewer than 3 values
    """
    if Method not in RANK_SUM_METHODS:
        raise ConfigError(f"unknown rank-sum method '{Method}'")
    A = _Sample(A, "a")
    B = _Sample(B, "b")
    if not 0.0 < Alpha < 1.0:
        raise ConfigError(f"alpha must lie in (0, 1), got {Alpha}")

    Ranks = rankdata(np.concatenate([A, B]), method="average")
    SizeA, SizeB = A.shape[0], B.shape[0]
    Statistic = float(Ranks[:SizeA].sum() - SizeA * (SizeA + 1) / 2.0)
    if Method == "auto":
        Method = "exact" if max(SizeA, SizeB) <= EXACT_LIMIT else "asymptotic"
    if Method == "exact":
        PValue = _ExactPValue(Statistic, Ranks, SizeA)
    else:
        PValue = _AsymptoticPValue(Statistic, Ranks, SizeA, SizeB)

    if PValue >= Alpha:
        return RankSumResult(PValue, SIMILAR, Statistic)
    MedianA, MedianB = float(np.median(A)), float(np.median(B))
    if MedianA != MedianB:
        ALower = MedianA < MedianB
    else:
        ALower = Statistic < SizeA * SizeB / 2.0
    return RankSumResult(PValue, WORSE if ALower else BETTER, Statistic)


@dataclass
class ComparisonCell:
    Mean: float
    Std: float
    Rank: int
    Verdict: Optional[str] = None
    PValue: Optional[float] = None

    def Format(self) -> str:
        Text = f"{self.Mean:.2e}({self.Std:.2e})[{self.Rank}]"
        return Text if self.Verdict is None else f"{Text}({self.Verdict})"


@dataclass
class ComparisonRow:
    Problem: str
    Dimension: int
    Cells: Dict[str, ComparisonCell] = field(default_factory=dict)


@dataclass
class ComparisonTable:
    """Per (problem, n) rows plus the mean-rank and +/−/≈ summaries."""

    Algorithms: List[str]
    Reference: str
    Rows: List[ComparisonRow] = field(default_factory=list)

    @property
    def MeanRanks(self) -> Dict[str, float]:
        return {Name: float(np.mean([Row.Cells[Name].Rank for Row in self.Rows])) if self.Rows else 0.0
                for Name in self.Algorithms}

    @property
    def Tallies(self) -> Dict[str, Dict[str, int]]:
        Counts = {}
        for Name in self.Algorithms:
            if Name == self.Reference:
                continue
            Verdicts = [Row.Cells[Name].Verdict for Row in self.Rows]
            Counts[Name] = {Verdict: Verdicts.count(Verdict) for Verdict in VERDICTS}
        return Counts


def _Spread(Values: np.ndarray) -> float:
    return float(np.std(Values, ddof=1)) if Values.shape[0] > 1 else 0.0


def BuildComparison(Results: Dict[str, Sequence[RunResult]], Reference: str,
                    Alpha: float = DEFAULT_ALPHA) -> ComparisonTable:
    """Aggregate final best values per (problem, n) and rank algorithms by mean.

    Raises:
        ShapeError: an algorithm is missing from a row or has a different
            repetition count than the others
    """
    if Reference not in Results:
        raise ConfigError(f"reference algorithm '{Reference}' has no results")
    Algorithms = [Reference] + sorted(Name for Name in Results if Name != Reference)

    Grouped: Dict[Tuple[str, int], Dict[str, List[float]]] = defaultdict(lambda: defaultdict(list))
    for Name in Algorithms:
        for Result in sorted(Results[Name], key=lambda Item: Item.Seed):
            Grouped[(Result.Problem, Result.Dimension)][Name].append(Result.BestValue)

    Table = ComparisonTable(Algorithms, Reference)
    for (Problem, Dimension) in sorted(Grouped):
        Samples = Grouped[(Problem, Dimension)]
        Missing = [Name for Name in Algorithms if Name not in Samples]
        if Missing:
            raise ShapeError(f"{Problem} n={Dimension}: no results for {Missing}")
        Sizes = {Name: len(Samples[Name]) for Name in Algorithms}
        if len(set(Sizes.values())) != 1:
            raise ShapeError(f"{Problem} n={Dimension}: repetition counts differ {Sizes}")

        Means = np.array([np.mean(Samples[Name]) for Name in Algorithms])
        Ranks = rankdata(Means, method="ordinal").astype(int)
        Row = ComparisonRow(Problem, Dimension)
        for Position, Name in enumerate(Algorithms):
            Values = np.asarray(Samples[Name])
            Cell = ComparisonCell(float(Means[Position]), _Spread(Values), int(Ranks[Position]))
            if Name != Reference:
                Test = WilcoxonRankSum(Samples[Reference], Values, Alpha)
                Cell.Verdict, Cell.PValue = Test.Verdict, Test.PValue
            Row.Cells[Name] = Cell
        Table.Rows.append(Row)
    return Table


def WriteComparisonCsv(Table: ComparisonTable, OutputPath) -> Path:
    OutputPath = Path(OutputPath)
    OutputPath.parent.mkdir(parents=True, exist_ok=True)
    Tallies = Table.Tallies
    MeanRanks = Table.MeanRanks
    with open(OutputPath, "w", newline="", encoding="utf-8") as Handle:
        Writer = csv.writer(Handle)
        Writer.writerow(["problem", "n"] + Table.Algorithms)
        for Row in Table.Rows:
            Writer.writerow([Row.Problem, Row.Dimension] + [Row.Cells[Name].Format() for Name in Table.Algorithms])
        Writer.writerow(["mean rank", ""] + [f"{MeanRanks[Name]:.3f}" for Name in Table.Algorithms])
        Writer.writerow(["/".join(VERDICTS), ""] + [
            "" if Name == Table.Reference else
            f"{Tallies[Name][BETTER]}/{Tallies[Name][WORSE]}/{Tallies[Name][SIMILAR]}"
            for Name in Table.Algorithms])
    return OutputPath


def _ParseCampaignRow(Row: List[str], LineNumber: int) -> Tuple[Tuple[str, int, str], float]:
    if len(Row) != len(CAMPAIGN_COLUMNS):
        raise ReportParseError(f"expected {len(CAMPAIGN_COLUMNS)} fields, got {len(Row)}", LineNumber)
    Problem, Dimension, Algorithm, Seed, BestValue, FesUsed = Row
    try:
        Key = (Problem, int(Dimension), Algorithm)
        int(Seed)
        int(FesUsed)
        Value = float(BestValue)
    except ValueError as Ex:
        raise ReportParseError(f"bad value ({Ex})", LineNumber) from Ex
    if not np.isfinite(Value):
        raise ReportParseError(f"best_value is not finite: {BestValue}", LineNumber)
    return Key, Value


def ReadCampaignCsv(CampaignPath) -> Dict[Tuple[str, int, str], List[float]]:
    """Best values grouped by (problem, n, algorithm), in file order."""
    Groups: Dict[Tuple[str, int, str], List[float]] = {}
    with open(CampaignPath, newline="") as Handle:
        Reader = csv.reader(Handle)
        Header = next(Reader, None)
        if Header is None:
            raise ReportParseError("campaign CSV is empty", 1)
        if [Name.strip() for Name in Header] != CAMPAIGN_COLUMNS:
            raise ReportParseError(f"header must be {','.join(CAMPAIGN_COLUMNS)}", 1)
        for Row in Reader:
            if not Row:
                continue
            Key, Value = _ParseCampaignRow(Row, Reader.line_num)
            Groups.setdefault(Key, []).append(Value)
    if not Groups:
        raise ReportParseError("campaign CSV has no data rows", 2)
    return Groups


def MeanBestReport(CampaignPath, OutputPath=None) -> List[Dict[str, object]]:
    """mean, sample std, median and min of best_value per (problem, n, algorithm)."""
    Summary = []
    for (Problem, Dimension, Algorithm), Values in sorted(ReadCampaignCsv(CampaignPath).items()):
        Array = np.asarray(Values)
        Summary.append({
            "problem": Problem, "n": Dimension, "algorithm": Algorithm, "count": int(Array.shape[0]),
            "mean": float(Array.mean()), "std": _Spread(Array),
            "median": float(np.median(Array)), "min": float(Array.min()),
        })

    if OutputPath is not None:
        OutputPath = Path(OutputPath)
        OutputPath.parent.mkdir(parents=True, exist_ok=True)
        with open(OutputPath, "w", newline="") as Handle:
            Writer = csv.DictWriter(Handle, fieldnames=REPORT_COLUMNS)
            Writer.writeheader()
            for Entry in Summary:
                Writer.writerow({Key: (repr(Value) if isinstance(Value, float) else Value)
                                 for Key, Value in Entry.items()})
        Logger.info("wrote %d summary rows to %s", len(Summary), OutputPath)
    return Summary
