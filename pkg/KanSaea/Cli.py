# File: Cli.py
# Path: KanSaea/Cli.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  06:10PM
# Description: Command-line entry point (run, campaign, compare, viz2d, report)

"""
KanSaea Command Line

    python -m KanSaea run --algo kan-sps-reg --problem ellipsoid --dim 5 --seed 0
    python -m KanSaea campaign --config campaign.yaml
    python -m KanSaea compare --inputs Results/ --reference kan-sps-reg --out table.csv
    python -m KanSaea viz2d --problem ackley --out Viz/
    python -m KanSaea report --campaign Results/campaign.csv --out summary.csv

Exit code 0 on success; 1 with a one-line diagnostic on stderr otherwise.
"""

import argparse
import logging
import sys
from typing import List, Optional

from KanSaea.Errors import KanSaeaError
from KanSaea.Experiments import Compare, ExportViz2d, RunCampaign, RunSingle
from KanSaea.Problems import PROBLEMS
from KanSaea.Settings import CLI_ALGORITHMS, DefaultLogLevel, ExperimentConfig
from KanSaea.Statistics import DEFAULT_ALPHA, MeanBestReport

Logger = logging.getLogger(__name__)


def BuildParser() -> argparse.ArgumentParser:
    Parser = argparse.ArgumentParser(prog="kansaea",
                                     description="KAN surrogate-assisted evolutionary optimization toolkit.")
    Parser.add_argument("--log-level", default=None,
                        help="Root log level (default: KANSAEA_LOG_LEVEL or WARNING)")
    Commands = Parser.add_subparsers(dest="Command", required=True)

    Run = Commands.add_parser("run", help="Run one algorithm on one problem with one seed")
    Run.add_argument("--algo", required=True, choices=CLI_ALGORITHMS)
    Run.add_argument("--problem", required=True, choices=sorted(PROBLEMS))
    Run.add_argument("--dim", required=True, type=int)
    Run.add_argument("--seed", required=True, type=int)
    Run.add_argument("--fes-max", type=int, default=None, help="Default: 2000 for SPS, 300 for SAS")
    Run.add_argument("--pop", type=int, default=50)
    Run.add_argument("--trials", type=int, default=3)
    Run.add_argument("--tau", type=int, default=50)
    Run.add_argument("--out", default=".", help="Directory for the RunResult JSON")

    Campaign = Commands.add_parser("campaign", help="Run every repetition of an experiment config")
    Campaign.add_argument("--config", required=True, help="YAML or JSON experiment config")
    Campaign.add_argument("--no-progress", action="store_true", help="Hide the progress bar")

    Comparison = Commands.add_parser("compare", help="Build the mean(std)[rank](verdict) table")
    Comparison.add_argument("--inputs", required=True, nargs="+", help="Directories holding RunResult JSON")
    Comparison.add_argument("--reference", required=True)
    Comparison.add_argument("--alpha", type=float, default=DEFAULT_ALPHA)
    Comparison.add_argument("--out", required=True)

    Viz = Commands.add_parser("viz2d", help="Export KAN/MLP lattice predictions on a 2-D problem")
    Viz.add_argument("--problem", required=True, choices=sorted(PROBLEMS))
    Viz.add_argument("--samples", type=int, default=50)
    Viz.add_argument("--steps", type=int, default=50)
    Viz.add_argument("--resolution", type=int, default=101)
    Viz.add_argument("--seed", type=int, default=0)
    Viz.add_argument("--out", default=".")

    Report = Commands.add_parser("report", help="Summarize a campaign CSV per (problem, n, algorithm)")
    Report.add_argument("--campaign", required=True)
    Report.add_argument("--out", required=True)
    return Parser


def _Run(Args) -> None:
    Result, OutputPath = RunSingle(Args.algo, Args.problem, Args.dim, Args.seed, FesMax=Args.fes_max,
                                   PopSize=Args.pop, Trials=Args.trials, Tau=Args.tau, OutputDir=Args.out)
    print(f"  {Result.Algorithm} on {Result.Problem} n={Result.Dimension} seed={Result.Seed}: "
          f"best {Result.BestValue:.6e} after {Result.FesUsed} evaluations")
    print(f"  Created: {OutputPath}")


def _Campaign(Args) -> None:
    Config = ExperimentConfig.Load(Args.config)
    Outcome = RunCampaign(Config, ShowProgress=not Args.no_progress)
    print(f"  Runs executed: {Outcome.Executed}, skipped: {Outcome.Skipped}")
    print(f"  Created: {Outcome.CsvPath}")


def _Compare(Args) -> None:
    Table = Compare(Args.inputs, Args.reference, Args.alpha, Args.out)
    print(f"  Compared {len(Table.Algorithms)} algorithms over {len(Table.Rows)} rows")
    print(f"  Created: {Args.out}")


def _Viz2d(Args) -> None:
    CsvPath, ScoresPath, Scores = ExportViz2d(Args.problem, Args.samples, Args.steps, Args.resolution,
                                              Args.seed, Args.out)
    print(f"  R2 kan {Scores['kan_r2']:.4f} mlp {Scores['mlp_r2']:.4f}; "
          f"accuracy kan {Scores['kan_accuracy']:.4f} mlp {Scores['mlp_accuracy']:.4f}")
    print(f"  Created: {CsvPath}")
    print(f"  Created: {ScoresPath}")


def _Report(Args) -> None:
    Summary = MeanBestReport(Args.campaign, Args.out)
    print(f"  Summarized {len(Summary)} (problem, n, algorithm) groups")
    print(f"  Created: {Args.out}")


HANDLERS = {"run": _Run, "campaign": _Campaign, "compare": _Compare, "viz2d": _Viz2d, "report": _Report}


def Main(Argv: Optional[List[str]] = None) -> int:
    Args = BuildParser().parse_args(Argv)
    Level = (Args.log_level or DefaultLogLevel()).upper()
    logging.basicConfig(level=getattr(logging, Level, logging.WARNING),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        HANDLERS[Args.Command](Args)
    except (KanSaeaError, OSError) as Ex:
        print(f"Error: {Ex}".splitlines()[0], file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(Main())
