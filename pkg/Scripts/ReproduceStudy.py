#!/usr/bin/env python3
# File: ReproduceStudy.py
# Path: Scripts/ReproduceStudy.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  06:40PM
# Description: Runs the pre-selection or selection study and writes its comparison table

"""
Study Reproduction Script

Runs one of the two comparison studies over the four benchmark problems
at n = 5 and n = 10, then writes the comparison table:

    preselection  kan-sps-reg, kan-sps-cla, mlp-sps-reg, mlp-sps-cla, sps-random
                  (N=50, t=3, fes_max=2000; reference kan-sps-reg)
    selection     kan-sas-1, kan-sas-2
                  (N=50, tau=50, fes_max=300; reference kan-sas-1)

Finished runs are kept on disk, so an interrupted study resumes where it
stopped.
"""

import argparse
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from KanSaea.Errors import KanSaeaError  # noqa: E402
from KanSaea.Experiments import RunCampaign  # noqa: E402
from KanSaea.Settings import ExperimentConfig  # noqa: E402
from KanSaea.Statistics import BuildComparison, WriteComparisonCsv  # noqa: E402

STUDIES = {
    "preselection": (["kan-sps-reg", "kan-sps-cla", "mlp-sps-reg", "mlp-sps-cla", "sps-random"], "kan-sps-reg"),
    "selection": (["kan-sas-1", "kan-sas-2"], "kan-sas-1"),
}


class StudyRunner:
    """Builds the study config, runs it and tabulates the results."""

    def __init__(self, Study: str, OutputDir: str, Repetitions: int, Workers: int,
                 Dimensions=(5, 10), Problems=("ellipsoid", "rosenbrock", "ackley", "griewank")):
        self.Study = Study
        self.Algorithms, self.Reference = STUDIES[Study]
        self.OutputDir = Path(OutputDir) / Study
        self.Config = ExperimentConfig(Algorithms=list(self.Algorithms), Problems=list(Problems),
                                       Dimensions=list(Dimensions), Repetitions=Repetitions,
                                       OutputDir=str(self.OutputDir), Workers=Workers)

    def SaveConfig(self) -> None:
        ConfigPath = self.Config.Save(self.OutputDir / "study.yaml")
        print(f"  Created: {ConfigPath}")

    def Run(self) -> None:
        print(f"Running the {self.Study} study ({self.Config.Repetitions} repetitions)...")
        Outcome = RunCampaign(self.Config)
        print(f"  Runs executed: {Outcome.Executed}, skipped: {Outcome.Skipped}")
        print(f"  Created: {Outcome.CsvPath}")

        Grouped = {}
        for Result in Outcome.Results:
            Grouped.setdefault(Result.Algorithm, []).append(Result)
        Table = BuildComparison(Grouped, self.Reference)
        TablePath = WriteComparisonCsv(Table, self.OutputDir / "comparison.csv")
        print(f"  Created: {TablePath}")
        for Name, MeanRank in Table.MeanRanks.items():
            print(f"    {Name:<12} mean rank {MeanRank:.3f}")


def Main() -> int:
    Parser = argparse.ArgumentParser(description="Reproduce the SPS or SAS comparison study.")
    Parser.add_argument("--study", choices=sorted(STUDIES), default="preselection")
    Parser.add_argument("--out", default="Results", help="Output root (default: Results)")
    Parser.add_argument("--repetitions", type=int, default=30)
    Parser.add_argument("--workers", type=int, default=1)
    Parser.add_argument("--dims", type=int, nargs="+", default=[5, 10])
    Args = Parser.parse_args()

    try:
        Runner = StudyRunner(Args.study, Args.out, Args.repetitions, Args.workers, Dimensions=Args.dims)
        Runner.SaveConfig()
        Runner.Run()
    except (KanSaeaError, OSError) as Ex:
        print(f"Error: {Ex}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(Main())
