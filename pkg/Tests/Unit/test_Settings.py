# File: test_Settings.py
# Path: Tests/Unit/test_Settings.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  11:15PM
# Description: Experiment config loading, validation and environment default tests

import pytest
import yaml

from KanSaea.Errors import ConfigError
from KanSaea.Settings import (ALGORITHMS, CLI_ALGORITHMS, DefaultLogLevel, DefaultWorkers,
                              ExperimentConfig, GetAlgorithm)


def test_AlgorithmTable():
    assert set(CLI_ALGORITHMS) <= set(ALGORITHMS)
    assert GetAlgorithm("KAN-SPS-Reg").DefaultFesMax == 2000
    assert GetAlgorithm("kan-sas-2").DefaultFesMax == 300
    assert GetAlgorithm("sps-random").ModelBackend is None
    with pytest.raises(ConfigError):
        GetAlgorithm("kan-sps-foo")


def test_LoadYamlWithLists(tmp_path):
    ConfigPath = tmp_path / "campaign.yaml"
    ConfigPath.write_text(
        "algorithm: [kan-sps-reg, sps-random]\n"
        "problem: [Ellipsoid, ackley]\n"
        "n: 5\n"
        "N: 20\n"
        "fes_max: 100\n"
        "repetitions: 3\n"
        "base_seed: 10\n"
        f"output_dir: {tmp_path / 'out'}\n"
        "workers: 1\n")
    Config = ExperimentConfig.Load(ConfigPath)
    assert Config.Algorithms == ["kan-sps-reg", "sps-random"]
    assert Config.Problems == ["ellipsoid", "ackley"]
    assert Config.Dimensions == [5]
    assert Config.PopSize == 20 and Config.FesMax == 100
    assert Config.Seeds == [10, 11, 12]
    assert len(Config.Cells()) == 4


def test_LoadJsonDocument(tmp_path):
    ConfigPath = tmp_path / "campaign.json"
    ConfigPath.write_text('{"algorithm": "sas", "variant": 2, "backend": "mlp", "problem": "griewank", '
                          '"n": [2, 3], "workers": 1}')
    Config = ExperimentConfig.Load(ConfigPath)
    assert Config.Algorithms == ["mlp-sas-2"]
    assert Config.Dimensions == [2, 3]


@pytest.mark.parametrize("Document,Expected", [
    ({"algorithm": "sps"}, "kan-sps-reg"),
    ({"algorithm": "sps", "task": "classification"}, "kan-sps-cla"),
    ({"algorithm": "sps", "task": "random"}, "sps-random"),
    ({"algorithm": "sps", "backend": "mlp"}, "mlp-sps-reg"),
    ({"algorithm": "sas"}, "kan-sas-1"),
    ({"algorithm": "sas", "variant": "II"}, "kan-sas-2"),
])
def test_FamilyNamesAreCompleted(Document, Expected):
    assert ExperimentConfig.FromDocument(dict(Document, workers=1)).Algorithms == [Expected]


def test_UnknownKeysRejected():
    with pytest.raises(ConfigError) as Caught:
        ExperimentConfig.FromDocument({"algorithm": "kan-sps-reg", "populaton": 50})
    assert "populaton" in str(Caught.value)


@pytest.mark.parametrize("Document", [
    {"N": 0},
    {"N": "fifty"},
    {"fes_max": 40, "N": 50},
    {"repetitions": 0},
    {"problem": "sphere"},
    {"algorithm": "sas", "variant": 3},
    {"algorithm": "sps", "task": "ranking"},
    {"latin_hypercube": "yes"},
    {"vwh_bins": 2},
    {"grid_updates": -1},
])
def test_InvalidValuesRejected(Document):
    with pytest.raises(ConfigError):
        ExperimentConfig.FromDocument(dict(Document, workers=1))


def test_InvalidYamlRejected(tmp_path):
    ConfigPath = tmp_path / "broken.yaml"
    ConfigPath.write_text("algorithm: [kan-sps-reg\n")
    with pytest.raises(ConfigError):
        ExperimentConfig.Load(ConfigPath)


def test_SaveRoundTrips(tmp_path):
    Config = ExperimentConfig(Algorithms=["kan-sas-1"], Problems=["rosenbrock"], Dimensions=[2],
                              Repetitions=2, OutputDir=str(tmp_path), Workers=1, SwapVariants=True)
    SavedPath = Config.Save(tmp_path / "saved.yaml")
    assert yaml.safe_load(SavedPath.read_text())["swap_variants"] is True
    assert ExperimentConfig.Load(SavedPath) == Config


def test_RunConfigDefaultsBudgetPerFramework():
    Config = ExperimentConfig(Workers=1)
    assert Config.RunConfig("kan-sps-reg", "ellipsoid", 5)["fes_max"] == 2000
    Sas = Config.RunConfig("kan-sas-2", "ellipsoid", 5)
    assert Sas["fes_max"] == 300 and Sas["variant"] == 2 and Sas["tau"] == 50
    Random = Config.RunConfig("sps-random", "ellipsoid", 5)
    assert Random["backend"] is None and "steps" not in Random
    assert "grid_updates" not in Random
    assert Config.RunConfig("kan-sps-reg", "ellipsoid", 5)["grid_updates"] == 4
    assert ExperimentConfig(GridUpdates=0, Workers=1).RunConfig("kan-sas-1", "ellipsoid", 5)["grid_updates"] == 0


def test_EnvironmentDefaults(monkeypatch):
    monkeypatch.setenv("KANSAEA_WORKERS", "4")
    monkeypatch.setenv("KANSAEA_OUTPUT_DIR", "Elsewhere")
    monkeypatch.setenv("KANSAEA_LOG_LEVEL", "debug")
    assert DefaultWorkers() == 4
    assert DefaultLogLevel() == "DEBUG"
    Config = ExperimentConfig()
    assert Config.Workers == 4 and Config.OutputDir == "Elsewhere"

    monkeypatch.setenv("KANSAEA_WORKERS", "many")
    with pytest.raises(ConfigError):
        DefaultWorkers()
