# File: test_Surrogate.py
# Path: Tests/Unit/test_Surrogate.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  11:35PM
# Description: Surrogate fit/predict/select, quantile labels and score tests

import numpy as np
import pytest

from KanSaea.Datasets import CandidateSet, TrainingSet
from KanSaea.Errors import (ConfigError, InputShapeError, NotFittedError, SizeError,
                            TrainingDivergedError, UndefinedScoreError)
from KanSaea.Surrogate import (AccuracyScore, Backend, FitSurrogate, LabelByQuantile, PredictLabels,
                               PredictValues, R2Score, SelectBest, SelectTopK, Surrogate, Task)


def test_LabelByQuantileCountsCeiling():
    Values = np.array([5.0, 1.0, 4.0, 2.0, 3.0, 9.0, 8.0, 7.0, 6.0, 0.0])
    Labels = LabelByQuantile(Values, 0.3)
    assert Labels.sum() == 3
    np.testing.assert_array_equal(np.flatnonzero(Labels), [1, 3, 9])
    assert LabelByQuantile(np.arange(7.0), 0.5).sum() == 4


def test_LabelByQuantileTiesGoToEarlierIndex():
    Labels = LabelByQuantile(np.array([1.0, 0.0, 1.0, 1.0]), 0.5)
    np.testing.assert_array_equal(Labels, [1, 1, 0, 0])


def test_LabelByQuantileRejectsBadInput():
    with pytest.raises(InputShapeError):
        LabelByQuantile(np.array([]), 0.5)
    with pytest.raises(ConfigError):
        LabelByQuantile(np.ones(3), 1.0)


def test_PredictBeforeFitRaises():
    Model = Surrogate(Backend.KAN, Task.REGRESSION)
    with pytest.raises(NotFittedError):
        Model.PredictValues(np.zeros((2, 2)))


@pytest.mark.parametrize("ModelBackend", [Backend.KAN, Backend.MLP])
def test_RegressionFitsSphere(ModelBackend, SphereData):
    Model = FitSurrogate(ModelBackend, Task.REGRESSION, SphereData, Steps=50, Seed=0)
    Predictions = PredictValues(Model, SphereData.Inputs)
    assert Predictions.shape == (SphereData.Size,)
    assert R2Score(SphereData.Targets, Predictions) > 0.7


def test_SelectBestFindsSmallestPrediction(SphereData):
    Model = FitSurrogate(Backend.KAN, Task.REGRESSION, SphereData, Steps=50, Seed=0)
    Candidates = np.array([[0.9, 0.9], [0.0, 0.05], [-0.8, 0.7]])
    assert SelectBest(Model, Candidates, np.random.default_rng(0)) == 1
    np.testing.assert_array_equal(SelectTopK(Model, CandidateSet(Candidates), 1), [1])


def test_SelectTopKOrderAndSize(SphereData):
    Model = FitSurrogate(Backend.KAN, Task.REGRESSION, SphereData, Steps=30, Seed=1)
    Candidates = np.random.default_rng(3).uniform(-1, 1, size=(10, 2))
    Top = SelectTopK(Model, Candidates, 4)
    Predictions = Model.PredictValues(Candidates)
    assert len(set(Top.tolist())) == 4
    assert np.all(np.diff(Predictions[Top]) >= 0.0)
    assert Predictions[Top].max() <= np.delete(Predictions, Top).min()
    assert SelectTopK(Model, Candidates, 0).shape == (0,)
    with pytest.raises(SizeError):
        SelectTopK(Model, Candidates, 11)


def test_ClassificationSeparatesHalfPlanes():
    Generator = np.random.default_rng(4)
    Inputs = Generator.uniform(-1, 1, size=(60, 2))
    Inputs = Inputs[np.abs(Inputs[:, 0]) > 0.15]
    Labels = (Inputs[:, 0] < 0).astype(int)
    Model = FitSurrogate(Backend.KAN, Task.CLASSIFICATION, TrainingSet(Inputs, Labels), Steps=50, Seed=0)
    Predicted, Probabilities = PredictLabels(Model, Inputs)
    assert AccuracyScore(Labels, Predicted) >= 0.95
    assert np.all((Probabilities >= 0.0) & (Probabilities <= 1.0))


def test_ClassificationSelectBestPicksPromisingCandidate():
    Generator = np.random.default_rng(4)
    Inputs = Generator.uniform(-1, 1, size=(60, 2))
    Inputs = Inputs[np.abs(Inputs[:, 0]) > 0.15]
    Model = FitSurrogate(Backend.MLP, Task.CLASSIFICATION,
                         TrainingSet(Inputs, (Inputs[:, 0] < 0).astype(int)), Steps=50, Seed=0)
    Candidates = np.array([[0.8, 0.0], [0.9, 0.5], [-0.8, 0.1], [0.7, -0.4]])
    assert SelectBest(Model, Candidates, np.random.default_rng(1)) == 2


def test_TaskMismatchRejected(SphereData):
    Model = FitSurrogate(Backend.MLP, Task.REGRESSION, SphereData, Steps=5)
    with pytest.raises(ConfigError):
        Model.PredictLabels(SphereData.Inputs)


def test_FitIsSeeded(SphereData):
    First = FitSurrogate(Backend.KAN, Task.REGRESSION, SphereData, Steps=10, Seed=3)
    Second = FitSurrogate(Backend.KAN, Task.REGRESSION, SphereData, Steps=10, Seed=3)
    Points = np.array([[0.1, -0.2], [0.5, 0.5]])
    np.testing.assert_array_equal(First.PredictValues(Points), Second.PredictValues(Points))


def test_DivergedFitCarriesModel(monkeypatch, SphereData):
    import KanSaea.KanCore as KanCore

    def Explode(*Args, **Kwargs):
        raise TrainingDivergedError("loss became non-finite")

    monkeypatch.setattr(KanCore, "LbfgsMinimize", Explode)
    Model = Surrogate(Backend.MLP, Task.REGRESSION, Steps=5)
    with pytest.raises(TrainingDivergedError) as Caught:
        Model.Fit(SphereData)
    assert Caught.value.Model is Model


def test_R2AndAccuracy():
    assert R2Score([1.0, 2.0, 3.0], [1.0, 2.0, 3.0]) == 1.0
    assert R2Score([1.0, 2.0, 3.0], [2.0, 2.0, 2.0]) == pytest.approx(0.0)
    assert R2Score([1.0, 2.0, 3.0], [1.0, 2.0, 4.0]) == pytest.approx(0.5)
    with pytest.raises(UndefinedScoreError):
        R2Score([2.0, 2.0], [1.0, 3.0])
    assert AccuracyScore([1, 0, 1, 1], [1, 1, 1, 0]) == 0.5


def _FixedClassifier(monkeypatch, Probabilities):
    Probabilities = np.asarray(Probabilities, dtype=float)
    Model = Surrogate(Backend.KAN, Task.CLASSIFICATION)
    monkeypatch.setattr(Model, "PredictLabels",
                        lambda U: ((Probabilities >= 0.5).astype(int), Probabilities))
    return Model, np.zeros((Probabilities.shape[0], 2))


def test_ClassificationSelectBestIsUniformOverPromising(monkeypatch):
    Model, Candidates = _FixedClassifier(monkeypatch, [0.1, 0.8, 0.6])
    Generator = np.random.default_rng(0)
    Counts = np.bincount([SelectBest(Model, Candidates, Generator) for _ in range(10000)], minlength=3)
    assert Counts[0] == 0
    np.testing.assert_allclose(Counts[1:] / 10000, 0.5, atol=0.02)


def test_ClassificationSelectBestFallsBackToAnyCandidate(monkeypatch):
    Model, Candidates = _FixedClassifier(monkeypatch, [0.1, 0.2, 0.3, 0.4])
    Generator = np.random.default_rng(1)
    Counts = np.bincount([SelectBest(Model, Candidates, Generator) for _ in range(4000)], minlength=4)
    assert Counts.shape == (4,) and np.all(Counts > 0)
    np.testing.assert_allclose(Counts / 4000, 0.25, atol=0.03)


def test_ClassificationSelectTopKByProbability(monkeypatch):
    Model, Candidates = _FixedClassifier(monkeypatch, [0.9, 0.2, 0.7])
    np.testing.assert_array_equal(SelectTopK(Model, Candidates, 2), [0, 2])
    np.testing.assert_array_equal(SelectTopK(Model, Candidates, 3), [0, 2, 1])


def test_FarCandidatesScoredAtDataEdge(SphereData):
    Model = FitSurrogate(Backend.KAN, Task.REGRESSION, SphereData, Steps=30, Seed=0)
    Edge = Model.InputMean + Model.InputScale * Model.InputHigh
    Far = np.array([[50.0, 50.0], Edge])
    Predictions = Model.PredictValues(Far)
    assert np.all(np.isfinite(Predictions))
    assert Predictions[0] == pytest.approx(Predictions[1], rel=1e-9, abs=1e-9)
    # the clamp is the first-layer grid range
    Grids = Model.Model.Layers[0].Grids
    np.testing.assert_allclose(Model.InputHigh, [Grid.Upper for Grid in Grids])
    np.testing.assert_allclose(Model.InputLow, [Grid.Lower for Grid in Grids])
    np.testing.assert_array_equal(Model.PredictValues(SphereData.Inputs),
                                  Model.Model.Predict(Model._Standardize(SphereData.Inputs)))


def test_PredictRejectsWrongDimension(SphereData):
    Model = FitSurrogate(Backend.MLP, Task.REGRESSION, SphereData, Steps=5)
    with pytest.raises(InputShapeError):
        Model.PredictValues(np.zeros((2, 3)))


def test_SingleSampleSurrogate():
    Model = FitSurrogate(Backend.KAN, Task.REGRESSION, TrainingSet(np.array([[0.2, 0.4]]), np.array([3.0])),
                         Steps=50)
    assert Model.PredictValues(np.array([[0.2, 0.4]]))[0] == pytest.approx(3.0, abs=1e-3)
    np.testing.assert_array_equal(Model.InputLow, [-0.5, -0.5])
    np.testing.assert_array_equal(Model.InputHigh, [0.5, 0.5])
