# File: test_Operators.py
# Path: Tests/Unit/test_Operators.py
# Standard: AIDEV-PascalCase-1.6
# Created: 2026-10-17
# Last Modified: 2026-10-17  08:30PM
# Description: CoDE mutation, crossover, repair and VWH histogram tests

import numpy as np
import pytest

import KanSaea.Operators as Operators
from KanSaea.Errors import ConfigError, InputShapeError, OperatorArityError
from KanSaea.Operators import (CURRENT_TO_RAND_1, RAND_1, RAND_2, BinomialCrossover, CoDEConfig,
                               CodeTrials, CurrentToRand1, MutateRand1, MutateRand2, RepairBounds,
                               VwhBuild, VwhModel, VwhSample)


def test_Rand1Example():
    Mutant = MutateRand1(np.array([0.0, 0.0]), np.array([1.0, 2.0]), np.array([0.0, 1.0]), 0.5)
    np.testing.assert_allclose(Mutant, [0.5, 0.5])


def test_Rand2AddsBothDifferences():
    Mutant = MutateRand2(np.zeros(2), np.ones(2), np.zeros(2), np.array([2.0, 0.0]), np.zeros(2), 0.5)
    np.testing.assert_allclose(Mutant, [1.5, 0.5])


def test_CurrentToRandEndpoints():
    Target, Other = np.array([1.0, 1.0]), np.array([3.0, -1.0])
    Same = np.zeros(2)
    np.testing.assert_allclose(CurrentToRand1(Target, Other, Same, Same, 0.0, 0.8), Target)
    np.testing.assert_allclose(CurrentToRand1(Target, Other, Same, Same, 1.0, 0.8), Other)


def test_ZeroScaleWithFullCrossoverReturnsBase(Rng):
    Base = np.array([0.3, -1.2, 4.0])
    Mutant = MutateRand1(Base, np.ones(3), -np.ones(3), 0.0)
    Trial = BinomialCrossover(np.full(3, 9.0), Mutant, 1.0, Rng)
    np.testing.assert_array_equal(Trial, Base)


def test_CrossoverAlwaysTakesOneMutantGene(Rng):
    Target, Mutant = np.zeros(6), np.ones(6)
    for _ in range(50):
        Trial = BinomialCrossover(Target, Mutant, 0.0, Rng)
        assert Trial.sum() == 1.0


def test_RepairWithoutParentResamplesViolations(Rng, Box):
    X = np.array([-7.0, 2.0, 9.0])
    Repaired = RepairBounds(X, Box, Rng)
    assert Repaired[1] == 2.0
    assert np.all(Repaired >= -5.0) and np.all(Repaired <= 5.0)
    np.testing.assert_array_equal(X, [-7.0, 2.0, 9.0])


def test_RepairWithParentDrawsBetweenBoundAndMidpoint(Rng, Box):
    Parent = np.array([1.0, 0.0, -3.0])
    for _ in range(200):
        Repaired = RepairBounds(np.array([-6.0, 0.5, 8.0]), Box, Rng, Parent=Parent)
        assert -5.0 <= Repaired[0] <= -2.0
        assert Repaired[1] == 0.5
        assert 1.0 <= Repaired[2] <= 5.0


def test_InBoundsVectorUntouched(Rng, Box):
    X = np.array([-5.0, 0.0, 5.0])
    np.testing.assert_array_equal(RepairBounds(X, Box, Rng, Parent=np.zeros(3)), X)


def test_TrialsStayInBounds(Rng, Box):
    Pop = Rng.uniform(-5.0, 5.0, size=(10, 3))
    Pop[0] = [5.0, 5.0, 5.0]
    for Target in range(10):
        Trials = CodeTrials(Target, Pop, Box, 3, Rng)
        assert Trials.shape == (3, 3)
        assert np.all(Trials >= -5.0) and np.all(Trials <= 5.0)


def test_TooSmallPopulationRaises(Rng, Box):
    assert CoDEConfig().MinPopulation == 6
    with pytest.raises(OperatorArityError):
        CodeTrials(0, Rng.uniform(-5.0, 5.0, size=(5, 3)), Box, 3, Rng)
    CodeTrials(0, Rng.uniform(-5.0, 5.0, size=(6, 3)), Box, 3, Rng)


def test_ThreeTrialsUseEachStrategyOnce(monkeypatch, Rng, Box):
    Used = []
    Original = Operators._Trial

    def Recording(Strategy, *Args):
        Used.append(Strategy)
        return Original(Strategy, *Args)

    monkeypatch.setattr(Operators, "_Trial", Recording)
    CodeTrials(2, Rng.uniform(-5.0, 5.0, size=(8, 3)), Box, 3, Rng)
    assert Used == [RAND_1, RAND_2, CURRENT_TO_RAND_1]


def test_DonorsAreDistinctAndExcludeTarget(Rng):
    for _ in range(200):
        Donors = Operators._Donors(3, 6, 5, Rng)
        assert len(set(Donors.tolist())) == 5
        assert 3 not in Donors


def test_TrialsAreSeeded(Box):
    Pop = np.random.default_rng(0).uniform(-5.0, 5.0, size=(12, 3))
    First = CodeTrials(4, Pop, Box, 5, np.random.default_rng(99))
    Second = CodeTrials(4, Pop, Box, 5, np.random.default_rng(99))
    np.testing.assert_array_equal(First, Second)


def test_InvalidConfigRejected(Rng, Box):
    with pytest.raises(ConfigError):
        CoDEConfig(Strategies=(RAND_1, RAND_2))
    with pytest.raises(ConfigError):
        CoDEConfig(Strategies=(RAND_1, RAND_2, "best/1/bin"))
    with pytest.raises(ConfigError):
        CodeTrials(0, np.zeros((6, 3)), Box, 0, Rng)


def test_VwhProbabilitiesSumToOne(Rng, Box):
    Model = VwhBuild(Rng.uniform(-1.0, 2.0, size=(30, 3)), Box, M=10)
    assert Model.Dimension == 3
    for Edges, Mass in zip(Model.Edges, Model.Probabilities):
        assert Mass.sum() == pytest.approx(1.0, abs=1e-12)
        assert Edges[0] == -5.0 and Edges[-1] == 5.0
        assert Mass.shape[0] == 10


def test_VwhEndBinsCarryReducedMass(Box):
    Pop = np.linspace(-1.0, 1.0, 8)[:, None].repeat(3, axis=1)
    Model = VwhBuild(Pop, Box, M=10)
    Mass = Model.Probabilities[0]
    # 8 interior bins with weight count + 1 = 2 each, end bins 0.1 * 16 / 8
    np.testing.assert_allclose(Mass[1:-1], 2.0 / 16.4)
    np.testing.assert_allclose(Mass[[0, -1]], 0.2 / 16.4)


def test_VwhFullSpanWithThreeBinsIsOneBin():
    Model = VwhBuild(np.array([[-5.0], [5.0]]), (np.array([-5.0]), np.array([5.0])), M=3)
    np.testing.assert_array_equal(Model.Edges[0], [-5.0, 5.0])
    np.testing.assert_array_equal(Model.Probabilities[0], [1.0])


def test_VwhDegenerateColumnGetsNarrowWindow(Box):
    Model = VwhBuild(np.full((5, 3), 1.0), Box, M=10)
    Edges = Model.Edges[0]
    assert Edges[1] == pytest.approx(1.0 - 10.0 / 10 / 4)
    assert Edges[-2] == pytest.approx(1.0 + 10.0 / 10 / 4)


def test_VwhRejectsBadInput(Box):
    with pytest.raises(ConfigError):
        VwhBuild(np.zeros((4, 3)), Box, M=2)
    with pytest.raises(InputShapeError):
        VwhModel([np.array([0.0, 1.0])], [np.array([0.7])])


def test_VwhSampleMatchesBinMasses(Box):
    Model = VwhBuild(np.random.default_rng(5).uniform(0.0, 3.0, size=(20, 3)), Box, M=8)
    Samples = VwhSample(Model, 100000, np.random.default_rng(6))
    assert np.all(Samples >= -5.0) and np.all(Samples <= 5.0)
    for Dim in range(3):
        Counts, _ = np.histogram(Samples[:, Dim], bins=Model.Edges[Dim])
        np.testing.assert_allclose(Counts / 100000.0, Model.Probabilities[Dim], atol=0.01)


def test_VwhSampleIsSeeded(Rng, Box):
    Model = VwhBuild(Rng.uniform(-5.0, 5.0, size=(10, 3)), Box)
    np.testing.assert_array_equal(VwhSample(Model, 7, np.random.default_rng(1)),
                                  VwhSample(Model, 7, np.random.default_rng(1)))
