import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import KARLSPLATZ
from evoweights.core import NormalizedMatrix, WeightVector, column_means
from evoweights.dynamics import PositivityViolation, delta_bal, delta_dom, replicator_update, step
from evoweights.equilibrium import fixed_point
from evoweights.strategies import (
    ZeroFitnessRowError,
    aggregate_delta,
    dependence,
    gene_strategy,
    global_fitness,
    organism_strategy,
    organism_strategy_from_dependence,
)


def test_global_fitness_office(office):
    _, _, phi, means = office
    assert global_fitness(phi, fixed_point(means))[KARLSPLATZ] == pytest.approx(0.793484, abs=1e-6)
    assert global_fitness(phi, WeightVector.uniform(4)).max() == pytest.approx(0.755979, abs=1e-6)


def test_global_fitness_all_ones():
    r = global_fitness(NormalizedMatrix(np.ones((3, 4))), WeightVector([0.1, 0.2, 0.3, 0.4]))
    np.testing.assert_allclose(r, 1.0, atol=1e-15)


def test_dependence_examples(office):
    balanced = dependence(NormalizedMatrix([[0.5, 0.25]]), WeightVector([1 / 3, 2 / 3]))
    np.testing.assert_allclose(balanced.mu, [[0.5, 0.5]])
    single = dependence(NormalizedMatrix([[1.0, 0.0]]), WeightVector([0.5, 0.5]))
    np.testing.assert_array_equal(single.mu, [[1.0, 0.0]])
    _, _, phi, means = office
    mu = dependence(NormalizedMatrix(phi.values[[12]]), fixed_point(means))
    assert mu.row_sums()[0] == pytest.approx(1.0, abs=1e-12)


def test_dependence_zero_row():
    with pytest.raises(ZeroFitnessRowError) as info:
        dependence(NormalizedMatrix([[0.3, 0.2], [0.0, 0.0]]), WeightVector([0.5, 0.5]))
    assert info.value.row == 1


def test_gene_strategy_examples():
    assert gene_strategy(NormalizedMatrix([[0.5, 0.5]]), WeightVector([0.3, 0.7]))[0, 0] == 0
    g = gene_strategy(NormalizedMatrix([[1.0, 0.0, 0.0, 0.0]]), WeightVector.uniform(4))
    assert g[0, 0] == pytest.approx(0.125)


def test_organism_strategy_examples():
    balanced = organism_strategy(NormalizedMatrix([[0.5, 0.25]]), WeightVector([1 / 3, 2 / 3]))
    np.testing.assert_allclose(balanced, 0.0, atol=1e-16)
    phi, gamma = NormalizedMatrix([[1.0, 0.0]]), WeightVector([0.5, 0.5])
    np.testing.assert_allclose(organism_strategy(phi, gamma), [[-0.5, 0.5]])
    np.testing.assert_allclose(organism_strategy_from_dependence(phi, gamma), [[-0.5, 0.5]])
    zero = organism_strategy(NormalizedMatrix([[0.0, 0.0], [1.0, 1.0]]), gamma)
    np.testing.assert_array_equal(zero[0], [0.0, 0.0])


def instances(min_entry=0.0):
    shapes = st.tuples(st.integers(1, 30), st.integers(2, 10))
    return shapes.flatmap(
        lambda s: st.tuples(
            arrays(np.float64, s, elements=st.floats(min_entry, 1)),
            arrays(np.float64, s[1], elements=st.floats(0.01, 1)),
        )
    )


@given(instances())
def test_gene_strategy_averages_to_dominance(inst):
    values, raw = inst
    phi, gamma = NormalizedMatrix(values), WeightVector(raw)
    means = column_means(phi)
    np.testing.assert_allclose(gene_strategy(phi, gamma).mean(axis=0), delta_dom(gamma, means), rtol=0, atol=1e-12)


@given(instances(min_entry=0.01))
def test_organism_strategy_averages_to_balance(inst):
    values, raw = inst
    phi, gamma = NormalizedMatrix(values), WeightVector(raw)
    means = column_means(phi)
    np.testing.assert_allclose(organism_strategy(phi, gamma).mean(axis=0), delta_bal(gamma, means), rtol=0, atol=1e-12)
    np.testing.assert_allclose(organism_strategy_from_dependence(phi, gamma), organism_strategy(phi, gamma), rtol=0, atol=1e-12)


@given(instances(min_entry=0.01))
def test_dependence_rows_sum_to_one(inst):
    values, raw = inst
    mu = dependence(NormalizedMatrix(values), WeightVector(raw))
    np.testing.assert_allclose(mu.row_sums(), 1.0, rtol=0, atol=1e-12)
    assert np.all(mu.mu >= 0)


@given(instances())
def test_replicator_from_per_row_strategies_matches_step(inst):
    values, raw = inst
    phi, gamma = NormalizedMatrix(values), WeightVector(raw)
    try:
        expected = step(gamma, column_means(phi))
    except PositivityViolation:
        return
    via_rows = replicator_update(gamma, aggregate_delta(phi, gamma).total)
    np.testing.assert_allclose(via_rows.weights, expected.weights, rtol=0, atol=1e-14)
