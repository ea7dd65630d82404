import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import oracles
from conftest import FAVORITENSTRASSE, KARLSPLATZ, x_xi
from evoweights.core import ColumnMeans, NormalizedMatrix, WeightVector, column_means
from evoweights.equilibrium import fixed_point
from evoweights.metrics import feature_impact, impact_norm, qualified_impact_norm, top_cohort


@pytest.fixture(scope="module")
def office_star(office):
    _, _, phi, means = office
    return phi, means, fixed_point(means)


def test_office_impact_norm(office_star):
    _, means, star = office_star
    assert impact_norm(means, star) == pytest.approx(0.0739, abs=2e-3)


def test_office_qualified_impact_norm(office_star):
    phi, _, star = office_star
    assert set(top_cohort(phi)) == {KARLSPLATZ, FAVORITENSTRASSE}
    assert qualified_impact_norm(phi, star) == pytest.approx(0.1785, abs=2e-3)


def test_cohort_size_rule_reproduces_printed_value(office_star):
    # only a two-row cohort lands on 0.1785
    phi, _, star = office_star
    values = {size: oracles.qualified_impact(phi.values.tolist(), list(star.weights), size) for size in (1, 2, 3)}
    close = [size for size, v in values.items() if abs(v - 0.1785) < 2e-3]
    assert close == [2] == [oracles.cohort_size(15)]


def test_office_feature_impact(office_star):
    phi, _, star = office_star
    np.testing.assert_allclose(feature_impact(phi, star), [0.18397, 0.15454, 0.20651, 0.33780], atol=1e-3)


def test_uniform_weights_have_zero_norms(office_star):
    phi, means, _ = office_star
    u = WeightVector.uniform(4)
    assert impact_norm(means, u) == 0
    assert qualified_impact_norm(phi, u) == 0


def test_single_feature_corner():
    assert impact_norm(ColumnMeans([1.0, 0.0]), WeightVector([1.0, 0.0])) == pytest.approx(1.0)


def test_single_row_cohort_is_impact_norm():
    phi = NormalizedMatrix([[0.2, 0.9, 0.4]])
    g = WeightVector([0.5, 0.3, 0.2])
    assert qualified_impact_norm(phi, g) == pytest.approx(impact_norm(column_means(phi), g), abs=1e-15)


def test_cohort_ties_go_to_lower_index():
    phi = NormalizedMatrix(np.full((12, 2), 0.5))
    np.testing.assert_array_equal(top_cohort(phi), [0, 1])


def test_feature_impact_special_columns():
    phi = NormalizedMatrix([[0.3, 1.0], [0.3, 0.0], [0.3, 1.0]])
    g = WeightVector([0.4, 0.6])
    np.testing.assert_allclose(feature_impact(phi, g), [0.0, 0.6])


def test_feature_impact_minimal_example():
    phi = NormalizedMatrix(x_xi(0.0))
    np.testing.assert_allclose(feature_impact(phi, fixed_point(column_means(phi))), [0.1875, 0.3125])


instances = st.tuples(st.integers(1, 40), st.integers(2, 8)).flatmap(
    lambda s: st.tuples(
        arrays(np.float64, s, elements=st.floats(0, 1)),
        arrays(np.float64, s[1], elements=st.floats(0.01, 1)),
        st.permutations(range(s[1])),
    )
)


@given(instances)
def test_metric_properties(inst):
    values, raw, perm = inst
    phi, g = NormalizedMatrix(values), WeightVector(raw)
    means = column_means(phi)
    zeta = feature_impact(phi, g)
    assert impact_norm(means, g) >= 0
    assert qualified_impact_norm(phi, g) >= 0
    assert np.all((zeta >= 0) & (zeta <= g.weights))

    levels = list(means.means)
    assert impact_norm(means, g) == pytest.approx(oracles.impact(levels, list(g.weights)), abs=1e-14)

    perm = list(perm)
    phi_p, g_p = NormalizedMatrix(values[:, perm]), WeightVector(g.weights[perm])
    np.testing.assert_allclose(feature_impact(phi_p, g_p), zeta[perm], rtol=0, atol=1e-15)
    assert impact_norm(column_means(phi_p), g_p) == pytest.approx(impact_norm(means, g), abs=1e-14)
    assert qualified_impact_norm(phi_p, g_p) == pytest.approx(qualified_impact_norm(phi, g), abs=1e-14)
