import math

import numpy as np
import pytest

from agspectra.enumeration import enumerate_trees, enumerate_unicyclic
from agspectra.graphs import Graph, degrees, make_cycle, make_path, make_star
from agspectra.matrices import (
    IndexKind,
    WeightScheme,
    build_weighted,
    matrix_dominates,
    matrix_to_csv,
    topological_index,
)


def test_weight_rules_at_known_points():
    assert WeightScheme.ADJACENCY.weight(3, 7) == 1.0
    assert WeightScheme.AG.weight(2, 2) == 1.0
    assert WeightScheme.AG.weight(1, 4) == 5.0 / 4.0
    assert WeightScheme.RANDIC_PRINTED.weight(2, 4) == 0.125
    assert WeightScheme.RANDIC_SQRT.weight(4, 4) == 0.25
    assert WeightScheme.EXTENDED.weight(1, 2) == 1.25
    assert WeightScheme.ABC.weight(2, 2) == math.sqrt(0.5)


def test_scheme_values_round_trip():
    for s in WeightScheme:
        assert WeightScheme(s.value) is s
    assert WeightScheme("randic") is WeightScheme.RANDIC_PRINTED


def test_ag_weight_at_least_one_iff_equal_degrees():
    # arithmetic vs geometric mean: ratio 1 exactly when x = y
    for x in range(1, 12):
        for y in range(1, 12):
            w = WeightScheme.AG.weight(x, y)
            if x == y:
                assert w == 1.0
            else:
                assert w > 1.0


def test_matrix_is_symmetric_with_zero_diagonal():
    g = make_star(6)
    for s in WeightScheme:
        m = build_weighted(g, s)
        assert np.array_equal(m, m.T)
        assert np.all(np.diag(m) == 0.0)
        assert np.count_nonzero(m) == 2 * g.m


def test_ag_equals_adjacency_on_regular_graphs():
    for g in (make_cycle(5), make_cycle(8), Graph(2, ((0, 1),))):
        assert np.array_equal(
            build_weighted(g, WeightScheme.AG), build_weighted(g, WeightScheme.ADJACENCY)
        )


def test_ag_dominates_adjacency_everywhere():
    pool = list(enumerate_trees(7)) + list(enumerate_unicyclic(7))
    for g in pool:
        ag = build_weighted(g, WeightScheme.AG)
        adj = build_weighted(g, WeightScheme.ADJACENCY)
        assert matrix_dominates(ag, adj)


def test_star_matrix_entries():
    m = build_weighted(make_star(5), WeightScheme.AG)
    # every edge joins degrees 4 and 1: weight 5/4
    assert np.allclose(m[0, 1:], 1.25)
    assert m[1, 2] == 0.0


def test_isolated_vertices_rejected_for_degree_schemes():
    g = Graph(3)
    with pytest.raises(ValueError):
        build_weighted(g, WeightScheme.AG)
    # adjacency scheme needs no degrees
    assert np.array_equal(build_weighted(g, WeightScheme.ADJACENCY), np.zeros((3, 3)))


def test_degree_override():
    g = make_path(3)
    m = build_weighted(g, WeightScheme.AG, override=(2, 2, 2))
    assert np.allclose(m[0, 1], 1.0)
    assert np.allclose(m[1, 2], 1.0)
    with pytest.raises(ValueError):
        build_weighted(g, WeightScheme.AG, override=(2, 2))
    with pytest.raises(ValueError):
        build_weighted(g, WeightScheme.AG, override=(0, 2, 2))


def test_indices_on_the_star():
    g = make_star(5)
    # 4 edges with endpoint degrees (4, 1)
    assert topological_index(g, IndexKind.AG_INDEX) == pytest.approx(4 * 5 / 4)
    assert topological_index(g, IndexKind.R_MINUS1) == pytest.approx(1.0)
    assert topological_index(g, IndexKind.SDD) == pytest.approx(4 * (4 + 0.25))
    assert topological_index(g, IndexKind.ABC_INDEX) == pytest.approx(4 * math.sqrt(3 / 4))
    assert topological_index(g, IndexKind.M1) == pytest.approx(20.0)


def test_index_on_cycle_and_errors():
    g = make_cycle(6)
    assert topological_index(g, IndexKind.AG_INDEX) == pytest.approx(6.0)
    assert topological_index(g, IndexKind.SDD) == pytest.approx(12.0)
    with pytest.raises(ValueError):
        topological_index(Graph(3), IndexKind.AG_INDEX)


def test_ag_index_upper_bounds_radius_scale():
    # row sums of the AG matrix total twice the AG index
    for g in enumerate_trees(6):
        m = build_weighted(g, WeightScheme.AG)
        assert float(m.sum()) == pytest.approx(2 * topological_index(g, IndexKind.AG_INDEX))


def test_matrix_dominates_shape_and_sign():
    a = np.ones((2, 2))
    assert matrix_dominates(a, np.zeros((2, 2)))
    assert not matrix_dominates(np.zeros((2, 2)), a)
    assert not matrix_dominates(a, -a)
    with pytest.raises(ValueError):
        matrix_dominates(a, np.zeros((3, 3)))


def test_matrix_to_csv_is_lossless():
    m = build_weighted(make_star(4), WeightScheme.AG)
    text = matrix_to_csv(m)
    rows = [list(map(float, ln.split(","))) for ln in text.strip().splitlines()]
    assert np.array_equal(np.array(rows), m)
