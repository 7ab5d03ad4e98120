import numpy as np
import pytest

import oracles
from unitcodes.codes import Basis, LinearCode, code_from_incidence, incidence_matrix, predict_code_params
from unitcodes.gf import matrix, rank
from unitcodes.graph import GraphNotConnected, UnitGraph, build_unit_graph


def test_incidence_examples():
    assert incidence_matrix(build_unit_graph(2)).tolist() == [[1], [1]]
    h4 = incidence_matrix(build_unit_graph(4))
    assert h4.shape == (4, 4)
    assert (h4.entries.sum(axis=0) == 2).all() and (h4.entries.sum(axis=1) == 2).all()
    h5 = incidence_matrix(build_unit_graph(5))
    assert h5.shape == (5, 8)
    assert h5.entries.sum(axis=1).tolist() == [4, 3, 3, 3, 3]


@pytest.mark.parametrize("n", [3, 6, 7, 10, 12])
def test_incidence_matches_oracle(n):
    edges = oracles.unit_graph_edges(n)
    assert incidence_matrix(build_unit_graph(n), 3).tolist() == oracles.incidence(n, edges)


def test_code_examples():
    c = code_from_incidence(build_unit_graph(4), 3)
    assert (c.length, c.dimension) == (4, 3)
    c = code_from_incidence(build_unit_graph(5), 2)
    assert (c.length, c.dimension) == (8, 4)
    # outside the predicted regimes, recorded only
    c = code_from_incidence(build_unit_graph(5), 3)
    assert (c.length, c.dimension) == (8, 5)


@pytest.mark.parametrize("n,q", [(5, 2), (9, 2), (8, 3), (6, 3), (12, 5), (15, 2), (10, 3)])
def test_generator_and_parity_check(n, q):
    c = code_from_incidence(build_unit_graph(n), q)
    assert c.generator.rows == c.dimension
    assert c.parity_check.rows == c.dual_dimension == c.length - c.dimension
    assert (c.generator @ c.parity_check.T).is_zero()
    assert rank(c.parity_check) == c.dual_dimension
    assert c.dual().dimension == c.dual_dimension
    assert c.dimension == oracles.rank(c.spanning.tolist(), q)


def test_contains():
    c = code_from_incidence(build_unit_graph(5), 2)
    assert c.contains(c.spanning.row(0))
    assert c.contains((c.spanning.row(0) + c.spanning.row(1)) % 2)
    unit_vector = np.zeros(c.length, dtype=np.int64)
    unit_vector[0] = 1
    assert not c.contains(unit_vector)


def test_disconnected_graph_rejected():
    with pytest.raises(GraphNotConnected):
        code_from_incidence(UnitGraph(4, np.array([[0, 1], [2, 3]])), 2)


def test_edgeless_graph_rejected():
    with pytest.raises(ValueError):
        incidence_matrix(UnitGraph(3, np.zeros((0, 2))))


def test_predicted_params_examples():
    p = predict_code_params(9, 2)
    assert (p.length, p.dimension, p.min_distance, p.dual_dimension, p.dual_min_distance) == (24, 8, 5, 16, 3)
    p = predict_code_params(8, 3)
    assert (p.length, p.dimension, p.min_distance, p.dual_dimension, p.dual_min_distance) == (16, 7, 4, 9, 4)
    p = predict_code_params(6, 3)
    assert (p.length, p.dimension, p.min_distance, p.dual_min_distance) == (6, 5, 2, None)
    assert p.basis is Basis.THEOREM


def test_predicted_params_regimes():
    assert predict_code_params(3, 2).dual_min_distance is None
    assert predict_code_params(2, 3).dual_min_distance is None
    assert predict_code_params(9, 3).basis is Basis.NONE
    assert predict_code_params(8, 2).basis is Basis.NONE
    p = predict_code_params(1155, 2)  # 3 * 5 * 7 * 11
    assert p.basis is Basis.CONJECTURE and p.dimension == 1154 and p.dual_min_distance is None
    with pytest.raises(ValueError):
        predict_code_params(1, 2)


def test_linear_code_from_arbitrary_matrix():
    c = LinearCode(matrix(3, [[1, 1, 1, 0], [2, 2, 2, 0]]))
    assert c.dimension == 1 and c.dual_dimension == 3
