from itertools import product

import numpy as np
import pytest
from hypothesis import given, assume, strategies as st

from grothmodt.core import InputError
from grothmodt.config import Configuration, configuration_from_dict, incidence_configuration, vandermonde_realization
from grothmodt.config import config_polynomial, graph_polynomial, det_mod_p, evaluate_graph_via_laplacian
from grothmodt.graph import build
from grothmodt.matroid import from_graph, uniform, popcount

from ._strategies import multigraphs


def test_vandermonde():
    w = vandermonde_realization(2, 4)
    assert w.rows == ((1, 1, 1, 1), (1, 2, 3, 4))
    assert w.labels == ("e1", "e2", "e3", "e4")
    assert w.matroid().bases == uniform(2, 4).bases


def test_vandermonde_invalid():
    with pytest.raises(InputError):
        vandermonde_realization(0, 3)
    with pytest.raises(InputError):
        vandermonde_realization(2, 3, nodes=[1, 1, 2])


def test_vandermonde_coefficients_are_squared_minors():
    poly = config_polynomial(vandermonde_realization(2, 4))
    assert poly.degree == 2
    assert poly.terms[0b0011] == 1
    assert poly.terms[0b1001] == 9
    assert poly.terms[0b1010] == 4
    assert len(poly.terms) == 6


def test_graph_polynomial():
    poly = graph_polynomial(build("C 3"))
    assert poly.terms == {0b011: 1, 0b101: 1, 0b110: 1}
    assert poly.to_list()[0] == {"basis": ["e1", "e2"], "coeff": 1}


def test_zero_outside():
    poly = graph_polynomial(build("C 3")).zero_outside(0b011)
    assert poly.size == 2
    assert poly.terms == {0b11: 1}
    assert poly.labels == ("e1", "e2")


def test_evaluate():
    poly = graph_polynomial(build("C 3"))
    assert poly.evaluate_mod_p([1, 1, 1], 5) == 3
    assert poly.evaluate_mod_p([1, 2, 0], 3) == 2
    with pytest.raises(InputError):
        poly.evaluate_mod_p([1, 1], 5)


def test_det_mod_p():
    assert det_mod_p([[1, 2], [3, 4]], 5) == 3
    assert det_mod_p([[0, 1], [1, 0]], 7) == 6
    assert det_mod_p([[2, 4], [1, 2]], 3) == 0
    assert det_mod_p([], 3) == 1


@pytest.mark.parametrize("expression", ["C 3", "W 3", "B 2", "T 2"])
def test_laplacian_matches_polynomial(expression):
    g = build(expression)
    poly = graph_polynomial(g)
    for point in product(range(3), repeat=g.num_edges):
        assert evaluate_graph_via_laplacian(g, point, 3) == poly.evaluate_mod_p(point, 3)


def test_laplacian_wrong_length():
    with pytest.raises(InputError):
        evaluate_graph_via_laplacian(build("C 3"), [1, 1], 3)


def test_dual():
    w = vandermonde_realization(2, 5)
    d = w.dual()
    assert d.rank == 3
    for a in w.rows:
        for b in d.rows:
            assert sum(x * y for x, y in zip(a, b)) == 0
    assert d.matroid() == w.matroid().dual()


def test_restrict():
    w = vandermonde_realization(2, 4)
    r = w.restrict(0b0110)
    assert r.size == 2
    assert r.rank == 2
    assert r.labels == ("e2", "e3")
    w = incidence_configuration(build("B 3"))
    r = w.restrict(0b011)
    assert r.rank == 1
    assert r.graph is None


def test_full_row_rank_required():
    with pytest.raises(InputError):
        Configuration([[1, 2, 3], [2, 4, 6]])


def test_from_dict():
    w = configuration_from_dict({"rows": [[1, 0, 1], [0, 1, 1]], "labels": ["a", "b", "c"]}, name="x")
    assert w.name == "x"
    assert w.matroid().uniform_signature() == (2, 3)
    assert w.to_dict() == {"rows": [[1, 0, 1], [0, 1, 1]], "labels": ["a", "b", "c"]}


@pytest.mark.parametrize("d", [[], {"labels": ["a"]}, {"rows": 3}, {"rows": []}])
def test_from_dict_invalid(d):
    with pytest.raises(InputError):
        configuration_from_dict(d)


def test_empty_configuration():
    w = configuration_from_dict({"rows": [], "labels": ["a", "b"]})
    assert w.rank == 0
    assert w.matroid().rank == 0
    assert config_polynomial(w).terms == {0: 1}


@given(multigraphs(max_edges=7))
def test_incidence_coefficients_are_one(g):
    w = incidence_configuration(g)
    plain = Configuration(w.rows, labels=w.labels, size=w.size)
    assert config_polynomial(plain).terms == config_polynomial(w).terms
    assert w.matroid() == from_graph(g)


@given(multigraphs(max_edges=7), st.data())
def test_homogeneity(g, data):
    poly = graph_polynomial(g)
    degree = from_graph(g).rank
    p = data.draw(st.sampled_from([3, 5, 7]))
    point = data.draw(st.lists(st.integers(0, p - 1), min_size=g.num_edges, max_size=g.num_edges))
    scale = data.draw(st.integers(1, p - 1))
    scaled = [(scale * x) % p for x in point]
    assert poly.evaluate_mod_p(scaled, p) == (pow(scale, degree, p) * poly.evaluate_mod_p(point, p)) % p


@pytest.mark.parametrize("n", [3, 4, 5])
def test_homogeneity_vandermonde(n):
    poly = config_polynomial(vandermonde_realization(2, n))
    point = list(range(1, n + 1))
    for scale in (2, 3, 4):
        scaled = [(scale * x) % 7 for x in point]
        assert poly.evaluate_mod_p(scaled, 7) == (scale ** 2 * poly.evaluate_mod_p(point, 7)) % 7


@given(multigraphs(max_edges=8), st.data())
def test_restriction_pointwise(g, data):
    assume(not all(g.is_loop(label) for label in g.edge_labels))
    w = incidence_configuration(g)
    subset = data.draw(st.sampled_from(w.matroid().spanning_subsets()))
    p = data.draw(st.sampled_from([3, 5, 7]))
    size = popcount(subset)
    point = data.draw(st.lists(st.integers(0, p - 1), min_size=size, max_size=size))
    left = config_polynomial(w).zero_outside(subset).evaluate_mod_p(point, p)
    right = config_polynomial(w.restrict(subset)).evaluate_mod_p(point, p)
    assert left == right


def test_restriction_pointwise_vandermonde():
    w = vandermonde_realization(2, 5)
    subset = 0b10110
    poly = config_polynomial(w).zero_outside(subset)
    restricted = config_polynomial(w.restrict(subset))
    for point in product(range(5), repeat=3):
        assert poly.evaluate_mod_p(point, 5) == restricted.evaluate_mod_p(point, 5)


@pytest.mark.parametrize("expression", ["C 5", "K 4", "W 4"])
@pytest.mark.parametrize("p", [3, 5, 7])
def test_laplacian_matches_polynomial_random(expression, p):
    g = build(expression)
    poly = graph_polynomial(g)
    rng = np.random.default_rng(p)
    for point in rng.integers(0, p, size=(1000, g.num_edges)).tolist():
        assert evaluate_graph_via_laplacian(g, point, p) == poly.evaluate_mod_p(point, p)
