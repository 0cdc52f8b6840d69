from itertools import product

import numpy as np
import pytest
from hypothesis import given, assume, strategies as st
from sympy import Matrix

from grothmodt.catalog import catalog_rows
from grothmodt.core import TARGET_Y, TARGET_YTORUS, InputError, BudgetExceededError
from grothmodt.config import Configuration, config_polynomial, graph_polynomial, incidence_configuration
from grothmodt.config import vandermonde_realization, det_mod_p
from grothmodt.engine import ClassModT, class_Y, class_Ytorus, compute_classes, corank_two_value, corank_two_candidate
from grothmodt.graph import build
from grothmodt.matroid import from_graph, uniform
from grothmodt.oracle import count_points, count_points_affine, count_table, projective_points, projective_size
from grothmodt.oracle import batched_det_mod_p, is_degenerate, check_congruence, verify_classes
from grothmodt.oracle import check_stratification_counts, check_restriction
from grothmodt.reader import graph_item

from ._strategies import multigraphs

ORACLE_GRAPHS = ["C 3", "C 4", "C 5", "B 3", "B 4", "T 3", "W 2", "W 3", "K 4", "K 2 3", "DoubleFan 2", "OpenDoubleFan 3"]

# (prime, maximum number of edges) for counting over the catalog
CATALOG_PRIMES = [(3, 12), (5, 10), (7, 8)]


def _catalog_cases():
    result = []
    for row in catalog_rows():
        edges = build(row.builder).num_edges
        for p, limit in CATALOG_PRIMES:
            if edges <= limit:
                result.append(pytest.param(row.builder, p, id="%s-%d" % (row.label, p)))
    return result


def test_projective_points():
    chunks = list(projective_points(3, 3))
    points = np.concatenate(chunks)
    assert len(points) == projective_size(3, 3) == 13
    for row in points:
        nonzero = [x for x in row if x != 0]
        assert nonzero[0] == 1
    assert len(set(tuple(r) for r in points)) == 13


def test_counts_triangle():
    counts = count_points(graph_polynomial(build("C 3")), 3)
    assert counts.n_projective == 13
    assert counts.n_x == 4
    assert counts.n_y == 9
    assert counts.residue(counts.n_y) == 1


def test_counts_banana():
    counts = count_points(graph_polynomial(build("B 2")), 3)
    assert (counts.n_y, counts.n_ytorus) == (3, 1)
    counts = count_points(graph_polynomial(build("T 1")), 5)
    assert (counts.n_y, counts.n_ytorus) == (1, 1)


def test_counts_cycle_residues():
    poly = graph_polynomial(build("C 4"))
    assert count_points(poly, 3).n_y % 2 == 1
    assert count_points(poly, 5).n_y % 4 == 3


def test_to_dict():
    d = count_points(graph_polynomial(build("C 3")), 3).to_dict()
    assert d["nY"] == 9
    assert d["modulus"] == 2
    assert d["residueY"] == 1
    assert not d["degenerate"]


def test_unsupported_prime():
    with pytest.raises(InputError):
        count_points(graph_polynomial(build("C 3")), 17)


def test_budget():
    with pytest.raises(BudgetExceededError):
        count_points(graph_polynomial(build("K 4")), 3, budget=100)
    with pytest.raises(BudgetExceededError):
        count_points_affine(graph_polynomial(build("C 4")), 3, budget=80)


@pytest.mark.parametrize("expression", ["C 4", "W 3", "B 3", "K 2 3"])
def test_affine_count(expression):
    g = build(expression)
    poly = graph_polynomial(g)
    for p in (3, 5):
        assert count_points_affine(poly, p) == count_points(poly, p).n_y


@pytest.mark.parametrize("expression", ["C 4", "W 3", "K 2 3", "T 3"])
def test_laplacian_path(expression):
    g = build(expression)
    poly = graph_polynomial(g)
    for p in (3, 5):
        assert count_points(poly, p, graph=g) == count_points(poly, p)


@given(st.integers(min_value=1, max_value=4), st.sampled_from([3, 5, 7]), st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_batched_det(k, p, seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(0, p, size=(8, k, k))
    result = batched_det_mod_p(a.copy(), p)
    for i in range(8):
        assert int(result[i]) == int(Matrix(a[i].tolist()).det()) % p
        assert det_mod_p(a[i].tolist(), p) == int(result[i])


def test_degenerate():
    poly = config_polynomial(vandermonde_realization(2, 4))
    assert is_degenerate(poly, 3)
    assert not is_degenerate(poly, 5)
    assert count_points(poly, 3).degenerate


def test_count_table():
    table = count_table(graph_polynomial(build("C 3")), [3, 5])
    assert [c.p for c in table] == [3, 5]


@pytest.mark.parametrize("expression", ORACLE_GRAPHS)
def test_engine_congruences(expression):
    g = build(expression)
    m = from_graph(g)
    poly = graph_polynomial(g)
    y, ytorus = class_Y(m), class_Ytorus(m)
    for p in (3, 5):
        counts = count_points(poly, p, graph=g)
        for check in (check_congruence(counts, y, TARGET_Y), check_congruence(counts, ytorus, TARGET_YTORUS)):
            assert check.passed is not False, check.to_dict()


@given(multigraphs(max_edges=6))
def test_engine_congruences_random(g):
    m = from_graph(g)
    counts = count_points(graph_polynomial(g), 3, graph=g)
    y, ytorus = class_Y(m), class_Ytorus(m)
    if y.is_known:
        assert (counts.n_y - y.value) % 2 == 0
    if ytorus.is_known:
        assert (counts.n_ytorus - ytorus.value) % 2 == 0


@pytest.mark.parametrize("n,p", [(3, 3), (4, 5), (5, 5), (6, 7), (7, 7)])
def test_uniform_rank_two_counts(n, p):
    poly = config_polynomial(vandermonde_realization(2, n))
    counts = count_points(poly, p)
    assert not counts.degenerate
    expected = class_Ytorus(uniform(2, n))
    assert check_congruence(counts, expected, TARGET_YTORUS).passed


@pytest.mark.parametrize("n", [4, 5, 6])
def test_uniform_corank_two_reconstruction(n):
    primes = [p for p in (5, 7, 11, 13) if p >= n]
    w = vandermonde_realization(n - 2, n)
    report = verify_classes(config_polynomial(w), ClassModT.known(corank_two_value(n)), ClassModT.unknown("not checked"),
                            primes, bound=50)
    assert report.passed
    assert report.reconstructed[TARGET_Y] == corank_two_value(n)
    assert report.reconstructed[TARGET_Y] != corank_two_candidate(n)


def test_verify_detects_wrong_class():
    g = build("C 4")
    report = verify_classes(graph_polynomial(g), ClassModT.known(0), ClassModT.known(-1), [3, 5, 7, 11, 13], graph=g)
    assert not report.passed
    assert [f.target for f in report.failures] == [TARGET_Y] * 5
    assert report.reconstructed[TARGET_Y] == -1
    assert report.to_dict()["passed"] is False


def test_verify_skips_unknown_and_degenerate():
    w = vandermonde_realization(2, 4)
    report = verify_classes(config_polynomial(w), ClassModT.unknown("x"), ClassModT.known(-3), [3, 5])
    skipped = [c for c in report.checks if c.skipped is not None]
    assert len(skipped) == 3
    assert report.passed


@pytest.mark.parametrize("expression", ["C 3", "C 4", "B 3", "W 3", "K 4", "K 2 3", "T 2"])
def test_stratification_identity(expression):
    w = incidence_configuration(build(expression))
    report = check_stratification_counts(w, 3)
    assert report.n_y == report.torus_sum
    assert report.n_ytorus == report.n_ytorus_dual
    assert report.skipped is None


def test_stratification_identity_vandermonde():
    w = vandermonde_realization(2, 4)
    report = check_stratification_counts(w, 5)
    assert report.n_y == report.torus_sum
    report = check_stratification_counts(w, 3)
    assert report.skipped == "degenerate prime"


def test_stratification_budget():
    with pytest.raises(BudgetExceededError):
        check_stratification_counts(incidence_configuration(build("W 3")), 3, budget=500)


def test_restriction():
    w = incidence_configuration(build("W 3"))
    m = from_graph(build("W 3"))
    for s in m.spanning_subsets()[:10]:
        assert check_restriction(w, s, 3)
    w = Configuration([[1, 1, 1, 1], [1, 2, 3, 4]])
    assert check_restriction(w, 0b0111, 5)


def test_check_congruence_fields():
    counts = count_points(graph_polynomial(build("C 3")), 5)
    check = check_congruence(counts, ClassModT.known(1), TARGET_Y)
    assert check.modulus == 4
    assert check.passed
    assert check.to_dict()["residue"] == counts.n_y % 4


def test_exhaustive_small_count():
    poly = graph_polynomial(build("C 3"))
    n_y = 0
    for point in product(range(3), repeat=3):
        if any(x != 0 for x in point) and poly.evaluate_mod_p(point, 3) != 0:
            n_y += 1
    assert n_y // 2 == count_points(poly, 3).n_y


@pytest.mark.slow
@pytest.mark.parametrize("expression,p", _catalog_cases())
def test_catalog_congruences(expression, p):
    g = build(expression)
    y, ytorus = compute_classes(graph_item(g, expression).matroid)
    counts = count_points(graph_polynomial(g), p, graph=g)
    for check in (check_congruence(counts, y.result, TARGET_Y), check_congruence(counts, ytorus.result, TARGET_YTORUS)):
        assert check.passed is not False, check.to_dict()


@pytest.mark.slow
@given(multigraphs(max_edges=8))
def test_stratification_identity_random(g):
    assume(not all(g.is_loop(label) for label in g.edge_labels))
    report = check_stratification_counts(incidence_configuration(g), 3)
    assert report.n_y == report.torus_sum
    if report.skipped is None:
        assert report.n_ytorus == report.n_ytorus_dual
