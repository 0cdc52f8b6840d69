from itertools import combinations
from typing import Dict, List, Sequence

import numpy as np

from grothmodt.core import CapExceededError, InputError, DEFAULT_MATROID_CAP
from grothmodt.graph import Multigraph, connected_components
from grothmodt.matroid import from_graph, column_minor, to_matrix, bits, popcount, compress
from ._configuration import Configuration


class ConfigPolynomial(object):
    """
    The configuration polynomial as its basis-indexed coefficients: psi = sum c_B x^B.
    """

    def __init__(self, size: int, terms: Dict[int, int], labels: Sequence[str] = None):
        """
        Initializes the polynomial.

        :param size: the number of variables
        :type size: int
        :param terms: basis mask -> coefficient
        :type terms: dict
        :param labels: the variable labels
        :type labels: Sequence
        """
        self.size = size
        self.terms = dict(terms)
        if labels is None:
            labels = [str(i) for i in range(size)]
        self.labels = tuple(labels)
        degrees = set(popcount(b) for b in self.terms)
        if len(degrees) > 1:
            raise InputError("Configuration polynomial must be homogeneous")
        self.degree = degrees.pop() if (len(degrees) == 1) else 0

    def support(self) -> List[int]:
        return sorted(self.terms)

    def evaluate_mod_p(self, point: Sequence[int], p: int) -> int:
        """
        Evaluates sum c_B prod_{e in B} x_e in GF(p).

        :param point: the coordinates
        :type point: Sequence
        :param p: the prime
        :type p: int
        :return: the value in 0..p-1
        :rtype: int
        """
        if len(point) != self.size:
            raise InputError("Point has %d coordinates, expected: %d" % (len(point), self.size))
        result = 0
        for b, c in self.terms.items():
            term = c % p
            for i in bits(b):
                term = (term * point[i]) % p
                if term == 0:
                    break
            result = (result + term) % p
        return result

    def zero_outside(self, subset: int) -> 'ConfigPolynomial':
        """
        Sets the variables outside the subset to zero and drops them.

        :param subset: the variables to keep as mask
        :type subset: int
        :return: the polynomial in the remaining variables
        :rtype: ConfigPolynomial
        """
        terms = dict()
        for b, c in self.terms.items():
            if (b & subset) == b:
                terms[compress(b, subset)] = c
        return ConfigPolynomial(popcount(subset), terms, labels=[self.labels[i] for i in bits(subset)])

    def to_list(self) -> List[dict]:
        """
        For JSON export: [{"basis": [labels], "coeff": c}, ...] ordered by mask.
        """
        return [{"basis": [self.labels[i] for i in bits(b)], "coeff": self.terms[b]} for b in self.support()]

    def __repr__(self):
        return "ConfigPolynomial(%d variables, %d terms)" % (self.size, len(self.terms))


def config_polynomial(w: Configuration, cap: int = DEFAULT_MATROID_CAP) -> ConfigPolynomial:
    """
    Coefficient of x^B is the squared r x r minor of the columns in B. Graph
    configurations go through the spanning trees (all coefficients 1).

    :param w: the configuration
    :type w: Configuration
    :param cap: the maximum number of variables
    :type cap: int
    :return: the polynomial
    :rtype: ConfigPolynomial
    """
    if w.size > cap:
        raise CapExceededError("Configuration has %d elements, cap is %d" % (w.size, cap))
    if w.graph is not None:
        return graph_polynomial(w.graph, cap=cap)
    m = to_matrix([list(r) for r in w.rows], w.size)
    terms = dict()
    for subset in combinations(range(w.size), w.rank):
        d = column_minor(m, subset)
        if d != 0:
            mask = 0
            for i in subset:
                mask |= 1 << i
            terms[mask] = d * d
    return ConfigPolynomial(w.size, terms, labels=w.labels)


def graph_polynomial(g: Multigraph, cap: int = DEFAULT_MATROID_CAP) -> ConfigPolynomial:
    """
    The Kirchhoff polynomial: the sum over spanning forests.

    :param g: the graph
    :type g: Multigraph
    :param cap: the maximum number of edges
    :type cap: int
    :return: the polynomial
    :rtype: ConfigPolynomial
    """
    m = from_graph(g, cap=cap)
    return ConfigPolynomial(g.num_edges, {b: 1 for b in m.bases}, labels=g.edge_labels)


def _inverse_table(p: int) -> np.ndarray:
    result = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        result[x] = pow(x, p - 2, p)
    return result


def batched_det_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    """
    Determinants of a stack of square matrices over GF(p), by Gaussian elimination on
    all matrices at once.

    :param a: the matrices, shape (N, k, k), entries in 0..p-1
    :type a: np.ndarray
    :param p: the prime
    :type p: int
    :return: the determinants, shape (N,)
    :rtype: np.ndarray
    """
    a = a.copy() % p
    count, k = a.shape[0], a.shape[1]
    det = np.ones(count, dtype=np.int64)
    inverse = _inverse_table(p)
    idx = np.arange(count)
    for col in range(k):
        nonzero = a[:, col:, col] != 0
        has_pivot = nonzero.any(axis=1)
        det[~has_pivot] = 0
        pivot = np.argmax(nonzero, axis=1) + col
        swapped = pivot != col
        if swapped.any():
            row_col = a[idx, col, :].copy()
            row_pivot = a[idx, pivot, :].copy()
            a[idx, col, :] = row_pivot
            a[idx, pivot, :] = row_col
            det[swapped] = (det[swapped] * (p - 1)) % p
        pivot_values = a[:, col, col]
        det = (det * pivot_values) % p
        if col + 1 < k:
            factors = (a[:, col + 1:, col] * inverse[pivot_values][:, None]) % p
            a[:, col + 1:, :] = (a[:, col + 1:, :] - factors[:, :, None] * a[:, col, None, :]) % p
    return det


def det_mod_p(matrix: List[List[int]], p: int) -> int:
    """
    Determinant over GF(p), a batch of one for batched_det_mod_p.

    :param matrix: the square matrix
    :type matrix: list
    :param p: the prime
    :type p: int
    :return: the determinant in 0..p-1
    :rtype: int
    """
    if len(matrix) == 0:
        return 1
    return int(batched_det_mod_p(np.array([matrix], dtype=np.int64), p)[0])


def reduced_laplacian(g: Multigraph, point: Sequence[int], p: int) -> List[List[int]]:
    """
    The weighted Laplacian over GF(p) with the rows/columns of the least vertex of
    every component removed.

    :param g: the graph
    :type g: Multigraph
    :param point: the edge weights, in edge order
    :type point: Sequence
    :param p: the prime
    :type p: int
    :return: the matrix
    :rtype: list
    """
    skip = set(c[0] for c in connected_components(g))
    keep = [v for v in g.vertices if v not in skip]
    index = {v: i for i, v in enumerate(keep)}
    result = [[0] * len(keep) for _ in keep]
    for (label, u, v), x in zip(g.edges, point):
        if u == v:
            continue
        for a, b in ((u, v), (v, u)):
            if a in index:
                result[index[a]][index[a]] = (result[index[a]][index[a]] + x) % p
                if b in index:
                    result[index[a]][index[b]] = (result[index[a]][index[b]] - x) % p
    return result


def evaluate_graph_via_laplacian(g: Multigraph, point: Sequence[int], p: int) -> int:
    """
    Evaluates the Kirchhoff polynomial as a cofactor of the weighted Laplacian.

    :param g: the graph
    :type g: Multigraph
    :param point: the edge weights, in edge order
    :type point: Sequence
    :param p: the prime
    :type p: int
    :return: the value in 0..p-1
    :rtype: int
    """
    if len(point) != g.num_edges:
        raise InputError("Point has %d coordinates, expected: %d" % (len(point), g.num_edges))
    return det_mod_p(reduced_laplacian(g, point, p), p)
