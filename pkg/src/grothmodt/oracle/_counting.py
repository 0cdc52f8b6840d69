import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional

import numpy as np

from grothmodt.core import SUPPORTED_PRIMES, InputError, BudgetExceededError, default_budget
from grothmodt.config import ConfigPolynomial, batched_det_mod_p
from grothmodt.graph import Multigraph, connected_components
from grothmodt.matroid import bits

CHUNK_SIZE = 1 << 15

_logger = None


def logger() -> logging.Logger:
    global _logger
    if _logger is None:
        _logger = logging.getLogger("grothmodt.oracle")
    return _logger


@dataclass
class PointCounts:
    """
    Point counts over GF(p) of the projective hypersurface X, its complement Y and
    the part Y° of Y in the open torus.
    """
    p: int
    n: int
    n_projective: int
    n_x: int
    n_y: int
    n_ytorus: int
    degenerate: bool = False

    def residue(self, count: int) -> int:
        return count % (self.p - 1)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "nProjective": self.n_projective,
            "nX": self.n_x,
            "nY": self.n_y,
            "nYtorus": self.n_ytorus,
            "residueY": self.residue(self.n_y),
            "residueYtorus": self.residue(self.n_ytorus),
            "modulus": self.p - 1,
            "degenerate": self.degenerate,
        }


def check_prime(p: int):
    if p not in SUPPORTED_PRIMES:
        raise InputError("Unsupported prime %d, choose from: %s" % (p, ", ".join(str(x) for x in SUPPORTED_PRIMES)))


def projective_size(n: int, p: int) -> int:
    return (p ** n - 1) // (p - 1)


def is_degenerate(poly: ConfigPolynomial, p: int) -> bool:
    """
    Whether some basis coefficient vanishes mod p, in which case the reduction
    realizes a different matroid.

    :param poly: the polynomial
    :type poly: ConfigPolynomial
    :param p: the prime
    :type p: int
    :return: True if degenerate
    :rtype: bool
    """
    return any((c % p) == 0 for c in poly.terms.values())


class MonomialEvaluator(object):
    """
    Evaluates sum c_B x^B over GF(p) for a batch of points.
    """

    def __init__(self, poly: ConfigPolynomial, p: int):
        self.p = p
        self.terms = [(c % p, bits(b)) for b, c in sorted(poly.terms.items())]
        self.terms = [t for t in self.terms if t[0] != 0]

    def __call__(self, points: np.ndarray) -> np.ndarray:
        result = np.zeros(points.shape[0], dtype=np.int64)
        for c, columns in self.terms:
            term = np.full(points.shape[0], c, dtype=np.int64)
            for i in columns:
                term = (term * points[:, i]) % self.p
            result = (result + term) % self.p
        return result


class LaplacianEvaluator(object):
    """
    Evaluates the Kirchhoff polynomial over GF(p) as the determinant of the reduced
    weighted Laplacian, for a batch of points.
    """

    def __init__(self, g: Multigraph, p: int):
        self.p = p
        skip = set(c[0] for c in connected_components(g))
        keep = [v for v in g.vertices if v not in skip]
        index = {v: i for i, v in enumerate(keep)}
        self.k = len(keep)
        self.edges = []
        for column, (_, u, v) in enumerate(g.edges):
            if u == v:
                continue
            self.edges.append((column, index.get(u), index.get(v)))

    def __call__(self, points: np.ndarray) -> np.ndarray:
        count = points.shape[0]
        if self.k == 0:
            return np.ones(count, dtype=np.int64)
        lap = np.zeros((count, self.k, self.k), dtype=np.int64)
        for column, iu, iv in self.edges:
            x = points[:, column]
            if iu is not None:
                lap[:, iu, iu] += x
            if iv is not None:
                lap[:, iv, iv] += x
            if (iu is not None) and (iv is not None):
                lap[:, iu, iv] -= x
                lap[:, iv, iu] -= x
        return batched_det_mod_p(lap % self.p, self.p)


def _tails(length: int, p: int) -> Iterator[np.ndarray]:
    """
    All vectors in GF(p)^length in lexicographic order, in chunks.
    """
    total = p ** length
    for start in range(0, total, CHUNK_SIZE):
        index = np.arange(start, min(total, start + CHUNK_SIZE), dtype=np.int64)
        chunk = np.zeros((len(index), length), dtype=np.int64)
        for j in range(length - 1, -1, -1):
            chunk[:, j] = index % p
            index = index // p
        yield chunk


def projective_points(n: int, p: int) -> Iterator[np.ndarray]:
    """
    The representatives of P^(n-1)(GF(p)) whose first nonzero coordinate is 1, in chunks.

    :param n: the number of coordinates
    :type n: int
    :param p: the prime
    :type p: int
    :return: the chunks of shape (N, n)
    :rtype: Iterator
    """
    for lead in range(n):
        for tail in _tails(n - lead - 1, p):
            chunk = np.zeros((tail.shape[0], n), dtype=np.int64)
            chunk[:, lead] = 1
            chunk[:, lead + 1:] = tail
            yield chunk


def _evaluator(poly: ConfigPolynomial, p: int, graph: Optional[Multigraph]):
    if graph is not None:
        return LaplacianEvaluator(graph, p)
    return MonomialEvaluator(poly, p)


def count_points(poly: ConfigPolynomial, p: int, budget: int = None, graph: Multigraph = None) -> PointCounts:
    """
    Counts the GF(p)-points of X, Y and Y° in P^(n-1).

    :param poly: the configuration polynomial
    :type poly: ConfigPolynomial
    :param p: the prime
    :type p: int
    :param budget: the maximum number of evaluations, None for the default
    :type budget: int
    :param graph: the graph of the polynomial, enables the Laplacian path
    :type graph: Multigraph
    :return: the counts
    :rtype: PointCounts
    """
    check_prime(p)
    if budget is None:
        budget = default_budget()
    n = poly.size
    total = projective_size(n, p)
    if total > budget:
        raise BudgetExceededError("Counting %d points over GF(%d) exceeds budget of %d" % (total, p, budget))
    degenerate = is_degenerate(poly, p)
    if degenerate:
        logger().warning("Prime %d is degenerate: a basis coefficient vanishes" % p)
    logger().info("Counting %d projective points over GF(%d)" % (total, p))
    evaluate = _evaluator(poly, p, graph)
    n_y = 0
    n_ytorus = 0
    for chunk in projective_points(n, p):
        nonzero = evaluate(chunk) != 0
        n_y += int(nonzero.sum())
        n_ytorus += int((nonzero & (chunk != 0).all(axis=1)).sum())
    return PointCounts(p=p, n=n, n_projective=total, n_x=total - n_y, n_y=n_y, n_ytorus=n_ytorus, degenerate=degenerate)


def count_points_affine(poly: ConfigPolynomial, p: int, budget: int = None, graph: Multigraph = None) -> int:
    """
    Counts the nonzero affine points with nonzero value and divides by p - 1.

    :param poly: the configuration polynomial
    :type poly: ConfigPolynomial
    :param p: the prime
    :type p: int
    :param budget: the maximum number of evaluations, None for the default
    :type budget: int
    :param graph: the graph of the polynomial, enables the Laplacian path
    :type graph: Multigraph
    :return: the projective count of Y
    :rtype: int
    """
    check_prime(p)
    if budget is None:
        budget = default_budget()
    n = poly.size
    if p ** n > budget:
        raise BudgetExceededError("Counting %d affine points over GF(%d) exceeds budget of %d" % (p ** n, p, budget))
    evaluate = _evaluator(poly, p, graph)
    count = 0
    for chunk in _tails(n, p):
        nonzero = (evaluate(chunk) != 0) & (chunk != 0).any(axis=1)
        count += int(nonzero.sum())
    if count % (p - 1) != 0:
        raise InputError("Affine count %d not divisible by %d, polynomial not homogeneous?" % (count, p - 1))
    return count // (p - 1)


def count_table(poly: ConfigPolynomial, primes: List[int], budget: int = None, graph: Multigraph = None) -> List[PointCounts]:
    return [count_points(poly, p, budget=budget, graph=graph) for p in primes]
