from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from grothmodt.core import TARGET_Y, TARGET_YTORUS, DEFAULT_CRT_BOUND, DEFAULT_SUBSET_CAP
from grothmodt.core import IdentityViolation, CrtError, BudgetExceededError, default_budget
from grothmodt.config import Configuration, ConfigPolynomial, config_polynomial
from grothmodt.engine import ClassModT
from grothmodt.graph import Multigraph
from grothmodt.matroid import popcount
from ._counting import PointCounts, count_points, projective_size, is_degenerate, logger
from ._crt import crt_reconstruct


@dataclass
class CongruenceCheck:
    """
    The comparison of a point count with a claimed class for one prime.
    """
    target: str
    p: int
    count: int
    claimed: Optional[int]
    passed: Optional[bool]
    skipped: Optional[str] = None

    @property
    def modulus(self) -> int:
        return self.p - 1

    def to_dict(self) -> dict:
        result = {
            "target": self.target,
            "p": self.p,
            "modulus": self.modulus,
            "count": self.count,
            "residue": self.count % self.modulus,
            "claimed": self.claimed,
            "passed": self.passed,
        }
        if self.skipped is not None:
            result["skipped"] = self.skipped
        return result


def check_congruence(counts: PointCounts, claimed: ClassModT, target: str = TARGET_Y) -> CongruenceCheck:
    """
    Checks count = claimed (mod p - 1). Unknown claims and degenerate primes are skipped.

    :param counts: the point counts
    :type counts: PointCounts
    :param claimed: the class to check
    :type claimed: ClassModT
    :param target: Y or Ytorus
    :type target: str
    :return: the outcome
    :rtype: CongruenceCheck
    """
    count = counts.n_y if (target == TARGET_Y) else counts.n_ytorus
    if counts.degenerate:
        return CongruenceCheck(target, counts.p, count, claimed.value, None, skipped="degenerate prime")
    if not claimed.is_known:
        return CongruenceCheck(target, counts.p, count, None, None, skipped="class unknown")
    passed = (count - claimed.value) % (counts.p - 1) == 0
    return CongruenceCheck(target, counts.p, count, claimed.value, passed)


@dataclass
class VerificationReport:
    """
    Point counts for several primes, the congruence checks against the derived classes
    and the integers reconstructed from the residues.
    """
    counts: List[PointCounts] = field(default_factory=list)
    checks: List[CongruenceCheck] = field(default_factory=list)
    reconstructed: Dict[str, Optional[int]] = field(default_factory=dict)
    reconstruction_errors: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    @property
    def failures(self) -> List[CongruenceCheck]:
        return [c for c in self.checks if c.passed is False]

    def to_dict(self) -> dict:
        return {
            "counts": [c.to_dict() for c in self.counts],
            "checks": [c.to_dict() for c in self.checks],
            "reconstructed": dict(self.reconstructed),
            "reconstructionErrors": dict(self.reconstruction_errors),
            "passed": self.passed,
        }


def verify_classes(poly: ConfigPolynomial, y: ClassModT, ytorus: ClassModT, primes: Sequence[int],
                   budget: int = None, bound: int = DEFAULT_CRT_BOUND, graph: Multigraph = None) -> VerificationReport:
    """
    Counts points for each prime and checks them against the classes. Degenerate primes
    are reported but left out of the checks and the reconstruction.

    :param poly: the configuration polynomial
    :type poly: ConfigPolynomial
    :param y: the derived [Y]
    :type y: ClassModT
    :param ytorus: the derived [Y°]
    :type ytorus: ClassModT
    :param primes: the primes to count over
    :type primes: Sequence
    :param budget: the evaluation budget per prime, None for the default
    :type budget: int
    :param bound: the bound for reconstructing the integers
    :type bound: int
    :param graph: the graph of the polynomial, enables the Laplacian path
    :type graph: Multigraph
    :return: the report
    :rtype: VerificationReport
    """
    report = VerificationReport()
    for p in primes:
        counts = count_points(poly, p, budget=budget, graph=graph)
        report.counts.append(counts)
        report.checks.append(check_congruence(counts, y, TARGET_Y))
        report.checks.append(check_congruence(counts, ytorus, TARGET_YTORUS))
    usable = [c for c in report.counts if not c.degenerate]
    for target in [TARGET_Y, TARGET_YTORUS]:
        if len(usable) == 0:
            report.reconstruction_errors[target] = "no usable prime"
            continue
        residues = [(c.p - 1, c.n_y if (target == TARGET_Y) else c.n_ytorus) for c in usable]
        try:
            report.reconstructed[target] = crt_reconstruct(residues, bound)
        except CrtError as e:
            report.reconstruction_errors[target] = str(e)
    for failure in report.failures:
        logger().error("Congruence violated for %s over GF(%d): count %d, claimed %d (mod %d)"
                       % (failure.target, failure.p, failure.count, failure.claimed, failure.modulus))
    return report


@dataclass
class StratificationReport:
    """
    The exact identities nY(W) = sum over spanning S of nY°(W|S) and
    nY°(W) = nY°(W^perp) for one prime.
    """
    p: int
    n_y: int
    torus_sum: int
    n_ytorus: int
    n_ytorus_dual: Optional[int]
    subsets: int
    skipped: Optional[str] = None

    def to_dict(self) -> dict:
        result = {
            "p": self.p,
            "nY": self.n_y,
            "torusSum": self.torus_sum,
            "nYtorus": self.n_ytorus,
            "nYtorusDual": self.n_ytorus_dual,
            "subsets": self.subsets,
        }
        if self.skipped is not None:
            result["skipped"] = self.skipped
        return result


def check_stratification_counts(w: Configuration, p: int, budget: int = None,
                                subset_cap: int = DEFAULT_SUBSET_CAP) -> StratificationReport:
    """
    Verifies the toric stratification and the Cremona identity on point counts.
    The Cremona comparison is skipped when either polynomial is degenerate mod p.

    :param w: the configuration
    :type w: Configuration
    :param p: the prime
    :type p: int
    :param budget: the total evaluation budget, None for the default
    :type budget: int
    :param subset_cap: the maximum ground size for the subset enumeration
    :type subset_cap: int
    :return: the report
    :rtype: StratificationReport
    :raises IdentityViolation: if an identity fails
    """
    if budget is None:
        budget = default_budget()
    m = w.matroid(cap=subset_cap)
    subsets = m.spanning_subsets(cap=subset_cap)
    needed = sum(projective_size(popcount(s), p) for s in subsets)
    if needed > budget:
        raise BudgetExceededError("Stratification check needs %d evaluations, budget is %d" % (needed, budget))
    poly = config_polynomial(w)
    counts = count_points(poly, p, budget=budget, graph=w.graph)
    torus_sum = 0
    for s in subsets:
        torus_sum += count_points(config_polynomial(w.restrict(s)), p, budget=budget).n_ytorus
    if torus_sum != counts.n_y:
        raise IdentityViolation("Stratification over GF(%d): nY = %d but torus sum = %d" % (p, counts.n_y, torus_sum))
    dual = w.dual()
    dual_poly = config_polynomial(dual)
    if is_degenerate(poly, p) or is_degenerate(dual_poly, p):
        return StratificationReport(p, counts.n_y, torus_sum, counts.n_ytorus, None, len(subsets),
                                    skipped="degenerate prime")
    dual_counts = count_points(dual_poly, p, budget=budget)
    if dual_counts.n_ytorus != counts.n_ytorus:
        raise IdentityViolation("Cremona over GF(%d): nY° = %d but nY° of the dual = %d"
                                % (p, counts.n_ytorus, dual_counts.n_ytorus))
    return StratificationReport(p, counts.n_y, torus_sum, counts.n_ytorus, dual_counts.n_ytorus, len(subsets))


def check_restriction(w: Configuration, subset: int, p: int, budget: int = None) -> bool:
    """
    Whether setting the coordinates outside a spanning subset to zero gives the same
    number of points as the restricted configuration.

    :param w: the configuration
    :type w: Configuration
    :param subset: the spanning subset as mask
    :type subset: int
    :param p: the prime
    :type p: int
    :param budget: the evaluation budget, None for the default
    :type budget: int
    :return: True if the counts agree
    :rtype: bool
    """
    poly = config_polynomial(w)
    left = count_points(poly.zero_outside(subset), p, budget=budget)
    right = count_points(config_polynomial(w.restrict(subset)), p, budget=budget)
    return (left.n_y == right.n_y) and (left.n_ytorus == right.n_ytorus)
