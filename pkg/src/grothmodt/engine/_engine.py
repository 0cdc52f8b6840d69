import logging
from math import comb
from typing import Callable, Dict, List, Optional, Set, Tuple

from wai.logging import LOGGING_WARNING, set_logging_level

from grothmodt.core import TARGET_Y, TARGET_YTORUS, DEFAULT_SUBSET_CAP, CapExceededError
from grothmodt.core import RULE_RANK_ZERO, RULE_LOOP, RULE_PARALLEL, RULE_COLOOP, RULE_DISCONNECTED, RULE_RANK_ONE, \
    RULE_FAT_NEXUS, RULE_RANK_TWO, RULE_CORANK_ONE, RULE_SERIES, RULE_CORANK_TWO, RULE_DUAL_FLATS, \
    RULE_DUAL_FLATS_SHORT, RULE_STRATIFICATION, RULE_INVERSION, RULE_INVERSION_DUAL, RULE_SINGLETON, RULE_TORUS, \
    RULE_UNIFORM, RULE_DUALITY, RULE_REFERENCE, RULE_CACHED, RULE_BLOCKED, RULE_UNRESOLVED
from grothmodt.graph import simplification_vanishes
from grothmodt.matroid import Matroid, popcount
from ._classes import ClassModT, TraceNode
from ._reference import ReferenceClass, DEFAULT_REFERENCES, reference_table, lookup_reference


def corank_two_value(n: int) -> int:
    """
    [Y] mod T for the uniform matroid U(n-2,n), n >= 4. Expanding the stratification
    sum gives [Y°(U(2,n))] + n [Y°(U(n-2,n-1))], i.e. (-1)^(n-1) (n^2-5n+2)/2.
    Point counts over Vandermonde realizations confirm it for n = 4, 5, 6.

    :param n: the number of elements
    :type n: int
    :return: the residue
    :rtype: int
    """
    return (-1) ** (n - 1) * ((n * n - 5 * n + 2) // 2)


def corank_two_candidate(n: int) -> int:
    """
    The competing closed form (-1)^(n-1) (n^2-n+2)/2 for U(n-2,n). Point counts refute
    it (n = 4 gives -7 instead of 1), it is only kept for the comparison in the tests.

    :param n: the number of elements
    :type n: int
    :return: the residue
    :rtype: int
    """
    return (-1) ** (n - 1) * ((n * n - n + 2) // 2)


def rank_two_torus_value(n: int) -> int:
    """
    [Y°] mod T for U(2,n), n >= 3.
    """
    return (-1) ** (n - 1) * comb(n - 1, 2)


def describe(m: Matroid) -> str:
    """
    Short human-readable description of a matroid for traces.

    :param m: the matroid
    :type m: Matroid
    :return: the description
    :rtype: str
    """
    labels = list(m.labels)
    if len(labels) > 12:
        labels = labels[:12] + ["..."]
    prefix = "" if (m.name is None) else (m.name + ": ")
    return "%srank %d on {%s}" % (prefix, m.rank, ",".join(labels))


class EngineContext(object):
    """
    Owns the memo table and the in-progress set of one computation. Not thread-safe;
    use one context per worker.
    """

    def __init__(self, subset_cap: int = DEFAULT_SUBSET_CAP, use_memo: bool = True,
                 references: List[ReferenceClass] = None, use_references: bool = True,
                 logger_name: str = None, logging_level: str = LOGGING_WARNING):
        """
        Initializes the context.

        :param subset_cap: the maximum ground size for subset enumerations
        :type subset_cap: int
        :param use_memo: whether to cache known results
        :type use_memo: bool
        :param references: the reference classes to assume, None for the default ones
        :type references: list
        :param use_references: whether to use reference classes at all
        :type use_references: bool
        :param logger_name: the name to use for the logger
        :type logger_name: str
        :param logging_level: the logging level to use
        :type logging_level: str
        """
        self.subset_cap = subset_cap
        self.use_memo = use_memo
        self.logger_name = logger_name
        self.logging_level = logging_level
        self._logger = None
        self._references = dict()
        if use_references:
            self._references = reference_table(DEFAULT_REFERENCES if (references is None) else references)
        self._memo: Dict[Tuple, ClassModT] = dict()
        self._in_progress: Set[Tuple] = set()
        self.stats = {"evaluations": 0, "memo_hits": 0, "blocked": 0}

    def logger(self) -> logging.Logger:
        """
        Returns the logger instance to use.

        :return: the logger
        :rtype: logging.Logger
        """
        if self._logger is None:
            name = self.logger_name if (self.logger_name is not None) else "grothmodt.engine"
            self._logger = logging.getLogger(name)
            set_logging_level(self._logger, self.logging_level)
        return self._logger

    def log_stats(self):
        self.logger().info("evaluations: %d, memo hits: %d, blocked: %d, memo size: %d"
                           % (self.stats["evaluations"], self.stats["memo_hits"], self.stats["blocked"], len(self._memo)))

    # node helpers

    def _leaf(self, target: str, m: Matroid, rule: str, value: int, note: str = None) -> TraceNode:
        return TraceNode(target, m.key(), describe(m), rule, ClassModT.known(value), constant=value, note=note)

    def _unknown(self, target: str, m: Matroid, rule: str, reason: str) -> TraceNode:
        return TraceNode(target, m.key(), describe(m), rule, ClassModT.unknown(reason))

    def _combine(self, target: str, m: Matroid, rule: str, parts: List[Tuple[int, TraceNode]],
                 constant: int = 0, note: str = None) -> TraceNode:
        """
        Builds the node for constant + sum(coefficient * part); unknown as soon as one
        part is unknown.
        """
        node = TraceNode(target, m.key(), describe(m), rule, ClassModT.known(0), constant=constant, note=note)
        total = constant
        for coefficient, child in parts:
            node.add_child(child, coefficient)
            if not child.result.is_known:
                node.result = ClassModT.unknown("depends on %s(%s): %s" % (child.target, child.description, child.result.reason))
                return node
            total += coefficient * child.result.value
        node.result = ClassModT.known(total)
        return node

    def _sum_lazily(self, target: str, m: Matroid, rule: str, terms: List[Tuple[int, Callable[[], TraceNode]]],
                    constant: int = 0, note: str = None) -> TraceNode:
        """
        Like _combine, but evaluates the terms one by one and stops at the first unknown.
        """
        parts = []
        for coefficient, compute in terms:
            child = compute()
            parts.append((coefficient, child))
            if not child.result.is_known:
                break
        return self._combine(target, m, rule, parts, constant=constant, note=note)

    # entry points

    def y(self, m: Matroid) -> TraceNode:
        """
        Derives [Y] mod T for the matroid.

        :param m: the matroid
        :type m: Matroid
        :return: the trace, its result holds the class
        :rtype: TraceNode
        """
        return self._evaluate(TARGET_Y, m, self._derive_y)

    def ytorus(self, m: Matroid) -> TraceNode:
        """
        Derives [Y°] mod T for the matroid.

        :param m: the matroid
        :type m: Matroid
        :return: the trace, its result holds the class
        :rtype: TraceNode
        """
        return self._evaluate(TARGET_YTORUS, m, self._derive_ytorus)

    def _evaluate(self, target: str, m: Matroid, derive: Callable[[Matroid], TraceNode]) -> TraceNode:
        key = (target, m.key())
        ref = lookup_reference(self._references, target, m)
        if ref is not None:
            return self._leaf(target, m, RULE_REFERENCE, ref.value, note="%s, %s" % (ref.builder, ref.note))
        if self.use_memo and (key in self._memo):
            self.stats["memo_hits"] += 1
            return self._leaf(target, m, RULE_CACHED, self._memo[key].value)
        if key in self._in_progress:
            self.stats["blocked"] += 1
            return self._unknown(target, m, RULE_BLOCKED, "%s(%s) already in progress" % (target, describe(m)))
        self._in_progress.add(key)
        self.stats["evaluations"] += 1
        try:
            node = derive(m)
        finally:
            self._in_progress.discard(key)
        if node.result.is_known:
            if self.use_memo:
                self._memo[key] = node.result
            self.logger().debug("%s(%s) = %d [%s]" % (target, node.description, node.result.value, node.rule))
        return node

    # [Y]

    def _derive_y(self, m: Matroid) -> TraceNode:
        n = m.size
        if m.rank == 0:
            return self._leaf(TARGET_Y, m, RULE_RANK_ZERO, n)
        loops = m.loops()
        if loops:
            return self._combine(TARGET_Y, m, RULE_LOOP, [(1, self.y(m.delete(loops)))],
                                 note="deleted: " + ",".join(m.labels_of(loops)))
        redundant = 0
        for e in range(n):
            if m.parallel_partners(e) & ((1 << e) - 1):
                redundant |= 1 << e
        if redundant:
            return self._combine(TARGET_Y, m, RULE_PARALLEL, [(1, self.y(m.delete(redundant)))],
                                 note="deleted: " + ",".join(m.labels_of(redundant)))
        if m.coloops() and (m.rank > 1):
            return self._leaf(TARGET_Y, m, RULE_COLOOP, 0, note="coloop: " + m.labels_of(m.coloops())[0])
        if not m.is_connected():
            return self._leaf(TARGET_Y, m, RULE_DISCONNECTED, 0)
        if m.rank == 1:
            return self._leaf(TARGET_Y, m, RULE_RANK_ONE, 1)
        if (m.graph is not None) and simplification_vanishes(m.graph):
            return self._leaf(TARGET_Y, m, RULE_FAT_NEXUS, 0)
        if m.rank == 2:
            return self._leaf(TARGET_Y, m, RULE_RANK_TWO, 1)
        if m.nullity == 1:
            return self._leaf(TARGET_Y, m, RULE_CORANK_ONE, (-1) ** (n - 1))
        node = self._series(m)
        if node is not None:
            return node
        signature = m.uniform_signature()
        if (signature is not None) and (signature[0] == n - 2) and (n >= 4):
            return self._leaf(TARGET_Y, m, RULE_CORANK_TWO, corank_two_value(n))
        flats = None
        if m.cograph is not None:
            flats = self.y_dual_via_flats(m.dual())
            if (flats is not None) and flats.result.is_known:
                return self._combine(TARGET_Y, m, RULE_DUAL_FLATS, [(1, flats)])
        node = self._stratification(m)
        if node.result.is_known or (flats is None):
            return node
        result = self._unknown(TARGET_Y, m, RULE_UNRESOLVED, "no resolving rule: %s" % node.result.reason)
        result.add_child(flats)
        result.add_child(node)
        return result

    def _series(self, m: Matroid) -> Optional[TraceNode]:
        """
        [Y(M)] = -[Y(M/e)] + [Y(M minus {e,f})] for the first series pair meeting the
        rank and closure conditions.
        """
        for e, f in m.find_series_pairs():
            pair = (1 << e) | (1 << f)
            contracted = m.contract(1 << e)
            if contracted.rank == 0:
                continue
            deleted = m.delete(pair)
            if deleted.rank == 0:
                continue
            if m.closure(pair) == m.ground:
                continue
            if contracted.coloops() & contracted.mask_of([m.labels[f]]):
                continue
            return self._sum_lazily(
                TARGET_Y, m, RULE_SERIES,
                [(-1, lambda: self.y(contracted)), (1, lambda: self.y(deleted))],
                note="e=%s, f=%s" % (m.labels[e], m.labels[f]))
        return None

    def _stratification(self, m: Matroid) -> TraceNode:
        """
        [Y] = sum of [Y°(M|S)] over spanning S with M|S connected.
        """
        try:
            subsets = m.spanning_connected_subsets(cap=self.subset_cap)
        except CapExceededError as e:
            self.logger().warning(str(e))
            return self._unknown(TARGET_Y, m, RULE_STRATIFICATION, str(e))
        terms = []
        for s in subsets:
            terms.append((1, (lambda x=s: self.ytorus(m if (x == m.ground) else m.restrict(x)))))
        return self._sum_lazily(TARGET_Y, m, RULE_STRATIFICATION, terms, note="%d subsets" % len(subsets))

    def y_dual_via_flats(self, m: Matroid) -> Optional[TraceNode]:
        """
        Derives [Y] of the dual of m via the independent flats of m:
        delta(1, nullity) b(M) + sum over independent flats F of [Y°(M/F)].
        Short cut to [Y°(M)] when the nullity exceeds 1 and no rank-1 flat is a single
        element.

        :param m: the matroid whose dual is the target
        :type m: Matroid
        :return: the trace for [Y] of the dual, None if rank or nullity is zero
        :rtype: TraceNode
        """
        if (m.rank == 0) or (m.nullity == 0):
            return None
        dual = m.dual()
        loops = m.loops()
        fat = all(popcount(m.closure(1 << e)) > 1 for e in range(m.size) if not loops & (1 << e))
        if (m.nullity > 1) and fat:
            return self._combine(TARGET_Y, dual, RULE_DUAL_FLATS_SHORT, [(1, self.ytorus(m))])
        constant = m.num_bases() if (m.nullity == 1) else 0
        try:
            if m.size > self.subset_cap:
                raise CapExceededError("Flat enumeration over %d elements exceeds cap of %d" % (m.size, self.subset_cap))
            flats = m.independent_flats()
        except CapExceededError as e:
            self.logger().warning(str(e))
            return self._unknown(TARGET_Y, dual, RULE_DUAL_FLATS, str(e))
        terms = []
        for f in flats:
            terms.append((1, (lambda x=f: self.ytorus(m if (x == 0) else m.contract(x)))))
        return self._sum_lazily(TARGET_Y, dual, RULE_DUAL_FLATS, terms, constant=constant,
                                note="%d independent flats" % len(flats))

    # [Y°]

    def _torus_structural(self, m: Matroid) -> Optional[TraceNode]:
        """
        Parallel/series sign rules, disconnectedness and the uniform closed forms, for
        matroids without loops and coloops on at least two elements.
        """
        n = m.size
        if n >= 3:
            pair = m.find_parallel_pair()
            if pair is not None:
                e, f = pair
                return self._combine(TARGET_YTORUS, m, RULE_PARALLEL, [(-1, self.ytorus(m.delete(1 << f)))],
                                     note="parallel: %s,%s" % (m.labels[e], m.labels[f]))
            pairs = m.find_series_pairs()
            if len(pairs) > 0:
                e, f = pairs[0]
                return self._combine(TARGET_YTORUS, m, RULE_SERIES, [(-1, self.ytorus(m.contract(1 << f)))],
                                     note="series: %s,%s" % (m.labels[e], m.labels[f]))
        if not m.is_connected():
            return self._leaf(TARGET_YTORUS, m, RULE_DISCONNECTED, 0)
        value = self._uniform_torus_value(m)
        if value is not None:
            return self._leaf(TARGET_YTORUS, m, RULE_UNIFORM, value, note="U(%d,%d)" % (m.rank, n))
        return None

    def _uniform_torus_value(self, m: Matroid) -> Optional[int]:
        signature = m.uniform_signature()
        if signature is None:
            return None
        r, n = signature
        if (r == 1) or (r == n - 1):
            return (-1) ** (n - 1)
        if (r == 2) and (n >= 3):
            return rank_two_torus_value(n)
        return None

    def _derive_ytorus(self, m: Matroid) -> TraceNode:
        n = m.size
        if n == 0:
            return self._leaf(TARGET_YTORUS, m, RULE_TORUS, 0)
        if n == 1:
            return self._leaf(TARGET_YTORUS, m, RULE_SINGLETON, 1)
        if m.rank == 0:
            return self._leaf(TARGET_YTORUS, m, RULE_TORUS, 0, note="all loops")
        special = m.loops() | m.coloops()
        if special:
            return self._leaf(TARGET_YTORUS, m, RULE_TORUS, 0, note="loop/coloop: " + m.labels_of(special)[0])
        node = self._torus_structural(m)
        if node is not None:
            return node
        dual = m.dual()
        prefer_dual = (m.rank < m.nullity) and ((dual.graph is not None) or (m.graph is None))
        if prefer_dual or (self._uniform_torus_value(dual) is not None):
            node = self.ytorus(dual)
            if node.result.is_known:
                return self._combine(TARGET_YTORUS, m, RULE_DUALITY, [(1, node)])
        return self._inversion(m)

    def _inversion(self, m: Matroid) -> TraceNode:
        """
        [Y°] = sum of (-1)^|E-S| [Y(M|S)] over spanning S with M|S connected; when the
        S = E term is blocked, the same sum is taken over the dual.
        """
        top = self.y(m)
        if top.result.is_known:
            return self._inversion_sum(m, m, RULE_INVERSION, top)
        node = self._inversion_sum(m, m.dual(), RULE_INVERSION_DUAL, None)
        if node.result.is_known:
            return node
        result = self._unknown(TARGET_YTORUS, m, RULE_UNRESOLVED, "no resolving rule: %s" % node.result.reason)
        result.add_child(top)
        result.add_child(node)
        return result

    def _inversion_sum(self, owner: Matroid, m: Matroid, rule: str, top: Optional[TraceNode]) -> TraceNode:
        try:
            subsets = m.spanning_connected_subsets(cap=self.subset_cap)
        except CapExceededError as e:
            self.logger().warning(str(e))
            return self._unknown(TARGET_YTORUS, owner, rule, str(e))
        terms = []
        for s in subsets:
            sign = -1 if ((m.size - popcount(s)) % 2) else 1
            if s == m.ground:
                terms.append((sign, (lambda: top) if (top is not None) else (lambda: self.y(m))))
            else:
                terms.append((sign, (lambda x=s: self.y(m.restrict(x)))))
        note = "%d subsets" % len(subsets)
        if owner is not m:
            note += " of the dual"
        return self._sum_lazily(TARGET_YTORUS, owner, rule, terms, note=note)


def _context(ctx: Optional[EngineContext]) -> EngineContext:
    return EngineContext() if (ctx is None) else ctx


def class_Y(m: Matroid, ctx: EngineContext = None) -> ClassModT:
    """
    [Y] mod T of the matroid.

    :param m: the matroid
    :type m: Matroid
    :param ctx: the context to use, a fresh one if None
    :type ctx: EngineContext
    :return: the class
    :rtype: ClassModT
    """
    return _context(ctx).y(m).result


def class_Ytorus(m: Matroid, ctx: EngineContext = None) -> ClassModT:
    """
    [Y°] mod T of the matroid.

    :param m: the matroid
    :type m: Matroid
    :param ctx: the context to use, a fresh one if None
    :type ctx: EngineContext
    :return: the class
    :rtype: ClassModT
    """
    return _context(ctx).ytorus(m).result


def class_Y_dual_via_flats(m: Matroid, ctx: EngineContext = None) -> ClassModT:
    """
    [Y] mod T of the dual of m, through the independent flats of m.

    :param m: the matroid, with positive rank and nullity
    :type m: Matroid
    :param ctx: the context to use, a fresh one if None
    :type ctx: EngineContext
    :return: the class, unknown if inapplicable
    :rtype: ClassModT
    """
    node = _context(ctx).y_dual_via_flats(m)
    if node is None:
        return ClassModT.unknown("inapplicable: rank %d, nullity %d" % (m.rank, m.nullity))
    return node.result


def compute_classes(m: Matroid, ctx: EngineContext = None) -> Tuple[TraceNode, TraceNode]:
    """
    Derives both [Y] and [Y°] in the same context.

    :param m: the matroid
    :type m: Matroid
    :param ctx: the context to use, a fresh one if None
    :type ctx: EngineContext
    :return: the traces for Y and Y°
    :rtype: tuple
    """
    ctx = _context(ctx)
    y = ctx.y(m)
    ytorus = ctx.ytorus(m)
    ctx.log_stats()
    return y, ytorus
