from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from grothmodt.core import InputError, CapExceededError, DEFAULT_MATROID_CAP, DEFAULT_SUBSET_CAP
from grothmodt.graph import Multigraph, connected_components, delete_edge, contract_edge, dual_from_faces
from ._linalg import to_matrix, column_minor


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> List[int]:
    """
    Returns the indices of the set bits, in increasing order.

    :param mask: the mask
    :type mask: int
    :return: the indices
    :rtype: list
    """
    result = []
    i = 0
    while mask:
        if mask & 1:
            result.append(i)
        mask >>= 1
        i += 1
    return result


def compress(mask: int, keep: int) -> int:
    """
    Re-densifies a mask: the bits selected by keep are packed to 0..k-1 in order.

    :param mask: the mask to compress
    :type mask: int
    :param keep: the positions that survive
    :type keep: int
    :return: the packed mask
    :rtype: int
    """
    result = 0
    j = 0
    for i in bits(keep):
        if mask & (1 << i):
            result |= 1 << j
        j += 1
    return result


@dataclass
class ElementTags:
    """
    Classification of a single element.
    """
    label: str
    loop: bool = False
    coloop: bool = False
    parallel: List[str] = field(default_factory=list)
    series: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "loop": self.loop,
            "coloop": self.coloop,
            "parallel": self.parallel,
            "series": self.series,
        }


class Matroid(object):
    """
    Matroid on the elements 0..n-1 given by its bases as bit masks. Optionally carries
    a graph realizing it and a graph realizing its dual, with edge labels equal to the
    element labels.
    """

    def __init__(self, size: int, bases: Iterable[int], labels: Sequence[str] = None,
                 graph: Multigraph = None, cograph: Multigraph = None, name: str = None):
        """
        Initializes the matroid.

        :param size: the number of elements
        :type size: int
        :param bases: the bases as bit masks
        :type bases: Iterable
        :param labels: the element labels, default "0".."n-1"
        :type labels: Sequence
        :param graph: the graph realizing the matroid
        :type graph: Multigraph
        :param cograph: the graph realizing the dual matroid
        :type cograph: Multigraph
        :param name: the optional name
        :type name: str
        """
        self._size = size
        self._bases = frozenset(bases)
        if len(self._bases) == 0:
            raise InputError("A matroid needs at least one basis")
        ranks = set(popcount(b) for b in self._bases)
        if len(ranks) != 1:
            raise InputError("Bases differ in size: %s" % str(sorted(ranks)))
        self._rank = ranks.pop()
        full = (1 << size) - 1
        for b in self._bases:
            if b & ~full:
                raise InputError("Basis outside of ground set: %d" % b)
        if labels is None:
            labels = [str(i) for i in range(size)]
        self._labels = tuple(str(x) for x in labels)
        if len(self._labels) != size:
            raise InputError("Expected %d labels, got: %d" % (size, len(self._labels)))
        if len(set(self._labels)) != size:
            raise InputError("Element labels must be distinct")
        self.graph = graph
        self.cograph = cograph
        self.name = name
        self._cooccurrence = None
        self._key = None
        self._fingerprint = None

    @property
    def size(self) -> int:
        return self._size

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def nullity(self) -> int:
        return self._size - self._rank

    @property
    def bases(self) -> FrozenSet[int]:
        return self._bases

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def ground(self) -> int:
        return (1 << self._size) - 1

    def num_bases(self) -> int:
        return len(self._bases)

    def key(self) -> Tuple[int, Tuple[int, ...]]:
        """
        The memoization key: ground size and sorted basis masks.

        :return: the key
        :rtype: tuple
        """
        if self._key is None:
            self._key = (self._size, tuple(sorted(self._bases)))
        return self._key

    def fingerprint(self) -> Tuple:
        """
        Summary that does not depend on the labeling: size, rank, number of bases and
        the sorted numbers of bases through each element.

        :return: the fingerprint
        :rtype: tuple
        """
        if self._fingerprint is None:
            counts = sorted(sum(1 for b in self._bases if (b >> e) & 1) for e in range(self._size))
            self._fingerprint = (self._size, self._rank, len(self._bases), tuple(counts))
        return self._fingerprint

    def _incidence_graph(self) -> nx.Graph:
        result = nx.Graph()
        for e in range(self._size):
            result.add_node(("e", e), kind="element")
        for b in self._bases:
            result.add_node(("b", b), kind="basis")
            for e in bits(b):
                result.add_edge(("e", e), ("b", b))
        return result

    def is_isomorphic(self, other: "Matroid") -> bool:
        """
        Whether the matroids agree up to relabeling, i.e., whether the element/basis
        incidence graphs are isomorphic with elements mapped to elements.

        :param other: the matroid to compare with
        :type other: Matroid
        :return: True if isomorphic
        :rtype: bool
        """
        if (self._size, self._rank, len(self._bases)) != (other._size, other._rank, len(other._bases)):
            return False
        if self.key() == other.key():
            return True
        if self.fingerprint() != other.fingerprint():
            return False
        return nx.is_isomorphic(self._incidence_graph(), other._incidence_graph(),
                                node_match=lambda a, b: a["kind"] == b["kind"])

    def mask_of(self, labels: Iterable[str]) -> int:
        index = {l: i for i, l in enumerate(self._labels)}
        result = 0
        for l in labels:
            if l not in index:
                raise InputError("Unknown element: %s" % l)
            result |= 1 << index[l]
        return result

    def labels_of(self, mask: int) -> List[str]:
        return [self._labels[i] for i in bits(mask)]

    def rank_of(self, subset: int) -> int:
        """
        The rank of the subset: the largest intersection with a basis.

        :param subset: the subset as mask
        :type subset: int
        :return: the rank
        :rtype: int
        """
        best = 0
        for b in self._bases:
            c = popcount(b & subset)
            if c > best:
                best = c
                if best == self._rank:
                    break
        return best

    def nullity_of(self, subset: int) -> int:
        return popcount(subset) - self.rank_of(subset)

    def closure(self, subset: int) -> int:
        r = self.rank_of(subset)
        result = subset
        for i in range(self._size):
            bit = 1 << i
            if (not subset & bit) and (self.rank_of(subset | bit) == r):
                result |= bit
        return result

    def is_independent(self, subset: int) -> bool:
        return any((b & subset) == subset for b in self._bases)

    def is_flat(self, subset: int) -> bool:
        return self.closure(subset) == subset

    def loops(self) -> int:
        used = 0
        for b in self._bases:
            used |= b
        return self.ground & ~used

    def coloops(self) -> int:
        common = self.ground
        for b in self._bases:
            common &= b
        return common

    def _cooccurring(self) -> List[int]:
        """
        For every element, the union of the bases containing it.
        """
        if self._cooccurrence is None:
            result = [0] * self._size
            for b in self._bases:
                for i in bits(b):
                    result[i] |= b
            self._cooccurrence = result
        return self._cooccurrence

    def parallel_partners(self, e: int) -> int:
        """
        The elements forming a 2-circuit with e.

        :param e: the element index
        :type e: int
        :return: the partners as mask
        :rtype: int
        """
        loops = self.loops()
        if loops & (1 << e):
            return 0
        return self.ground & ~self._cooccurring()[e] & ~loops

    def series_partners(self, e: int) -> int:
        """
        The elements forming a 2-cocircuit with e (parallel in the dual).

        :param e: the element index
        :type e: int
        :return: the partners as mask
        :rtype: int
        """
        coloops = self.coloops()
        if coloops & (1 << e):
            return 0
        missing = 0
        for b in self._bases:
            if not b & (1 << e):
                missing |= self.ground & ~b
        return self.ground & ~missing & ~coloops

    def find_parallel_pair(self) -> Optional[Tuple[int, int]]:
        """
        The lexicographically least parallel pair (e, f) with e < f.
        """
        for e in range(self._size):
            partners = self.parallel_partners(e) & ~((1 << (e + 1)) - 1)
            if partners:
                return e, bits(partners)[0]
        return None

    def find_series_pairs(self) -> List[Tuple[int, int]]:
        """
        All series pairs (e, f) with e != f, ordered lexicographically.
        """
        result = []
        for e in range(self._size):
            for f in bits(self.series_partners(e)):
                if f != e:
                    result.append((e, f))
        return result

    def classify_elements(self) -> List[ElementTags]:
        """
        Tags every element as loop/coloop and lists its parallel and series partners.

        :return: the tags in element order
        :rtype: list
        """
        loops = self.loops()
        coloops = self.coloops()
        result = []
        for e in range(self._size):
            bit = 1 << e
            result.append(ElementTags(
                label=self._labels[e],
                loop=bool(loops & bit),
                coloop=bool(coloops & bit),
                parallel=self.labels_of(self.parallel_partners(e) & ~bit),
                series=self.labels_of(self.series_partners(e) & ~bit)))
        return result

    def components(self) -> List[int]:
        """
        The connected components as masks, ordered by least element. Uses the
        fundamental circuits with respect to the least basis.

        :return: the components
        :rtype: list
        """
        parent = list(range(self._size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

        base = min(self._bases)
        loops = self.loops()
        for e in bits(self.ground & ~base & ~loops):
            for b in bits(base):
                if ((base & ~(1 << b)) | (1 << e)) in self._bases:
                    union(e, b)
        groups: Dict[int, int] = dict()
        for i in range(self._size):
            r = find(i)
            groups[r] = groups.get(r, 0) | (1 << i)
        return [groups[r] for r in sorted(groups)]

    def is_connected(self) -> bool:
        if self._size <= 1:
            return True
        return len(self.components()) == 1

    def uniform_signature(self) -> Optional[Tuple[int, int]]:
        if len(self._bases) == comb(self._size, self._rank):
            return self._rank, self._size
        return None

    def _minor(self, bases: Iterable[int], keep: int, graph: Optional[Multigraph], cograph: Optional[Multigraph]) -> 'Matroid':
        return Matroid(
            popcount(keep),
            set(compress(b, keep) for b in bases),
            labels=[self._labels[i] for i in bits(keep)],
            graph=graph,
            cograph=cograph)

    def delete(self, subset: int) -> 'Matroid':
        """
        Deletes the elements, keeping the remaining labels in order.

        :param subset: the elements to remove
        :type subset: int
        :return: the minor
        :rtype: Matroid
        """
        if subset == 0:
            return self
        keep = self.ground & ~subset
        r = self.rank_of(keep)
        bases = set(b & keep for b in self._bases if popcount(b & keep) == r)
        labels = self.labels_of(subset)
        return self._minor(bases, keep, _graph_delete(self.graph, labels), _graph_contract(self.cograph, labels))

    def contract(self, subset: int) -> 'Matroid':
        """
        Contracts the elements, keeping the remaining labels in order.

        :param subset: the elements to contract
        :type subset: int
        :return: the minor
        :rtype: Matroid
        """
        if subset == 0:
            return self
        keep = self.ground & ~subset
        r = self.rank_of(subset)
        bases = set(b & keep for b in self._bases if popcount(b & subset) == r)
        labels = self.labels_of(subset)
        return self._minor(bases, keep, _graph_contract(self.graph, labels), _graph_delete(self.cograph, labels))

    def restrict(self, subset: int) -> 'Matroid':
        return self.delete(self.ground & ~subset)

    def dual(self) -> 'Matroid':
        """
        The dual matroid: bases are the complements. Graph provenance is swapped.

        :return: the dual
        :rtype: Matroid
        """
        full = self.ground
        name = None if (self.name is None) else ("dual of " + self.name)
        return Matroid(self._size, set(full & ~b for b in self._bases), labels=self._labels,
                       graph=self.cograph, cograph=self.graph, name=name)

    def independent_sets(self) -> List[int]:
        """
        All independent sets, by closing the bases downwards.

        :return: the independent sets, sorted by size then mask
        :rtype: list
        """
        seen = set(self._bases)
        frontier = list(self._bases)
        while len(frontier) > 0:
            following = []
            for s in frontier:
                for i in bits(s):
                    t = s & ~(1 << i)
                    if t not in seen:
                        seen.add(t)
                        following.append(t)
            frontier = following
        return sorted(seen, key=lambda x: (popcount(x), x))

    def independent_flats(self) -> List[int]:
        return [s for s in self.independent_sets() if self.is_flat(s)]

    def spanning_subsets(self, cap: int = DEFAULT_SUBSET_CAP) -> List[int]:
        """
        All subsets with full rank, largest first (ties by mask).

        :param cap: the maximum ground size to enumerate
        :type cap: int
        :return: the subsets as masks
        :rtype: list
        """
        if self._size > cap:
            raise CapExceededError("Subset enumeration over %d elements exceeds cap of %d" % (self._size, cap))
        full = self.ground
        result = [full & ~s for s in self.dual().independent_sets()]
        result.sort(key=lambda x: (-popcount(x), x))
        return result

    def spanning_connected_subsets(self, cap: int = DEFAULT_SUBSET_CAP) -> List[int]:
        """
        All spanning subsets whose restriction is connected, largest first (ties by mask).

        :param cap: the maximum ground size to enumerate
        :type cap: int
        :return: the subsets as masks
        :rtype: list
        """
        result = []
        for s in self.spanning_subsets(cap=cap):
            if _restriction_connected(self, s):
                result.append(s)
        return result

    def to_dict(self) -> dict:
        return {
            "labels": list(self._labels),
            "rank": self._rank,
            "bases": [self.labels_of(b) for b in sorted(self._bases)],
        }

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return False
        return (self._labels == other._labels) and (self._bases == other._bases)

    def __hash__(self):
        return hash((self._labels, self._bases))

    def __repr__(self):
        name = "" if (self.name is None) else (self.name + ": ")
        return "%srank %d on %d elements, %d bases" % (name, self._rank, self._size, len(self._bases))


def _restriction_connected(m: Matroid, subset: int) -> bool:
    if popcount(subset) <= 1:
        return True
    keep = subset
    r = m.rank_of(keep)
    bases = set(compress(b & keep, keep) for b in m.bases if popcount(b & keep) == r)
    return Matroid(popcount(keep), bases).is_connected()


def _graph_delete(g: Optional[Multigraph], labels: List[str]) -> Optional[Multigraph]:
    if g is None:
        return None
    for label in labels:
        g = delete_edge(g, label)
    return g


def _graph_contract(g: Optional[Multigraph], labels: List[str]) -> Optional[Multigraph]:
    if g is None:
        return None
    for label in labels:
        if g.is_loop(label):
            g = delete_edge(g, label)
        else:
            g = contract_edge(g, label)
    return g


def from_graph(g: Multigraph, cap: int = DEFAULT_MATROID_CAP, cograph: Multigraph = None) -> Matroid:
    """
    The cycle matroid of the graph: bases are the spanning forests, found by filtering
    rank-size edge subsets with union-find.

    :param g: the graph
    :type g: Multigraph
    :param cap: the maximum number of edges
    :type cap: int
    :param cograph: a graph realizing the dual, if known
    :type cograph: Multigraph
    :return: the matroid
    :rtype: Matroid
    """
    if g.num_edges > cap:
        raise CapExceededError("Graph has %d edges, cap is %d" % (g.num_edges, cap))
    rank = g.num_vertices - len(connected_components(g))
    ends = [(g.vertex_index(u), g.vertex_index(v)) for _, u, v in g.edges]
    candidates = [i for i, (u, v) in enumerate(ends) if u != v]
    bases = set()
    for subset in combinations(candidates, rank):
        parent = list(range(g.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for i in subset:
            ru, rv = find(ends[i][0]), find(ends[i][1])
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            mask = 0
            for i in subset:
                mask |= 1 << i
            bases.add(mask)
    return Matroid(g.num_edges, bases, labels=g.edge_labels, graph=g, cograph=cograph, name=g.name)


def from_plane_graph(g: Multigraph, cap: int = DEFAULT_MATROID_CAP) -> Matroid:
    """
    Like from_graph, but attaches the dual built from the faces (if any) as cograph.
    """
    cograph = None
    if g.faces is not None:
        cograph = dual_from_faces(g)
    return from_graph(g, cap=cap, cograph=cograph)


def from_matrix(rows: Sequence[Sequence[int]], labels: Sequence[str] = None, size: int = None,
                cap: int = DEFAULT_MATROID_CAP, name: str = None) -> Matroid:
    """
    The matroid of the columns of a full row rank integer matrix: r-subsets of columns
    with nonzero determinant.

    :param rows: the r x n matrix
    :type rows: Sequence
    :param labels: the column labels
    :type labels: Sequence
    :param size: the number of columns, needed when there are no rows
    :type size: int
    :param cap: the maximum number of columns
    :type cap: int
    :param name: the optional name
    :type name: str
    :return: the matroid
    :rtype: Matroid
    """
    if size is None:
        size = len(labels) if (labels is not None) else (len(rows[0]) if len(rows) > 0 else None)
    m = to_matrix(rows, size)
    n = m.cols
    if n > cap:
        raise CapExceededError("Matrix has %d columns, cap is %d" % (n, cap))
    r = m.rows
    if (r > 0) and (m.rank() != r):
        raise InputError("Matrix does not have full row rank (%d rows, rank %d)" % (r, m.rank()))
    bases = set()
    for subset in combinations(range(n), r):
        if column_minor(m, subset) != 0:
            mask = 0
            for i in subset:
                mask |= 1 << i
            bases.add(mask)
    return Matroid(n, bases, labels=labels, name=name)


def uniform(r: int, n: int, labels: Sequence[str] = None) -> Matroid:
    """
    The uniform matroid U_{r,n}.
    """
    if (r < 0) or (r > n):
        raise InputError("Invalid uniform matroid: U(%d,%d)" % (r, n))
    bases = set()
    for subset in combinations(range(n), r):
        mask = 0
        for i in subset:
            mask |= 1 << i
        bases.add(mask)
    return Matroid(n, bases, labels=labels, name="U(%d,%d)" % (r, n))
