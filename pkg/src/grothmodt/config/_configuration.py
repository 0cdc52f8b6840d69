from typing import List, Optional, Sequence

from grothmodt.core import InputError, DEFAULT_MATROID_CAP
from grothmodt.graph import Multigraph, connected_components
from grothmodt.matroid import Matroid, from_matrix, from_graph, integer_kernel_basis, integer_rank, bits, to_matrix


class Configuration(object):
    """
    A configuration W, given by an integer matrix of full row rank whose row space is W.
    Graph configurations remember their graph (for the Laplacian evaluation path).
    """

    def __init__(self, rows: Sequence[Sequence[int]], labels: Sequence[str] = None, size: int = None,
                 graph: Multigraph = None, name: str = None):
        """
        Initializes the configuration.

        :param rows: the r x n integer matrix
        :type rows: Sequence
        :param labels: the column labels, default "0".."n-1"
        :type labels: Sequence
        :param size: the number of columns, only needed if there are no rows
        :type size: int
        :param graph: the graph this configuration stems from
        :type graph: Multigraph
        :param name: the optional name
        :type name: str
        """
        rows = [list(row) for row in rows]
        if size is None:
            if labels is not None:
                size = len(labels)
            elif len(rows) > 0:
                size = len(rows[0])
            else:
                raise InputError("Cannot determine the number of columns of an empty configuration")
        to_matrix(rows, size)
        self.rows = tuple(tuple(row) for row in rows)
        self.size = size
        if labels is None:
            labels = [str(i) for i in range(size)]
        self.labels = tuple(str(x) for x in labels)
        if len(self.labels) != size:
            raise InputError("Expected %d labels, got: %d" % (size, len(self.labels)))
        rank = integer_rank([list(r) for r in self.rows], size)
        if rank != len(self.rows):
            raise InputError("Configuration matrix needs full row rank (%d rows, rank %d)" % (len(self.rows), rank))
        self.graph = graph
        self.name = name

    @property
    def rank(self) -> int:
        return len(self.rows)

    def matroid(self, cap: int = DEFAULT_MATROID_CAP) -> Matroid:
        """
        The matroid of the configuration. Graph configurations use the spanning forests.

        :param cap: the maximum number of elements
        :type cap: int
        :return: the matroid
        :rtype: Matroid
        """
        if self.graph is not None:
            return from_graph(self.graph, cap=cap)
        return from_matrix([list(r) for r in self.rows], labels=self.labels, size=self.size, cap=cap, name=self.name)

    def restrict(self, subset: int) -> 'Configuration':
        """
        The configuration W|S: the projection of W onto the coordinates in S,
        with a full row rank basis picked from the projected rows.

        :param subset: the coordinates to keep as mask
        :type subset: int
        :return: the restricted configuration
        :rtype: Configuration
        """
        columns = bits(subset)
        projected = [[row[i] for i in columns] for row in self.rows]
        labels = [self.labels[i] for i in columns]
        if (len(projected) == 0) or (len(columns) == 0):
            return Configuration([], labels=labels, size=len(columns))
        _, pivots = to_matrix(projected, len(columns)).T.rref()
        return Configuration([projected[i] for i in pivots], labels=labels, size=len(columns))

    def dual(self) -> 'Configuration':
        """
        The orthogonal complement W^perp, realized by an integer kernel basis.

        :return: the dual configuration
        :rtype: Configuration
        """
        rows = integer_kernel_basis([list(r) for r in self.rows], self.size)
        name = None if (self.name is None) else ("dual of " + self.name)
        return Configuration(rows, labels=self.labels, size=self.size, name=name)

    def to_dict(self) -> dict:
        return {
            "rows": [list(r) for r in self.rows],
            "labels": list(self.labels),
        }

    def __repr__(self):
        return "Configuration(%d x %d)" % (self.rank, self.size)


def configuration_from_dict(d: dict, name: str = None) -> Configuration:
    """
    Creates the configuration from {"rows": [[...], ...], "labels": [...]}.

    :param d: the dictionary
    :type d: dict
    :param name: the optional name
    :type name: str
    :return: the configuration
    :rtype: Configuration
    """
    if not isinstance(d, dict) or ("rows" not in d):
        raise InputError("Matrix input needs a 'rows' entry")
    rows = d["rows"]
    if not isinstance(rows, list):
        raise InputError("'rows' must be a list of lists")
    labels = d.get("labels")
    if (len(rows) == 0) and (labels is None):
        raise InputError("Empty matrix needs 'labels'")
    return Configuration(rows, labels=labels, name=name)


def incidence_configuration(g: Multigraph) -> Configuration:
    """
    The span of the vertex incidence vectors. Per component the least vertex is left
    out; an edge {u, v} with u declared before v has -1 at u and +1 at v, loops give
    zero columns.

    :param g: the graph
    :type g: Multigraph
    :return: the configuration
    :rtype: Configuration
    """
    skip = set(c[0] for c in connected_components(g))
    rows = []
    for w in g.vertices:
        if w in skip:
            continue
        row = []
        for _, u, v in g.edges:
            if u == v:
                row.append(0)
                continue
            lo, hi = (u, v) if (g.vertex_index(u) < g.vertex_index(v)) else (v, u)
            if w == lo:
                row.append(-1)
            elif w == hi:
                row.append(1)
            else:
                row.append(0)
        rows.append(row)
    return Configuration(rows, labels=g.edge_labels, size=g.num_edges, graph=g, name=g.name)


def vandermonde_realization(r: int, n: int, nodes: Optional[List[int]] = None) -> Configuration:
    """
    The r x n Vandermonde matrix with nodes 1..n, a realization of U_{r,n}.

    :param r: the rank
    :type r: int
    :param n: the number of elements
    :type n: int
    :param nodes: the nodes to use instead of 1..n
    :type nodes: list
    :return: the configuration
    :rtype: Configuration
    """
    if (r < 1) or (r > n):
        raise InputError("Vandermonde realization requires 1 <= r <= n, got r=%d, n=%d" % (r, n))
    if nodes is None:
        nodes = list(range(1, n + 1))
    if (len(nodes) != n) or (len(set(nodes)) != n):
        raise InputError("Need %d distinct nodes" % n)
    rows = [[x ** i for x in nodes] for i in range(r)]
    return Configuration(rows, labels=["e%d" % (j + 1) for j in range(n)], name="U(%d,%d)" % (r, n))
