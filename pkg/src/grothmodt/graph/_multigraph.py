from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from grothmodt.core import InputError


class Multigraph(object):
    """
    Undirected graph with labeled vertices and edges, allowing loops and parallel edges.
    Vertices and edges are kept in declaration order, which defines the dense indices
    and all "least label" tie-breaks. Plane graphs can carry their faces as closed walks
    of edge labels (a bridge shows up twice in the same face).
    """

    def __init__(self, vertices: Iterable, edges: Iterable[Tuple], faces: Iterable[Sequence] = None,
                 name: str = None):
        """
        Initializes the graph.

        :param vertices: the vertex labels
        :type vertices: Iterable
        :param edges: the edges as (label, u, v) tuples
        :type edges: Iterable
        :param faces: the optional face walks (lists of edge labels)
        :type faces: Iterable
        :param name: the optional name of the graph
        :type name: str
        """
        self._vertices = tuple(str(v) for v in vertices)
        self._edges = tuple((str(e[0]), str(e[1]), str(e[2])) for e in edges)
        self._vertex_index = dict()
        for i, v in enumerate(self._vertices):
            if v in self._vertex_index:
                raise InputError("Duplicate vertex label: %s" % v)
            self._vertex_index[v] = i
        self._edge_index = dict()
        for i, (label, u, v) in enumerate(self._edges):
            if label in self._edge_index:
                raise InputError("Duplicate edge label: %s" % label)
            if u not in self._vertex_index:
                raise InputError("Edge %s uses undeclared vertex: %s" % (label, u))
            if v not in self._vertex_index:
                raise InputError("Edge %s uses undeclared vertex: %s" % (label, v))
            self._edge_index[label] = i
        self._faces = None
        if faces is not None:
            self._faces = tuple(tuple(str(x) for x in face) for face in faces)
            counts = dict()
            for face in self._faces:
                for label in face:
                    if label not in self._edge_index:
                        raise InputError("Face uses unknown edge: %s" % label)
                    counts[label] = counts.get(label, 0) + 1
            for label in self.edge_labels:
                if counts.get(label, 0) != 2:
                    raise InputError("Edge %s must occur exactly twice in the faces, found: %d" % (label, counts.get(label, 0)))
        self.name = name

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> Tuple[Tuple[str, str, str], ...]:
        return self._edges

    @property
    def edge_labels(self) -> List[str]:
        return [e[0] for e in self._edges]

    @property
    def faces(self) -> Optional[Tuple[Tuple[str, ...], ...]]:
        return self._faces

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_index

    def has_edge(self, label: str) -> bool:
        return label in self._edge_index

    def vertex_index(self, v: str) -> int:
        """
        Returns the dense index of the vertex.

        :param v: the vertex label
        :type v: str
        :return: the index
        :rtype: int
        """
        if v not in self._vertex_index:
            raise InputError("Unknown vertex: %s" % v)
        return self._vertex_index[v]

    def edge(self, label: str) -> Tuple[str, str, str]:
        """
        Returns the (label, u, v) tuple of the edge.

        :param label: the edge label
        :type label: str
        :return: the edge
        :rtype: tuple
        """
        if label not in self._edge_index:
            raise InputError("Unknown edge: %s" % label)
        return self._edges[self._edge_index[label]]

    def is_loop(self, label: str) -> bool:
        _, u, v = self.edge(label)
        return u == v

    def neighbors(self, v: str) -> Set[str]:
        """
        Returns the vertices joined to v by a non-loop edge.

        :param v: the vertex
        :type v: str
        :return: the neighbors
        :rtype: set
        """
        result = set()
        for _, a, b in self._edges:
            if a == b:
                continue
            if a == v:
                result.add(b)
            elif b == v:
                result.add(a)
        return result

    def closed_neighborhood(self, v: str) -> Set[str]:
        result = self.neighbors(v)
        result.add(v)
        return result

    def to_networkx(self) -> nx.Graph:
        """
        Returns the underlying simple graph (loops and parallels collapsed), with all vertices.

        :return: the networkx graph
        :rtype: nx.Graph
        """
        result = nx.Graph()
        result.add_nodes_from(self._vertices)
        for _, u, v in self._edges:
            if u != v:
                result.add_edge(u, v)
        return result

    def sort_vertices(self, vertices: Iterable[str]) -> List[str]:
        return sorted(vertices, key=lambda x: self._vertex_index[x])

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return False
        return (self._vertices == other._vertices) and (self._edges == other._edges)

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        name = "" if (self.name is None) else (self.name + ": ")
        return "%s%d vertices, %d edges" % (name, self.num_vertices, self.num_edges)


def simplify(g: Multigraph) -> Multigraph:
    """
    Merges parallel edges (the first label survives), deletes loops and drops isolated vertices.

    :param g: the graph to simplify
    :type g: Multigraph
    :return: the simple graph
    :rtype: Multigraph
    """
    seen = set()
    edges = []
    used = set()
    for label, u, v in g.edges:
        if u == v:
            continue
        key = frozenset((u, v))
        if key in seen:
            continue
        seen.add(key)
        edges.append((label, u, v))
        used.add(u)
        used.add(v)
    if len(edges) == 0:
        raise InputError("Graph needs at least one edge that is not a loop")
    vertices = [v for v in g.vertices if v in used]
    return Multigraph(vertices, edges, name=g.name)


def connected_components(g: Multigraph) -> List[List[str]]:
    """
    Returns the connected components, ordered by their least vertex.

    :param g: the graph
    :type g: Multigraph
    :return: the vertex lists of the components
    :rtype: list
    """
    result = [g.sort_vertices(c) for c in nx.connected_components(g.to_networkx())]
    result.sort(key=lambda c: g.vertex_index(c[0]))
    return result


def find_nexi(g: Multigraph) -> Set[str]:
    """
    Returns the cut vertices of the graph.

    :param g: the graph
    :type g: Multigraph
    :return: the nexi
    :rtype: set
    """
    return set(nx.articulation_points(g.to_networkx()))


def is_cone_with_apex(g: Multigraph, v: str) -> bool:
    """
    Checks whether every other vertex is adjacent to v.

    :param g: the graph
    :type g: Multigraph
    :param v: the candidate apex
    :type v: str
    :return: True if a cone with apex v
    :rtype: bool
    """
    g.vertex_index(v)
    return len(g.closed_neighborhood(v)) == g.num_vertices


def delete_edge(g: Multigraph, label: str) -> Multigraph:
    """
    Removes the edge; vertices stay. Faces are not carried over.

    :param g: the graph
    :type g: Multigraph
    :param label: the edge to delete
    :type label: str
    :return: the new graph
    :rtype: Multigraph
    """
    g.edge(label)
    return Multigraph(g.vertices, [e for e in g.edges if e[0] != label])


def contract_edge(g: Multigraph, label: str) -> Multigraph:
    """
    Merges the endpoints of the edge into the endpoint declared first and removes the edge.
    Resulting loops and parallel edges are kept, so are the faces (minus the edge).

    :param g: the graph
    :type g: Multigraph
    :param label: the edge to contract
    :type label: str
    :return: the new graph
    :rtype: Multigraph
    """
    _, u, v = g.edge(label)
    if u == v:
        raise InputError("Cannot contract loop: %s" % label)
    keep, drop = (u, v) if (g.vertex_index(u) < g.vertex_index(v)) else (v, u)
    vertices = [x for x in g.vertices if x != drop]
    edges = []
    for e, a, b in g.edges:
        if e == label:
            continue
        edges.append((e, keep if (a == drop) else a, keep if (b == drop) else b))
    faces = None
    if g.faces is not None:
        faces = [[x for x in face if x != label] for face in g.faces]
        faces = [face for face in faces if len(face) > 0]
    return Multigraph(vertices, edges, faces=faces)


def subdivide_edge(g: Multigraph, label: str, first: str = None, second: str = None, middle: str = None) -> Multigraph:
    """
    Replaces the edge by two edges in series through a new vertex. Faces are updated.

    :param g: the graph
    :type g: Multigraph
    :param label: the edge to divide
    :type label: str
    :param first: the label for the half at the first endpoint, default label + "a"
    :type first: str
    :param second: the label for the half at the second endpoint, default label + "b"
    :type second: str
    :param middle: the label for the new vertex, default "m" + label
    :type middle: str
    :return: the new graph
    :rtype: Multigraph
    """
    _, u, v = g.edge(label)
    if first is None:
        first = label + "a"
    if second is None:
        second = label + "b"
    if middle is None:
        middle = "m" + label
    edges = []
    for e in g.edges:
        if e[0] == label:
            edges.append((first, u, middle))
            edges.append((second, middle, v))
        else:
            edges.append(e)
    faces = None
    if g.faces is not None:
        faces = []
        for face in g.faces:
            walk = []
            for x in face:
                if x == label:
                    walk.extend([first, second])
                else:
                    walk.append(x)
            faces.append(walk)
    return Multigraph(list(g.vertices) + [middle], edges, faces=faces, name=g.name)


def dual_from_faces(g: Multigraph, name: str = None) -> Multigraph:
    """
    Builds the dual of a connected plane graph from its faces. Only the edge/face
    incidences are used, not the cyclic order within a face. Dual vertices are
    named "f0", "f1", ... in face order; dual edges keep the labels of the primal edges.

    :param g: the plane graph
    :type g: Multigraph
    :param name: the name for the dual
    :type name: str
    :return: the dual graph, carrying the primal's vertex stars as faces
    :rtype: Multigraph
    """
    if g.faces is None:
        raise InputError("Graph has no faces, cannot build dual: %s" % g.name)
    if len(connected_components(g)) != 1:
        raise InputError("Dual requires a connected plane graph")
    if g.num_vertices - g.num_edges + len(g.faces) != 2:
        raise InputError("Faces violate Euler's formula: V=%d E=%d F=%d" % (g.num_vertices, g.num_edges, len(g.faces)))
    incidence: Dict[str, List[int]] = dict()
    for i, face in enumerate(g.faces):
        for label in face:
            incidence.setdefault(label, []).append(i)
    vertices = ["f%d" % i for i in range(len(g.faces))]
    edges = []
    for label in g.edge_labels:
        a, b = incidence[label]
        edges.append((label, vertices[a], vertices[b]))
    # the faces of the dual are the stars of the primal vertices
    stars = []
    for v in g.vertices:
        star = []
        for label, a, b in g.edges:
            if a == v:
                star.append(label)
            if b == v:
                star.append(label)
        if len(star) > 0:
            stars.append(star)
    return Multigraph(vertices, edges, faces=stars, name=name)
