from typing import Callable, Dict, List, Tuple

from grothmodt.core import InputError
from ._multigraph import Multigraph, subdivide_edge, contract_edge, dual_from_faces


def tree(n: int) -> Multigraph:
    """
    The path T_n with n edges e1..en; a single face walks every edge twice.
    """
    _check_min("T", n, 1)
    vertices = ["v%d" % i for i in range(n + 1)]
    edges = [("e%d" % i, "v%d" % (i - 1), "v%d" % i) for i in range(1, n + 1)]
    labels = [e[0] for e in edges]
    return Multigraph(vertices, edges, faces=[labels + list(reversed(labels))], name="T %d" % n)


def cycle(n: int) -> Multigraph:
    """
    The cycle C_n with edges e1..en.
    """
    _check_min("C", n, 1)
    vertices = ["v%d" % i for i in range(n)]
    edges = [("e%d" % i, "v%d" % (i - 1), "v%d" % (i % n)) for i in range(1, n + 1)]
    labels = [e[0] for e in edges]
    return Multigraph(vertices, edges, faces=[labels, list(reversed(labels))], name="C %d" % n)


def banana(n: int) -> Multigraph:
    """
    The banana graph B_n: two vertices joined by n parallel edges.
    """
    _check_min("B", n, 1)
    edges = [("e%d" % i, "a", "b") for i in range(1, n + 1)]
    if n == 1:
        faces = [["e1", "e1"]]
    else:
        faces = [["e%d" % i, "e%d" % (i % n + 1)] for i in range(1, n + 1)]
    return Multigraph(["a", "b"], edges, faces=faces, name="B %d" % n)


def wheel(n: int) -> Multigraph:
    """
    The wheel W_n: hub h, rim vertices r1..rn, spokes s1..sn and rim edges c1..cn
    (c_i joins r_i and r_i+1).
    """
    _check_min("W", n, 2)
    vertices = ["h"] + ["r%d" % i for i in range(1, n + 1)]
    edges = []
    for i in range(1, n + 1):
        edges.append(("s%d" % i, "h", "r%d" % i))
    for i in range(1, n + 1):
        edges.append(("c%d" % i, "r%d" % i, "r%d" % (i % n + 1)))
    faces = [["s%d" % i, "c%d" % i, "s%d" % (i % n + 1)] for i in range(1, n + 1)]
    faces.append(["c%d" % i for i in range(1, n + 1)])
    return Multigraph(vertices, edges, faces=faces, name="W %d" % n)


def divided_wheel(n: int) -> Multigraph:
    """
    The wheel W_n with every edge divided into two edges in series (suffixes a/b).
    """
    result = wheel(n)
    for label in list(result.edge_labels):
        result = subdivide_edge(result, label)
    result.name = "Whats %d" % n
    return result


def divided_wheel_over_spoke(n: int) -> Multigraph:
    """
    The divided wheel with the hub half of spoke s1 contracted: all edges but one spoke
    (s1b) are divided.
    """
    result = contract_edge(divided_wheel(n), "s1a")
    result.name = "WhatsOverF %d" % n
    return result


def divided_wheel_over_spoke_split(n: int) -> Multigraph:
    """
    Divides the rim half-edge c1a of WhatsOverF n once more.
    """
    result = subdivide_edge(divided_wheel_over_spoke(n), "c1a")
    result.name = "WhatsOverFSplit %d" % n
    return result


def complete(n: int) -> Multigraph:
    _check_min("K", n, 1)
    vertices = ["v%d" % i for i in range(1, n + 1)]
    edges = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            edges.append(("e%d_%d" % (i, j), "v%d" % i, "v%d" % j))
    return Multigraph(vertices, edges, name="K %d" % n)


def complete_bipartite(m: int, n: int) -> Multigraph:
    _check_min("K", m, 1)
    _check_min("K", n, 1)
    vertices = ["a%d" % i for i in range(1, m + 1)] + ["b%d" % j for j in range(1, n + 1)]
    edges = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            edges.append(("a%db%d" % (i, j), "a%d" % i, "b%d" % j))
    return Multigraph(vertices, edges, name="K %d %d" % (m, n))


def octahedron() -> Multigraph:
    """
    K_{2,2,2} with classes {a1,a2}, {b1,b2}, {c1,c2}; the faces are the 8 triangles.
    """
    classes = [["a1", "a2"], ["b1", "b2"], ["c1", "c2"]]
    vertices = [v for c in classes for v in c]
    edges = []
    for i in range(3):
        for j in range(i + 1, 3):
            for u in classes[i]:
                for v in classes[j]:
                    edges.append((u + v, u, v))
    faces = []
    for a in classes[0]:
        for b in classes[1]:
            for c in classes[2]:
                faces.append([a + b, b + c, a + c])
    return Multigraph(vertices, edges, faces=faces, name="octahedron")


def cube() -> Multigraph:
    return dual_from_faces(octahedron(), name="cube")


def prism() -> Multigraph:
    """
    The triangular prism drawn as a square ABCD (A top left, counter-clockwise) with
    inner edge PQ, P joined to A and D, Q joined to B and C.
    """
    vertices = ["A", "B", "C", "D", "P", "Q"]
    edges = [
        ("AB", "A", "B"), ("BC", "B", "C"), ("CD", "C", "D"), ("DA", "D", "A"),
        ("PQ", "P", "Q"), ("DP", "D", "P"), ("PA", "P", "A"), ("CQ", "C", "Q"), ("QB", "Q", "B"),
    ]
    faces = [
        ["AB", "BC", "CD", "DA"],
        ["PA", "DP", "DA"],
        ["QB", "CQ", "BC"],
        ["AB", "QB", "PQ", "PA"],
        ["CD", "CQ", "PQ", "DP"],
    ]
    return Multigraph(vertices, edges, faces=faces, name="prism")


def prism_chord() -> Multigraph:
    """
    The prism with the additional chord QD splitting the lower quadrilateral.
    """
    base = prism()
    edges = list(base.edges) + [("QD", "Q", "D")]
    faces = [f for f in base.faces if f != ("CD", "CQ", "PQ", "DP")]
    faces.append(["QD", "PQ", "DP"])
    faces.append(["CD", "CQ", "QD"])
    return Multigraph(base.vertices, edges, faces=faces, name="prism-chord")


def _fan_edges(k: int) -> List[Tuple[str, str, str]]:
    edges = []
    for i in range(1, k):
        edges.append(("p%dp%d" % (i, i + 1), "p%d" % i, "p%d" % (i + 1)))
    for apex in ["a", "b"]:
        for i in range(1, k + 1):
            edges.append(("%sp%d" % (apex, i), apex, "p%d" % i))
    return edges


def _fan_faces(k: int) -> List[List[str]]:
    faces = []
    for apex in ["a", "b"]:
        for i in range(1, k):
            faces.append(["%sp%d" % (apex, i), "p%dp%d" % (i, i + 1), "%sp%d" % (apex, i + 1)])
    return faces


def double_fan(k: int) -> Multigraph:
    """
    Two adjacent apexes a and b, both joined to every vertex of the path p1..pk.
    """
    _check_min("DoubleFan", k, 2)
    vertices = ["a", "b"] + ["p%d" % i for i in range(1, k + 1)]
    edges = [("ab", "a", "b")] + _fan_edges(k)
    faces = _fan_faces(k)
    faces.append(["ap1", "bp1", "ab"])
    faces.append(["ap%d" % k, "bp%d" % k, "ab"])
    return Multigraph(vertices, edges, faces=faces, name="DoubleFan %d" % k)


def open_double_fan(k: int) -> Multigraph:
    """
    The double fan without the edge between the apexes.
    """
    _check_min("OpenDoubleFan", k, 2)
    vertices = ["a", "b"] + ["p%d" % i for i in range(1, k + 1)]
    faces = _fan_faces(k)
    faces.append(["ap1", "bp1", "bp%d" % k, "ap%d" % k])
    return Multigraph(vertices, _fan_edges(k), faces=faces, name="OpenDoubleFan %d" % k)


def ladder() -> Multigraph:
    """
    The 3-regular planar graph on 8 vertices: L and R joined directly and by the paths
    L-t1-t2-t3-R and L-b1-b2-b3-R, with rungs t_i-b_i. Its dual is DoubleFan 4.
    """
    vertices = ["L", "R", "t1", "t2", "t3", "b1", "b2", "b3"]
    edges = [
        ("RL", "R", "L"),
        ("Lt1", "L", "t1"), ("t1t2", "t1", "t2"), ("t2t3", "t2", "t3"), ("t3R", "t3", "R"),
        ("Lb1", "L", "b1"), ("b1b2", "b1", "b2"), ("b2b3", "b2", "b3"), ("b3R", "b3", "R"),
        ("b1t1", "b1", "t1"), ("b2t2", "b2", "t2"), ("b3t3", "b3", "t3"),
    ]
    faces = [
        ["RL", "Lt1", "t1t2", "t2t3", "t3R"],
        ["RL", "Lb1", "b1b2", "b2b3", "b3R"],
        ["Lt1", "b1t1", "Lb1"],
        ["t1t2", "b2t2", "b1b2", "b1t1"],
        ["t2t3", "b3t3", "b2b3", "b2t2"],
        ["t3R", "b3R", "b3t3"],
    ]
    return Multigraph(vertices, edges, faces=faces, name="ladder")


def _check_min(name: str, value: int, minimum: int):
    if value < minimum:
        raise InputError("Builder '%s' requires a parameter of at least %d, got: %d" % (name, minimum, value))


# name -> (number of integer parameters, function)
BUILDERS: Dict[str, Tuple[int, Callable]] = {
    "T": (1, tree),
    "C": (1, cycle),
    "B": (1, banana),
    "W": (1, wheel),
    "Whats": (1, divided_wheel),
    "WhatsOverF": (1, divided_wheel_over_spoke),
    "WhatsOverFSplit": (1, divided_wheel_over_spoke_split),
    "K": (1, complete),
    "octahedron": (0, octahedron),
    "cube": (0, cube),
    "prism": (0, prism),
    "prism-chord": (0, prism_chord),
    "DoubleFan": (1, double_fan),
    "OpenDoubleFan": (1, open_double_fan),
    "ladder": (0, ladder),
}


def build(expression: str) -> Multigraph:
    """
    Builds a graph from an expression like "W 4", "K 3 3" or "Dual DoubleFan 3".

    :param expression: the builder expression
    :type expression: str
    :return: the graph
    :rtype: Multigraph
    """
    tokens = expression.split()
    if len(tokens) == 0:
        raise InputError("Empty builder expression")
    if tokens[0].lower() == "dual":
        inner = build(" ".join(tokens[1:]))
        return dual_from_faces(inner, name=expression.strip())
    lookup = {k.lower(): k for k in BUILDERS}
    name = lookup.get(tokens[0].lower())
    if name is None:
        raise InputError("Unknown builder: %s (available: %s)" % (tokens[0], ", ".join(BUILDERS)))
    try:
        params = [int(x) for x in tokens[1:]]
    except ValueError:
        raise InputError("Builder parameters must be integers: %s" % expression)
    if (name == "K") and (len(params) == 2):
        return complete_bipartite(params[0], params[1])
    arity, func = BUILDERS[name]
    if len(params) != arity:
        raise InputError("Builder '%s' expects %d parameter(s), got: %d" % (name, arity, len(params)))
    return func(*params)


def builder_names() -> List[str]:
    return list(BUILDERS.keys())
