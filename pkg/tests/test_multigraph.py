import pytest
from hypothesis import given, assume

from grothmodt.core import InputError
from grothmodt.graph import Multigraph, simplify, connected_components, find_nexi, is_cone_with_apex
from grothmodt.graph import delete_edge, contract_edge, subdivide_edge, dual_from_faces
from grothmodt.graph import build, parse_edge_list, format_edge_list, read_edge_list, write_edge_list
from grothmodt.matroid import from_graph

from ._strategies import multigraphs

PLANE_BUILDERS = [
    "T 3", "C 4", "B 3", "W 3", "W 4", "Whats 3", "WhatsOverF 3", "WhatsOverFSplit 3",
    "prism", "prism-chord", "DoubleFan 3", "OpenDoubleFan 4", "ladder", "octahedron",
]


def test_parse_edge_list():
    g = parse_edge_list(["a b", "# comment", "", "b c x  # trailing", "c a"])
    assert g.vertices == ("a", "b", "c")
    assert g.edges == (("e1", "a", "b"), ("x", "b", "c"), ("e3", "c", "a"))
    assert g.faces is None


def test_parse_edge_list_loops_and_parallels():
    g = parse_edge_list(["a b", "a b", "b b"])
    assert g.num_edges == 3
    assert g.is_loop("e3")
    assert not g.is_loop("e2")


def test_parse_edge_list_reports_line():
    with pytest.raises(InputError, match="^line 2:"):
        parse_edge_list(["a b", "a b c d"])


def test_parse_edge_list_duplicate_label():
    with pytest.raises(InputError, match="^line 3:"):
        parse_edge_list(["a b x", "b c y", "c a x"])


def test_parse_edge_list_empty():
    with pytest.raises(InputError):
        parse_edge_list(["# nothing here", ""])


def test_faces_must_cover_edges_twice():
    with pytest.raises(InputError):
        parse_edge_list(["a b x", "b c y", "c a z", "# face: x y z"])


def test_undeclared_vertex():
    with pytest.raises(InputError):
        Multigraph(["a"], [("e1", "a", "b")])


@pytest.mark.parametrize("expression", PLANE_BUILDERS)
def test_edge_list_round_trip(expression):
    g = build(expression)
    parsed = parse_edge_list(format_edge_list(g).splitlines())
    assert parsed.edges == g.edges
    assert parsed.faces == g.faces
    assert sorted(parsed.vertices) == sorted(g.vertices)
    assert from_graph(parsed) == from_graph(g)


def test_edge_list_file(tmp_path):
    g = build("W 3")
    path = str(tmp_path / "w3.txt")
    write_edge_list(g, path)
    read = read_edge_list(path)
    assert read.name == path
    assert from_graph(read) == from_graph(g)


def test_simplify_merges_parallels_and_drops_loops():
    g = Multigraph(["a", "b", "c"], [("x", "a", "b"), ("y", "b", "a"), ("z", "c", "c")])
    s = simplify(g)
    assert s.vertices == ("a", "b")
    assert s.edges == (("x", "a", "b"),)


def test_simplify_only_loops():
    with pytest.raises(InputError):
        simplify(build("C 1"))


@given(multigraphs())
def test_simplify_idempotent(g):
    assume(any(u != v for _, u, v in g.edges))
    s = simplify(g)
    assert simplify(s) == s


@given(multigraphs(max_edges=8))
def test_contract_commutes_with_simplify(g):
    assume(any(u != v for _, u, v in g.edges))
    s = simplify(g)
    for label in s.edge_labels:
        contracted = contract_edge(g, label)
        if not any(u != v for _, u, v in contracted.edges):
            continue
        assert simplify(contracted) == simplify(contract_edge(s, label))


@given(multigraphs(max_edges=8))
def test_delete_commutes_with_simplify(g):
    assume(any(u != v for _, u, v in g.edges))
    s = simplify(g)
    for label in s.edge_labels:
        _, u, v = g.edge(label)
        parallel = [e for e, a, b in g.edges if (e != label) and ({a, b} == {u, v})]
        if len(parallel) > 0:
            continue
        deleted = delete_edge(g, label)
        if not any(a != b for _, a, b in deleted.edges):
            continue
        assert simplify(deleted).edges == delete_edge(s, label).edges


def test_contract_loop():
    with pytest.raises(InputError):
        contract_edge(build("C 1"), "e1")


def test_contract_cycle():
    g = contract_edge(build("C 4"), "e2")
    assert g.num_vertices == 3
    assert from_graph(g).uniform_signature() == (2, 3)


def test_contract_banana():
    g = contract_edge(build("B 2"), "e1")
    assert g.vertices == ("a",)
    assert g.is_loop("e2")


def test_delete_edge():
    g = delete_edge(build("C 3"), "e1")
    assert g.num_vertices == 3
    assert g.edge_labels == ["e2", "e3"]
    with pytest.raises(InputError):
        delete_edge(g, "e1")


def test_subdivide_edge():
    g = subdivide_edge(build("C 3"), "e1")
    assert g.edge_labels == ["e1a", "e1b", "e2", "e3"]
    assert g.num_vertices == 4
    assert dual_from_faces(g).num_vertices == 2


def test_components():
    g = Multigraph(["a", "b", "c", "d"], [("x", "c", "d"), ("y", "a", "b")])
    assert connected_components(g) == [["a", "b"], ["c", "d"]]


def test_nexi():
    assert find_nexi(build("T 3")) == {"v1", "v2"}
    assert find_nexi(build("C 4")) == set()
    two_triangles = parse_edge_list(["a b", "b c", "c a", "c d", "d e", "e c"])
    assert find_nexi(two_triangles) == {"c"}


def test_cone():
    g = build("C 4")
    assert not any(is_cone_with_apex(g, v) for v in g.vertices)
    g = build("K 4")
    assert all(is_cone_with_apex(g, v) for v in g.vertices)
    assert is_cone_with_apex(build("W 5"), "h")


def test_dual_of_cycle_is_banana():
    d = dual_from_faces(build("C 4"))
    assert d.num_vertices == 2
    assert d.num_edges == 4
    assert all(set(e[1:]) == {"f0", "f1"} for e in d.edges)


def test_dual_requires_faces():
    with pytest.raises(InputError):
        dual_from_faces(build("K 4"))


@pytest.mark.parametrize("expression", PLANE_BUILDERS)
def test_dual_graph_realizes_dual_matroid(expression):
    g = build(expression)
    assert from_graph(dual_from_faces(g)) == from_graph(g).dual()


@pytest.mark.parametrize("expression", ["W 3", "prism", "octahedron"])
def test_dual_twice(expression):
    g = build(expression)
    assert from_graph(dual_from_faces(dual_from_faces(g))) == from_graph(g)
