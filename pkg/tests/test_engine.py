from math import comb

import pytest
from hypothesis import given, assume, strategies as st

from grothmodt.core import TARGET_Y, RULE_PARALLEL, RULE_RANK_ONE, RULE_CORANK_ONE, RULE_FAT_NEXUS, RULE_REFERENCE, RULE_SERIES
from grothmodt.engine import ClassModT, EngineContext, class_Y, class_Ytorus, class_Y_dual_via_flats, compute_classes
from grothmodt.engine import corank_two_value, corank_two_candidate, rank_two_torus_value, explain
from grothmodt.engine import ReferenceClass, DEFAULT_REFERENCES, reference_table, lookup_reference
from grothmodt.graph import Multigraph, build, subdivide_edge
from grothmodt.matroid import from_graph, from_plane_graph, uniform
from grothmodt.reader import graph_item

from ._strategies import multigraphs


def _sign(n: int) -> int:
    return (-1) ** (n - 1)


def _classes(expression: str, **kwargs):
    m = graph_item(build(expression), expression).matroid
    ctx = EngineContext(**kwargs)
    return class_Y(m, ctx), class_Ytorus(m, ctx)


def test_class_mod_t():
    assert ClassModT.known(3).is_known
    assert str(ClassModT.known(-2)) == "-2"
    u = ClassModT.unknown("cycle")
    assert not u.is_known
    assert u.to_json() == "unknown"
    assert str(u) == "unknown"


def test_closed_forms():
    assert [corank_two_value(n) for n in (4, 5, 6)] == [1, 1, -4]
    assert corank_two_candidate(4) != corank_two_value(4)
    assert [rank_two_torus_value(n) for n in (3, 4, 5)] == [1, -3, 6]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_trees(n):
    delta = 1 if (n == 1) else 0
    y, ytorus = _classes("T %d" % n)
    assert (y.value, ytorus.value) == (delta, delta)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_cycles(n):
    y, ytorus = _classes("C %d" % n)
    assert (y.value, ytorus.value) == (_sign(n), _sign(n))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_bananas(n):
    y, ytorus = _classes("B %d" % n)
    assert (y.value, ytorus.value) == (1, _sign(n))


@pytest.mark.parametrize("n", [3, 4])
def test_wheels(n):
    y, ytorus = _classes("W %d" % n)
    assert (y.value, ytorus.value) == (0, -comb(n, 2))


def test_divided_wheel():
    y, ytorus = _classes("Whats 3")
    assert (y.value, ytorus.value) == (-3, -3)


def test_divided_wheel_over_spoke():
    y, ytorus = _classes("WhatsOverF 3")
    assert (y.value, ytorus.value) == (2, 3)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_uniform_rank_two(n):
    m = uniform(2, n)
    assert class_Ytorus(m).value == _sign(n) * comb(n - 1, 2)
    assert class_Y(m).value == 1


@pytest.mark.parametrize("n", [4, 5, 6])
def test_uniform_corank_two(n):
    assert class_Y(uniform(n - 2, n)).value == corank_two_value(n)


def test_rank_zero():
    m = from_graph(build("C 1"))
    assert class_Y(m).value == 1
    assert class_Ytorus(m).value == 1
    assert class_Y(uniform(0, 3)).value == 3
    assert class_Ytorus(uniform(0, 3)).value == 0


def test_dual_via_flats():
    assert class_Y_dual_via_flats(uniform(3, 4)).value == 1
    assert class_Y_dual_via_flats(uniform(2, 4)).value == 1
    assert not class_Y_dual_via_flats(uniform(0, 3)).is_known
    assert not class_Y_dual_via_flats(uniform(3, 3)).is_known


def test_duality_of_torus_class():
    for expression in ["W 3", "prism", "DoubleFan 3"]:
        m = from_plane_graph(build(expression))
        value = class_Ytorus(m)
        assert value.is_known
        assert class_Ytorus(m.dual()).value == value.value


def test_references():
    y, _ = _classes("K 3 3")
    assert y.value == 1
    y, _ = _classes("K 3 3", use_references=False)
    assert (not y.is_known) or (y.value == 1)


def test_custom_reference():
    refs = [ReferenceClass("C 5", TARGET_Y, 42, "test")]
    assert len(reference_table(refs)) == 1
    m = from_graph(build("C 5"))
    ctx = EngineContext(references=refs)
    trace = ctx.y(m)
    assert trace.rule == RULE_REFERENCE
    assert trace.result.value == 42


def test_trace_replay():
    for expression in ["W 3", "Whats 3", "DoubleFan 3", "ladder"]:
        m = graph_item(build(expression), expression).matroid
        y, ytorus = compute_classes(m)
        for trace in (y, ytorus):
            if trace.result.is_known:
                assert trace.replay() == trace.result.value
                assert trace.to_dict()["result"] == trace.result.value


def test_explain_banana():
    y, _ = compute_classes(from_graph(build("B 3")))
    text = explain(y)
    lines = text.splitlines()
    assert lines[0].startswith("Y(")
    assert ("[%s:" % RULE_PARALLEL) in lines[0]
    assert ("[%s:" % RULE_RANK_ONE) in text


def test_explain_cycle():
    y, _ = compute_classes(from_graph(build("C 4")))
    assert ("[%s:" % RULE_CORANK_ONE) in explain(y)


def test_explain_depth():
    y, _ = compute_classes(from_graph(build("Whats 3")))
    full = explain(y)
    short = explain(y, max_depth=1)
    assert len(short.splitlines()) <= len(full.splitlines())
    assert y.size() >= 1


def test_fat_nexus_rule():
    trace = EngineContext().y(from_graph(build("W 4")))
    assert trace.rule == RULE_FAT_NEXUS
    assert trace.result.value == 0


def test_stats():
    ctx = EngineContext()
    m = graph_item(build("Whats 3"), "Whats 3").matroid
    compute_classes(m, ctx)
    assert ctx.stats["evaluations"] > 0
    before = ctx.stats["evaluations"]
    class_Y(m, ctx)
    assert ctx.stats["evaluations"] == before
    assert ctx.stats["memo_hits"] > 0


@given(multigraphs(max_edges=6))
def test_determinism(g):
    m = from_graph(g)
    first = compute_classes(m, EngineContext())
    second = compute_classes(m, EngineContext())
    assert first[0].result == second[0].result
    assert first[1].result == second[1].result


@given(multigraphs(max_edges=6))
def test_memo_transparency(g):
    m = from_graph(g)
    cached = compute_classes(m, EngineContext(use_memo=True))
    plain = compute_classes(m, EngineContext(use_memo=False))
    for a, b in zip(cached, plain):
        if a.result.is_known and b.result.is_known:
            assert a.result.value == b.result.value


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_series_rule_on_cycles(n):
    ctx = EngineContext(use_references=False)
    node = ctx._series(from_graph(build("C %d" % n)))
    assert node is not None
    assert node.rule == RULE_SERIES
    assert node.result.value == _sign(n)
    assert node.replay() == _sign(n)


@given(multigraphs(min_edges=2, max_edges=6), st.data())
def test_parallel_doubling_flips_torus_class(g, data):
    candidates = [label for label in g.edge_labels if not g.is_loop(label)]
    assume(len(candidates) > 0)
    _, u, v = g.edge(data.draw(st.sampled_from(candidates)))
    doubled = Multigraph(g.vertices, list(g.edges) + [("f", u, v)])
    before = class_Ytorus(from_graph(g))
    after = class_Ytorus(from_graph(doubled))
    if before.is_known and after.is_known:
        assert after.value == -before.value


@given(multigraphs(min_edges=2, max_edges=6), st.data())
def test_series_doubling_flips_torus_class(g, data):
    m = from_graph(g)
    coloops = m.coloops()
    candidates = [label for label in g.edge_labels
                  if (not g.is_loop(label)) and (not coloops & m.mask_of([label]))]
    assume(len(candidates) > 0)
    doubled = subdivide_edge(g, data.draw(st.sampled_from(candidates)))
    before = class_Ytorus(m)
    after = class_Ytorus(from_graph(doubled))
    if before.is_known and after.is_known:
        assert after.value == -before.value


def test_reference_up_to_relabeling():
    g = build("K 3 3")
    edges = list(g.edges)
    edges[0], edges[1] = (edges[0][0], edges[1][1], edges[1][2]), (edges[1][0], edges[0][1], edges[0][2])
    names = {v: "q%d" % i for i, v in enumerate(g.vertices)}
    shuffled = Multigraph([names[v] for v in g.vertices], [(label, names[u], names[v]) for label, u, v in edges])
    m = from_graph(shuffled)
    assert m.key() != from_graph(g).key()
    assert lookup_reference(reference_table(DEFAULT_REFERENCES), TARGET_Y, m).builder == "K 3 3"
    trace = EngineContext().y(m)
    assert trace.rule == RULE_REFERENCE
    assert trace.result.value == 1
