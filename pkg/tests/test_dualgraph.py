from realzeta.dualgraph import (
    DualGraph,
    Vertex,
    build_graph,
    is_tree,
    local_ordering_check,
    minimal_connected,
    monotonicity_check,
    to_dot,
)
from realzeta.parser import parse_factored, parse_polynomial
from realzeta.resolution import resolve


def graph_of(text):
    source = parse_factored(text) if ";" in text else parse_polynomial(text)
    return build_graph(resolve(source))


def test_cusp_graph():
    g = graph_of("y^2 - x^3")
    assert sorted(v.label for v in g.vertices.values()) == ["E1", "E2", "E3", "S1"]
    assert is_tree(g) and minimal_connected(g)
    assert [g.vertices[v].label for v in g.minimal] == ["E3"]
    assert monotonicity_check(g) == (True, None)
    assert local_ordering_check(g) == (True, None)


def test_complex_components_are_not_vertices():
    g = graph_of("x^2 + y^2")
    assert [v.label for v in g.vertices.values()] == ["E1"] and not g.edges


def test_composite_graph_is_a_monotone_tree():
    g = graph_of("x^2+y^6:2; x^2-y^3:3")
    assert is_tree(g) and minimal_connected(g)
    assert monotonicity_check(g)[0] and local_ordering_check(g)[0]


def test_non_monotone_graph_is_detected():
    # a path with ratios 1/2, 1, 2/3: leaving the minimum the ratio drops again
    verts = {0: Vertex(0, "A", 1, 2, False), 1: Vertex(1, "B", 1, 1, False), 2: Vertex(2, "C", 2, 3, False)}
    g = DualGraph(verts, [(0, 1), (1, 2)], {0})
    ok, path = monotonicity_check(g)
    assert not ok and path is not None
    assert not local_ordering_check(g)[0]


def test_cycle_is_not_a_tree():
    verts = {i: Vertex(i, f"E{i}", 1, 1, False) for i in range(3)}
    assert not is_tree(DualGraph(verts, [(0, 1), (1, 2), (0, 2)], set(verts)))


def test_dot_output_is_deterministic():
    first = to_dot(graph_of("x^2+y^6:2; x^2-y^3:3"))
    second = to_dot(graph_of("x^2+y^6:2; x^2-y^3:3"))
    assert first == second
    assert first.startswith("graph dual {")
    assert 'label="E3 (5,30)", shape=doublecircle' in first and "v1 -- v2;" in first
    assert "peripheries=2" in to_dot(graph_of("x*y"))
