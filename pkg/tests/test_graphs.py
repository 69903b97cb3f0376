import json

import pytest

from raagembed.errors import GraphParseError
from raagembed.graphs import (
    SimplicialGraph,
    all_trees,
    complement,
    components,
    find_induced_embeddings,
    find_tripod_obstruction,
    format_graph,
    graph_to_json,
    induced,
    is_hairy_path,
    is_independent,
    is_isomorphic,
    is_tree,
    link,
    make_cycle,
    make_path,
    make_tripod,
    parse_graph,
    remove,
)


def test_make_path():
    assert len(make_path(1)) == 1 and not make_path(1).edges
    p5 = make_path(5)
    assert p5.edges == frozenset(
        {("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5")}
    )
    p22 = make_path(22)
    assert len(p22) == 22 and len(p22.edges) == 21
    with pytest.raises(ValueError):
        make_path(0)


def test_make_cycle():
    c3 = make_cycle(3)
    assert len(c3.edges) == 3
    c12 = make_cycle(12)
    assert len(c12) == 12
    assert all(c12.degree(v) == 2 for v in c12.vertices)
    assert len(components(c12)) == 1
    with pytest.raises(ValueError):
        make_cycle(2)


def test_make_tripod():
    t2 = make_tripod(2, 2, 2)
    assert len(t2) == 7
    assert t2.degree("x") == 3
    t322 = make_tripod(3, 2, 2)
    assert len(t322) == 8
    star = make_tripod(1, 1, 1)
    assert sorted(star.degree(v) for v in star.vertices) == [1, 1, 1, 3]
    with pytest.raises(ValueError):
        make_tripod(0, 1, 1)


def test_complement():
    p3 = make_path(3)
    assert complement(p3).edges == frozenset({("x1", "x3")})
    t2 = make_tripod(2, 2, 2)
    assert complement(complement(t2)) == t2
    k4 = SimplicialGraph("abcd", [("a", "b"), ("a", "c"), ("a", "d"),
                                  ("b", "c"), ("b", "d"), ("c", "d")])
    assert not complement(k4).edges


def test_link_induced_remove():
    p5 = make_path(5)
    assert link(p5, "x3") == {"x2", "x4"}
    t2 = make_tripod(2, 2, 2)
    star = induced(t2, {"x", "a1", "b1", "c1"})
    assert is_isomorphic(star, make_tripod(1, 1, 1))
    two = remove(p5, {"x3"})
    assert sorted(sorted(c) for c in components(two)) == [["x1", "x2"], ["x4", "x5"]]
    with pytest.raises(ValueError):
        link(p5, "zz")


def test_independence_components_tree():
    t2 = make_tripod(2, 2, 2)
    assert is_independent(t2, {"x", "a2", "b2", "c2"})
    assert not is_independent(t2, {"x", "a1"})
    p5 = make_path(5)
    # removing the middle vertex's link leaves three path components
    pieces = components(remove(p5, link(p5, "x3")))
    assert sorted(sorted(c) for c in pieces) == [["x1"], ["x3"], ["x5"]]
    assert not is_tree(make_cycle(12))
    assert is_tree(t2)


def test_find_induced_embeddings_edge_into_path():
    p2 = make_path(2)
    p3 = make_path(3)
    maps = find_induced_embeddings(p2, p3)
    assert maps == [
        {"x1": "x1", "x2": "x2"},
        {"x1": "x2", "x2": "x1"},
        {"x1": "x2", "x2": "x3"},
        {"x1": "x3", "x2": "x2"},
    ]
    assert find_induced_embeddings(p2, p3, max_results=2) == maps[:2]


def test_find_induced_embeddings_negative_cases():
    t2 = make_tripod(2, 2, 2)
    assert find_induced_embeddings(t2, make_path(22), max_results=1) == []
    # an induced three-vertex path needs a non-edge; the triangle has none
    assert find_induced_embeddings(make_path(3), make_cycle(3)) == []


def test_embeddings_preserve_the_whole_adjacency_matrix():
    t = make_tripod(1, 1, 1)
    g = make_tripod(2, 2, 2)
    for m in find_induced_embeddings(t, g):
        for u in t.vertices:
            for v in t.vertices:
                if u != v:
                    assert t.adjacent(u, v) == g.adjacent(m[u], m[v])


FIG6_TREE = SimplicialGraph(
    ["b", "x", "y", "c", "hx", "hy1", "hy2"],
    [("b", "x"), ("x", "y"), ("y", "c"), ("x", "hx"), ("y", "hy1"), ("y", "hy2")],
)


def test_is_hairy_path():
    assert is_hairy_path(make_tripod(2, 2, 2)) is None
    dec = is_hairy_path(FIG6_TREE)
    assert dec is not None
    assert dec.spine == ("b", "x", "y", "c")
    assert dec.hair_counts == {"x": 1, "y": 2}
    assert dec.m == 4 and dec.total_hairs == 3
    p7 = make_path(7)
    dec = is_hairy_path(p7)
    assert dec.spine == p7.vertices and not dec.hairs
    with pytest.raises(ValueError):
        is_hairy_path(make_cycle(4))


def test_tripod_obstruction_on_the_tripod():
    t2 = make_tripod(2, 2, 2)
    roles = find_tripod_obstruction(t2)
    assert roles == {
        "x": "x", "p": "a2", "q": "b2", "r": "c2",
        "a": "a1", "b": "b1", "c": "c1",
    }


def test_tripod_obstruction_absent_on_paths_and_hairy_trees():
    for n in (1, 4, 9, 12):
        assert find_tripod_obstruction(make_path(n)) is None
    assert find_tripod_obstruction(FIG6_TREE) is None
    assert find_tripod_obstruction(make_tripod(1, 1, 1)) is None
    # a longer first leg still contains the forbidden pattern
    assert find_tripod_obstruction(make_tripod(3, 2, 2)) is not None


def test_all_trees_counts():
    assert [len(all_trees(n)) for n in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]


def test_all_trees_are_trees_and_pairwise_nonisomorphic():
    trees = all_trees(7)
    assert all(is_tree(t) for t in trees)
    for i in range(len(trees)):
        for j in range(i + 1, len(trees)):
            assert not is_isomorphic(trees[i], trees[j])


def test_graph_validation():
    with pytest.raises(ValueError):
        SimplicialGraph(["a", "a"], [])
    with pytest.raises(ValueError):
        SimplicialGraph(["a", "b"], [("a", "a")])
    with pytest.raises(ValueError):
        SimplicialGraph(["a", "b"], [("a", "z")])


def test_text_format_roundtrip():
    t2 = make_tripod(2, 2, 2)
    again = parse_graph(format_graph(t2))
    assert again == t2


def test_json_format_roundtrip():
    p5 = make_path(5)
    again = parse_graph(json.dumps(graph_to_json(p5)))
    assert again == p5


def test_parse_errors_carry_positions():
    with pytest.raises(GraphParseError) as err:
        parse_graph("vertices: a b\nedge: a\n", name="bad.graph")
    assert "bad.graph:2" in str(err.value)
    with pytest.raises(GraphParseError):
        parse_graph("edge: a b\n")
    with pytest.raises(GraphParseError):
        parse_graph('{"edges": []}')
