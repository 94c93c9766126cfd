from hypothesis import given

import oracles
from maxclass.concepts import ConceptClass, format_concept, reduction, vc_dimension
from maxclass.graph import (
    build_graph,
    enumerate_cubes,
    incident_colors,
    is_d_complete_collection,
    is_shortest_path_closed,
    max_cube_dim,
)
from maxclass.peeling import is_corner_vertex
from strategies import classes, maximum_classes


def _edge_rows(C):
    fmt = lambda v: oracles.bits(format_concept(v, C.n))  # noqa: E731
    return {(fmt(u), fmt(w), c) for u, w, c in build_graph(C).edges}


def test_edges_of_small_classes(table):
    assert len(build_graph(ConceptClass.full(2)).edges) == 4
    assert len(build_graph(ConceptClass.from_strings(["010"])).edges) == 0
    G = build_graph(table)
    assert len(G.edges) == 16
    for i in range(1, 5):
        assert len(G.edges_of_color(i)) == 4 == len(reduction(table, i))


def test_edge_list_and_dot_export(table):
    G = build_graph(table)
    lines = G.to_edge_list().splitlines()
    assert len(lines) == 16
    u, w, c = lines[0].split()
    assert len(u) == len(w) == 4 and 1 <= int(c) <= 4
    dot = G.to_dot()
    assert dot.startswith("graph") and dot.count("--") == 16


def test_cube_examples(table):
    squares = enumerate_cubes(table, 2)
    assert len(squares) == 6
    assert sorted(c.colors for c in squares) == sorted(
        [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    )
    assert len(enumerate_cubes(ConceptClass.full(3), 3)) == 1
    tree = ConceptClass.from_strings(["000", "100", "010", "001"])
    assert enumerate_cubes(tree, 2) == []


def test_d_complete_examples(table):
    assert is_d_complete_collection(table, 2)
    assert is_d_complete_collection(ConceptClass.full(4), 4)
    assert not is_d_complete_collection(ConceptClass.from_strings(["00", "01", "11"]), 2)


def test_incident_colors_examples(table, v):
    # v7 = 1001 touches 1101 (color 2) and 1000 (color 4)
    assert incident_colors(table, v["v7"]) == {2, 4}
    assert incident_colors(ConceptClass.from_strings(["00", "11"]), 0) == frozenset()
    assert incident_colors(ConceptClass.full(2), 0) == {1, 2}


def test_shortest_path_closure_examples():
    assert not is_shortest_path_closed(ConceptClass.from_strings(["000", "011"]))
    assert is_shortest_path_closed(ConceptClass.full(3))


@given(classes())
def test_graph_matches_bruteforce(C):
    assert _edge_rows(C) == oracles.edges(oracles.rows_of(C))


@given(classes(max_n=4))
def test_cubes_match_bruteforce(C):
    rows = oracles.rows_of(C)
    for k in range(C.n + 1):
        found = {
            (oracles.bits(format_concept(c.base, C.n)), c.colors) for c in enumerate_cubes(C, k)
        }
        assert found == oracles.cubes(rows, k)
    assert max_cube_dim(C) == max(k for k in range(C.n + 1) if oracles.cubes(rows, k))


@given(classes())
def test_incident_colors_match_bruteforce(C):
    rows = oracles.rows_of(C)
    for u in C:
        assert set(incident_colors(C, u)) == oracles.incident(rows, oracles.bits(format_concept(u, C.n)))


@given(classes(max_n=4))
def test_shortest_path_closure_matches_bfs_oracle(C):
    rows = oracles.rows_of(C)
    expected = all(
        oracles.graph_distance(rows, a, b) == sum(x != y for x, y in zip(a, b)) for a in rows for b in rows
    )
    assert is_shortest_path_closed(C) == expected


@given(maximum_classes())
def test_maximum_classes_are_closed_and_complete(C):
    d = vc_dimension(C)
    assert is_shortest_path_closed(C)
    assert is_d_complete_collection(C, d)


@given(classes(max_n=4))
def test_corner_peel_preserves_closure(C):
    """Removing a corner from a shortest-path closed class keeps it closed."""
    if not is_shortest_path_closed(C) or len(C) == 1:
        return
    for u in C:
        ok, _ = is_corner_vertex(C, u)
        if ok and incident_colors(C, u):
            assert is_shortest_path_closed(C.with_concepts(C.concepts - {u}))
