import pytest

from powg import (
    FamilyParams,
    Graph,
    build_cyclic,
    build_family,
    build_power_graph,
    classify_edges,
    connected_components,
    degree_histogram,
    export,
    induced_subgraph,
    partition,
    verify_structure_theorem,
)
from conftest import complete_graph


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, n + 1):
        if q * q > n and q < n:
            continue
        if n % q:
            continue
        m = n
        while m % q == 0:
            m //= q
        return m == 1
    return True


def family_graph(k, p):
    params = FamilyParams(k, p)
    g = build_family(params)
    return build_power_graph(g), partition(g, params)


def test_power_graph_z4_is_k4():
    g = build_power_graph(build_cyclic(4))
    assert g.n == 4 and g.edge_count == 6


def test_power_graph_z6():
    g = build_power_graph(build_cyclic(6))
    assert g.edge_count == 13
    non_edges = [(u, v) for u in range(6) for v in range(u + 1, 6)
                 if not g.has_edge(u, v)]
    assert non_edges == [(2, 3), (3, 4)]


def test_power_graph_family_2_3():
    graph, _ = family_graph(2, 3)
    assert graph.n == 24
    assert graph.edge_count == 77


def test_power_graph_symmetric_loop_free():
    for g in (build_power_graph(build_cyclic(12)), family_graph(2, 3)[0]):
        g.validate_symmetric()
        for v in range(g.n):
            assert not g.has_edge(v, v)


def test_identity_dominates():
    for graph in (build_power_graph(build_cyclic(10)), family_graph(2, 3)[0]):
        assert graph.degree(0) == graph.n - 1


def test_prime_power_completeness_both_directions():
    for n in range(1, 61):
        g = build_power_graph(build_cyclic(n))
        complete = g.edge_count == n * (n - 1) // 2
        assert complete == (n == 1 or is_prime_power(n)), n


def test_induced_subgraph_trivial_cases():
    g = build_power_graph(build_cyclic(6))
    assert induced_subgraph(g, range(6)).adj == g.adj
    assert induced_subgraph(g, [3]).n == 1
    with pytest.raises(ValueError):
        induced_subgraph(g, [7])


def test_induced_r_prefix_equals_cyclic_power_graph():
    for k, p in [(2, 3), (2, 5), (3, 3)]:
        graph, part = family_graph(k, p)
        prefix = induced_subgraph(graph, range(part.n_r))
        cyc = build_power_graph(build_cyclic(part.n_r))
        assert prefix.adj == cyc.adj
    sub = induced_subgraph(family_graph(2, 3)[0], range(12))
    assert sub.edge_count == 56


def test_connected_components():
    assert connected_components(Graph.from_edges(0, [])) == []
    assert connected_components(complete_graph(4)) == [frozenset({0, 1, 2, 3})]
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert connected_components(two) == [frozenset({0, 1}), frozenset({2, 3})]


def test_degree_histogram():
    assert degree_histogram(complete_graph(5)) == {4: 5}
    graph, part = family_graph(2, 3)
    assert graph.degree(0) == 23
    assert graph.degree(part.u) == 15
    assert all(graph.degree(v) == 1 for v in part.h2)
    assert all(graph.degree(v) == 3 for v in part.h3)
    hist = degree_histogram(graph)
    assert sum(hist.values()) == 24
    assert hist[1] == 6 and hist[3] == 6 and hist[23] == 1


def test_classify_edges_family_2_3():
    graph, part = family_graph(2, 3)
    cls = classify_edges(graph, part)
    pat = cls.pattern_counts()
    assert pat["E6"] == 6
    assert pat["E11"] == 3
    assert pat["E10"] == 12
    assert pat["E13"] == 0  # unsatisfiable as printed
    kinds = cls.kind_counts()
    assert kinds["vw"] == 37
    assert kinds["unclassified"] == 8
    # the unclassified edges are exactly the u-h1 edges
    for x, y in cls.kind_edges["unclassified"]:
        assert part.u in (x, y)
        assert (set((x, y)) - {part.u}).pop() in part.h1


def test_classify_kind_partition_conserves_edges():
    for k, p in [(2, 3), (2, 5)]:
        graph, part = family_graph(k, p)
        cls = classify_edges(graph, part)
        kinds = cls.kind_edges
        assert sum(len(v) for v in kinds.values()) == graph.edge_count
        seen = set()
        for edges in kinds.values():
            for e in edges:
                assert e not in seen
                seen.add(e)
        # every edge appears in at least one pattern class
        pattern_union = set()
        for edges in cls.pattern_edges.values():
            pattern_union.update(edges)
        assert pattern_union == set(graph.edges())


def test_classify_rejects_mismatched_partition():
    graph, _ = family_graph(2, 3)
    _, part5 = family_graph(2, 5)
    with pytest.raises(ValueError):
        classify_edges(graph, part5)


@pytest.mark.parametrize("k,p", [(2, 3), (2, 5), (3, 3)])
def test_structure_theorem(k, p):
    graph, part = family_graph(k, p)
    rep = verify_structure_theorem(graph, part)
    assert rep.cover_ok and rep.disjoint_ok and rep.count_identity_ok
    assert rep.prefix_matches_cyclic
    n_r = part.n_r
    assert rep.edges_total == rep.cyclic_edge_count + n_r // 2 + 5 * (n_r // 4)


def test_structure_theorem_2_3_numbers():
    graph, part = family_graph(2, 3)
    rep = verify_structure_theorem(graph, part)
    assert (rep.edges_total, rep.edges_in_r, rep.pendant_count, rep.pair_edge_count) \
        == (77, 56, 6, 15)


def test_export_edge_list():
    k2 = Graph.from_edges(2, [(0, 1)])
    assert export(k2, "edges") == "0 1\n"
    k1 = Graph.from_edges(1, [])
    assert export(k1, "edges") == "0\n"
    with pytest.raises(ValueError):
        export(k1, "gml")


def test_export_dot():
    graph, _ = family_graph(2, 3)
    text = export(graph, "dot")
    lines = text.splitlines()
    assert lines[0] == "graph powg {"
    assert lines[-1] == "}"
    edge_lines = [ln for ln in lines if " -- " in ln]
    assert len(edge_lines) == 77
    vertex_lines = [ln for ln in lines if ln.endswith('";') and " -- " not in ln]
    assert len(vertex_lines) == 24
    assert lines.index(vertex_lines[-1]) < lines.index(edge_lines[0])
    assert '"e" -- "r";' in text
