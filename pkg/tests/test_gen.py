from math import factorial

import pytest

from combench.canon import canonical_form, canonical_form_digraph, certificate
from combench.generate import (GenSpec, Unsatisfiable, all_graphs,
                               connected_cubic_graphs, cubic_graphs_all,
                               cyclically_4_edge_connected, generate,
                               graphs_upto, labeled_cubic_count,
                               labeled_regular_tournament_count,
                               max_aut_3connected_cubic, polya_graph_count,
                               regular_tournaments, tournaments)
from combench.graphs import (complete_graph, is_bipartite, is_connected,
                             moebius_kantor_graph, petersen_graph,
                             prism_graph)

KNOWN_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_graph_counts_match_polya():
    for n, count in KNOWN_GRAPH_COUNTS.items():
        assert polya_graph_count(n) == count
    assert polya_graph_count(8) == 12346
    for n in range(1, 7):
        assert len(all_graphs(n)) == polya_graph_count(n)


def test_graph_generation_labeled_identity():
    for n in range(1, 7):
        gs = all_graphs(n)
        total = sum(factorial(n) // canonical_form(g).aut_order for g in gs)
        assert total == 2 ** (n * (n - 1) // 2)


def test_generated_graphs_distinct_and_ordered():
    gs = all_graphs(6)
    certs = [certificate(g) for g in gs]
    assert certs == sorted(certs)
    assert len(set(certs)) == len(certs)


def test_cubic_counts():
    assert [len(connected_cubic_graphs(n)) for n in (4, 6, 8, 10)] == [1, 2, 5, 19]
    assert len(cubic_graphs_all(8)) == 6  # disconnected K4+K4 included


def test_cubic_labeled_identity():
    assert labeled_cubic_count(4) == 1
    assert labeled_cubic_count(6) == 70
    for n in (4, 6, 8, 10):
        total = sum(factorial(n) // canonical_form(g).aut_order
                    for g in cubic_graphs_all(n))
        assert total == labeled_cubic_count(n)


def test_cubic_generation_against_degree_constrained_oracle():
    """Independent route: canonical augmentation over max-degree-3 graphs."""
    for n in (4, 6, 8):
        oracle = {certificate(g)
                  for g in graphs_upto(n, max_degree=3, final_regular=3)[n]
                  if all(g.adj[v].bit_count() == 3 for v in range(n))}
        mine = {certificate(g) for g in cubic_graphs_all(n)}
        assert oracle == mine


def test_all_cubic_graphs_are_cubic_and_deduped():
    gs = cubic_graphs_all(10)
    for g in gs:
        assert all(g.adj[v].bit_count() == 3 for v in range(g.n))
    certs = {certificate(g) for g in gs}
    assert len(certs) == len(gs)


def test_tournament_counts():
    assert [len(tournaments(n)) for n in range(1, 7)] == [1, 1, 2, 4, 12, 56]
    for n in range(1, 7):
        total = sum(factorial(n) // canonical_form_digraph(t).aut_order
                    for t in tournaments(n))
        assert total == 2 ** (n * (n - 1) // 2)


def test_regular_tournament_counts():
    assert len(regular_tournaments(3)) == 1
    assert len(regular_tournaments(5)) == 1
    assert len(regular_tournaments(7)) == 3
    assert labeled_regular_tournament_count(3) == 2
    assert labeled_regular_tournament_count(5) == 24
    for n in (3, 5):
        total = sum(factorial(n) // canonical_form_digraph(t).aut_order
                    for t in regular_tournaments(n))
        assert total == labeled_regular_tournament_count(n)


def test_genspec_dispatch():
    cubic4 = list(generate(GenSpec(4, class_tag="cubic")))
    assert len(cubic4) == 1 and certificate(cubic4[0]) == certificate(complete_graph(4))
    tours = list(generate(GenSpec(4, class_tag="tournament")))
    assert len(tours) == 4
    bip = list(generate(GenSpec(5, class_tag="graph", bipartite=True)))
    assert all(is_bipartite(g) for g in bip)
    conn = list(generate(GenSpec(5, class_tag="graph", connectivity=2)))
    assert all(is_connected(g) for g in conn)
    with pytest.raises(Unsatisfiable):
        list(generate(GenSpec(5, class_tag="cubic")))
    with pytest.raises(Unsatisfiable):
        list(generate(GenSpec(12, class_tag="tournament")))


def test_genspec_predicates_posthoc():
    for g in generate(GenSpec(6, class_tag="graph", min_degree=2, max_degree=3)):
        degs = [g.adj[v].bit_count() for v in range(g.n)]
        assert min(degs) >= 2 and max(degs) <= 3


def test_max_aut_3connected_cubic():
    assert max_aut_3connected_cubic(4)["max_aut_order"] == 24   # K4
    rec = max_aut_3connected_cubic(6)
    assert rec["max_aut_order"] == 72                           # K_{3,3}
    rec8 = max_aut_3connected_cubic(8)
    # frozen from full enumeration: the cube graph, |Aut(Q3)| = 48
    assert rec8["max_aut_order"] == 48
    assert len(rec8["witnesses"]) == 1
    assert canonical_form(rec8["witnesses"][0]).aut_order == 48


def test_cyclic_edge_connectivity_filter():
    assert cyclically_4_edge_connected(petersen_graph())
    assert cyclically_4_edge_connected(moebius_kantor_graph())
    assert not cyclically_4_edge_connected(prism_graph())
    assert cyclically_4_edge_connected(complete_graph(4))
