from math import factorial

from combench.canon import (brute_force_aut_order,
                            brute_force_aut_order_digraph, canonical_form,
                            canonical_form_digraph, certificate,
                            min_perm_certificate)
from combench.graphs import (complete_bipartite, complete_graph, cycle_graph,
                             disjoint_union, petersen_graph, prism_graph,
                             rotational_tournament, transitive_tournament)
from conftest import random_graph, random_tournament


def test_known_aut_orders():
    assert canonical_form(complete_graph(4)).aut_order == 24
    assert canonical_form(cycle_graph(5)).aut_order == 10
    assert canonical_form(complete_bipartite(3, 3)).aut_order == 72
    assert canonical_form(prism_graph()).aut_order == 12
    assert canonical_form(petersen_graph()).aut_order == 120


def test_petersen_brute_force_oracle():
    assert brute_force_aut_order(petersen_graph()) == 120


def test_certificate_invariance(rng):
    for _ in range(60):
        n = rng.randrange(1, 9)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        perm = list(range(n))
        rng.shuffle(perm)
        assert certificate(g) == certificate(g.relabel(perm))


def test_aut_order_matches_brute_force(rng):
    for _ in range(40):
        n = rng.randrange(1, 9)
        g = random_graph(rng, n, rng.choice([0.25, 0.5, 0.75]))
        assert canonical_form(g).aut_order == brute_force_aut_order(g)


def test_non_isomorphic_distinguished():
    # same degree sequence, different graphs
    g1 = disjoint_union(cycle_graph(3), cycle_graph(3))
    g2 = cycle_graph(6)
    assert certificate(g1) != certificate(g2)


def test_min_perm_certificate_agrees(rng):
    seen = {}
    for _ in range(40):
        g = random_graph(rng, 5, 0.5)
        key = min_perm_certificate(g)
        c = certificate(g)
        if key in seen:
            assert seen[key] == c
        seen[key] = c
    assert len(set(seen.values())) == len(seen)


def test_digraph_canonical(rng):
    t = rotational_tournament(7)
    cf = canonical_form_digraph(t)
    assert cf.aut_order == brute_force_aut_order_digraph(t) == 21
    for _ in range(30):
        n = rng.randrange(1, 7)
        d = random_tournament(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = type(d)(n)
        for u, v in d.arcs():
            relabeled.add_arc(perm[u], perm[v])
        assert (canonical_form_digraph(d).bytes
                == canonical_form_digraph(relabeled).bytes)
        assert (canonical_form_digraph(d).aut_order
                == brute_force_aut_order_digraph(d))


def test_transitive_tournament_rigid():
    cf = canonical_form_digraph(transitive_tournament(6))
    assert cf.aut_order == 1


def test_colored_canonical_separates():
    g = cycle_graph(6)
    plain = canonical_form(g).aut_order
    colored = canonical_form(g, colors=[0, 1, 0, 1, 0, 1]).aut_order
    assert plain == 12 and colored == 6


def test_labeled_count_identity_small():
    from combench.generate import all_graphs

    for n in range(1, 7):
        total = sum(factorial(n) // canonical_form(g).aut_order
                    for g in all_graphs(n))
        assert total == 2 ** (n * (n - 1) // 2)
