import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20140116)


def random_graph(rng, n, p):
    from combench.graphs import Graph

    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def random_tournament(rng, n):
    from combench.graphs import Digraph

    d = Digraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                d.add_arc(u, v)
            else:
                d.add_arc(v, u)
    return d
