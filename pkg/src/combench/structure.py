"""Exact structural invariants: degree data, connectivity, mad, independence, bicliques."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import flows
from .graphs import Graph, bipartition, bits, component_masks


class EmptyGraphError(ValueError):
    pass


class TooLargeError(ValueError):
    pass


@dataclass
class StructureReport:
    max_degree: int
    min_degree: int
    bipartite: bool
    components: int
    vertex_connectivity: int
    edge_connectivity: int


def structure_report(g: Graph) -> StructureReport:
    degs = [a.bit_count() for a in g.adj] or [0]
    return StructureReport(
        max_degree=max(degs),
        min_degree=min(degs),
        bipartite=bipartition(g) is not None,
        components=len(component_masks(g)),
        vertex_connectivity=flows.vertex_connectivity(g),
        edge_connectivity=flows.edge_connectivity(g),
    )


def edges_inside(g: Graph, mask: int) -> int:
    return sum((g.adj[v] & mask).bit_count() for v in bits(mask)) // 2


def mad(g: Graph) -> Fraction:
    """Maximum average degree max_H 2|E(H)|/|V(H)|, exact.

    Induced subgraphs suffice: restricting a witness to its own vertex set
    only adds edges.  Exhaustive subset sweep up to n = 20, Dinkelbach
    iterations over a max-flow density test beyond.
    """
    if g.n < 1:
        raise ValueError("mad needs at least one vertex")
    if g.n <= 20:
        e_table = [0] * (1 << g.n)
        best_e, best_k = 0, 1
        for mask in range(1, 1 << g.n):
            low = mask & -mask
            rest = mask ^ low
            v = low.bit_length() - 1
            e = e_table[rest] + (g.adj[v] & rest).bit_count()
            e_table[mask] = e
            k = mask.bit_count()
            if e * best_k > best_e * k:
                best_e, best_k = e, k
        return Fraction(2 * best_e, best_k)
    return Fraction(2) * _max_density_flow(g)


def _max_density_flow(g: Graph) -> Fraction:
    """Goldberg-style exact maximum |E(H)|/|V(H)| via Dinkelbach iterations."""
    m = g.edge_count()
    if m == 0:
        return Fraction(0)
    edges = list(g.edges())
    density = Fraction(1, 2)  # any single edge

    while True:
        a, b = density.numerator, density.denominator
        # Nodes: source, edge nodes, vertex nodes, sink. Capacities scaled by b.
        src = 0
        esink = 1 + len(edges) + g.n
        net = flows.FlowNet(esink + 1)
        for i, (u, v) in enumerate(edges):
            net.add(src, 1 + i, b)
            net.add(1 + i, 1 + len(edges) + u, flows.INF)
            net.add(1 + i, 1 + len(edges) + v, flows.INF)
        for v in range(g.n):
            net.add(1 + len(edges) + v, esink, a)
        flow = net.max_flow(src, esink)
        if flow >= m * b:
            return density
        side = net.min_cut_side(src)
        verts = [v for v in range(g.n) if side >> (1 + len(edges) + v) & 1]
        mask = sum(1 << v for v in verts)
        e_in = edges_inside(g, mask)
        cand = Fraction(e_in, len(verts))
        if cand <= density:
            return density
        density = cand


# ---------------------------------------------------------------------------
# maximum clique / independent set (bitset branch-and-bound)


def max_clique(g: Graph) -> int:
    """Bitmask of a maximum clique; branch and bound with greedy color bound."""
    n = g.n
    if n == 0:
        return 0
    best = [0, 0]  # size, mask
    adj = g.adj

    def color_bound(cand: int) -> list[tuple[int, int]]:
        """Greedy coloring of candidates; returns (vertex, color), high colors last."""
        out = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                out.append((v, color))
                rest &= ~(1 << v)
                avail &= ~adj[v] & rest
        return out

    def expand(cand: int, size: int, mask: int) -> None:
        colored = color_bound(cand)
        for v, c in reversed(colored):
            if size + c <= best[0]:
                return
            nmask = mask | 1 << v
            ncand = cand & adj[v]
            if size + 1 > best[0]:
                best[0] = size + 1
                best[1] = nmask
            if ncand:
                expand(ncand, size + 1, nmask)
            cand &= ~(1 << v)

    full = (1 << n) - 1
    expand(full, 0, 0)
    return best[1]


def max_independent_set(g: Graph) -> int:
    """Bitmask of a maximum independent set (max clique of the complement)."""
    if g.n < 1:
        raise ValueError("need n >= 1")
    return max_clique(g.complement())


def independence_number(g: Graph) -> int:
    return max_independent_set(g).bit_count()


def clique_number(g: Graph) -> int:
    return max_clique(g).bit_count()


def brute_force_max_independent(g: Graph) -> int:
    """Exhaustive oracle: maximum independent-set size over all subsets."""
    best = 0
    for mask in range(1 << g.n):
        if mask.bit_count() > best and edges_inside(g, mask) == 0:
            best = mask.bit_count()
    return best


def biclique_number(g: Graph) -> int:
    """Largest a+b with K_{a,b} as a (not necessarily induced) subgraph."""
    if g.n < 2:
        raise ValueError("need n >= 2")
    if g.edge_count() == 0:
        raise EmptyGraphError("biclique number undefined for empty graphs")
    best = 0
    full = (1 << g.n) - 1
    for a_mask in range(1, 1 << g.n):
        asz = a_mask.bit_count()
        common = full
        for v in bits(a_mask):
            common &= g.adj[v]
            if not common:
                break
        cand = common & ~a_mask
        if cand:
            best = max(best, asz + cand.bit_count())
    return best
