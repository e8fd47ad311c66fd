"""Cycle counting, Hamilton-cycle parity checks, the lollipop walk, and
cycle-space ranks over prime fields.

Cycle enumeration conventions: a cycle is identified by its vertex set plus
traversal; we canonicalize by starting at the least vertex and walking
toward the smaller of its two cycle neighbors, which counts every cycle
exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Digraph, Graph, bits, is_connected


class NotCubicError(ValueError):
    pass


class NotHamiltonianCycleError(ValueError):
    pass


class EdgeAbsentError(ValueError):
    pass


class DisconnectedError(ValueError):
    pass


class NotThreeEdgeConnectedError(ValueError):
    pass


def count_cycles_of_length(g: Graph, length: int) -> int:
    """Exact number of simple cycles with ``length`` vertices."""
    if not 3 <= length <= g.n:
        raise ValueError("need 3 <= length <= n")
    count = 0
    adj = g.adj

    def extend(start: int, v: int, used: int, depth: int, second: int):
        nonlocal count
        if depth == length:
            if adj[v] >> start & 1 and second < v:
                count += 1
            return
        for w in bits(adj[v] & ~used):
            if w > start:
                extend(start, w, used | 1 << w, depth + 1,
                       w if depth == 1 else second)

    for s in range(g.n):
        extend(s, s, 1 << s, 1, -1)
    return count


def simple_cycles(g: Graph, min_len: int = 3):
    """Yield every simple cycle once, as a vertex tuple starting at its
    least vertex with the smaller neighbor second."""
    adj = g.adj

    def extend(start, path, used):
        v = path[-1]
        for w in bits(adj[v] & ~used):
            if w <= start:
                continue
            path.append(w)
            if len(path) >= min_len and adj[w] >> start & 1 and path[1] < w:
                yield tuple(path)
            yield from extend(start, path, used | 1 << w)
            path.pop()

    for s in range(g.n):
        yield from extend(s, [s], 1 << s)


def hamilton_cycles(g: Graph):
    """Yield each Hamilton cycle once as a vertex tuple starting at 0."""
    n = g.n
    if n < 3:
        return
    adj = g.adj
    full = (1 << n) - 1

    def extend(path, used):
        v = path[-1]
        if used == full:
            if adj[v] & 1 and path[1] < v:
                yield tuple(path)
            return
        for w in bits(adj[v] & ~used):
            path.append(w)
            yield from extend(path, used | 1 << w)
            path.pop()

    yield from extend([0], 1)


def count_ham_cycles(g: Graph) -> int:
    return sum(1 for _ in hamilton_cycles(g))


def ham_cycle_edge_counts(g: Graph) -> dict[tuple[int, int], int]:
    """Hamilton-cycle count through every edge, from one enumeration pass."""
    counts = {e: 0 for e in g.edges()}
    for cyc in hamilton_cycles(g):
        for i in range(len(cyc)):
            u, v = cyc[i], cyc[(i + 1) % len(cyc)]
            counts[(u, v) if u < v else (v, u)] += 1
    return counts


def count_ham_through_edge(g: Graph, edge) -> int:
    u, v = edge
    if not g.has_edge(u, v):
        raise EdgeAbsentError(f"edge {edge} not in graph")
    key = (u, v) if u < v else (v, u)
    return ham_cycle_edge_counts(g)[key]


def smith_parity_check(g: Graph) -> dict:
    """Per-edge Hamilton-cycle counts with parity verdicts for a cubic graph.

    Any odd count would contradict Smith's theorem, so it is flagged as a
    failure (meaning a bug in the counting, not new mathematics).
    """
    if any(g.adj[v].bit_count() != 3 for v in range(g.n)):
        raise NotCubicError("smith parity check needs a cubic graph")
    counts = ham_cycle_edge_counts(g)
    odd = {e: c for e, c in counts.items() if c % 2}
    return {"edge_counts": counts, "odd_edges": odd, "ok": not odd}


@dataclass
class LollipopTrace:
    start_cycle: tuple
    start_edge: tuple
    end_cycle: tuple
    steps: int


def _cycle_edges(cyc) -> set:
    out = set()
    for i in range(len(cyc)):
        u, v = cyc[i], cyc[(i + 1) % len(cyc)]
        out.add((u, v) if u < v else (v, u))
    return out


def lollipop_walk(g: Graph, ham: tuple, edge: tuple) -> LollipopTrace:
    """Thomason's lollipop walk: from Hamilton cycle ``ham``, drop ``edge``
    and rotate at the free end until a second Hamilton cycle closes.

    In a simple cubic graph the free end of the running Hamilton path has
    exactly two non-path edges, one of which undoes the previous move, so
    the walk is forced; steps counts the rotations performed.
    """
    if any(g.adj[v].bit_count() != 3 for v in range(g.n)):
        raise NotCubicError("lollipop walk needs a cubic graph")
    n = g.n
    if len(set(ham)) != n or len(ham) != n:
        raise NotHamiltonianCycleError("not a spanning cycle")
    for i in range(n):
        if not g.has_edge(ham[i], ham[(i + 1) % n]):
            raise NotHamiltonianCycleError("claimed cycle uses a non-edge")
    x, y = edge
    if not g.has_edge(x, y):
        raise EdgeAbsentError(f"edge {edge} not in graph")
    cyc_edges = _cycle_edges(ham)
    key = (x, y) if x < y else (y, x)
    if key not in cyc_edges:
        raise NotHamiltonianCycleError("edge is not on the given cycle")

    # Path from fixed end x to free end y.
    i = ham.index(x)
    if ham[(i + 1) % n] == y:
        path = [ham[(i - j) % n] for j in range(n)]
    else:
        path = [ham[(i + j) % n] for j in range(n)]
    assert path[0] == x and path[-1] == y

    banned = key  # the edge whose re-insertion is not allowed on this move
    steps = 0
    while True:
        free = path[-1]
        path_prev = path[-2]
        choices = [w for w in bits(g.adj[free])
                   if w != path_prev
                   and ((free, w) if free < w else (w, free)) != banned]
        assert len(choices) == 1, "cubic walk must be forced"
        w = choices[0]
        if w == x:
            end = tuple(path)
            return LollipopTrace(start_cycle=tuple(ham), start_edge=edge,
                                 end_cycle=end, steps=steps)
        # rotation: w is internal; cut the edge from w to its path successor
        steps += 1
        j = path.index(w)
        succ = path[j + 1]
        banned = (w, succ) if w < succ else (succ, w)
        path[j + 1:] = reversed(path[j + 1:])


# ---------------------------------------------------------------------------
# cycle space over GF(p) / Q


def _edge_index(g: Graph) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(g.edges())}


def _cycle_vector(cyc, eidx, p: int):
    """0/1 characteristic vector of the cycle's edge set.

    Both traversal orientations give the same indicator, so each cycle
    contributes one row.
    """
    vec = [0] * len(eidx)
    for i in range(len(cyc)):
        u, v = cyc[i], cyc[(i + 1) % len(cyc)]
        vec[eidx[(u, v) if u < v else (v, u)]] = 1
    return vec


class _RowReducer:
    """Incremental Gaussian elimination over GF(p) or the rationals (p=0)."""

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.pivots: dict[int, list] = {}

    def add(self, vec) -> bool:
        """Reduce vec against the pivot rows; returns True if independent."""
        p = self.p
        vec = list(vec)
        for col in range(self.ncols):
            a = vec[col]
            if not a:
                continue
            if col in self.pivots:
                row = self.pivots[col]
                if p:
                    factor = a * pow(row[col], -1, p) % p
                    for j in range(col, self.ncols):
                        if row[j]:
                            vec[j] = (vec[j] - factor * row[j]) % p
                else:
                    factor = Fraction(a, row[col])
                    for j in range(col, self.ncols):
                        if row[j]:
                            vec[j] = vec[j] - factor * row[j]
            else:
                self.pivots[col] = vec
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def cycle_space_dimension(g: Graph, p: int) -> int:
    """Rank over GF(p) (or Q for p=0) of the span of the characteristic
    vectors of all simple cycles.

    Early exit at |E| (and at |E|-|V|+1 for p=2, the classical ceiling).
    May enumerate every simple cycle when the bound is not met, which is
    fine at desk scale.
    """
    if not is_connected(g):
        raise DisconnectedError("cycle space dimension defined for connected graphs")
    if p and (p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1))):
        raise ValueError("p must be prime or 0")
    eidx = _edge_index(g)
    m = len(eidx)
    bound = m - g.n + 1 if p == 2 else m
    red = _RowReducer(m, p)
    for cyc in simple_cycles(g):
        red.add(_cycle_vector(cyc, eidx, p))
        if red.rank >= bound:
            break
    return red.rank


def spanning_tree_dimension_oracle(g: Graph) -> int:
    """|E| - |V| + 1 via an explicit spanning tree (GF(2) oracle)."""
    if not is_connected(g):
        raise DisconnectedError
    return g.edge_count() - g.n + 1


def shortest_cycle_through_edge(g: Graph, edge) -> tuple | None:
    """Shortest cycle through the edge; ties by lexicographically least
    vertex sequence read from the lower endpoint."""
    u, v = min(edge), max(edge)
    h = g.without_edge(u, v)
    # BFS layers from v, then lexicographic least path u -> v avoiding the edge
    from collections import deque

    dist = {v: 0}
    q = deque([v])
    while q:
        x = q.popleft()
        for w in bits(h.adj[x]):
            if w not in dist:
                dist[w] = dist[x] + 1
                q.append(w)
    if u not in dist:
        return None
    path = [u]
    cur = u
    while cur != v:
        nxt = min(w for w in bits(h.adj[cur]) if dist.get(w, -1) == dist[cur] - 1)
        path.append(nxt)
        cur = nxt
    return tuple(path)


def explicit_cycle_basis(g: Graph, p: int):
    """One canonical cycle per edge (shortest through it, lex ties); reports
    whether the |E| cycles are independent over GF(p)."""
    from . import flows

    if p == 2:
        raise ValueError("the per-edge basis question concerns characteristic != 2")
    if flows.edge_connectivity(g) < 3:
        raise NotThreeEdgeConnectedError("graph must be 3-edge-connected")
    eidx = _edge_index(g)
    cycles = {}
    for e in eidx:
        cyc = shortest_cycle_through_edge(g, e)
        cycles[e] = cyc
    red = _RowReducer(len(eidx), p)
    indep = 0
    for e, cyc in cycles.items():
        if cyc is not None and red.add(_cycle_vector(cyc, eidx, p)):
            indep += 1
    return {"cycles": cycles, "independent_count": indep,
            "is_basis": indep == len(eidx)}


# ---------------------------------------------------------------------------
# exact (x,y)-paths in digraphs by subset DP


def _reach_table(d: Digraph, x: int):
    """reach[mask] = bitset of v with an x->v path spanning exactly mask."""
    n = d.n
    reach = {1 << x: 1 << x}
    order = sorted(reach)
    # iterate masks in increasing popcount via dict growth
    frontier = [1 << x]
    while frontier:
        new_frontier = []
        for mask in frontier:
            ends = reach[mask]
            for v in bits(ends):
                for w in bits(d.out[v] & ~mask):
                    nmask = mask | 1 << w
                    prev = reach.get(nmask, 0)
                    if not prev >> w & 1:
                        reach[nmask] = prev | 1 << w
                        if not prev:
                            new_frontier.append(nmask)
                        elif nmask not in new_frontier:
                            new_frontier.append(nmask)
        frontier = new_frontier
    return reach


def ham_path_xy(d: Digraph, x: int, y: int):
    """A Hamilton (x,y)-path as a vertex tuple, or None."""
    if x == y:
        raise ValueError("x and y must differ")
    full = (1 << d.n) - 1
    reach = _reach_table(d, x)
    if not reach.get(full, 0) >> y & 1:
        return None
    return _extract_path(d, reach, x, y, full)


def longest_xy_path(d: Digraph, x: int, y: int):
    """(length, path) of a longest (x,y)-path; length counts vertices.

    Returns (0, None) when even the trivial path is impossible (x != y is
    required, so a bare x->y arcless pair gives 0)."""
    if x == y:
        raise ValueError("x and y must differ")
    reach = _reach_table(d, x)
    best_mask = 0
    for mask, ends in reach.items():
        if ends >> y & 1 and mask.bit_count() > best_mask.bit_count():
            best_mask = mask
    if not best_mask:
        return 0, None
    return best_mask.bit_count(), _extract_path(d, reach, x, y, best_mask)


def _extract_path(d: Digraph, reach, x: int, y: int, mask: int):
    path = [y]
    cur = y
    while mask != 1 << x:
        pmask = mask & ~(1 << cur)
        ends = reach.get(pmask, 0)
        prev = None
        for w in bits(ends):
            if d.out[w] >> cur & 1:
                prev = w
                break
        assert prev is not None
        path.append(prev)
        cur = prev
        mask = pmask
    path.reverse()
    return tuple(path)
