"""Bootstrap percolation: deterministic monotone closure under the
strict-majority or r-neighbour rule, plus seeded Monte Carlo estimates of
full infection and threshold sweeps.

The generic engine works on any Graph.  Square grids additionally get a
packed-bitboard engine (the whole padded grid lives in one Python int and a
round is a handful of shifted masks), which is what makes the n=128 sweeps
affordable.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .graphs import Graph, bits


@dataclass
class PercRule:
    kind: str       # "majority" | "threshold"
    r: int = 0      # threshold value for the threshold rule

    def needed(self, degree: int) -> int:
        if self.kind == "majority":
            # strictly more than half; degree-0 vertices never convert
            return degree // 2 + 1
        if self.kind == "threshold":
            return self.r
        raise ValueError(f"unknown rule {self.kind!r}")


MAJORITY = PercRule("majority")


def threshold_rule(r: int) -> PercRule:
    return PercRule("threshold", r)


def percolate(g: Graph, rule: PercRule, infected: int):
    """(closure mask, rounds): synchronous sweeps to the least fixed point."""
    need = [rule.needed(g.adj[v].bit_count()) for v in range(g.n)]
    cur = infected
    rounds = 0
    while True:
        new = cur
        for v in range(g.n):
            if not cur >> v & 1 and (g.adj[v] & cur).bit_count() >= max(need[v], 1):
                new |= 1 << v
        if new == cur:
            return cur, rounds
        cur = new
        rounds += 1


def percolate_rounds_oracle(g: Graph, rule: PercRule, infected: int):
    """Naive round-by-round recomputation; independent of percolate()."""
    need = [rule.needed(g.adj[v].bit_count()) for v in range(g.n)]
    state = {v for v in range(g.n) if infected >> v & 1}
    rounds = 0
    while True:
        add = {v for v in range(g.n)
               if v not in state
               and sum(1 for w in bits(g.adj[v]) if w in state) >= max(need[v], 1)}
        if not add:
            mask = sum(1 << v for v in state)
            return mask, rounds
        state |= add
        rounds += 1


# ---------------------------------------------------------------------------
# packed-grid engine


class GridFamily:
    """n x n square grid with the padded-bitboard fast path."""

    def __init__(self, n: int):
        self.n = n
        self.w = n + 2  # one empty guard column/row on each side
        interior = 0
        for r in range(n):
            for c in range(n):
                interior |= 1 << ((r + 1) * self.w + (c + 1))
        self.mask = interior
        self.full = interior

    def graph(self) -> Graph:
        from .graphs import grid_graph

        return grid_graph(self.n, self.n)

    def seed_mask(self, rng: random.Random, p: float) -> int:
        m = 0
        w = self.w
        for r in range(self.n):
            base = (r + 1) * w + 1
            for c in range(self.n):
                if rng.random() < p:
                    m |= 1 << (base + c)
        return m

    def closure_fills(self, infected: int, threshold: int = 2) -> bool:
        """Does the closure under the r=threshold rule infect everything?"""
        cur = infected
        w = self.w
        mask = self.mask
        if threshold == 2:
            while True:
                up = cur >> w
                down = cur << w
                left = cur >> 1
                right = cur << 1
                # at least 2 of 4 neighbours infected, via half adders
                s1 = up ^ down
                c1 = up & down
                s2 = left ^ right
                c2 = left & right
                ge2 = c1 | c2 | (s1 & s2)
                new = cur | (ge2 & mask & ~cur)
                if new == cur:
                    return cur == self.full
                cur = new
        g = self.graph()
        closure, _ = percolate(g, threshold_rule(threshold), _unpack(self, cur))
        return closure == (1 << g.n) - 1

    def closure_equals_graph_engine(self, infected_cells, threshold: int) -> bool:
        """Cross-check helper: bitboard closure == generic engine closure."""
        packed = 0
        for (r, c) in infected_cells:
            packed |= 1 << ((r + 1) * self.w + (c + 1))
        cur = packed
        while True:
            up = cur >> self.w
            down = cur << self.w
            left = cur >> 1
            right = cur << 1
            s1, c1 = up ^ down, up & down
            s2, c2 = left ^ right, left & right
            ge2 = c1 | c2 | (s1 & s2)
            new = cur | (ge2 & self.mask & ~cur)
            if new == cur:
                break
            cur = new
        g = self.graph()
        seed = 0
        for r, c in infected_cells:
            seed |= 1 << (r * self.n + c)
        closure, _ = percolate(g, threshold_rule(threshold), seed)
        return _unpack(self, cur) == closure


def _unpack(fam: GridFamily, packed: int) -> int:
    out = 0
    for r in range(fam.n):
        for c in range(fam.n):
            if packed >> ((r + 1) * fam.w + (c + 1)) & 1:
                out |= 1 << (r * fam.n + c)
    return out


# ---------------------------------------------------------------------------
# Monte Carlo


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(_splitmix64(seed ^ _splitmix64(trial)))


def wilson_interval(successes: int, trials: int, z: float = 1.96):
    """Wilson 95% score interval for a binomial proportion."""
    if trials == 0:
        return 0.0, 0.0, 1.0
    phat = successes / trials
    denom = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials
                         + z * z / (4 * trials * trials)) / denom
    return phat, max(0.0, center - half), min(1.0, center + half)


def estimate_full_infection(g: Graph, p: float, rule: PercRule,
                            trials: int, seed: int) -> dict:
    """Monte Carlo estimate of P_p(everything eventually infected)."""
    if not 0 <= p <= 1 or trials < 1:
        raise ValueError("need p in [0,1] and trials >= 1")
    full = (1 << g.n) - 1
    hits = 0
    for t in range(trials):
        rng = trial_rng(seed, t)
        infected = 0
        for v in range(g.n):
            if rng.random() < p:
                infected |= 1 << v
        closure, _ = percolate(g, rule, infected)
        if closure == full:
            hits += 1
    est, lo, hi = wilson_interval(hits, trials)
    return {"estimate": est, "ci": (lo, hi), "hits": hits,
            "trials": trials, "seed": seed}


def estimate_grid_full_infection(n: int, p: float, trials: int, seed: int,
                                 threshold: int = 2) -> dict:
    fam = GridFamily(n)
    hits = 0
    for t in range(trials):
        rng = trial_rng(seed, t)
        if fam.closure_fills(fam.seed_mask(rng, p), threshold):
            hits += 1
    est, lo, hi = wilson_interval(hits, trials)
    return {"estimate": est, "ci": (lo, hi), "hits": hits,
            "trials": trials, "seed": seed}


# default p grids bracketing the observed half-infection crossings
DEFAULT_GRIDS = {
    32: [0.05, 0.065, 0.08, 0.095, 0.11, 0.13],
    64: [0.04, 0.05, 0.06, 0.07, 0.08, 0.09],
    128: [0.035, 0.042, 0.049, 0.056, 0.063, 0.07],
}


@dataclass
class SweepResult:
    n: int
    grid: list[float]
    estimates: list[float] = field(default_factory=list)
    half_widths: list[float] = field(default_factory=list)
    trials: int = 0
    seed: int = 0
    p_half: float | None = None
    reference: float | None = None


def threshold_sweep(sizes: list[int], p_grid: dict, trials: int,
                    seed: int, threshold: int = 2) -> list[SweepResult]:
    """Sweep P(full infection) over a p grid per grid size; p_half by linear
    interpolation at the 1/2 crossing.  The pi^2/(18 ln n) curve is attached
    for reference only; nothing asymptotic is asserted at these sizes."""
    out = []
    for n in sizes:
        grid = sorted(p_grid[n])
        if not grid or grid[0] <= 0 or grid[-1] >= 1:
            raise ValueError("p grid must lie inside (0,1)")
        res = SweepResult(n=n, grid=grid, trials=trials, seed=seed)
        for i, p in enumerate(grid):
            stats = estimate_grid_full_infection(
                n, p, trials, _splitmix64(seed ^ (n << 20) ^ i), threshold)
            res.estimates.append(stats["estimate"])
            lo, hi = stats["ci"]
            res.half_widths.append((hi - lo) / 2)
        res.p_half = _crossing(grid, res.estimates, 0.5)
        res.reference = math.pi ** 2 / (18 * math.log(n))
        out.append(res)
    return out


def _crossing(xs: list[float], ys: list[float], level: float):
    for i in range(len(xs) - 1):
        if ys[i] <= level <= ys[i + 1] or ys[i] >= level >= ys[i + 1]:
            if ys[i + 1] == ys[i]:
                return xs[i]
            t = (level - ys[i]) / (ys[i + 1] - ys[i])
            return xs[i] + t * (xs[i + 1] - xs[i])
    return None


def sweep_to_csv(sweeps: list[SweepResult]) -> str:
    lines = ["n,p,estimate,ci_lo,ci_hi,reference"]
    for s in sweeps:
        for p, est, hw in zip(s.grid, s.estimates, s.half_widths):
            lines.append(f"{s.n},{p},{est},{max(0.0, est - hw)},"
                         f"{min(1.0, est + hw)},{s.reference}")
    return "\n".join(lines) + "\n"
