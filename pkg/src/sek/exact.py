"""Exact strong chromatic index by branch-and-bound on the conflict graph.

The conflict graph is held as int bitmasks.  Lower bound: a clique (the edge
star Gamma(u) | Gamma(v) of a heavy edge, then a pivoting Bron-Kerbosch
search).  Upper bound: DSATUR.  The search asks "is it k-colorable?" for
k = upper-1, upper-2, ... with DSATUR branching and the clique precolored.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .coloring import PartialColoring, dsatur_color
from .errors import SizeLimitExceeded
from .graph import Graph, conflict_graph, gamma

DEFAULT_BUDGET = 10**7
ORACLE_MAX_VERTICES = 16


@dataclass
class SolveResult:
    chi: int
    coloring: PartialColoring
    exact: bool
    lower: int
    upper: int
    nodes: int = 0
    elapsed: float = 0.0
    history: list[tuple[str, int]] = field(default_factory=list)


class _OutOfBudget(Exception):
    pass


def _bit_adjacency(cg: Graph) -> list[int]:
    return [sum(1 << w for w in cg.neighbors(v)) for v in range(cg.n)]


def _greedy_star_clique(g: Graph, table: list) -> list[int]:
    """Gamma(u) | Gamma(v) for the edge maximising d(u)+d(v): always a clique."""
    if not table:
        return []
    index = {e: i for i, e in enumerate(table)}
    u, v = max(table, key=lambda e: (g.degree(e[0]) + g.degree(e[1]), [-e[0], -e[1]]))
    return sorted(index[e] for e in gamma(g, u) | gamma(g, v))


def max_clique(adj: list[int], budget: int = 10**6) -> tuple[list[int], bool]:
    """Bron-Kerbosch with pivoting.  Returns (clique, finished)."""
    best = 0
    best_set = 0
    count = 0

    def expand(r: int, p: int, x: int, size: int) -> None:
        nonlocal best, best_set, count
        count += 1
        if count > budget:
            raise _OutOfBudget
        if p == 0:
            if x == 0 and size > best:
                best, best_set = size, r
            return
        if size + p.bit_count() <= best:
            return
        pu = p | x
        # pivot maximising |P & N(u)|
        piv = max(_bits(pu), key=lambda u: (p & adj[u]).bit_count())
        cand = p & ~adj[piv]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & adj[v], x & adj[v], size + 1)
            p &= ~low
            x |= low
            cand &= ~low

    finished = True
    try:
        expand(0, (1 << len(adj)) - 1, 0, 0)
    except _OutOfBudget:
        finished = False
    return list(_bits(best_set)), finished


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    def __init__(self, adj: list[int], budget: int):
        self.adj = adj
        self.n = len(adj)
        self.budget = budget
        self.nodes = 0

    def colorable(self, k: int, clique: list[int]) -> list[int] | None:
        """A k-coloring as a list of classes (1-based index), or None."""
        if len(clique) > k:
            return None
        classes = [0] * (k + 1)
        color = [0] * self.n
        for i, v in enumerate(clique, start=1):
            classes[i] |= 1 << v
            color[v] = i
        uncolored = ((1 << self.n) - 1) & ~sum(1 << v for v in clique)
        used = len(clique)
        if self._dfs(k, classes, color, uncolored, used):
            return color
        return None

    def _dfs(self, k, classes, color, uncolored, used) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget
        if not uncolored:
            return True
        adj = self.adj
        # choose the vertex with fewest available colors (max saturation)
        best_v, best_avail, best_key = -1, None, None
        for v in _bits(uncolored):
            av = adj[v]
            avail = [c for c in range(1, used + 1) if not classes[c] & av]
            if used < k:
                avail.append(used + 1)
            if not avail:
                return False
            key = (len(avail), -(av & uncolored).bit_count())
            if best_key is None or key < best_key:
                best_v, best_avail, best_key = v, avail, key
                if len(avail) == 1:
                    break
        v = best_v
        bit = 1 << v
        for c in best_avail:
            classes[c] |= bit
            color[v] = c
            if self._dfs(k, classes, color, uncolored & ~bit, max(used, c)):
                return True
            classes[c] &= ~bit
            color[v] = 0
        return False


def exact_chi_s(g: Graph, lower: int | None = None, upper: int | None = None,
                budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Strong chromatic index of ``g``.

    ``lower``/``upper`` are optional externally known bounds.  When the node
    budget runs out the result carries the best bounds and ``exact=False``.
    """
    start = time.perf_counter()
    history: list[tuple[str, int]] = []
    if g.m == 0:
        return SolveResult(0, PartialColoring({}, 0), True, 0, 0, 0, 0.0, [("trivial", 0)])
    cg, table = conflict_graph(g)
    adj = _bit_adjacency(cg)

    best = dsatur_color(g)
    ub = best.max_color()
    history.append(("upper:dsatur", ub))
    if upper is not None and upper < ub:
        history.append(("upper:given", upper))

    clique = _greedy_star_clique(g, table)
    history.append(("lower:star", len(clique)))
    bk, _ = max_clique(adj, budget=min(budget, 10**6))
    if len(bk) > len(clique):
        clique = bk
        history.append(("lower:clique", len(clique)))
    lb = len(clique)
    if lower is not None and lower > lb:
        lb = lower
        history.append(("lower:given", lb))

    search = _Search(adj, budget)
    exact = True
    try:
        k = ub - 1
        while k >= lb:
            col = search.colorable(k, clique)
            if col is None:
                lb = k + 1
                history.append(("lower:refuted", lb))
                break
            best = PartialColoring({table[i]: c for i, c in enumerate(col)})
            ub = best.max_color()
            history.append(("upper:search", ub))
            k = ub - 1
    except _OutOfBudget:
        exact = False
        history.append(("budget", search.nodes))
    if exact:
        lb = ub
    best.k = ub
    return SolveResult(ub, best, exact, lb, ub, search.nodes, time.perf_counter() - start, history)


def chromatic_number_oracle(adj: list[set[int]] | list[frozenset[int]]) -> int:
    """Chromatic number by inclusion-exclusion over vertex subsets.

    k-colorable iff sum_S (-1)^(n-|S|) i(S)^k > 0, where i(S) counts the
    independent sets inside S.  Independent of the branch-and-bound code.
    """
    n = len(adj)
    if n == 0:
        return 0
    if n > ORACLE_MAX_VERTICES:
        raise SizeLimitExceeded(f"chromatic oracle limited to {ORACLE_MAX_VERTICES} vertices")
    nb = [sum(1 << w for w in a) for a in adj]
    full = 1 << n
    indep = [0] * full
    indep[0] = 1
    for mask in range(1, full):
        v = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        indep[mask] = 1 if indep[rest] and not (nb[v] & rest) else 0
    cnt = indep[:]
    for i in range(n):
        b = 1 << i
        for mask in range(full):
            if mask & b:
                cnt[mask] += cnt[mask ^ b]
    sign = [(-1) ** (n - bin(m).count("1")) for m in range(full)]
    for k in range(1, n + 1):
        if sum(s * c**k for s, c in zip(sign, cnt)) > 0:
            return k
    return n
