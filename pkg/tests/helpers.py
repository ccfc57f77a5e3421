"""Brute-force oracles and random inputs shared by the test modules.

Everything here is written directly from the definitions and avoids the
package's own algorithms, so agreement is meaningful.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

from hypothesis import strategies as st

from sek.graph import Graph


def gnm(n: int, m: int, rng: random.Random) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph(n, rng.sample(pairs, min(m, len(pairs))))


def random_graph(rng: random.Random, max_n: int = 10, max_m: int | None = None) -> Graph:
    n = rng.randint(1, max_n)
    top = n * (n - 1) // 2
    if max_m is not None:
        top = min(top, max_m)
    return gnm(n, rng.randint(0, top), rng)


@st.composite
def graphs(draw, max_n: int = 9, max_m: int | None = None):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return Graph(n, chosen)


def within_distance_two(g: Graph, e, f) -> bool:
    """Edges e, f are in conflict: they share an endpoint or some edge joins them."""
    if set(e) & set(f):
        return True
    return any(g.has_edge(a, b) for a in e for b in f)


def brute_second_neighborhood(g: Graph, e) -> set:
    return {f for f in g.edges if f == e or within_distance_two(g, e, f)}


def brute_strong_chi(g: Graph) -> int:
    """Smallest k with a strong k-edge-coloring, by trying every assignment."""
    edges = list(g.edges)
    if not edges:
        return 0
    pairs = [(i, j) for i, j in combinations(range(len(edges)), 2)
             if within_distance_two(g, edges[i], edges[j])]
    for k in range(1, len(edges) + 1):
        for colors in product(range(k), repeat=len(edges)):
            if colors[0] != 0:
                break
            if all(colors[i] != colors[j] for i, j in pairs):
                return k
    return len(edges)


def brute_is_strong(g: Graph, f: dict) -> bool:
    es = list(f)
    return all(f[a] != f[b] for a, b in combinations(es, 2) if within_distance_two(g, a, b))


def brute_mad(g: Graph) -> Fraction:
    best = Fraction(0)
    for r in range(1, g.n + 1):
        for sub in combinations(range(g.n), r):
            s = set(sub)
            m = sum(1 for u, v in g.edges if u in s and v in s)
            best = max(best, Fraction(2 * m, r))
    return best


def brute_three_regular(g: Graph) -> bool:
    edges = list(g.edges)
    for r in range(6, len(edges) + 1):
        for sub in combinations(edges, r):
            deg: dict[int, int] = {}
            for u, v in sub:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if all(d == 3 for d in deg.values()):
                return True
    return False


def brute_degeneracy(g: Graph) -> int:
    """max over vertex subsets of the minimum induced degree."""
    best = 0
    for r in range(1, g.n + 1):
        for sub in combinations(range(g.n), r):
            s = set(sub)
            best = max(best, min(sum(1 for w in g.neighbors(v) if w in s) for v in s))
    return best


def named_small_graphs() -> dict[str, Graph]:
    out = {}
    for n in range(2, 6):
        out[f"P{n}"] = Graph(n, [(i, i + 1) for i in range(n - 1)])
    for n in range(3, 8):
        out[f"C{n}"] = Graph(n, [(i, (i + 1) % n) for i in range(n)])
    out["K1,4"] = Graph(5, [(0, i) for i in range(1, 5)])
    out["K4"] = Graph(4, list(combinations(range(4), 2)))
    return out
