"""Graph families: the extremal examples K_D(t) and K'_D(4), small named
graphs, and two seeded random models for property tests."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InvalidParameters
from .graph import Graph

FAMILIES = ("kdt", "kprime4", "cycle", "path", "star", "complete", "random2deg", "randomMadBounded")
DEFAULT_RETRY_CAP = 1000


@dataclass(frozen=True)
class GraphFamilySpec:
    family: str
    delta: int | None = None
    t: int | None = None
    n: int | None = None
    mad_bound: Fraction | None = None
    seed: int | None = None
    retry_cap: int = DEFAULT_RETRY_CAP

    def label(self) -> str:
        parts = [self.family]
        for name in ("delta", "t", "n", "mad_bound", "seed"):
            val = getattr(self, name)
            if val is not None:
                parts.append(f"{name}={val}")
        return ",".join(parts)


def _need(spec: GraphFamilySpec, *names: str) -> None:
    for name in names:
        if getattr(spec, name) is None:
            raise InvalidParameters(f"family {spec.family} requires parameter {name}")


def kdt(delta: int, t: int) -> Graph:
    """K_t with delta - t + 1 pendant edges on every clique vertex."""
    if t < 2 or t > delta + 1:
        raise InvalidParameters(f"kdt needs 2 <= t <= delta+1 (got t={t}, delta={delta})")
    edges = list(combinations(range(t), 2))
    nxt = t
    for v in range(t):
        for _ in range(delta - t + 1):
            edges.append((v, nxt))
            nxt += 1
    return Graph(nxt, edges)


def kprime4(delta: int) -> Graph:
    """K_4 on 0..3 with edge 2-3 subdivided by vertex 4, plus delta - 3
    pendant edges on each of 0, 1, 2."""
    if delta < 3:
        raise InvalidParameters("kprime4 needs delta >= 3")
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]
    nxt = 5
    for v in (0, 1, 2):
        for _ in range(delta - 3):
            edges.append((v, nxt))
            nxt += 1
    return Graph(nxt, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameters("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on n vertices."""
    if n < 1:
        raise InvalidParameters("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """K_{1,n}: centre 0 and n leaves."""
    if n < 0:
        raise InvalidParameters("star needs n >= 0")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def random_two_degenerate(n: int, seed: int, max_degree: int | None = None) -> Graph:
    """Insert vertices one at a time, joining each to at most two earlier ones.

    Every subgraph's latest-inserted vertex has at most two earlier
    neighbours, so the result is 2-degenerate by construction.
    """
    if n < 1:
        raise InvalidParameters("random2deg needs n >= 1")
    if max_degree is not None and max_degree < 1:
        raise InvalidParameters("max degree must be >= 1")
    rng = random.Random(seed)
    deg = [0] * n
    edges = []
    for v in range(1, n):
        pool = [u for u in range(v) if max_degree is None or deg[u] < max_degree]
        k = min(len(pool), rng.choice((1, 2, 2)))
        # bias toward high-degree vertices so hubs appear
        picks: list[int] = []
        for _ in range(k):
            weights = [deg[u] + 1 for u in pool if u not in picks]
            cands = [u for u in pool if u not in picks]
            picks.append(rng.choices(cands, weights=weights)[0])
        for u in picks:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, edges)


def _random_sparse(n: int, rng: random.Random, max_degree: int | None) -> Graph:
    # tree by preferential attachment, then a handful of extra edges
    deg = [0] * n
    es: set[tuple[int, int]] = set()
    cap = max_degree if max_degree is not None else n
    for v in range(1, n):
        cands = [u for u in range(v) if deg[u] < cap]
        if not cands:
            continue
        u = rng.choices(cands, weights=[deg[x] + 1 for x in cands])[0]
        es.add((u, v))
        deg[u] += 1
        deg[v] += 1
    extra = rng.randint(0, max(1, n // 3))
    for _ in range(extra):
        a, b = rng.sample(range(n), 2)
        e = (min(a, b), max(a, b))
        if e in es or deg[a] >= cap or deg[b] >= cap:
            continue
        es.add(e)
        deg[a] += 1
        deg[b] += 1
    return Graph(n, es)


def random_mad_bounded(n: int, bound, seed: int, max_degree: int | None = None,
                       retry_cap: int = DEFAULT_RETRY_CAP) -> Graph:
    """Rejection-sample a sparse random graph with Mad strictly below ``bound``."""
    from .density import mad_below

    if n < 2:
        raise InvalidParameters("randomMadBounded needs n >= 2")
    bound = Fraction(bound)
    rng = random.Random(seed)
    for _ in range(retry_cap):
        g = _random_sparse(n, rng, max_degree)
        if mad_below(g, bound):
            return g
    raise InvalidParameters(f"no graph with mad < {bound} found in {retry_cap} tries")


def generate(spec: GraphFamilySpec) -> Graph:
    fam = spec.family
    if fam == "kdt":
        _need(spec, "delta", "t")
        return kdt(spec.delta, spec.t)
    if fam == "kprime4":
        _need(spec, "delta")
        return kprime4(spec.delta)
    if fam == "cycle":
        _need(spec, "n")
        return cycle(spec.n)
    if fam == "path":
        _need(spec, "n")
        return path(spec.n)
    if fam == "star":
        _need(spec, "n")
        return star(spec.n)
    if fam == "complete":
        _need(spec, "n")
        return complete(spec.n)
    if fam == "random2deg":
        _need(spec, "n", "seed")
        return random_two_degenerate(spec.n, spec.seed, spec.delta)
    if fam == "randomMadBounded":
        _need(spec, "n", "seed", "mad_bound")
        return random_mad_bounded(spec.n, spec.mad_bound, spec.seed, spec.delta, spec.retry_cap)
    raise InvalidParameters(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")
