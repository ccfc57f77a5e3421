"""Maximum average degree and the vertex-set potential 3|A| - 2|E(A)|.

Everything here is exact: densities are :class:`fractions.Fraction` values and
the flow network carries integer capacities.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidVertex, SizeLimitExceeded
from .flow import FlowNetwork
from .graph import Graph

BRUTE_FORCE_MAX_N = 20
MIN_POTENTIAL_MAX_N = 25


@dataclass(frozen=True)
class DensityResult:
    mad: Fraction
    witness: tuple[int, ...]


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def _check_subset(g: Graph, a: Iterable[int]) -> frozenset[int]:
    s = frozenset(a)
    for v in s:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < g.n):
            raise InvalidVertex(f"vertex {v!r} not in graph")
    return s


# ---------------------------------------------------------------------------
# parametric cut

def _max_gain(g: Graph, lam: Fraction) -> tuple[Fraction, frozenset[int]]:
    """max over S of |E(S)| - lam*|S|, with the inclusion-minimal maximiser.

    Selection network: source -> edge node (q), edge node -> both endpoints
    (infinite), vertex -> sink (p), where lam = p/q.
    """
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    p, q = lam.numerator, lam.denominator
    m = g.m
    if m == 0:
        return Fraction(0), frozenset()
    s, t = 0, 1
    net = FlowNetwork(2 + m + g.n)
    inf = q * m + 1
    vbase = 2 + m
    for i, (u, v) in enumerate(g.edges):
        net.add_edge(s, 2 + i, q)
        net.add_edge(2 + i, vbase + u, inf)
        net.add_edge(2 + i, vbase + v, inf)
    for v in g.vertices():
        if g.degree(v) > 0:
            net.add_edge(vbase + v, t, p)
    cut = net.max_flow(s, t)
    side = net.source_side(s)
    chosen = frozenset(x - vbase for x in side if x >= vbase)
    return Fraction(q * m - cut, q), chosen


def density(g: Graph, vs: Iterable[int]) -> Fraction:
    """Average degree 2|E(H)|/|V(H)| of the subgraph induced by ``vs``."""
    s = set(vs)
    if not s:
        raise ValueError("empty vertex set")
    return Fraction(2 * g.induced_edge_count(s), len(s))


def mad_exceeds(g: Graph, bound) -> bool:
    """True iff some subgraph has average degree strictly above ``bound``."""
    bound = Fraction(bound)
    if bound < 0:
        return g.n > 0
    val, _ = _max_gain(g, bound / 2)
    return val > 0


def mad_at_least(g: Graph, bound) -> bool:
    """True iff Mad(g) >= bound (exact).

    Densities are fractions with denominator at most n, so shifting the
    threshold down by 1/(2bn) separates ">= bound" from "< bound".
    """
    bound = Fraction(bound)
    if g.n == 0:
        return False
    if bound <= 0:
        return True
    half = bound / 2
    shifted = half - Fraction(1, 2 * half.denominator * g.n)
    val, _ = _max_gain(g, max(shifted, Fraction(0)))
    return val > 0


def mad_below(g: Graph, bound) -> bool:
    return not mad_at_least(g, bound)


def mad_exact(g: Graph) -> DensityResult:
    """Exact maximum average degree with a witness vertex set.

    Binary search on the density threshold; once the bracket is narrower than
    1/(n(n-1)) it holds exactly one achievable density, which is the density
    of the last witness found below it.
    """
    if g.m == 0:
        return DensityResult(Fraction(0), (0,) if g.n else ())
    active = [v for v in g.vertices() if g.degree(v) > 0]
    k = len(active)
    tol = Fraction(1, k * (k - 1))
    lo = Fraction(0)
    witness = frozenset(active)
    hi = Fraction(g.max_degree(), 2)
    while hi - lo >= tol:
        mid = (lo + hi) / 2
        val, s = _max_gain(g, mid)
        if val > 0:
            lo, witness = mid, s
        else:
            hi = mid
    w = tuple(sorted(witness))
    return DensityResult(density(g, w), w)


# ---------------------------------------------------------------------------
# exhaustive subset enumeration (oracle side)

def _subset_chunks(g: Graph, low_bits: int = 20) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
    """Yield (high_part, edge_counts, sizes) covering every vertex subset.

    Subset ``(high_part << L) | i`` has ``edge_counts[i]`` induced edges and
    ``sizes[i]`` vertices, where L = min(n, low_bits).
    """
    n = g.n
    L = min(n, low_bits)
    idx = np.arange(1 << L, dtype=np.int64)
    sizes_low = np.bitwise_count(idx).astype(np.int32)
    adj_low = [sum(1 << w for w in g.neighbors(v) if w < L) for v in range(n)]
    e_low = np.zeros(1 << L, dtype=np.int32)
    for h in range(L):
        block = 1 << h
        lowmask = adj_low[h] & (block - 1)
        e_low[block:2 * block] = e_low[:block] + np.bitwise_count(idx[:block] & lowmask)
    high = list(range(L, n))
    for hm in range(1 << len(high)):
        hs = [high[i] for i in range(len(high)) if hm >> i & 1]
        e = e_low.copy()
        inner = sum(1 for a in hs for b in hs if a < b and g.has_edge(a, b))
        if inner:
            e += inner
        for h in hs:
            if adj_low[h]:
                e += np.bitwise_count(idx & adj_low[h]).astype(np.int32)
        yield hm, e, sizes_low + len(hs)


def _mask_to_set(high_vertices_mask: int, low: int, L: int) -> tuple[int, ...]:
    full = (high_vertices_mask << L) | low
    return tuple(i for i in range(full.bit_length()) if full >> i & 1)


def mad_bruteforce(g: Graph) -> DensityResult:
    """Exponential oracle: max of 2|E(S)|/|S| over every non-empty S (n <= 20)."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise SizeLimitExceeded(f"brute-force mad limited to n <= {BRUTE_FORCE_MAX_N}")
    if g.n == 0:
        return DensityResult(Fraction(0), ())
    L = min(g.n, 20)
    best = None
    best_set = None
    for hm, e, sizes in _subset_chunks(g):
        for s in range(1, g.n + 1):
            sel = np.nonzero(sizes == s)[0]
            if sel.size == 0:
                continue
            j = sel[np.argmax(e[sel])]
            val = Fraction(2 * int(e[j]), s)
            if best is None or val > best:
                best, best_set = val, _mask_to_set(hm, int(j), L)
    return DensityResult(best, best_set)


# ---------------------------------------------------------------------------
# potentials

def potential(g: Graph, a: Iterable[int]) -> int:
    """3|A| - 2|E(G[A])|."""
    s = _check_subset(g, a)
    return 3 * len(s) - 2 * g.induced_edge_count(s)


def cross_edge_count(g: Graph, x: Iterable[int], y: Iterable[int]) -> int:
    xs, ys = set(x), set(y)
    return sum(1 for u, v in g.edges if (u in xs and v in ys) or (u in ys and v in xs))


def supermodularity_residual(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """LHS - RHS of  rho(A)+rho(B) = rho(A|B) + rho(A&B) + 2|E(A-B, B-A)|.

    The identity holds for all A, B by edge counting, so this is always 0;
    it exists as a self-check.
    """
    sa, sb = _check_subset(g, a), _check_subset(g, b)
    lhs = potential(g, sa) + potential(g, sb)
    rhs = potential(g, sa | sb) + potential(g, sa & sb) + 2 * cross_edge_count(g, sa - sb, sb - sa)
    return lhs - rhs


def min_potential(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Minimum potential over non-empty vertex sets, by enumeration (n <= 25)."""
    if g.n > MIN_POTENTIAL_MAX_N:
        raise SizeLimitExceeded(
            f"exact minimum potential limited to n <= {MIN_POTENTIAL_MAX_N}; use potential_nonnegative")
    if g.n == 0:
        raise ValueError("graph has no vertices")
    L = min(g.n, 20)
    best = None
    best_set = None
    for hm, e, sizes in _subset_chunks(g):
        rho = 3 * sizes - 2 * e
        if hm == 0:
            rho[0] = np.iinfo(rho.dtype).max  # the empty set is excluded
        j = int(np.argmin(rho))
        if best is None or int(rho[j]) < best:
            best, best_set = int(rho[j]), _mask_to_set(hm, j, L)
    return best, best_set


def potential_nonnegative(g: Graph) -> bool:
    """Sign query: every vertex set has potential >= 0, i.e. Mad(g) <= 3."""
    return not mad_exceeds(g, 3)
