"""Simple undirected graphs over dense integer vertex ids, plus the
neighbourhood primitives every other module builds on.

Edges are canonical tuples ``(u, v)`` with ``u < v``.  Graphs are immutable;
surgery helpers return new graphs and keep vertex ids stable.
"""
from __future__ import annotations

from collections.abc import Iterable
from typing import TextIO

from .errors import BudgetExceeded, EdgeNotFound, GraphFormatError, InvalidVertex

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    __slots__ = ("_n", "_edges", "_adj", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidVertex(f"negative vertex count {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        es: set[Edge] = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidVertex(f"edge ({a}, {b}) out of range for n={n}")
            e = edge(a, b)
            if e in es:
                raise ValueError(f"duplicate edge {e}")
            es.add(e)
            adj[a].add(b)
            adj[b].add(a)
        self._n = n
        self._edge_set = frozenset(es)
        self._edges = tuple(sorted(es))
        self._adj = tuple(frozenset(s) for s in adj)

    # basic accessors -------------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self._edge_set

    def __contains__(self, e) -> bool:
        return tuple(e) in self._edge_set

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise InvalidVertex(f"vertex {v!r} not in graph with {self._n} vertices")

    def check_edge(self, e) -> Edge:
        u, v = e
        ce = edge(u, v)
        if ce not in self._edge_set:
            raise EdgeNotFound(f"edge {ce} not in graph")
        return ce

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self._n, self._edge_set))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={len(self._edges)})"

    # surgery -----------------------------------------------------------------
    def with_edges(self, add: Iterable[tuple[int, int]] = (), remove: Iterable[tuple[int, int]] = (),
                   n: int | None = None) -> Graph:
        """Return a copy with edges removed/added and optionally more vertices."""
        es = set(self._edge_set)
        for e in remove:
            ce = edge(*e)
            if ce not in es:
                raise EdgeNotFound(f"edge {ce} not in graph")
            es.discard(ce)
        added = [edge(*e) for e in add]
        return Graph(self._n if n is None else n, list(es) + added)

    def add_leaves(self, hub: int, count: int) -> tuple[Graph, list[int]]:
        """Attach ``count`` fresh leaves to ``hub``; fresh ids go above the current maximum."""
        fresh = list(range(self._n, self._n + count))
        return Graph(self._n + count, list(self._edges) + [(hub, x) for x in fresh]), fresh

    def induced_edge_count(self, vs: Iterable[int]) -> int:
        s = set(vs)
        return sum(1 for u, v in self._edges if u in s and v in s)


# ---------------------------------------------------------------------------
# file format

def load_graph(text: str | bytes | TextIO) -> Graph:
    """Parse the edge-list format: ``c``/``#`` comments, optional ``p <n>`` header,
    then one ``<u> <v>`` pair per line."""
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header_n = None
    seen_data = False
    edges: list[Edge] = []
    lines_of: dict[Edge, int] = {}
    max_id = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        if line.startswith("c") or line.startswith("#"):
            continue
        if line.startswith("p"):
            if seen_data:
                raise GraphFormatError(line_no, "header must precede edges")
            parts = line.split(" ")
            if len(parts) != 2 or parts[0] != "p" or not parts[1].isdigit():
                raise GraphFormatError(line_no, f"malformed header {line!r}")
            header_n = int(parts[1])
            seen_data = True
            continue
        seen_data = True
        parts = line.split(" ")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(line_no, f"malformed edge line {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphFormatError(line_no, f"self-loop at vertex {u}")
        e = edge(u, v)
        if e in lines_of:
            raise GraphFormatError(line_no, f"duplicate edge {u} {v} (first at line {lines_of[e]})")
        lines_of[e] = line_no
        edges.append(e)
        max_id = max(max_id, v if v > u else u)
    n = max_id + 1
    if header_n is not None and header_n > n:
        n = header_n
    return Graph(n, edges)


def dump_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p {g.n}")
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# neighbourhoods

def gamma(g: Graph, v: int) -> set[Edge]:
    """Edges incident to ``v``."""
    return {edge(v, w) for w in g.neighbors(v)}


def second_neighborhood(g: Graph, e) -> set[Edge]:
    """All edges within distance two of ``e`` (including ``e``): the union of
    the incident-edge sets of every neighbour of either endpoint."""
    u, v = g.check_edge(e)
    out: set[Edge] = set()
    adj = g._adj
    for w in adj[u] | adj[v]:
        for x in adj[w]:
            out.add((w, x) if w < x else (x, w))
    return out


def second_neighborhoods(g: Graph) -> dict[Edge, frozenset[Edge]]:
    """``second_neighborhood`` for every edge, computed once."""
    return {e: frozenset(second_neighborhood(g, e)) for e in g.edges}


# ---------------------------------------------------------------------------
# reductions

def core_vertices(g: Graph) -> list[int]:
    """Vertices surviving one pass of leaf deletion (degrees measured in ``g``)."""
    return [v for v in g.vertices() if g.degree(v) != 1]


def core_degrees(g: Graph) -> dict[int, int]:
    """Map each surviving vertex of the leaf-deleted graph to its degree there."""
    deg = g.degrees()
    out = {}
    for v in g.vertices():
        if deg[v] != 1:
            out[v] = sum(1 for w in g._adj[v] if deg[w] != 1)
    return out


def core_graph(g: Graph) -> tuple[Graph, list[int]]:
    """Delete every degree-1 vertex of ``g`` once (not iterated).

    Returns the compacted graph and ``mapping`` with ``mapping[new] = old``.
    """
    keep = core_vertices(g)
    index = {v: i for i, v in enumerate(keep)}
    es = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(keep), es), keep


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Smallest-last ordering.  Returns (degeneracy, removal order)."""
    n = g.n
    deg = g.degrees()
    maxd = max(deg, default=0)
    buckets: list[set[int]] = [set() for _ in range(maxd + 1)]
    for v in range(n):
        buckets[deg[v]].add(v)
    removed = [False] * n
    order = []
    k = 0
    lo = 0
    for _ in range(n):
        while not buckets[lo]:
            lo += 1
        v = min(buckets[lo])
        buckets[lo].discard(v)
        removed[v] = True
        order.append(v)
        k = max(k, lo)
        for w in g._adj[v]:
            if not removed[w]:
                buckets[deg[w]].discard(w)
                deg[w] -= 1
                buckets[deg[w]].add(w)
                if deg[w] < lo:
                    lo = deg[w]
    return k, order


def k_core(g: Graph, k: int) -> set[int]:
    """Vertex set of the k-core (iterated removal of vertices of degree < k)."""
    deg = g.degrees()
    alive = set(g.vertices())
    stack = [v for v in alive if deg[v] < k]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g._adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] < k:
                    stack.append(w)
    return alive


def conflict_graph(g: Graph) -> tuple[Graph, list[Edge]]:
    """Graph on E(g) joining edges at distance at most two.

    A strong edge-coloring of ``g`` is exactly a proper vertex coloring of it.
    Returns the graph and the table ``edges[i]`` for conflict vertex ``i``.
    """
    table = list(g.edges)
    index = {e: i for i, e in enumerate(table)}
    cedges = set()
    for i, e in enumerate(table):
        for f in second_neighborhood(g, e):
            j = index[f]
            if j > i:
                cedges.add((i, j))
    return Graph(len(table), cedges), table


# ---------------------------------------------------------------------------
# 3-regular subgraphs

DEFAULT_NODE_BUDGET = 10**7


def has_three_regular_subgraph(g: Graph, budget: int = DEFAULT_NODE_BUDGET,
                               use_density_bound: bool = True) -> tuple[bool, frozenset[Edge] | None]:
    """Search for a non-empty subgraph in which every touched vertex has degree 3.

    Returns ``(True, witness_edges)`` or ``(False, None)``.  Raises
    :class:`BudgetExceeded` when the branch-and-prune search runs out of nodes.
    """
    if use_density_bound:
        from .density import mad_at_least

        if not mad_at_least(g, 3):
            return False, None
    core = k_core(g, 3)
    if not core:
        return False, None
    adj = {v: sorted(w for w in g._adj[v] if w in core) for v in core}
    nodes = 0

    # status: 1 = in (needs degree exactly 3), -1 = out
    def search(status: dict[int, int], chosen: set[Edge], rejected: set[Edge], deg: dict[int, int]):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"3-regular subgraph search exceeded {budget} nodes", nodes)
        best = None
        best_opts = None
        for v, s in status.items():
            if s != 1 or deg[v] == 3:
                continue
            opts = [w for w in adj[v]
                    if status.get(w) != -1 and edge(v, w) not in chosen
                    and edge(v, w) not in rejected and deg.get(w, 0) < 3]
            need = 3 - deg[v]
            if len(opts) < need:
                return None
            if best is None or len(opts) < len(best_opts):
                best, best_opts = v, opts
        if best is None:
            return frozenset(chosen)
        v = best
        need = 3 - deg[v]
        from itertools import combinations

        for pick in combinations(best_opts, need):
            new_chosen = set(chosen)
            new_rejected = set(rejected)
            new_status = dict(status)
            new_deg = dict(deg)
            for w in best_opts:
                e = edge(v, w)
                if w in pick:
                    new_chosen.add(e)
                    new_deg[v] += 1
                    new_deg[w] = new_deg.get(w, 0) + 1
                    new_status[w] = 1
                else:
                    new_rejected.add(e)
            res = search(new_status, new_chosen, new_rejected, new_deg)
            if res is not None:
                return res
        return None

    ordered = sorted(core)
    for i, root in enumerate(ordered):
        status = {u: -1 for u in ordered[:i]}
        status[root] = 1
        res = search(status, set(), set(), {root: 0})
        if res is not None:
            return True, res
    return False, None
