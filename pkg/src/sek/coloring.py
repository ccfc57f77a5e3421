"""Partial strong edge-colorings: verification, multiplicity, degenerate
sequences and the extension engine, plus greedy and DSATUR colorers."""
from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple, TextIO

from .errors import EdgeNotFound, GraphFormatError, InvariantViolation, PreconditionError, SekError
from .graph import Edge, Graph, conflict_graph, edge, second_neighborhood


class InvalidColoring(SekError):
    pass


class SequenceError(SekError):
    pass


@dataclass
class PartialColoring:
    """Map from canonical edges to colors in 1..k."""

    assignments: dict[Edge, int] = field(default_factory=dict)
    k: int | None = None

    def __post_init__(self):
        self.assignments = {edge(*e): int(c) for e, c in self.assignments.items()}
        if self.k is None:
            self.k = max(self.assignments.values(), default=0)

    def __getitem__(self, e) -> int:
        return self.assignments[edge(*e)]

    def __contains__(self, e) -> bool:
        return edge(*e) in self.assignments

    def __len__(self) -> int:
        return len(self.assignments)

    def get(self, e, default=None):
        return self.assignments.get(edge(*e), default)

    def domain(self) -> set[Edge]:
        return set(self.assignments)

    def colors_used(self) -> set[int]:
        return set(self.assignments.values())

    def num_colors(self) -> int:
        return len(set(self.assignments.values()))

    def max_color(self) -> int:
        return max(self.assignments.values(), default=0)

    def copy(self) -> PartialColoring:
        return PartialColoring(dict(self.assignments), self.k)

    def restrict(self, edges: Iterable[Edge]) -> PartialColoring:
        keep = {edge(*e) for e in edges}
        return PartialColoring({e: c for e, c in self.assignments.items() if e in keep}, self.k)


class Violation(NamedTuple):
    edge: Edge
    other: Edge | None
    color: int
    via: int | None
    kind: str = "conflict"  # or "range"


def verify(g: Graph, f: PartialColoring | Mapping[Edge, int], k: int | None = None) -> list[Violation]:
    """All violations of ``f`` as a partial strong coloring of ``g``.

    ``via`` is an endpoint of ``other`` lying in N(u) | N(v) for ``edge = uv``.
    Each conflicting pair is reported once.
    """
    if isinstance(f, PartialColoring):
        k = f.k if k is None else k
        f = f.assignments
    out = []
    for e, c in sorted(f.items()):
        ce = g.check_edge(e)
        if c < 1 or (k is not None and c > k):
            out.append(Violation(ce, None, c, None, "range"))
    for e in sorted(f):
        ce = edge(*e)
        c = f[e]
        u, v = ce
        near = g.neighbors(u) | g.neighbors(v)
        for o in sorted(second_neighborhood(g, ce)):
            if o <= ce or o not in f or f[o] != c:
                continue
            via = min(x for x in o if x in near)
            out.append(Violation(ce, o, c, via))
    return out


def is_valid(g: Graph, f, k: int | None = None) -> bool:
    return not verify(g, f, k)


def multiplicity(g: Graph, f: PartialColoring | Mapping[Edge, int], e) -> int:
    """|N2[e] & dom f| - |f(N2[e])|: how many color repeats sit around ``e``."""
    if isinstance(f, PartialColoring):
        f = f.assignments
    n2 = second_neighborhood(g, e)
    colored = [f[x] for x in n2 if x in f]
    return len(colored) - len(set(colored))


class SequenceViolation(NamedTuple):
    index: int
    edge: Edge
    size: int
    allowed: int


def _normalise_sequence(g: Graph, f: PartialColoring, seq: Sequence[Iterable[Edge]]) -> list[list[Edge]]:
    sets = []
    seen: set[Edge] = set()
    for i, part in enumerate(seq):
        cur = sorted({g.check_edge(e) for e in part})
        for e in cur:
            if e in seen:
                raise SequenceError(f"edge {e} appears in more than one set (set {i})")
            seen.add(e)
        sets.append(cur)
    uncolored = set(g.edges) - f.domain()
    if seen != uncolored:
        missing = sorted(uncolored - seen)
        extra = sorted(seen - uncolored)
        raise SequenceError(f"sequence must cover exactly the uncolored edges "
                            f"(missing {missing[:5]}, colored-but-listed {extra[:5]})")
    return sets


def sequence_violations(g: Graph, f: PartialColoring, seq: Sequence[Iterable[Edge]], k: int) -> list[SequenceViolation]:
    """Every (index, edge) breaking |N2[e] minus later sets| <= k + m(f, e)."""
    sets = _normalise_sequence(g, f, seq)
    if verify(g, f, k):
        raise InvalidColoring("f is not a partial k-coloring")
    later: set[Edge] = set()
    suffix = []
    for part in reversed(sets):
        suffix.append(set(later))
        later |= set(part)
    suffix.reverse()
    out = []
    for i, part in enumerate(sets):
        for e in part:
            size = len(second_neighborhood(g, e) - suffix[i])
            allowed = k + multiplicity(g, f, e)
            if size > allowed:
                out.append(SequenceViolation(i, e, size, allowed))
    return out


def check_sequence(g: Graph, f: PartialColoring, seq: Sequence[Iterable[Edge]], k: int) -> SequenceViolation | None:
    """None when ``seq`` is an (f, k)-degenerate sequence, else the first
    violation (by set index, then edge order).  Indices are 0-based."""
    bad = sequence_violations(g, f, seq, k)
    return bad[0] if bad else None


def smallest_free_color(g: Graph, assignments: Mapping[Edge, int], e: Edge, k: int) -> int | None:
    used = {assignments[x] for x in second_neighborhood(g, e) if x in assignments and x != e}
    for c in range(1, k + 1):
        if c not in used:
            return c
    return None


def extend_by_sequence(g: Graph, f: PartialColoring, seq: Sequence[Iterable[Edge]], k: int) -> PartialColoring:
    """Color the sequence's edges in order (ascending within a set), each with
    the smallest color absent from its already-colored second neighbourhood."""
    bad = check_sequence(g, f, seq, k)
    if bad is not None:
        raise PreconditionError(f"not an (f,{k})-degenerate sequence: {bad}")
    sets = _normalise_sequence(g, f, seq)
    out = dict(f.assignments)
    for part in sets:
        for e in part:
            c = smallest_free_color(g, out, e, k)
            if c is None:
                raise InvariantViolation(f"no free color for {e} among {k}")
            out[e] = c
    return PartialColoring(out, k)


def switch_colors(f: PartialColoring, e1, e2) -> PartialColoring:
    """Exchange the colors of two colored edges.  The result is not re-verified."""
    a, b = edge(*e1), edge(*e2)
    for x in (a, b):
        if x not in f.assignments:
            raise EdgeNotFound(f"edge {x} is not colored")
    out = dict(f.assignments)
    out[a], out[b] = f.assignments[b], f.assignments[a]
    return PartialColoring(out, f.k)


def greedy_bound(max_degree: int) -> int:
    return 2 * max_degree * (max_degree - 1) + 1


def greedy_color(g: Graph, order: Sequence[Edge] | None = None) -> PartialColoring:
    """First-fit in the given edge order (default: sorted)."""
    if order is None:
        order = g.edges
    else:
        order = [g.check_edge(e) for e in order]
        if sorted(order) != list(g.edges):
            raise PreconditionError("order must be a permutation of the edges")
    out: dict[Edge, int] = {}
    limit = g.m + 1
    for e in order:
        out[e] = smallest_free_color(g, out, e, limit)
    return PartialColoring(out, max(out.values(), default=0))


def dsatur_vertex_coloring(adj: Sequence[Iterable[int]]) -> list[int]:
    """DSATUR on a vertex-indexed adjacency list; colors are 1-based."""
    n = len(adj)
    nbrs = [set(a) for a in adj]
    color = [0] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    uncolored = set(range(n))
    deg = [len(a) for a in nbrs]
    while uncolored:
        v = max(uncolored, key=lambda x: (len(sat[x]), deg[x], -x))
        c = 1
        while c in sat[v]:
            c += 1
        color[v] = c
        uncolored.discard(v)
        for w in nbrs[v]:
            sat[w].add(c)
            if w in uncolored:
                deg[w] -= 1
    return color


def dsatur_color(g: Graph) -> PartialColoring:
    """DSATUR on the conflict graph.  Falls back to the greedy coloring when
    that one happens to use fewer colors, so the result never loses to greedy."""
    if g.m == 0:
        return PartialColoring({}, 0)
    cg, table = conflict_graph(g)
    cols = dsatur_vertex_coloring([cg.neighbors(i) for i in range(cg.n)])
    f = PartialColoring({table[i]: c for i, c in enumerate(cols)})
    gr = greedy_color(g)
    return gr if gr.max_color() < f.max_color() else f


# ---------------------------------------------------------------------------
# file format

def load_coloring(text: str | bytes | TextIO, k: int | None = None) -> PartialColoring:
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    out: dict[Edge, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("c") or line.startswith("#"):
            continue
        parts = line.split(" ")
        if len(parts) != 3 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(line_no, f"malformed coloring line {line!r}")
        u, v, c = map(int, parts)
        if u == v:
            raise GraphFormatError(line_no, f"self-loop at vertex {u}")
        if c < 1:
            raise GraphFormatError(line_no, "colors must be >= 1")
        e = edge(u, v)
        if e in out:
            raise GraphFormatError(line_no, f"edge {u} {v} colored twice")
        out[e] = c
    return PartialColoring(out, k)


def dump_coloring(f: PartialColoring, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.extend(f"{u} {v} {c}" for (u, v), c in sorted(f.assignments.items()))
    return "\n".join(lines) + "\n"
