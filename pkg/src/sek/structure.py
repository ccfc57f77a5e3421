"""Structural labels used by the reductions and discharging arguments.

Two analysis contexts share one report type:

* ``mad83``: the special 2-vertices of the leaf-deleted core.
* ``mad3``: poor / very poor vertices, sponsors and rivals, and the three
  edge families (sinks, lower links, semi-links).

Here G* always means one pass of leaf deletion with degrees taken in G, and
``d*`` is a degree in G*.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

from .errors import InvalidParameters, PreconditionError
from .graph import Edge, Graph, core_degrees, edge

CONTEXTS = ("mad83", "mad3")


@dataclass
class VertexInfo:
    vertex: int
    degree: int
    core_degree: int | None  # None when the vertex is a leaf of G
    pale: bool
    light: bool
    special: bool | None = None
    poor2: bool | None = None
    very_poor2: bool | None = None
    poor3: bool | None = None
    sponsor: int | None = None
    rival: int | None = None
    rival_type: str | None = None
    sponsor_of: list[int] = field(default_factory=list)
    rival_of: list[int] = field(default_factory=list)


@dataclass
class ClassificationReport:
    context: str
    delta: int
    vertices: list[VertexInfo]
    sinks: frozenset[Edge] = frozenset()
    lower_links: frozenset[Edge] = frozenset()
    semi_links: frozenset[Edge] = frozenset()

    def __getitem__(self, v: int) -> VertexInfo:
        return self.vertices[v]

    def where(self, flag: str) -> list[int]:
        return [info.vertex for info in self.vertices if getattr(info, flag)]

    def to_dict(self) -> dict[str, Any]:
        return {
            "context": self.context,
            "delta": self.delta,
            "vertices": [asdict(v) for v in self.vertices],
            "sinks": [list(e) for e in sorted(self.sinks)],
            "lower_links": [list(e) for e in sorted(self.lower_links)],
            "semi_links": [list(e) for e in sorted(self.semi_links)],
        }


def pale_vertices(g: Graph) -> list[bool]:
    deg = g.degrees()
    return [sum(1 for w in g.neighbors(v) if deg[w] >= 3) <= 2 for v in g.vertices()]


def light_vertices(g: Graph, pale: list[bool] | None = None) -> list[bool]:
    if pale is None:
        pale = pale_vertices(g)
    return [sum(1 for w in g.neighbors(v) if not pale[w]) <= 2 for v in g.vertices()]


def _core_neighbors(g: Graph, dstar: dict[int, int], v: int) -> list[int]:
    return sorted(w for w in g.neighbors(v) if w in dstar)


def is_special(g: Graph, dstar: dict[int, int], v: int, delta: int) -> bool:
    return dstar.get(v) == 2 and any(dstar[w] >= delta - 1 for w in _core_neighbors(g, dstar, v))


def _poor3(g: Graph, dstar: dict[int, int]) -> set[int]:
    out = set()
    for v, d in dstar.items():
        if d == 3 and sum(1 for w in _core_neighbors(g, dstar, v) if dstar[w] == 2) == 1:
            out.add(v)
    return out


def _rival_type(g: Graph, dstar: dict[int, int], poor3: set[int], w: int) -> str | None:
    dw = dstar[w]
    if dw == 2:
        return "T1"
    nbrs = _core_neighbors(g, dstar, w)
    if dw == 3 and sum(1 for x in nbrs if dstar[x] == 2) >= 2:
        return "T2"
    if dw == 4 and sum(1 for x in nbrs if not (dstar[x] == 2 or x in poor3)) <= 1:
        return "T3"
    return None


def classify(g: Graph, context: str, delta: int) -> ClassificationReport:
    """Label every vertex (and, for ``mad3``, the sink/link edges) of ``g``."""
    if context not in CONTEXTS:
        raise InvalidParameters(f"context must be one of {CONTEXTS}")
    if delta < g.max_degree():
        raise InvalidParameters(f"delta={delta} is below the maximum degree {g.max_degree()}")
    dstar = core_degrees(g)
    pale = pale_vertices(g)
    light = light_vertices(g, pale)
    infos = [VertexInfo(v, g.degree(v), dstar.get(v), pale[v], light[v]) for v in g.vertices()]

    if context == "mad83":
        for v in g.vertices():
            infos[v].special = is_special(g, dstar, v, delta)
        return ClassificationReport(context, delta, infos)

    poor3 = _poor3(g, dstar)
    sinks: set[Edge] = set()
    lower: set[Edge] = set()
    semi: set[Edge] = set()
    for v in g.vertices():
        info = infos[v]
        d = dstar.get(v)
        info.poor3 = v in poor3
        info.poor2 = False
        info.very_poor2 = False
        if d != 2:
            continue
        a, b = _core_neighbors(g, dstar, v)
        options = []
        for sponsor, rival in ((a, b), (b, a)):
            kind = _rival_type(g, dstar, poor3, rival)
            if kind is not None:
                options.append((-dstar[sponsor], sponsor, rival, kind))
        if not options:
            info.poor2 = True
            continue
        _, sponsor, rival, kind = min(options)
        info.very_poor2 = True
        info.sponsor, info.rival, info.rival_type = sponsor, rival, kind
        infos[sponsor].sponsor_of.append(v)
        infos[rival].rival_of.append(v)
        lower.add(edge(v, rival))
        if kind == "T3":
            for x in _core_neighbors(g, dstar, rival):
                if x in poor3:
                    semi.add(edge(rival, x))

    for u in sorted(poor3):
        nbrs = _core_neighbors(g, dstar, u)
        w = next(x for x in nbrs if dstar[x] == 2)
        if any(g.degree(x) < delta for x in nbrs if x != w):
            sinks.add(edge(u, w))

    return ClassificationReport(context, delta, infos, frozenset(sinks), frozenset(lower), frozenset(semi))


def find_light_vertex_violation(g: Graph, sub) -> int | None:
    """A vertex of ``sub`` that is light in ``g``, or None.

    ``sub`` must induce a subgraph of minimum degree at least 3, in which case
    no such vertex exists; a non-None answer means the labels are wrong.
    """
    s = set(sub)
    for v in s:
        g._check_vertex(v)
    if not s:
        raise PreconditionError("empty vertex set")
    for v in sorted(s):
        if sum(1 for w in g.neighbors(v) if w in s) < 3:
            raise PreconditionError(f"vertex {v} has fewer than 3 neighbours inside the subset")
    light = light_vertices(g)
    for v in sorted(s):
        if light[v]:
            return v
    return None


def find_low3_vertex(g: Graph) -> int | None:
    """Smallest vertex of degree >= 3 with at most two neighbours of degree >= 3."""
    deg = g.degrees()
    for v in g.vertices():
        if deg[v] >= 3 and sum(1 for w in g.neighbors(v) if deg[w] >= 3) <= 2:
            return v
    return None


@dataclass(frozen=True)
class Configuration:
    kind: str  # C1, C2 or C3
    cast: dict[str, int]

    def vertices(self) -> tuple[int, ...]:
        return tuple(self.cast.values())


def find_reducible_83(g: Graph, delta: int) -> Configuration | None:
    """First reducible configuration for the mad < 8/3 argument, or None.

    C1: a vertex with d* <= 1 and d >= 2 (it has a leaf ``leaf``).
    C2: adjacent 2*-vertices u1, u2 where u1 is not special.
    C3: a 3*-vertex u with two non-special 2*-neighbours v1, v2.
    Searched in that order, each by ascending vertex id.
    """
    dstar = core_degrees(g)
    for v in g.vertices():
        if v in dstar and dstar[v] <= 1 and g.degree(v) >= 2:
            leaf = min(w for w in g.neighbors(v) if w not in dstar)
            cast = {"u": v, "leaf": leaf}
            core = _core_neighbors(g, dstar, v)
            if core:
                cast["w"] = core[0]
            return Configuration("C1", cast)

    def special(v):
        return is_special(g, dstar, v, delta)

    for u1 in sorted(dstar):
        if dstar[u1] != 2 or special(u1):
            continue
        nb = _core_neighbors(g, dstar, u1)
        twos = [x for x in nb if dstar[x] == 2]
        if not twos:
            continue
        u2 = twos[0]
        w1 = next(x for x in nb if x != u2)
        w2 = next(x for x in _core_neighbors(g, dstar, u2) if x != u1)
        return Configuration("C2", {"u1": u1, "u2": u2, "w1": w1, "w2": w2})

    for u in sorted(dstar):
        if dstar[u] != 3:
            continue
        nb = _core_neighbors(g, dstar, u)
        plain = [x for x in nb if dstar[x] == 2 and not special(x)]
        if len(plain) < 2:
            continue
        v1, v2 = plain[:2]
        w = next(x for x in nb if x not in (v1, v2))
        v1p = next(x for x in _core_neighbors(g, dstar, v1) if x != u)
        v2p = next(x for x in _core_neighbors(g, dstar, v2) if x != u)
        return Configuration("C3", {"u": u, "v1": v1, "v2": v2, "w": w, "v1p": v1p, "v2p": v2p})
    return None
