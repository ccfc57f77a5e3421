"""Constructive (5D+1)-coloring of 2-degenerate graphs.

Reduction rules, applied to the current graph G with leaf-deleted core G*:

1. a core vertex with d* <= 2 and a leaf: drop that pendant edge;
2. G* has maximum degree <= 2: G is cycles plus isolated edges, colored directly;
3. otherwise take v with d* >= 3 and at most two core neighbours of core degree
   >= 3.  If v has a leaf, drop it.  Otherwise detach v from a core
   2-neighbour u1 (whose other neighbour is w1), pad w1 to three leaves, and
   recurse.  The extension switches pendant colors at w1 and chases at most one
   conflict among the edges v u_i.
"""
from __future__ import annotations

from .coloring import PartialColoring, verify
from .errors import InvariantViolation, PreconditionError
from .graph import Edge, Graph, core_degrees, degeneracy, edge
from .reduction import (ReductionStep, ReductionTrace, check_progress, free_color, leaves_at,
                        measure, switch_pendant)
from .structure import find_low3_vertex


def check_hypotheses(g: Graph, d: int) -> None:
    if d < 2:
        raise PreconditionError(f"D must be at least 2 (got {d})")
    k, _ = degeneracy(g)
    if k > 2:
        raise PreconditionError(f"graph is {k}-degenerate, not 2-degenerate")
    if g.max_degree() > d + 2:
        raise PreconditionError(f"maximum degree {g.max_degree()} exceeds D+2 = {d + 2}")
    for v in g.vertices():
        t = g.degree(v) - d
        if t in (1, 2) and len(leaves_at(g, v)) < t:
            raise PreconditionError(f"vertex {v} has degree D+{t} but fewer than {t} leaves")


def _cycle_order(g: Graph, start: int) -> list[Edge]:
    out, prev, cur = [], None, start
    while True:
        nxt = min(w for w in g.neighbors(cur) if w != prev) if prev is not None else min(g.neighbors(cur))
        out.append(edge(cur, nxt))
        prev, cur = cur, nxt
        if cur == start:
            return out


def _color_base(g: Graph, k: int, trace: ReductionTrace) -> dict[Edge, int]:
    f: dict[Edge, int] = {}
    seen: set[int] = set()
    for v in g.vertices():
        if v in seen or g.degree(v) == 0:
            continue
        if g.degree(v) == 1:
            (w,) = g.neighbors(v)
            if g.degree(w) != 1:
                raise InvariantViolation(f"base case: leaf {v} hangs off a non-leaf", trace)
            f[edge(v, w)] = 1
            seen.update((v, w))
            continue
        if g.degree(v) != 2:
            raise InvariantViolation(f"base case: vertex {v} has degree {g.degree(v)}", trace)
        cyc = _cycle_order(g, v)
        for e in cyc:
            seen.update(e)
            f[e] = free_color(g, f, e, k, trace=trace)
            if f[e] > 5:
                raise InvariantViolation(f"cycle edge {e} needed color {f[e]} > 5", trace)
    return f


def color_two_degenerate(g: Graph, d: int | None = None) -> tuple[PartialColoring, ReductionTrace]:
    """Strong (5D+1)-coloring of a 2-degenerate graph.

    Requires maximum degree <= D+2, and every vertex of degree D+t (t = 1, 2)
    must have at least t leaf neighbours.
    """
    if d is None:
        d = max(2, g.max_degree())
    check_hypotheses(g, d)
    k = 5 * d + 1
    trace = ReductionTrace()
    frames: list[tuple[str, Graph, dict, ReductionStep, Graph]] = []
    cur = g
    while True:
        dstar = core_degrees(cur)
        step = None
        for v in sorted(dstar):
            if dstar[v] <= 2 and cur.degree(v) > dstar[v]:
                step = ("pendant", {"v": v, "leaf": leaves_at(cur, v)[0]})
                break
        if step is None and max(dstar.values(), default=0) <= 2:
            trace.base = "cycles"
            f = _color_base(cur, k, trace)
            break
        if step is None:
            core = Graph(cur.n, [e for e in cur.edges if e[0] in dstar and e[1] in dstar])
            v = find_low3_vertex(core)
            if v is None:
                raise InvariantViolation("core of a 2-degenerate graph has no low 3-vertex", trace)
            if cur.degree(v) > dstar[v]:
                step = ("pendant", {"v": v, "leaf": leaves_at(cur, v)[0]})
            else:
                nb = sorted(core.neighbors(v))
                big = [x for x in nb if dstar[x] >= 3]
                twos = [x for x in nb if dstar[x] == 2]
                pick = big + twos[:2 - len(big)]
                us = [x for x in twos if x not in pick]
                u1 = us[0]
                (w1,) = [x for x in cur.neighbors(u1) if x != v]
                step = ("split", {"v": v, "v1": pick[0], "v2": pick[1], "us": us, "w1": w1})

        kind, cast = step
        if kind == "pendant":
            h = cur.with_edges(remove=[(cast["v"], cast["leaf"])])
            surgery = {"removed": [edge(cast["v"], cast["leaf"])], "added": []}
        else:
            v, u1, w1 = cast["v"], cast["us"][0], cast["w1"]
            h = cur.with_edges(remove=[(v, u1)])
            ell = max(0, 2 - len(leaves_at(cur, w1)))
            h, fresh = h.add_leaves(w1, ell)
            surgery = {"removed": [edge(v, u1)], "added": [edge(w1, x) for x in fresh]}
        check_progress(cur, h, trace)
        st = ReductionStep(kind, cast, surgery, len(frames), measure(cur))
        trace.steps.append(st)
        frames.append((kind, cur, cast, st, h))
        cur = h

    while frames:
        kind, gg, cast, st, hh = frames.pop()
        if kind == "pendant":
            e = edge(cast["v"], cast["leaf"])
            f[e] = free_color(gg, f, e, k, trace=trace)
            st.actions.append(("color", e, f[e]))
            continue
        v, us, w1 = cast["v"], cast["us"], cast["w1"]
        u1 = us[0]
        forbidden = {f[edge(v, cast["v1"])], f[edge(v, cast["v2"])]}
        # f colors H = G - v u1 + padding, where u1 is one of w1's leaves
        cands = [x for x in leaves_at(hh, w1) if x != u1]
        switch_pendant(f, w1, u1, cands, forbidden, st.actions, trace)
        for e in st.surgery["added"]:
            del f[e]
        queue = [u1]
        rounds = 0
        while queue:
            uj = queue.pop(0)
            rounds += 1
            if rounds > len(us):
                raise InvariantViolation("conflict chasing exceeded t rounds", trace)
            (wj,) = [x for x in gg.neighbors(uj) if x != v]
            partner = f[edge(wj, uj)]
            for ui in us:
                e = edge(v, ui)
                if ui != uj and f.get(e) == partner:
                    del f[e]
                    st.actions.append(("uncolor", e))
                    queue.append(ui)
            e = edge(v, uj)
            f[e] = free_color(gg, f, e, k, trace=trace)
            st.actions.append(("color", e, f[e]))

    out = PartialColoring(f, k)
    bad = verify(g, out)
    if bad or set(f) != set(g.edges):
        raise InvariantViolation(f"result invalid: {bad[:3]}", trace)
    return out, trace

