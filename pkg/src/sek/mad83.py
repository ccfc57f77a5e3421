"""Constructive (3Delta-3)-coloring of graphs with Mad < 8/3 and Delta >= 9.

Reductions come from ``find_reducible_83``:

* C1: drop a pendant edge at a core vertex of core degree <= 1;
* C2: adjacent core 2-vertices u1 u2 with u1 not special;
* C3: a core 3-vertex u with two non-special core 2-neighbours v1, v2.

C2/C3 delete a few edges and the leaves of the cast, pad the anchors with
fresh leaves up to degree Delta and recurse.  Extensions run in the working
graph W = G + padding until the padding is dropped, then finish in G.
"""
from __future__ import annotations

from fractions import Fraction

from .coloring import PartialColoring, verify
from .density import mad_below
from .errors import InvariantViolation, PreconditionError
from .graph import Edge, Graph, edge
from .reduction import (ReductionStep, ReductionTrace, check_progress, free_color, leaves_at,
                        measure, pad_to_degree, place_color, switch_pendant)
from .structure import find_reducible_83

MAD_BOUND = Fraction(8, 3)
MIN_DELTA = 9


def _colors_at(h: Graph, f: dict[Edge, int], v: int) -> set[int]:
    return {f[edge(v, w)] for w in h.neighbors(v)}


def _reduce(g: Graph, cfg, delta: int):
    """Return (H, W, surgery) for one configuration."""
    c = cfg.cast
    if cfg.kind == "C1":
        e = edge(c["u"], c["leaf"])
        return g.with_edges(remove=[e]), g, {"removed": [e], "added": []}
    if cfg.kind == "C2":
        hubs = (c["u1"], c["u2"])
        cut = [edge(c["u1"], c["u2"])]
        anchors = (c["w1"], c["w2"])
    else:
        hubs = (c["u"], c["v1"], c["v2"])
        cut = [edge(c["u"], c["v1"]), edge(c["u"], c["v2"])]
        anchors = (c["v1p"], c["v2p"], c["w"])
    removed = list(cut)
    for x in hubs:
        removed.extend(edge(x, z) for z in leaves_at(g, x))
    h = g.with_edges(remove=removed)
    added: list[Edge] = []
    for a in dict.fromkeys(anchors):
        h, fresh = pad_to_degree(h, a, delta)
        added.extend(edge(a, z) for z in fresh)
    w = Graph(h.n, list(g.edges) + added)
    return h, w, {"removed": removed, "added": added}


def _extend_c2(g, h, w, c, f, k, st, trace):
    u1, u2, w1, w2 = c["u1"], c["u2"], c["w1"], c["w2"]
    cw1, cw2 = _colors_at(h, f, w1), _colors_at(h, f, w2)
    f_w2u2 = f[edge(w2, u2)]
    if f_w2u2 in cw1:
        alpha = f_w2u2
    else:
        diff = cw1 - cw2
        if not diff:
            raise InvariantViolation("C2: no candidate for the special color", trace)
        alpha = min(diff)
    st.actions.append(("alpha", alpha))
    # pendant switch at w1 among leaves that stay leaves in W
    cands = [x for x in leaves_at(h, w1) if w.degree(x) == 1]
    switch_pendant(f, w1, u1, cands, {alpha}, st.actions, trace)

    e = edge(u1, u2)
    f[e] = free_color(w, f, e, k, trace=trace)
    st.actions.append(("color", e, f[e]))
    pend2 = [edge(u2, z) for z in leaves_at(g, u2)]
    if pend2 and alpha != f_w2u2:
        place_color(w, f, pend2[0], alpha, trace)
        st.actions.append(("place-alpha", pend2[0], alpha))
        pend2 = pend2[1:]
    for e in pend2:
        f[e] = free_color(w, f, e, k, trace=trace)
        st.actions.append(("color", e, f[e]))
    for e in st.surgery["added"]:
        del f[e]
    for z in leaves_at(g, u1):
        e = edge(u1, z)
        f[e] = free_color(g, f, e, k, trace=trace)
        st.actions.append(("color", e, f[e]))


def _extend_c3(g, h, w, c, f, k, st, trace):
    u, v1, v2, ww = c["u"], c["v1"], c["v2"], c["w"]
    anchors = (c["v1p"], c["v2p"])
    f_uw = f[edge(u, ww)]
    cw = _colors_at(h, f, ww)
    alphas = []
    for a in anchors:
        ca = _colors_at(h, f, a)
        if f_uw in ca:
            alphas.append(f_uw)
        else:
            diff = ca - cw
            if not diff:
                raise InvariantViolation("C3: no candidate for a special color", trace)
            alphas.append(min(diff))
    a1, a2 = alphas
    st.actions.append(("alpha", a1, a2))
    forbidden = {a1, a2, f_uw}
    for vi, a in ((v1, anchors[0]), (v2, anchors[1])):
        cands = [x for x in leaves_at(h, a) if w.degree(x) == 1]
        switch_pendant(f, a, vi, cands, forbidden, st.actions, trace)

    # uv_i also avoids both special colors so that they can still be placed at u
    for vi in (v1, v2):
        e = edge(u, vi)
        f[e] = free_color(w, f, e, k, avoid=(a1, a2), trace=trace)
        st.actions.append(("color", e, f[e]))
    pend = [edge(u, z) for z in leaves_at(g, u)]
    if len(pend) >= 2:
        placed = []
        if a1 != f_uw:
            place_color(w, f, pend[0], a1, trace)
            st.actions.append(("place-alpha", pend[0], a1))
            placed.append(pend[0])
        if a2 not in (f_uw, a1):
            place_color(w, f, pend[1], a2, trace)
            st.actions.append(("place-alpha", pend[1], a2))
            placed.append(pend[1])
        pend = [e for e in pend if e not in placed]
    for e in pend:
        f[e] = free_color(w, f, e, k, trace=trace)
        st.actions.append(("color", e, f[e]))
    for e in st.surgery["added"]:
        del f[e]
    for vi in (v1, v2):
        for z in leaves_at(g, vi):
            e = edge(vi, z)
            f[e] = free_color(g, f, e, k, trace=trace)
            st.actions.append(("color", e, f[e]))


def color_mad83(g: Graph, delta: int | None = None) -> tuple[PartialColoring, ReductionTrace]:
    """Strong (3Delta-3)-coloring of a graph with Mad < 8/3."""
    if delta is None:
        delta = max(MIN_DELTA, g.max_degree())
    if delta < MIN_DELTA or delta < g.max_degree():
        raise PreconditionError(f"delta must be >= max(9, max degree) (got {delta})")
    if not mad_below(g, MAD_BOUND):
        raise PreconditionError("maximum average degree is not below 8/3")
    k = 3 * delta - 3
    trace = ReductionTrace()
    frames = []
    cur = g
    while True:
        cfg = find_reducible_83(cur, delta)
        if cfg is None:
            break
        h, w, surgery = _reduce(cur, cfg, delta)
        check_progress(cur, h, trace)
        if cfg.kind != "C1" and not mad_below(h, MAD_BOUND):
            raise InvariantViolation("reduced graph left the Mad < 8/3 class", trace)
        st = ReductionStep(cfg.kind, dict(cfg.cast), surgery, len(frames), measure(cur))
        trace.steps.append(st)
        frames.append((cfg, cur, h, w, st))
        cur = h

    if any(d >= 2 for d in cur.degrees()):
        raise InvariantViolation("no reducible configuration, yet the core still has edges", trace)
    trace.base = "matching"
    f: dict[Edge, int] = {e: 1 for e in cur.edges}

    while frames:
        cfg, gg, h, w, st = frames.pop()
        if cfg.kind == "C1":
            e = edge(cfg.cast["u"], cfg.cast["leaf"])
            f[e] = free_color(gg, f, e, k, trace=trace)
            st.actions.append(("color", e, f[e]))
        elif cfg.kind == "C2":
            _extend_c2(gg, h, w, cfg.cast, f, k, st, trace)
        else:
            _extend_c3(gg, h, w, cfg.cast, f, k, st, trace)

    out = PartialColoring(f, k)
    bad = verify(g, out)
    if bad or set(f) != set(g.edges):
        raise InvariantViolation(f"result invalid: {bad[:3]}", trace)
    return out, trace
