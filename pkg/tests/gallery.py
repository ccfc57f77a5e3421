"""Hand-built configurations whose final charges meet the threshold.

Each entry is (name, graph, context, delta).  In every graph the core has
no leaves, so the rules act on the whole graph.
"""
from __future__ import annotations

from itertools import combinations

from sek.generators import complete
from sek.graph import Graph


def theta(hubs_arms: int, length: int = 2) -> Graph:
    """Two hubs joined by ``hubs_arms`` internally disjoint paths."""
    es, n = [], 2
    for _ in range(hubs_arms):
        prev = 0
        for _ in range(length - 1):
            es.append((prev, n))
            prev, n = n, n + 1
        es.append((prev, 1))
    return Graph(n, es)


def subdivide(n: int, edges, which) -> Graph:
    """Subdivide each edge in ``which`` once."""
    es, nxt = [], n
    for u, v in edges:
        if (u, v) in which:
            es += [(u, nxt), (nxt, v)]
            nxt += 1
        else:
            es.append((u, v))
    return Graph(nxt, es)


def special_chain(delta: int = 9) -> Graph:
    """w1 - u1 - u2 - w2 where w1, w2 also share delta-1 common 2-neighbours."""
    w1, u1, u2, w2 = 0, 1, 2, 3
    es = [(w1, u1), (u1, u2), (u2, w2)]
    for i in range(delta - 1):
        y = 4 + i
        es += [(w1, y), (y, w2)]
    return Graph(4 + delta - 1, es)


def mad83_cases():
    k4 = list(combinations(range(4), 2))
    k5 = list(combinations(range(5), 2))
    return [
        # big hub sends 2/3 along every thread (R1)
        ("hub-threads", theta(8), "mad83", 9),
        # 3-vertices feed non-special 2-vertices (R3)
        ("k4-matching-subdivided", subdivide(4, k4, {(0, 1), (2, 3)}), "mad83", 9),
        # 4-vertices feed 2-vertices (R2)
        ("k5-subdivided", subdivide(5, k5, set(k5)), "mad83", 9),
    ]


def mad3_cases():
    ladder = [(i, (i + 1) % 5) for i in range(5)]
    n = 5
    for i in range(5):
        ladder += [(i, n), (n, (i + 2) % 5)]
        n += 1
    ab = [(0, 1)]
    n_ab = 2
    for _ in range(4):
        ab += [(0, n_ab), (n_ab, 1)]
        n_ab += 1
    gadget = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (3, 4)]
    n_g = 5
    for _ in range(3):
        gadget += [(3, n_g), (n_g, 4)]
        n_g += 1
    hubs = [(0, 1)] + [(h, y) for h in (0, 1) for y in range(2, 7)] + [(0, 7), (7, 8), (8, 1)]
    return [
        # 4-vertices feed poor 2-vertices (R3)
        ("ladder", Graph(n, ladder), "mad3", 7),
        # no 2-vertices at all
        ("k4", complete(4), "mad3", 7),
        # 5-vertices feed poor 2-vertices (R2)
        ("two-fives", Graph(n_ab, ab), "mad3", 7),
        # poor 3-vertices fed by 5-vertices (R2) and feeding their 2-vertex (R5)
        ("poor3-triangle", Graph(n_g, gadget), "mad3", 7),
        # sponsors give 1 to very poor vertices (R1)
        ("sponsored-chain", Graph(9, hubs), "mad3", 7),
    ]


def cases():
    return mad83_cases() + mad3_cases()
