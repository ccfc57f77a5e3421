"""Shared plumbing for the reduce-then-extend colorers: traces, the
termination measure, leaf padding, pendant color switches and first-fit."""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

from .errors import InvariantViolation
from .graph import Edge, Graph, edge, second_neighborhood


@dataclass
class ReductionStep:
    kind: str
    vertices: dict[str, Any]
    surgery: dict[str, Any]
    depth: int
    measure: tuple[int, int]
    actions: list[tuple] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "vertices": self.vertices,
            "surgery": {k: [list(x) if isinstance(x, tuple) else x for x in v] if isinstance(v, list) else v
                        for k, v in self.surgery.items()},
            "depth": self.depth,
            "measure": list(self.measure),
            "actions": [list(a) for a in self.actions],
        }


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)
    base: str = ""

    def kinds(self) -> list[str]:
        return [s.kind for s in self.steps]

    def to_dict(self) -> dict[str, Any]:
        return {"base": self.base, "steps": [s.to_dict() for s in self.steps]}


def measure(g: Graph) -> tuple[int, int]:
    """(number of vertices of degree >= 2, number of edges)."""
    return (sum(1 for d in g.degrees() if d >= 2), g.m)


def check_progress(before: Graph, after: Graph, trace: ReductionTrace) -> None:
    if not measure(after) < measure(before):
        raise InvariantViolation(f"measure did not decrease: {measure(before)} -> {measure(after)}", trace)


def leaves_at(g: Graph, v: int) -> list[int]:
    return sorted(w for w in g.neighbors(v) if g.degree(w) == 1)


def pad_to_degree(g: Graph, hub: int, target: int) -> tuple[Graph, list[int]]:
    extra = target - g.degree(hub)
    if extra <= 0:
        return g, []
    return g.add_leaves(hub, extra)


def free_color(g: Graph, f: dict[Edge, int], e: Edge, k: int, avoid: Iterable[int] = (),
               trace: ReductionTrace | None = None) -> int:
    """Smallest color in 1..k absent from the colored part of N2_g[e] and ``avoid``."""
    used = {f[x] for x in second_neighborhood(g, e) if x != e and x in f}
    used.update(avoid)
    for c in range(1, k + 1):
        if c not in used:
            return c
    raise InvariantViolation(f"no free color for {e}: {len(used)} of {k} blocked", trace)


def place_color(g: Graph, f: dict[Edge, int], e: Edge, c: int, trace: ReductionTrace | None = None) -> None:
    """Assign a prescribed color, refusing if it clashes inside N2_g[e]."""
    for x in second_neighborhood(g, e):
        if x != e and f.get(x) == c:
            raise InvariantViolation(f"prescribed color {c} for {e} clashes with {x}", trace)
    f[e] = c


def switch_pendant(f: dict[Edge, int], hub: int, target: int, candidates: Iterable[int],
                   forbidden: set[int], actions: list, trace: ReductionTrace | None = None) -> None:
    """Make f(hub-target) avoid ``forbidden`` by swapping with a pendant at ``hub``.

    Candidates are scanned in ascending id; the first whose color is allowed
    wins.  Pendant edges at one hub have identical second neighbourhoods, so
    the swap keeps a valid coloring valid.
    """
    te = edge(hub, target)
    if f[te] not in forbidden:
        return
    for x in sorted(candidates):
        ce = edge(hub, x)
        if x != target and f[ce] not in forbidden:
            f[te], f[ce] = f[ce], f[te]
            actions.append(("switch", te, ce))
            return
    raise InvariantViolation(f"no pendant at {hub} avoids colors {sorted(forbidden)}", trace)
