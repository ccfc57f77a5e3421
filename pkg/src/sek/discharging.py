"""Discharging on the leaf-deleted core with exact rational charges.

Every core vertex starts with charge d*(v).  Two rule sets:

``mad83`` (threshold 8/3)
    R1  d* >= Delta-1 sends 2/3 to each core neighbour
    R2  4 <= d* <= Delta-2 sends 1/3 to each 2*-neighbour
    R3  a 3*-vertex sends 1/3 to each non-special 2*-neighbour

``mad3`` (threshold 3)
    R1  a d* = Delta sponsor gives 1 to its very poor vertex
    R2  5 <= d* <= Delta gives 1/2 to each poor neighbour (2- or 3-vertex)
    R3  a 4*-vertex gives 1/2 to each poor 2*-neighbour
    R4A a 4*-vertex gives 1/2 to each poor 3*-neighbour when at least two of
        its core neighbours are neither poor nor very poor
    R4B otherwise 1/4
    R5  a poor 3*-vertex gives 1/2 to each poor 2*-neighbour

Rules are applied literally for any Delta, even small ones where the
degree ranges overlap.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple

from .density import format_rational
from .errors import InvariantViolation
from .graph import Graph, core_degrees
from .structure import CONTEXTS, classify

THRESHOLDS = {"mad83": Fraction(8, 3), "mad3": Fraction(3)}
RULES = {"mad83": ("R1", "R2", "R3"), "mad3": ("R1", "R2", "R3", "R4A", "R4B", "R5")}


class Transfer(NamedTuple):
    src: int
    dst: int
    amount: Fraction
    rule: str


@dataclass
class ChargeLedger:
    context: str
    delta: int
    initial: dict[int, Fraction]
    transfers: list[Transfer]
    final: dict[int, Fraction] = field(default_factory=dict)
    threshold: Fraction = Fraction(0)

    def total_initial(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    def total_final(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    def history(self, v: int) -> list[Transfer]:
        return [t for t in self.transfers if v in (t.src, t.dst)]

    def to_dict(self) -> dict[str, Any]:
        return {
            "context": self.context,
            "delta": self.delta,
            "threshold": format_rational(self.threshold),
            "initial": {str(v): format_rational(c) for v, c in sorted(self.initial.items())},
            "transfers": [{"from": t.src, "to": t.dst, "amount": format_rational(t.amount), "rule": t.rule}
                          for t in self.transfers],
            "final": {str(v): format_rational(c) for v, c in sorted(self.final.items())},
            "total": format_rational(self.total_final()),
        }


def _rules_mad83(g: Graph, dstar: dict[int, int], delta: int) -> list[Transfer]:
    rep = classify(g, "mad83", delta)
    out = []
    third, two_thirds = Fraction(1, 3), Fraction(2, 3)
    for v in sorted(dstar):
        d = dstar[v]
        nbrs = sorted(w for w in g.neighbors(v) if w in dstar)
        if d >= delta - 1:
            out.extend(Transfer(v, w, two_thirds, "R1") for w in nbrs)
        if 4 <= d <= delta - 2:
            out.extend(Transfer(v, w, third, "R2") for w in nbrs if dstar[w] == 2)
        if d == 3:
            out.extend(Transfer(v, w, third, "R3") for w in nbrs if dstar[w] == 2 and not rep[w].special)
    return out


def _rules_mad3(g: Graph, dstar: dict[int, int], delta: int) -> list[Transfer]:
    rep = classify(g, "mad3", delta)
    half, quarter = Fraction(1, 2), Fraction(1, 4)

    def poor(x):
        return bool(rep[x].poor2 or rep[x].poor3)

    out = []
    for v in sorted(dstar):
        d = dstar[v]
        nbrs = sorted(w for w in g.neighbors(v) if w in dstar)
        if d == delta:
            out.extend(Transfer(v, u, Fraction(1), "R1") for u in sorted(rep[v].sponsor_of))
        if 5 <= d <= delta:
            out.extend(Transfer(v, u, half, "R2") for u in nbrs if poor(u))
        if d == 4:
            out.extend(Transfer(v, u, half, "R3") for u in nbrs if rep[u].poor2)
            plain = sum(1 for x in nbrs if not poor(x) and not rep[x].very_poor2)
            for u in nbrs:
                if rep[u].poor3:
                    out.append(Transfer(v, u, half, "R4A") if plain >= 2 else Transfer(v, u, quarter, "R4B"))
        if rep[v].poor3:
            out.extend(Transfer(v, u, half, "R5") for u in nbrs if rep[u].poor2)
    return out


def discharge(g: Graph, context: str, delta: int) -> ChargeLedger:
    """Apply the context's rules once and record every transfer."""
    if context not in CONTEXTS:
        raise ValueError(f"context must be one of {CONTEXTS}")
    dstar = core_degrees(g)
    initial = {v: Fraction(d) for v, d in dstar.items()}
    transfers = (_rules_mad83 if context == "mad83" else _rules_mad3)(g, dstar, delta)
    final = dict(initial)
    for t in transfers:
        final[t.src] -= t.amount
        final[t.dst] += t.amount
    ledger = ChargeLedger(context, delta, initial, transfers, final, THRESHOLDS[context])
    if ledger.total_final() != ledger.total_initial():
        raise InvariantViolation("discharging changed the total charge")
    return ledger


class Deficiency(NamedTuple):
    vertex: int
    charge: Fraction
    history: list[Transfer]


def audit_final_charges(ledger: ChargeLedger) -> list[Deficiency]:
    """Core vertices whose final charge is strictly below the threshold."""
    return [Deficiency(v, c, ledger.history(v)) for v, c in sorted(ledger.final.items())
            if c < ledger.threshold]
