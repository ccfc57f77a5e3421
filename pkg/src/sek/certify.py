"""Check color bounds over a stream of instances.

Each bound names a hypothesis, the parameter it is stated in, and (when one
exists) a constructive colorer:

=======  ==============================  =================  ==============
name     hypothesis                      parameter          bound
=======  ==============================  =================  ==============
5d1      2-degenerate                    D = max(2, Delta)  5D + 1
3d-3     Mad < 8/3                       max(9, Delta)      3 Delta - 3
3d       Mad < 3, or Mad <= 3 with no    max(7, Delta)      3 Delta
         3-regular subgraph
=======  ==============================  =================  ==============

Instances outside the hypothesis are reported as ``excluded:within`` or
``excluded:exceeds`` rather than as failures; the latter are sharpness
witnesses.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

from .density import format_rational, mad_exact
from .errors import BudgetExceeded, InvalidParameters
from .exact import DEFAULT_BUDGET, exact_chi_s
from .generators import GraphFamilySpec, generate
from .graph import Graph, degeneracy, has_three_regular_subgraph
from .mad83 import color_mad83
from .two_degenerate import color_two_degenerate

BOUNDS = ("5d1", "3d-3", "3d")
METHODS = ("exact", "constructive")
TSV_COLUMNS = ("instance-id", "n", "m", "delta", "mad", "colors", "bound", "status")


@dataclass(frozen=True)
class CertRecord:
    instance_id: str
    n: int
    m: int
    delta: int
    mad: Fraction
    colors: int
    bound: int
    status: str
    hypothesis: str

    @property
    def ok(self) -> bool:
        return not (self.status.startswith("fail") or self.status == "budget")

    def row(self) -> str:
        return "\t".join(map(str, (self.instance_id, self.n, self.m, self.delta, format_rational(self.mad),
                                   self.colors, self.bound, self.status)))


@dataclass
class CertReport:
    bound: str
    method: str
    records: list[CertRecord]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.records)

    def to_tsv(self) -> str:
        return "\n".join(["\t".join(TSV_COLUMNS)] + [r.row() for r in self.records]) + "\n"


def bound_value(bound: str, g: Graph) -> tuple[int, int]:
    """(parameter, bound) for the named bound on ``g``."""
    d = g.max_degree()
    if bound == "5d1":
        p = max(2, d)
        return p, 5 * p + 1
    if bound == "3d-3":
        p = max(9, d)
        return p, 3 * p - 3
    if bound == "3d":
        p = max(7, d)
        return p, 3 * p
    raise InvalidParameters(f"unknown bound {bound!r}; choose from {BOUNDS}")


def hypothesis(bound: str, g: Graph, mad: Fraction) -> str:
    """Label of the hypothesis ``g`` satisfies, or ``none``."""
    if bound == "5d1":
        return "2-degenerate" if degeneracy(g)[0] <= 2 else "none"
    if bound == "3d-3":
        return "mad<8/3" if mad < Fraction(8, 3) else "none"
    if mad < 3:
        return "mad<3"
    if mad == 3:
        try:
            found, _ = has_three_regular_subgraph(g)
        except BudgetExceeded:
            return "none"
        if not found:
            return "mad<=3,no-3-regular"
    return "none"


def certify_graph(g: Graph, bound: str, method: str, instance_id: str = "0",
                  budget: int = DEFAULT_BUDGET) -> CertRecord:
    if method not in METHODS:
        raise InvalidParameters(f"unknown method {method!r}; choose from {METHODS}")
    param, limit = bound_value(bound, g)
    mad = mad_exact(g).mad
    hyp = hypothesis(bound, g, mad)
    status = None
    if method == "exact":
        res = exact_chi_s(g, budget=budget)
        colors = res.chi
        if not res.exact:
            status = "budget"
    elif hyp == "none":
        # the constructive colorers require the hypothesis; fall back to the solver
        res = exact_chi_s(g, budget=budget)
        colors = res.chi
        if not res.exact:
            status = "budget"
    elif bound == "5d1":
        colors = color_two_degenerate(g, param)[0].max_color()
    elif bound == "3d-3":
        colors = color_mad83(g, param)[0].max_color()
    else:
        raise InvalidParameters("no constructive colorer exists for the 3d bound; use --method exact")
    if status is None:
        within = colors <= limit
        if hyp == "none":
            status = "excluded:within" if within else "excluded:exceeds"
        else:
            status = "pass" if within else "fail"
            if hyp == "mad<=3,no-3-regular":
                status += ":no-3-regular"
    return CertRecord(instance_id, g.n, g.m, g.max_degree(), mad, colors, limit, status, hyp)


def _job(args):
    label, g, bound, method, budget = args
    return certify_graph(g, bound, method, label, budget)


def family_stream(template: GraphFamilySpec, count: int, seed: int | None = None) -> list[tuple[str, Graph]]:
    """``count`` instances of a family; random families use seeds seed, seed+1, ..."""
    out = []
    for i in range(count):
        spec = template if seed is None else replace(template, seed=seed + i)
        out.append((f"{i}:{spec.label()}", generate(spec)))
    return out


def certify_bound(instances: Iterable[tuple[str, Graph]] | Iterable[Graph], bound: str, method: str,
                  budget: int = DEFAULT_BUDGET, workers: int = 1,
                  progress: Callable[[CertRecord], None] | None = None) -> CertReport:
    """Certify every instance; results keep input order regardless of ``workers``."""
    if bound not in BOUNDS:
        raise InvalidParameters(f"unknown bound {bound!r}; choose from {BOUNDS}")
    if method not in METHODS:
        raise InvalidParameters(f"unknown method {method!r}; choose from {METHODS}")
    jobs = []
    for i, item in enumerate(instances):
        label, g = (str(i), item) if isinstance(item, Graph) else item
        jobs.append((label, g, bound, method, budget))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_job, jobs))
    else:
        records = [_job(j) for j in jobs]
    if progress:
        for r in records:
            progress(r)
    return CertReport(bound, method, records)
