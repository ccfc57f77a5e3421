import random

import pytest

from helpers import brute_strong_chi, gnm, named_small_graphs, random_graph
from sek.coloring import is_valid
from sek.errors import SizeLimitExceeded
from sek.exact import chromatic_number_oracle, exact_chi_s, max_clique
from sek.generators import complete, cycle, kdt, kprime4, star
from sek.graph import Graph, conflict_graph

EXPECTED_SMALL = {"P2": 1, "P3": 2, "P4": 3, "P5": 3, "C3": 3, "C4": 4, "C5": 5, "C6": 3, "C7": 4,
                  "K1,4": 4, "K4": 6}


def conflict_adjacency(g):
    cg, _ = conflict_graph(g)
    return [set(cg.neighbors(v)) for v in cg.vertices()]


class TestOracle:
    def test_against_assignment_enumeration(self):
        rng = random.Random(1)
        for _ in range(60):
            g = random_graph(rng, 7, max_m=7)
            assert chromatic_number_oracle(conflict_adjacency(g)) == brute_strong_chi(g)

    def test_limit(self):
        with pytest.raises(SizeLimitExceeded):
            chromatic_number_oracle([set() for _ in range(17)])


@pytest.mark.parametrize("name", sorted(EXPECTED_SMALL))
def test_named_small_graphs(name):
    g = named_small_graphs()[name]
    res = exact_chi_s(g)
    assert res.exact and res.chi == EXPECTED_SMALL[name]
    assert res.chi == chromatic_number_oracle(conflict_adjacency(g))
    assert is_valid(g, res.coloring, res.chi) and len(res.coloring) == g.m


class TestGoldens:
    def test_kdt3(self):
        assert exact_chi_s(kdt(9, 3)).chi == 24

    def test_kdt4(self):
        assert exact_chi_s(kdt(7, 4)).chi == 22

    def test_kprime(self):
        res = exact_chi_s(kprime4(7))
        assert res.exact and res.chi == 19


class TestSolver:
    def test_edgeless(self):
        res = exact_chi_s(Graph(3))
        assert res.chi == 0 and res.exact

    def test_petersen(self):
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        assert exact_chi_s(Graph(10, outer + inner + spokes)).chi == 5

    def test_bounds_and_history(self):
        res = exact_chi_s(cycle(7))
        assert res.lower <= res.chi <= res.upper
        assert res.history and res.history[0][0].startswith("upper")

    def test_budget_gives_inexact_result(self):
        g = gnm(12, 24, random.Random(3))
        res = exact_chi_s(g, budget=5)
        if not res.exact:
            assert res.lower <= res.upper
            assert is_valid(g, res.coloring)

    def test_supplied_lower_bound(self):
        assert exact_chi_s(star(4), lower=4).chi == 4

    def test_matches_oracle_on_random_graphs(self):
        rng = random.Random(7)
        for _ in range(120):
            g = random_graph(rng, 9, max_m=10)
            res = exact_chi_s(g)
            assert res.exact
            assert res.chi == chromatic_number_oracle(conflict_adjacency(g))

    def test_relabeling_invariance(self):
        rng = random.Random(12)
        for _ in range(30):
            g = random_graph(rng, 10, max_m=16)
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
            assert exact_chi_s(g).chi == exact_chi_s(h).chi

    def test_max_clique(self):
        adj = conflict_adjacency(complete(4))
        bits = [sum(1 << j for j in nb) for nb in adj]
        clique, finished = max_clique(bits)
        assert finished and len(clique) == 6
