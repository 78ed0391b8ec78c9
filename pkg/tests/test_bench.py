import math
import random

import pytest
from hypothesis import given, strategies as st

from dcasp.bench import (
    Digraph,
    Graph,
    TooManyEdges,
    coloring_text,
    complete_digraph,
    complete_graph,
    gen_coloring,
    gen_hamilton,
    gen_nqueens,
    gen_pigeonhole,
    gen_schur,
    petersen_graph,
    random_digraph,
    random_graph,
    random_theory,
    read_graph,
    write_graph,
)
from dcasp.core import brute_force_answer_sets
from dcasp.fmt import validate_theory
from dcasp.ground import ground
from dcasp.solve import enumerate_answer_sets, solve

from oracles import colorings, hamilton_cycles, queens_count, queens_count_backtrack


def models(prog, k=None):
    t = ground(prog)
    return t, enumerate_answer_sets(t, k)


def edge_sets(t, ms):
    """Map hc(u,v) models to sets of (u, v) pairs."""
    out = set()
    for m in ms:
        out.add(frozenset(tuple(int(x) for x in t.atoms.names[a][3:-1].split(",")) for a in m))
    return out


class TestHamilton:
    def test_three_cycle(self):
        t, ms = models(gen_hamilton(Digraph(3, ((1, 2), (2, 3), (3, 1)))))
        assert (len(t.constraints), len(t.horn), len(t.post)) == (0, 3, 3)
        assert [t.names(m) for m in ms] == [["hc(1,2)", "hc(2,3)", "hc(3,1)"]]

    def test_complete_3(self):
        t, ms = models(gen_hamilton(complete_digraph(3)))
        assert len(t.constraints) == 6
        assert len(ms) == 2 == math.factorial(2)

    def test_path_unsat(self):
        t, ms = models(gen_hamilton(Digraph(3, ((1, 2), (2, 3)))))
        assert ms == [] == brute_force_answer_sets(t)

    def test_start_validated(self):
        with pytest.raises(ValueError):
            gen_hamilton(complete_digraph(3), start=4)

    @pytest.mark.parametrize("start", [1, 2, 4])
    def test_start_vertex_irrelevant(self, start):
        g = random_digraph(5, 12, 7)
        t, ms = models(gen_hamilton(g, start))
        assert edge_sets(t, ms) == set(hamilton_cycles(g))


@given(st.integers(1, 7), st.data())
def test_hamilton_matches_permutation_oracle(n, data):
    m = data.draw(st.integers(0, n * (n - 1)))
    g = random_digraph(n, m, data.draw(st.integers(0, 10**6)))
    t, ms = models(gen_hamilton(g))
    assert edge_sets(t, ms) == set(hamilton_cycles(g))


class TestColoring:
    def test_triangle(self):
        assert len(models(gen_coloring(complete_graph(3), 3))[1]) == 6

    def test_k4_unsat(self):
        assert solve(ground(gen_coloring(complete_graph(4), 3))).status == "UNSAT"

    def test_single_vertex(self):
        assert len(models(gen_coloring(Graph(1, ()), 3))[1]) == 3

    def test_petersen(self):
        t = ground(gen_coloring(petersen_graph(), 3))
        assert solve(t).status == "SAT"
        assert solve(ground(gen_coloring(petersen_graph(), 2))).status == "UNSAT"

    def test_petersen_shape(self):
        g = petersen_graph()
        deg = [sum(v in e for e in g.edges) for v in range(1, 11)]
        assert len(g.edges) == 15 and set(deg) == {3}

    def test_k_validated(self):
        with pytest.raises(ValueError):
            coloring_text(complete_graph(2), 0)


@given(st.integers(1, 6), st.integers(1, 3), st.data())
def test_coloring_counts_match_brute_force(n, k, data):
    m = data.draw(st.integers(0, n * (n - 1) // 2))
    g = random_graph(n, m, data.draw(st.integers(0, 10**6)))
    assert len(models(gen_coloring(g, k))[1]) == len(colorings(g, k))


class TestQueens:
    def test_oracles_agree(self):
        for n in range(1, 9):
            assert queens_count(n) == queens_count_backtrack(n)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_counts(self, n):
        assert len(models(gen_nqueens(n))[1]) == queens_count(n)

    def test_three_unsat_by_brute_force(self):
        assert brute_force_answer_sets(ground(gen_nqueens(3))) == []

    def test_four_by_brute_force(self):
        assert len(brute_force_answer_sets(ground(gen_nqueens(4)))) == 2


class TestSchur:
    def test_one_bin(self):
        assert solve(ground(gen_schur(1, 2))).status == "UNSAT"
        assert solve(ground(gen_schur(1, 1))).status == "SAT"

    @pytest.mark.parametrize("b,n,status", [(2, 4, "SAT"), (2, 5, "UNSAT")])
    def test_two_bins(self, b, n, status):
        assert solve(ground(gen_schur(b, n))).status == status

    def test_witness_is_sum_free(self):
        t = ground(gen_schur(3, 13))
        out = solve(t)
        bins = {}
        for name in t.names(out.witness):
            x, k = map(int, name[6:-1].split(","))
            bins.setdefault(k, set()).add(x)
        assert sorted(x for s in bins.values() for x in s) == list(range(1, 14))
        for s in bins.values():
            assert not any(x + y in s for x in s for y in s)


class TestPigeonhole:
    def test_three(self):
        assert len(models(gen_pigeonhole(3, 3))[1]) == 6

    def test_four_in_three(self):
        assert solve(ground(gen_pigeonhole(4, 3))).status == "UNSAT"

    def test_one(self):
        t, ms = models(gen_pigeonhole(1, 1))
        assert [t.names(m) for m in ms] == [["at(1,1)"]]


class TestRandomGraphs:
    def test_forced_complete(self):
        for seed in range(5):
            assert random_digraph(3, 6, seed) == complete_digraph(3)

    def test_deterministic(self):
        assert random_digraph(30, 120, 11) == random_digraph(30, 120, 11)
        assert random_graph(12, 20, 4) == random_graph(12, 20, 4)

    def test_too_many(self):
        with pytest.raises(TooManyEdges):
            random_digraph(5, 21, 0)
        with pytest.raises(TooManyEdges):
            random_graph(4, 7, 0)

    def test_graph_invariants(self):
        with pytest.raises(ValueError):
            Digraph(3, ((1, 1),))
        with pytest.raises(ValueError):
            Digraph(3, ((1, 2), (1, 2)))
        with pytest.raises(ValueError):
            Graph(3, ((1, 2), (2, 1)))
        with pytest.raises(ValueError):
            Graph(3, ((1, 4),))

    def test_graph_io(self):
        g = random_digraph(6, 10, 2)
        assert read_graph(write_graph(g)) == g
        u = read_graph("3 2 % triangle minus one\n1 2\n3 2\n", directed=False)
        assert u == Graph(3, ((1, 2), (3, 2)))
        with pytest.raises(ValueError):
            read_graph("3 2\n1 2\n")


@pytest.mark.parametrize("prog", [
    gen_hamilton(random_digraph(8, 20, 1)), gen_coloring(random_graph(8, 12, 1), 3),
    gen_nqueens(7), gen_schur(4, 20), gen_pigeonhole(5, 4),
], ids=["hamilton", "coloring", "nqueens", "schur", "pigeonhole"])
def test_generated_programs_validate(prog):
    assert [d for d in validate_theory(ground(prog)) if d.severity == "error"] == []


def test_random_theory_respects_bounds():
    rng = random.Random(0)
    for _ in range(50):
        t = random_theory(rng)
        assert len(t.constraint_atoms) <= 12
        assert len(t.constraints) <= 20 and len(t.horn) <= 8
        assert len(t.post) <= 4 and len(t.selects) <= 3
