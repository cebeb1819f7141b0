import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rooklink import (Linkage, LinkageProblem, ProductGraph, Vertex,
                      all_pairings, exhaustive_solve, find_infeasible_pairing,
                      is_k_linked, verify)

V = Vertex


def problem(d1, d2, *pairs):
    return LinkageProblem(ProductGraph(d1, d2),
                          tuple((V(*s), V(*t)) for s, t in pairs))


class TestVerify:
    def test_accepts_valid_linkage(self):
        p = problem(2, 2, ((0, 0), (2, 0)), ((1, 1), (0, 2)))
        link = Linkage(((V(0, 0), V(2, 0)), (V(1, 1), V(1, 2), V(0, 2))))
        assert verify(p, link).ok

    def test_shared_vertex_names_disjointness(self):
        p = problem(2, 2, ((0, 0), (2, 2)), ((2, 0), (0, 2)))
        link = Linkage((
            (V(0, 0), V(1, 0), V(1, 1), V(2, 1), V(2, 2)),
            (V(2, 0), V(1, 0), V(1, 2), V(0, 2)),
        ))
        report = verify(p, link)
        assert not report.ok
        assert "disjointness" in report.reason and "(1, 0)" in report.reason

    def test_non_adjacent_step_names_adjacency(self):
        p = problem(2, 2, ((0, 0), (1, 1)))
        report = verify(p, Linkage(((V(0, 0), V(1, 1)),)))
        assert not report.ok
        assert "adjacency" in report.reason

    def test_wrong_endpoints(self):
        p = problem(2, 2, ((0, 0), (1, 1)))
        report = verify(p, Linkage(((V(0, 0), V(0, 1)),)))
        assert not report.ok
        assert "endpoints" in report.reason

    def test_wrong_path_count(self):
        p = problem(2, 2, ((0, 0), (1, 1)))
        report = verify(p, Linkage(()))
        assert not report.ok
        assert "path count" in report.reason

    def test_inactive_vertex(self):
        p = problem(1, 1, ((0, 0), (1, 1)))
        report = verify(p, Linkage(((V(0, 0), V(0, 2), V(1, 2), V(1, 1)),)))
        assert not report.ok
        assert "activity" in report.reason

    def test_repeated_vertex(self):
        p = problem(1, 2, ((0, 0), (1, 1)))
        bad = Linkage(((V(0, 0), V(0, 1), V(0, 0), V(1, 0), V(1, 1)),))
        report = verify(p, bad)
        assert not report.ok


class TestVerifyMetamorphic:
    def _valid_instance(self):
        p = problem(2, 2, ((0, 0), (2, 2)), ((2, 0), (0, 2)))
        link = Linkage((
            (V(0, 0), V(0, 1), V(2, 1), V(2, 2)),
            (V(2, 0), V(1, 0), V(1, 2), V(0, 2)),
        ))
        assert verify(p, link).ok
        return p, link

    def test_pair_permutation_preserves_verdict(self):
        p, link = self._valid_instance()
        for perm in itertools.permutations(range(len(p.pairs))):
            q = LinkageProblem(p.grid, tuple(p.pairs[i] for i in perm))
            swapped = Linkage(tuple(link.paths[i] for i in perm))
            assert verify(q, swapped).ok

    def test_path_reversal_preserves_verdict(self):
        p, link = self._valid_instance()
        for i in range(len(link.paths)):
            paths = list(link.paths)
            paths[i] = tuple(reversed(paths[i]))
            assert verify(p, Linkage(tuple(paths))).ok


class TestExhaustiveSolve:
    def test_adjacent_pair_is_an_edge(self):
        p = problem(2, 2, ((0, 0), (0, 2)))
        verdict = exhaustive_solve(p)
        assert verdict.feasible
        assert verify(p, verdict.witness).ok

    def test_empty_problem(self):
        p = problem(1, 1)
        assert exhaustive_solve(p).feasible

    def test_witness_always_verifies(self):
        grid = ProductGraph(1, 2)
        verts = sorted(grid.subgrid().vertices())
        for tset in itertools.combinations(verts, 4):
            for pairing in all_pairings(tset):
                p = LinkageProblem(grid, tuple(pairing))
                verdict = exhaustive_solve(p)
                if verdict.feasible:
                    assert verify(p, verdict.witness).ok

    def test_budget_exhaustion_is_indeterminate(self):
        p = problem(3, 3, ((0, 0), (1, 1)), ((1, 0), (2, 2)), ((2, 0), (3, 3)))
        verdict = exhaustive_solve(p, node_budget=2)
        assert verdict.indeterminate
        assert verdict.feasible is None
        assert verdict.witness is None

    def test_deterministic_node_counts(self):
        p = problem(2, 3, ((0, 0), (1, 1)), ((1, 0), (2, 2)))
        a = exhaustive_solve(p)
        b = exhaustive_solve(p)
        assert (a.feasible, a.nodes_explored) == (b.feasible, b.nodes_explored)
        assert a.witness == b.witness

    def test_single_pair_always_feasible_on_connected_grids(self):
        for d1, d2 in [(1, 1), (1, 2), (2, 2), (0, 3)]:
            grid = ProductGraph(d1, d2)
            verts = sorted(grid.subgrid().vertices())
            for s, t in itertools.combinations(verts, 2):
                p = LinkageProblem(grid, ((s, t),))
                assert exhaustive_solve(p).feasible


class TestLinkedness:
    def test_four_cycle_is_one_linked(self):
        assert is_k_linked(1, 1, 1) == (True, None)

    def test_three_by_three_is_two_linked(self):
        ok, cex = is_k_linked(2, 2, 2)
        assert ok and cex is None

    def test_two_by_three_is_not_two_linked(self):
        ok, cex = is_k_linked(1, 2, 2)
        assert not ok
        assert cex is not None
        assert exhaustive_solve(cex).feasible is False

    def test_size_guard(self):
        with pytest.raises(ValueError):
            is_k_linked(2, 5, 4)

    def test_sampled_mode_finds_the_easy_counterexample(self):
        ok, cex = is_k_linked(1, 2, 2, mode="sampled", seed=3, count=200)
        assert not ok and cex is not None

    def test_sampled_mode_on_linked_grid(self):
        ok, cex = is_k_linked(2, 2, 2, mode="sampled", seed=3, count=50)
        assert ok and cex is None


class TestSharpness:
    def test_two_by_three_counterexample(self):
        res = find_infeasible_pairing(1, 2, 2)
        assert res.found is not None and res.completed
        assert exhaustive_solve(res.found).feasible is False

    def test_transposed_family(self):
        res = find_infeasible_pairing(2, 1, 2)
        assert res.found is not None and res.completed

    def test_three_by_three_has_none(self):
        res = find_infeasible_pairing(2, 2, 2)
        assert res.found is None and res.completed

    def test_budget_gives_incomplete(self):
        res = find_infeasible_pairing(2, 2, 2, node_budget=5)
        assert res.found is None and not res.completed

    def test_random_mode_finds_a_certified_pairing(self):
        res = find_infeasible_pairing(1, 2, 2, exhaustive=False, seed=4, count=300)
        assert res.found is not None and res.completed
        assert exhaustive_solve(res.found).feasible is False

    def test_zero_pairs_is_trivially_linked(self):
        assert is_k_linked(2, 2, 0) == (True, None)
        res = find_infeasible_pairing(2, 2, 0)
        assert res.found is None and res.completed

    def test_random_pairing_rejects_odd_input(self):
        import random

        from rooklink import random_pairing
        with pytest.raises(ValueError):
            random_pairing([1, 2, 3], random.Random(0))


@st.composite
def small_problems(draw):
    d1 = draw(st.integers(0, 2))
    d2 = draw(st.integers(0, 2))
    grid = ProductGraph(d1, d2)
    verts = sorted(grid.subgrid().vertices())
    k = draw(st.integers(0, min(2, len(verts) // 2)))
    terms = draw(st.permutations(verts))[: 2 * k]
    pairs = tuple((terms[2 * i], terms[2 * i + 1]) for i in range(k))
    return LinkageProblem(grid, pairs)


@settings(deadline=None, max_examples=80)
@given(small_problems())
def test_exhaustive_solve_agrees_with_its_witness(p):
    verdict = exhaustive_solve(p)
    if verdict.feasible:
        assert verify(p, verdict.witness).ok
    else:
        assert verdict.witness is None
