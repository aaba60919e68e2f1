import pytest

from pwdp.decomposition import exact_pathwidth_decomposition, grid_sweep_decomposition
from pwdp.engine import (
    StateIndex, catalan_allowed, catalan_prune, crosses, generate_states,
    reconstruct_solution, run_dp,
)
from pwdp.errors import (
    CapacityError, NotApplicableError, PluginInconsistencyError,
    ReconstructionUnavailableError, UnknownStateError,
)
from pwdp.graph import Graph, PartialGrid, grid_to_graph
from pwdp.plugins import make_plugin
from pwdp.plugins.base import ProblemDefinition
from pwdp.plugins.coloring import CanonicalColoringProblem


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def full_grid(m, n):
    cells = frozenset((r, c) for r in range(m) for c in range(n))
    return PartialGrid(m, n, cells, frozenset())


class TestStateIndex:
    def test_roundtrip(self):
        idx = StateIndex([(0, 0), (0, 1), (2, 1)], [(0, 2), (0, 1)])
        assert len(idx) == 3
        for pos, s in enumerate(idx.states, start=1):
            assert idx.get_index(s) == pos
            assert s in idx

    def test_unknown_state(self):
        idx = StateIndex([(0, 0)], [(0, 1), (0, 1)])
        assert (1, 1) not in idx
        with pytest.raises(UnknownStateError):
            idx.get_index((1, 1))
        with pytest.raises(UnknownStateError):
            idx.get_index((0, 0, 0))  # wrong arity

    def test_duplicate_state_rejected(self):
        with pytest.raises(PluginInconsistencyError):
            StateIndex([(0, 1), (0, 1)], [(0, 1), (0, 1)])

    def test_out_of_domain_rejected(self):
        with pytest.raises(PluginInconsistencyError):
            StateIndex([(0, 5)], [(0, 1), (0, 1)])

    def test_injective_over_full_domain(self):
        # every state of a 3-slot mixed-radix domain maps to a distinct key
        domains = [(-1, 2), (0, 3), (-2, 0)]
        states = [(a, b, c)
                  for a in range(-1, 3)
                  for b in range(0, 4)
                  for c in range(-2, 1)]
        idx = StateIndex(states, domains)
        assert len({idx.encode(s) for s in states}) == len(states)

    def test_canonical_coloring_count(self):
        g = Graph(9, [])
        plugin = CanonicalColoringProblem(g, 7)
        assert len(generate_states(plugin, 9)) == 21110
        # cache returns the same object
        assert generate_states(plugin, 9) is generate_states(plugin, 9)


class TestCatalan:
    def test_crossing_examples(self):
        # open pairs at positions (1,3) and (2,4) interleave
        assert crosses((1, 2, 1, 2))
        # disjoint (1,2),(3,4) and nested (1,4),(2,3) do not
        assert not crosses((1, 1, 2, 2))
        assert not crosses((1, 2, 2, 1))
        assert not crosses((0, 0, 0, 0))

    def test_prune_preserves_opt_and_filled(self):
        grid = full_grid(3, 3)
        g = grid_to_graph(grid)
        npd, _ = grid_sweep_decomposition(grid)
        for name in ("path-cover", "cycle-cover"):
            plugin = make_plugin(name, g)
            base = run_dp(plugin, g, npd)
            pruned = run_dp(plugin, g, npd,
                            allowed=catalan_allowed(plugin, npd))
            assert base.feasible == pruned.feasible
            assert base.objective == pruned.objective
            for s1, s2 in zip(base.stats, pruned.stats):
                assert s1.filled == s2.filled
            assert (max(s.allowed for s in pruned.stats)
                    < max(s.allowed for s in base.stats))

    def test_rejects_wrong_plugin(self):
        grid = full_grid(2, 2)
        g = grid_to_graph(grid)
        npd, _ = grid_sweep_decomposition(grid)
        with pytest.raises(NotApplicableError):
            catalan_allowed(make_plugin("mwis", g), npd)

    def test_rejects_non_sweep_decomposition(self):
        g = path_graph(4)
        npd, _ = exact_pathwidth_decomposition(g)
        plugin = make_plugin("path-cover", g)
        with pytest.raises(NotApplicableError):
            catalan_prune(generate_states(plugin, 2), plugin, npd)


class TestRunDp:
    def test_stats_shape(self):
        g = path_graph(3)
        npd, _ = exact_pathwidth_decomposition(g)
        res = run_dp(make_plugin("path-cover", g), g, npd)
        assert len(res.stats) == 2 * g.n
        assert res.stats[-1].nv == 0
        assert res.stats[-1].filled >= 1
        assert all(s.filled <= s.allowed for s in res.stats)

    def test_capacity_error(self):
        g = Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
                      (1, 3), (2, 4), (3, 5), (4, 6), (1, 4)])
        npd, _ = exact_pathwidth_decomposition(g)
        plugin = make_plugin("coloring", g, C=10)
        with pytest.raises(CapacityError):
            run_dp(plugin, g, npd, capacity=100)

    def test_deterministic_across_runs(self):
        grid = full_grid(3, 3)
        g = grid_to_graph(grid)
        npd, _ = grid_sweep_decomposition(grid)
        plugin = make_plugin("path-cover", g)
        r1 = run_dp(plugin, g, npd, retain=True)
        r2 = run_dp(plugin, g, npd, retain=True)
        assert r1.final_state == r2.final_state
        assert r1.objective == r2.objective
        for t1, t2 in zip(r1.tables, r2.tables):
            assert list(t1.items()) == list(t2.items())
        assert reconstruct_solution(r1) == reconstruct_solution(r2)

    def test_threads_bit_identical(self):
        grid = full_grid(3, 4)
        g = grid_to_graph(grid)
        npd, _ = grid_sweep_decomposition(grid)
        plugin = make_plugin("path-cover", g)
        seq = run_dp(plugin, g, npd, threads=1, retain=True)
        par = run_dp(plugin, g, npd, threads=4, retain=True)
        assert seq.objective == par.objective
        assert seq.final_state == par.final_state
        for t1, t2 in zip(seq.tables, par.tables):
            assert list(t1.items()) == list(t2.items())
        for o1, o2 in zip(seq.origins, par.origins):
            assert o1 == o2
        assert reconstruct_solution(seq) == reconstruct_solution(par)

    def test_reconstruction_needs_retain(self):
        g = path_graph(3)
        npd, _ = exact_pathwidth_decomposition(g)
        res = run_dp(make_plugin("path-cover", g), g, npd)
        with pytest.raises(ReconstructionUnavailableError):
            reconstruct_solution(res)

    def test_reconstruction_infeasible(self):
        g = path_graph(3)
        npd, _ = exact_pathwidth_decomposition(g)
        res = run_dp(make_plugin("cycle-cover", g), g, npd, retain=True)
        assert not res.feasible
        with pytest.raises(ReconstructionUnavailableError):
            reconstruct_solution(res)


class NonCanonicalColoring(CanonicalColoringProblem):
    """Deliberately skips canonicalization to exercise validate mode."""

    def normalize(self, state):
        return state


class TestValidateMode:
    def test_catches_non_canonical_expansion(self):
        g = Graph(3, [(1, 2), (2, 3)])
        npd, _ = exact_pathwidth_decomposition(g)
        plugin = NonCanonicalColoring(g, 3)
        with pytest.raises(PluginInconsistencyError):
            run_dp(plugin, g, npd, validate=True)

    def test_clean_plugin_passes(self):
        g = Graph(3, [(1, 2), (2, 3)])
        npd, _ = exact_pathwidth_decomposition(g)
        plugin = CanonicalColoringProblem(g, 3)
        res = run_dp(plugin, g, npd, validate=True)
        assert res.feasible


class TinyCount(ProblemDefinition):
    name = "tiny"
    direction = "min"

    def enumerate_states(self, nv):
        yield (0,) * nv

    def slot_domains(self, nv):
        return [(0, 0)] * nv


def test_default_count_states_cap_abort():
    g = Graph(1, [])
    assert TinyCount(g).count_states(4) == 1
    # default counting stops right past the cap instead of sweeping all
    big = make_plugin("avg-path", path_graph(6), L=1, U=6)
    assert big.count_states(6, cap=10) == 11
