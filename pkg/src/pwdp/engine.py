"""Generic dynamic-programming engine over nice path decompositions.

The engine walks the decomposition nodes in order, keeping one table per
node: a mapping from canonical state to the best objective value found
for it.  Absent keys play the role of the uninitialized sentinel, so the
overwrite rule is: write when the slot is empty, else only when the new
value is strictly better.  Ties keep the first writer, which fixes the
reconstruction origin deterministically.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .decomposition import FORGET, INTRODUCE, NicePathDecomposition
from .errors import (
    CapacityError, NotApplicableError, PluginInconsistencyError,
    ReconstructionUnavailableError, UnknownStateError,
)
from .graph import Graph


@dataclass(frozen=True)
class NodeCtx:
    """Everything a plugin may ask about one decomposition node.

    Positions are 0-based indices into order_before.  For an introduce
    node the new vertex is appended last, so order_before is the bag it
    joins; nbrs lists the bag positions of its graph neighbors.  For a
    forget node pos is where the leaving vertex sits and nbrs lists its
    neighbors among the other bag members.
    """
    index: int
    kind: str
    vertex: int
    order_before: Tuple[int, ...]
    order_after: Tuple[int, ...]
    pos: Optional[int]
    nbrs: Tuple[int, ...]
    eweights: Tuple[int, ...]
    epens: Tuple[int, ...]
    vweight: int
    vcost: int
    is_last: bool


def build_contexts(graph: Graph, npd: NicePathDecomposition) -> List[NodeCtx]:
    ctxs = []
    prev: Tuple[int, ...] = ()
    last = len(npd.nodes) - 1
    for i, node in enumerate(npd.nodes):
        v = node.vertex
        if node.kind == INTRODUCE:
            pos = None
            nbrs = tuple(j for j, u in enumerate(prev) if graph.adjacent(u, v))
        else:
            pos = prev.index(v)
            nbrs = tuple(j for j, u in enumerate(prev)
                         if j != pos and graph.adjacent(u, v))
        ctxs.append(NodeCtx(
            index=i, kind=node.kind, vertex=v,
            order_before=prev, order_after=node.order,
            pos=pos, nbrs=nbrs,
            eweights=tuple(graph.edge_weight(prev[j], v) for j in nbrs),
            epens=tuple(graph.edge_penalty(prev[j], v) for j in nbrs),
            vweight=graph.vertex_weight(v), vcost=graph.selection_cost(v),
            is_last=(i == last)))
        prev = node.order
    return ctxs


class StateIndex:
    """Enumerated canonical states with a collision-free integer key.

    The key is a mixed-radix number over the state slots; injectivity is
    certain by construction but still checked exhaustively while the
    lookup table is built, as is each component's declared domain.
    """

    def __init__(self, states, domains):
        self.states = list(states)
        self.domains = list(domains)
        self._by_key = {}
        for pos, s in enumerate(self.states, start=1):
            key = self.encode(s)
            if key is None:
                raise PluginInconsistencyError(
                    f"enumerated state {s} outside declared domains")
            if key in self._by_key:
                other = self.states[self._by_key[key] - 1]
                raise PluginInconsistencyError(
                    f"key collision between {other} and {s}")
            self._by_key[key] = pos

    def encode(self, state):
        if len(state) != len(self.domains):
            return None
        key = 0
        for x, (lo, hi) in zip(state, self.domains):
            if not (lo <= x <= hi):
                return None
            key = key * (hi - lo + 1) + (x - lo)
        return key

    def get_index(self, state) -> int:
        key = self.encode(state)
        if key is None or key not in self._by_key:
            raise UnknownStateError(f"state {state} is not enumerated")
        return self._by_key[key]

    def __contains__(self, state) -> bool:
        key = self.encode(state)
        return key is not None and key in self._by_key

    def __len__(self):
        return len(self.states)


def generate_states(plugin, nv: int) -> StateIndex:
    """Build (or fetch the cached) StateIndex for one bag size."""
    cache = plugin._index_cache
    if nv not in cache:
        cache[nv] = StateIndex(plugin.enumerate_states(nv),
                               plugin.slot_domains(nv))
    return cache[nv]


def _open_pairs(state):
    """Bag positions (1-based) of ids occurring exactly twice, as (a, b)."""
    occ = {}
    for pos, s in enumerate(state, start=1):
        if s > 0:
            occ.setdefault(s, []).append(pos)
    return [tuple(ps) for ps in occ.values() if len(ps) == 2]


def crosses(state) -> bool:
    pairs = _open_pairs(state)
    for i in range(len(pairs)):
        a, b = pairs[i]
        for j in range(i + 1, len(pairs)):
            c, d = pairs[j]
            if not (b < c or d < a or (a < c and d < b) or (c < a and b < d)):
                return True
    return False


def catalan_prune(idx: StateIndex, plugin, npd) -> StateIndex:
    """Drop states whose open-path endpoint pairs cross in bag order.

    Sound only for path/cycle cover on a row-major grid sweep, where the
    planar frontier keeps open paths noncrossing.
    """
    if plugin.name not in ("path-cover", "cycle-cover"):
        raise NotApplicableError(
            f"catalan pruning applies to path/cycle cover, not {plugin.name}")
    if not getattr(npd, "from_grid_sweep", False):
        raise NotApplicableError(
            "catalan pruning needs a grid-sweep decomposition")
    return StateIndex([s for s in idx.states if not crosses(s)], idx.domains)


def catalan_allowed(plugin, npd):
    """Pruned state index per bag size, ready for run_dp's allowed."""
    out = {}
    for node in npd.nodes:
        nv = len(node.order)
        if nv not in out:
            out[nv] = catalan_prune(generate_states(plugin, nv), plugin, npd)
    return out


@dataclass
class NodeStats:
    index: int
    kind: str
    vertex: int
    nv: int
    allowed: int
    filled: int


@dataclass
class DpRunResult:
    feasible: bool
    value: object = None          # raw table value of the winning state
    objective: object = None      # final_value of the winning state
    final_state: tuple = None
    stats: List[NodeStats] = field(default_factory=list)
    plugin: object = None
    graph: object = None
    npd: object = None
    contexts: list = None
    tables: Optional[list] = None
    origins: Optional[list] = None
    certificate: object = None    # filled by the solver facade when retained


def _expand_batch(plugin, ctx, actions, items):
    out = []
    for state, value in items:
        for ai, action in enumerate(actions):
            new_state, new_value, ok = plugin.expand_state(state, ctx,
                                                           action, value)
            if ok:
                out.append((plugin.normalize(new_state), new_value,
                            state, ai))
    return out


def run_dp(plugin, graph: Graph, npd: NicePathDecomposition, *,
           threads: int = 1, capacity: int = 50_000_000,
           retain: bool = False, allowed: Optional[Dict[int, StateIndex]] = None,
           validate: bool = False) -> DpRunResult:
    """Run the generic DP loop and select the best valid final state.

    allowed maps bag size to a pruned StateIndex; expansions landing
    outside it are discarded (used for Catalan pruning).  With retain,
    every table and origin map is kept for reconstruction.  threads > 1
    splits predecessor expansion into chunks whose results are merged in
    order, so tables are identical to the sequential run.
    """
    ctxs = build_contexts(graph, npd)

    allowed = allowed or {}
    allowed_counts = {}
    for node in npd.nodes:
        nv = len(node.order)
        if nv not in allowed_counts:
            if nv in allowed:
                allowed_counts[nv] = len(allowed[nv])
            else:
                allowed_counts[nv] = plugin.count_states(nv, cap=capacity)
            if allowed_counts[nv] > capacity:
                raise CapacityError(
                    f"bag size {nv} needs more than {capacity} state slots")

    table = {plugin.empty_state(): plugin.initial_value()}
    tables = [] if retain else None
    origins = [] if retain else None
    stats = []
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None

    try:
        for ctx in ctxs:
            actions = plugin.set_of_actions(ctx)
            items = list(table.items())
            if pool is not None and len(items) > 1:
                chunk = max(1, (len(items) + threads - 1) // threads)
                parts = [items[i:i + chunk] for i in range(0, len(items), chunk)]
                batches = pool.map(
                    lambda part: _expand_batch(plugin, ctx, actions, part),
                    parts)
                cand = [c for batch in batches for c in batch]
            else:
                cand = _expand_batch(plugin, ctx, actions, items)

            nxt = {}
            org = {} if retain else None
            nv = len(ctx.order_after)
            gate = allowed.get(nv)
            check = generate_states(plugin, nv) if validate else None
            for new_state, new_value, prev_state, ai in cand:
                if gate is not None and new_state not in gate:
                    continue
                if check is not None and new_state not in check:
                    raise PluginInconsistencyError(
                        f"expansion produced non-canonical state {new_state} "
                        f"at node {ctx.index + 1}")
                if new_state in nxt:
                    if plugin.better(new_value, nxt[new_state]):
                        nxt[new_state] = new_value
                        if org is not None:
                            org[new_state] = (prev_state, ai)
                else:
                    nxt[new_state] = new_value
                    if org is not None:
                        org[new_state] = (prev_state, ai)

            table = nxt
            if retain:
                tables.append(table)
                origins.append(org)
            stats.append(NodeStats(ctx.index + 1, ctx.kind, ctx.vertex, nv,
                                   allowed_counts[nv], len(table)))
    finally:
        if pool is not None:
            pool.shutdown()

    result = DpRunResult(feasible=False, stats=stats, plugin=plugin,
                         graph=graph, npd=npd, contexts=ctxs,
                         tables=tables, origins=origins)
    best_state = None
    best_final = None
    best_value = None
    for state, value in table.items():
        if not plugin.is_valid_final(state):
            continue
        fv = plugin.final_value(state, value)
        if best_state is None or plugin.better(fv, best_final):
            best_state, best_final, best_value = state, fv, value
    if best_state is not None:
        result.feasible = True
        result.value = best_value
        result.objective = best_final
        result.final_state = best_state
    return result


def reconstruct_solution(result: DpRunResult):
    """Walk origins from the winning final state back to node 1 and hand
    the replayed chain to the plugin's certificate builder."""
    if not result.feasible:
        raise ReconstructionUnavailableError("run was infeasible")
    if result.origins is None:
        raise ReconstructionUnavailableError("tables were not retained")
    plugin = result.plugin
    chain = []
    state = result.final_state
    for i in range(len(result.contexts) - 1, -1, -1):
        ctx = result.contexts[i]
        prev_state, ai = result.origins[i][state]
        action = plugin.set_of_actions(ctx)[ai]
        chain.append((ctx, prev_state, action, state))
        state = prev_state
    chain.reverse()
    return plugin.extract_certificate(chain)
