"""Maximum average-weight simple path with length bounds L..U.

Vertices on the path are tracked like open path-cover fragments: -1 for
a one-vertex fragment, -2 once both path edges are fixed, a shared id
for the two endpoints of a longer fragment, and 0 for vertices off the
path.  Extras count selected vertices (x) and open fragments (f); a run
is accepted when exactly one fragment of admissible length survives.
Table values hold the weight sum; the final ranking divides by x as an
exact rational.
"""
from __future__ import annotations

from fractions import Fraction

from ..decomposition import INTRODUCE
from ..partition import normalize_partition
from .base import ProblemDefinition

FORGET_ACTION = ("forget",)
OFF, LONE, DONE = 0, -1, -2


class AvgPathProblem(ProblemDefinition):
    name = "avg-path"
    direction = "max"
    frozen = frozenset((OFF, LONE, DONE))

    def __init__(self, graph, L, U):
        super().__init__(graph)
        if not (1 <= L <= U <= graph.n):
            raise ValueError(f"need 1 <= L <= U <= {graph.n}, got L={L} U={U}")
        self.L = L
        self.U = U

    def enumerate_states(self, nv):
        state = [0] * nv

        def patterns(i, open_ids, used):
            if i == nv:
                yield tuple(state)
                return
            for v in (OFF, LONE, DONE):
                state[i] = v
                yield from patterns(i + 1, open_ids, used)
            for pid in sorted(open_ids):
                state[i] = pid
                yield from patterns(i + 1, open_ids - {pid}, used)
            state[i] = used + 1
            yield from patterns(i + 1, open_ids | {used + 1}, used + 1)

        for s in patterns(0, frozenset(), 0):
            ids = {v for v in s if v > 0}
            sel = sum(1 for v in s if v != OFF)
            frag_lb = len(ids) + sum(1 for v in s if v == LONE)
            if sel == 0:
                yield s + (0, 0)
                lo = 1
            else:
                lo = sel
            for x in range(max(lo, 1), self.U + 1):
                for f in range(max(frag_lb, 1), x + 1):
                    yield s + (x, f)

    def slot_domains(self, nv):
        return [(-2, nv)] * nv + [(0, self.U), (0, self.U)]

    def empty_state(self):
        return (0, 0)

    def set_of_actions(self, ctx):
        if ctx.kind != INTRODUCE:
            return [FORGET_ACTION]
        acts = [("skip",), ("new",)]
        acts += [("extend", j) for j in ctx.nbrs]
        acts += [("connect", ctx.nbrs[a], ctx.nbrs[b])
                 for a in range(len(ctx.nbrs))
                 for b in range(a + 1, len(ctx.nbrs))]
        return acts

    def expand_state(self, state, ctx, action, value):
        kind = action[0]
        if kind == "forget":
            return (state[:ctx.pos] + state[ctx.pos + 1:-2] + state[-2:],
                    value, True)
        s, x, f = state[:-2], state[-2], state[-1]
        if kind == "skip":
            return (s + (OFF, x, f), value, True)
        if x == self.U:
            return ((), 0, False)
        w = ctx.vweight
        if kind == "new":
            return (s + (LONE, x + 1, f + 1), value + w, True)
        if kind == "extend":
            j = action[1]
            sj = s[j]
            if sj in (OFF, DONE):
                return ((), 0, False)
            s2 = list(s)
            if sj > 0:
                s2[j] = DONE
                s2.append(sj)
            else:
                pid = max((v for v in s if v > 0), default=0) + 1
                s2[j] = pid
                s2.append(pid)
            return (tuple(s2) + (x + 1, f), value + w, True)
        j, k = action[1], action[2]
        sj, sk = s[j], s[k]
        if sj in (OFF, DONE) or sk in (OFF, DONE):
            return ((), 0, False)
        s2 = list(s)
        if sj == LONE and sk == LONE:
            pid = max((v for v in s if v > 0), default=0) + 1
            s2[j] = pid
            s2[k] = pid
        elif sj == LONE:
            s2[j] = sk
            s2[k] = DONE
        elif sk == LONE:
            s2[k] = sj
            s2[j] = DONE
        else:
            if sj == sk:
                return ((), 0, False)  # both ends of the same fragment
            partner = next((t for t, v in enumerate(s)
                            if v == sk and t != k), None)
            if partner is not None:
                s2[partner] = sj
            s2[j] = DONE
            s2[k] = DONE
        s2.append(DONE)
        return (tuple(s2) + (x + 1, f - 1), value + w, True)

    def normalize(self, state):
        return normalize_partition(state[:-2], self.frozen) + state[-2:]

    def is_valid_final(self, state):
        x, f = state[-2], state[-1]
        return f == 1 and self.L <= x <= self.U

    def final_value(self, state, value):
        return Fraction(value, state[-2])

    def extract_certificate(self, chain):
        vertices = []
        edges = []
        for ctx, _prev, action, _state in chain:
            if ctx.kind != INTRODUCE:
                continue
            kind = action[0]
            if kind == "skip":
                continue
            vertices.append(ctx.vertex)
            if kind == "extend":
                edges.append(self._edge(ctx, action[1]))
            elif kind == "connect":
                edges.append(self._edge(ctx, action[1]))
                edges.append(self._edge(ctx, action[2]))
        return sorted(vertices), sorted(edges)

    @staticmethod
    def _edge(ctx, j):
        u, v = ctx.order_before[j], ctx.vertex
        return (u, v) if u < v else (v, u)

    def check_certificate(self, cert):
        vertices, edges = cert
        g = self.graph
        vs = set(vertices)
        if len(vs) != len(vertices) or not vs <= set(g.vertices()):
            return False, None
        if not (self.L <= len(vs) <= self.U):
            return False, None
        if len(set(edges)) != len(edges) or len(edges) != len(vs) - 1:
            return False, None
        deg = {v: 0 for v in vs}
        for u, v in edges:
            if not g.adjacent(u, v) or u not in vs or v not in vs:
                return False, None
            deg[u] += 1
            deg[v] += 1
        if any(d > 2 for d in deg.values()):
            return False, None
        # n vertices, n-1 edges, degrees <= 2: connected iff a single path
        seen = set()
        stack = [vertices[0]]
        seen.add(vertices[0])
        adj = {v: [] for v in vs}
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        while stack:
            u = stack.pop()
            for v2 in adj[u]:
                if v2 not in seen:
                    seen.add(v2)
                    stack.append(v2)
        if seen != vs:
            return False, None
        total = sum(g.vertex_weight(v) for v in vs)
        return True, Fraction(total, len(vs))

    def certificate_lines(self, cert):
        vertices, edges = cert
        return ([f"select {v}" for v in vertices]
                + [f"edge {u} {v}" for u, v in edges])
