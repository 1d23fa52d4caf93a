"""Generalized Sierpinski graphs and their isolation bounds.

A dimension-t Sierpinski graph over a base graph G has the length-t words
over V(G) as vertices; its index encoding is the base-n value of the word, so
copy membership is a division and prefixing is a multiply-add.  Two
constructions are provided: the recursive one (n scaled copies of the
dimension t-1 graph plus one linking edge per base edge) used everywhere, and
a literal pairwise check of the word adjacency rules kept as a cross-check
for small instances.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .core import Graph, VertexSet, _bits, is_isolating
from .solvers import (
    DEFAULT_NODE_BUDGET,
    InvariantResult,
    _min_cover_solve,
    _isolation_demands,
    domination_number,
    isolation_number_given_dominated,
)

GENERATION_VERTEX_CAP = 20_000
DIRECT_SOLVE_VERTEX_CAP = 40


class VertexCapExceeded(RuntimeError):
    """A requested Sierpinski graph or solve is beyond the configured cap."""


@dataclass(frozen=True)
class SierpinskiGraph:
    """Sierpinski graph with its base, dimension and word encoding."""

    graph: Graph
    base: Graph
    dim: int

    def word(self, v: int) -> tuple[int, ...]:
        """Length-dim word of vertex v, most significant letter first."""
        n = self.base.n
        out = []
        for _ in range(self.dim):
            v, r = divmod(v, n)
            out.append(r)
        return tuple(reversed(out))

    def index_of_word(self, word) -> int:
        v = 0
        for c in word:
            if not 0 <= c < self.base.n:
                raise ValueError(f"letter {c} outside base vertex range")
            v = v * self.base.n + c
        return v

    def word_label(self, v: int) -> str:
        return "".join(str(c) for c in self.word(v))

    def extreme_vertices(self) -> VertexSet:
        """The constant words xx...x, one per base vertex."""
        rep = (self.base.n ** self.dim - 1) // (self.base.n - 1) if self.base.n > 1 else self.dim
        if self.base.n == 1:
            return VertexSet.of(1, [0])
        return VertexSet.of(self.graph.n, (x * rep for x in range(self.base.n)))


def sierpinski_graph(G: Graph, t: int, *,
                     vertex_cap: int = GENERATION_VERTEX_CAP) -> SierpinskiGraph:
    """Build the dimension-t Sierpinski graph over base G (recursive construction)."""
    if t < 1:
        raise ValueError("dimension must be >= 1")
    if G.n == 0:
        raise ValueError("base graph must be nonempty")
    order = G.n ** t
    if order > vertex_cap:
        raise VertexCapExceeded(
            f"Sierpinski graph on {order} vertices exceeds cap {vertex_cap}")
    n = G.n
    edges = list(G.edges())
    size = n
    for level in range(2, t + 1):
        rep = (n ** (level - 1) - 1) // (n - 1) if n > 1 else level - 1
        new_edges = []
        for i in range(n):
            off = i * size
            new_edges.extend((off + u, off + v) for u, v in edges)
        # linking edges x y^(level-1) ~ y x^(level-1), one per base edge
        for x, y in G.edges():
            new_edges.append((x * size + y * rep, y * size + x * rep))
        edges = new_edges
        size *= n
    graph = Graph(order, edges)
    S = SierpinskiGraph(graph, G, t)
    labels = [S.word_label(v) for v in range(order)]
    return SierpinskiGraph(Graph(order, edges, labels), G, t)


def sierpinski_rule_edges(G: Graph, t: int) -> set[tuple[int, int]]:
    """Edge set from the literal word adjacency rules (small-instance cross-check).

    Words u, v are adjacent iff for some position i they agree before i,
    differ at i along a base edge, and after i each constantly repeats the
    other's letter at i.
    """
    if t < 1:
        raise ValueError("dimension must be >= 1")
    n = G.n
    order = n ** t
    if order > 4096:
        raise VertexCapExceeded("rule-based construction is for small instances only")

    def word(v):
        out = []
        for _ in range(t):
            v, r = divmod(v, n)
            out.append(r)
        return tuple(reversed(out))

    words = [word(v) for v in range(order)]
    edges = set()
    for a in range(order):
        for b in range(a + 1, order):
            u, v = words[a], words[b]
            for i in range(t):
                if u[:i] != v[:i]:
                    break
                if u[i] == v[i]:
                    continue
                if not G.has_edge(u[i], v[i]):
                    continue
                if all(u[j] == v[i] and v[j] == u[i] for j in range(i + 1, t)):
                    edges.add((a, b))
                break
    return edges


@dataclass(frozen=True)
class ExtremeIsolationResult:
    """Minimum isolating set of the dimension-2 graph that also leaves no
    base-adjacent pair of extreme vertices undominated.

    Any minimum dominating set satisfies both conditions, so the optimum never
    exceeds the domination number of the dimension-2 graph; ``gamma_cap``
    carries that number when it was computed for verification.
    """

    value: int
    witness: VertexSet
    elapsed: float
    nodes: int
    gamma_cap: Optional[int] = None


def _extreme_pair_demands(S: SierpinskiGraph):
    G2 = S.graph
    ex = S.extreme_vertices().members()
    demands = []
    for x, y in S.base.edges():
        a, b = ex[x], ex[y]
        demands.append(((1 << a) | (1 << b), G2.closed[a] | G2.closed[b]))
    return demands


def _extreme_condition_holds(S: SierpinskiGraph, A: VertexSet) -> bool:
    covered = 0
    for v in A:
        covered |= S.graph.closed[v]
    ex = S.extreme_vertices().members()
    return all(covered & (1 << ex[x]) or covered & (1 << ex[y])
               for x, y in S.base.edges())


def extreme_isolation_number(G: Graph, *,
                             node_budget: int = DEFAULT_NODE_BUDGET,
                             verify_gamma_cap: Optional[bool] = None) -> ExtremeIsolationResult:
    """Solve the extreme-aware isolation problem on the dimension-2 graph over G.

    ``verify_gamma_cap`` additionally computes the domination number of the
    dimension-2 graph and checks the witness against it; defaults to on for
    graphs small enough to afford the extra solve.
    """
    if G.n == 0:
        raise ValueError("base graph must be nonempty")
    t0 = time.perf_counter()
    S = sierpinski_graph(G, 2)
    G2 = S.graph
    demands = _isolation_demands(G2) + _extreme_pair_demands(S)
    value, witness, nodes = _min_cover_solve(
        G2.closed, demands, 0, node_budget, "xi")
    wset = VertexSet.of(G2.n, witness)
    assert is_isolating(G2, wset)
    assert _extreme_condition_holds(S, wset)
    gamma_cap = None
    if verify_gamma_cap is None:
        verify_gamma_cap = G2.n <= DIRECT_SOLVE_VERTEX_CAP
    if verify_gamma_cap:
        gamma_cap = domination_number(G2, node_budget=node_budget).value
        assert value <= gamma_cap
    return ExtremeIsolationResult(value, wset, time.perf_counter() - t0,
                                  nodes, gamma_cap)


def recursive_isolating_set(G: Graph, t: int, *,
                            node_budget: int = DEFAULT_NODE_BUDGET,
                            vertex_cap: int = GENERATION_VERTEX_CAP) -> VertexSet:
    """Prefix-replicate an optimal dimension-2 witness into every copy, one
    dimension at a time, yielding an isolating set of the dimension-t graph.

    The result has exactly (dimension-2 optimum) * n^(t-2) members and also
    leaves no base-adjacent extreme pair undominated.
    """
    if t < 2:
        raise ValueError("dimension must be >= 2")
    n = G.n
    if n ** t > vertex_cap:
        raise VertexCapExceeded(
            f"Sierpinski graph on {n ** t} vertices exceeds cap {vertex_cap}")
    base_result = extreme_isolation_number(G, node_budget=node_budget)
    members = list(base_result.witness)
    size = n * n
    for _ in range(3, t + 1):
        members = [i * size + w for i in range(n) for w in members]
        size *= n
    S = sierpinski_graph(G, t, vertex_cap=vertex_cap)
    out = VertexSet.of(S.graph.n, members)
    assert len(out) == base_result.value * n ** (t - 2)
    assert is_isolating(S.graph, out)
    assert _extreme_condition_holds(S, out)
    return out


@dataclass(frozen=True)
class SierpinskiBounds:
    """Sandwich for the isolation number of the dimension-t graph."""

    lower: int
    upper: int
    exact: Optional[int]
    base_order: int
    dim: int
    lower_per_copy: int      # isolation number of dim-2 graph with extremes pre-dominated
    upper_per_copy: int      # extreme-aware isolation optimum of the dim-2 graph


def sierpinski_bounds(G: Graph, t: int, *,
                      node_budget: int = DEFAULT_NODE_BUDGET) -> SierpinskiBounds:
    """Lower/upper bounds on the isolation number of the dimension-t graph,
    both driven by dimension-2 solves; ``exact`` is set when they agree."""
    if t < 2:
        raise ValueError("dimension must be >= 2")
    if G.n == 0:
        raise ValueError("base graph must be nonempty")
    S2 = sierpinski_graph(G, 2)
    low_res = isolation_number_given_dominated(
        S2.graph, S2.extreme_vertices(), node_budget=node_budget)
    up_res = extreme_isolation_number(G, node_budget=node_budget)
    scale = G.n ** (t - 2)
    lower = low_res.value * scale
    upper = up_res.value * scale
    return SierpinskiBounds(lower, upper, lower if lower == upper else None,
                            G.n, t, low_res.value, up_res.value)


def direct_isolation_number(S: SierpinskiGraph, *,
                            node_budget: int = DEFAULT_NODE_BUDGET,
                            vertex_cap: int = DIRECT_SOLVE_VERTEX_CAP) -> InvariantResult:
    """Exact isolation solve on a Sierpinski graph, guarded by the solve cap."""
    if S.graph.n > vertex_cap:
        raise VertexCapExceeded(
            f"direct solve on {S.graph.n} vertices exceeds cap {vertex_cap}; "
            f"use sierpinski_bounds instead")
    from .solvers import isolation_number
    return isolation_number(S.graph, node_budget=node_budget)
