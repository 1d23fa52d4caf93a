"""Exact invariant solvers with witnesses and proved optimality.

Minimization invariants (isolation, domination, total domination, set
domination, saturation) run a cardinality-iterated branch and bound: target
size s = 0, 1, 2, ... and at each s a depth-first search that always branches
on an unresolved demand (an undominated vertex or an edge both of whose ends
are undominated), trying each vertex able to resolve it and excluding
already-tried alternatives from deeper levels.  A greedy packing of demands
with pairwise-disjoint resolver sets gives an admissible lower bound for
pruning.  The first target size that admits a feasible set is therefore the
exact optimum, with every smaller size exhausted.

Maximization invariants (independence, clique, matching, 2-packing) are
hereditary, so feasibility of size s is monotone in s: the engine searches
sizes upward in lexicographic subset order and stops at the first infeasible
size, returning the lexicographically least witness of the optimal size.

Every solver re-validates its witness against the defining predicate before
returning and accepts a node budget; exceeding it raises instead of ever
returning an unproved value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .core import (
    Graph,
    VertexSet,
    _bits,
    is_dominating,
    is_independent,
    is_isolating,
    is_isolating_given_dominated,
    is_total_dominating,
)

DEFAULT_NODE_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """Search node budget ran out before optimality was proved."""

    def __init__(self, invariant: str, cardinality: int, nodes: int):
        super().__init__(
            f"{invariant}: budget exhausted at cardinality {cardinality} "
            f"after {nodes} nodes")
        self.invariant = invariant
        self.cardinality = cardinality
        self.nodes = nodes


@dataclass(frozen=True)
class InvariantResult:
    """One computed invariant: exact value, certifying witness, search stats."""

    invariant: str
    value: int
    witness: tuple
    elapsed: float
    nodes: int
    aux: Optional[dict] = field(default=None, compare=False)

    def witness_set(self, order: int) -> VertexSet:
        return VertexSet.of(order, self.witness)


# Minimum-cover engine.
#
# A problem instance is (cover, demands, covered0): choosing vertex v adds
# cover[v] to the covered mask; demand (watch, fixers) is active while no
# watched vertex is covered and can only be resolved by choosing a vertex in
# fixers.  This expresses domination (watch one vertex, fixers = N[v]),
# isolation (watch an edge, fixers = N[u] | N[v]), and their variants.

def _greedy_cover(cover, demands, covered0):
    covered = covered0
    chosen = []
    active = [d for d in demands if not d[0] & covered]
    while active:
        cand = 0
        for _, f in active:
            cand |= f
        best_v, best_cnt = -1, -1
        for v in _bits(cand):
            cnt = 0
            cv = cover[v]
            for w, _ in active:
                if cv & w:
                    cnt += 1
            if cnt > best_cnt:
                best_v, best_cnt = v, cnt
        if best_cnt <= 0:
            raise ValueError("infeasible cover problem: unresolvable demand")
        chosen.append(best_v)
        covered |= cover[best_v]
        active = [d for d in active if not d[0] & covered]
    return chosen


def _min_cover_solve(cover, demands, covered0, node_budget, invariant, limit=None):
    """Exact minimum cover; returns (value, witness, nodes) or (None, None, nodes)
    when all cardinalities below ``limit`` were exhausted without success."""
    for watch, fix in demands:
        if fix == 0 and not watch & covered0:
            raise ValueError(f"{invariant}: demand with no possible resolver")
    nodes = 0

    def dfs(chosen, covered, excluded, active, s):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError(invariant, s, nodes)
        live = [d for d in active if not d[0] & covered]
        if not live:
            return chosen
        if len(chosen) >= s:
            return None
        used = 0
        lb = 0
        best_f = 0
        best_pc = 1 << 30
        for _, f in live:
            usable = f & ~excluded
            if usable == 0:
                return None
            pc = usable.bit_count()
            if pc < best_pc:
                best_pc, best_f = pc, usable
            if not usable & used:
                lb += 1
                used |= usable
        if len(chosen) + lb > s:
            return None
        tried = 0
        for v in _bits(best_f):
            got = dfs(chosen + [v], covered | cover[v], excluded | tried, live, s)
            if got is not None:
                return got
            tried |= 1 << v
        return None

    ub = len(_greedy_cover(cover, demands, covered0))
    top = ub if limit is None else min(ub, limit - 1)
    for s in range(top + 1):
        got = dfs([], covered0, 0, demands, s)
        if got is not None:
            return s, tuple(sorted(got)), nodes
    if limit is not None and limit - 1 < ub:
        return None, None, nodes
    raise AssertionError(f"{invariant}: greedy bound {ub} not reached by search")


# Maximum-compatible-set engine for hereditary properties.

def _max_compat_solve(n, compat, node_budget, invariant):
    """Largest set that is pairwise compatible; lexicographically least witness."""
    nodes = 0
    full = (1 << n) - 1

    def exists(s):
        nonlocal nodes
        found = None

        def dfs(chosen, cand):
            nonlocal nodes, found
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(invariant, s, nodes)
            if len(chosen) == s:
                found = tuple(chosen)
                return
            if len(chosen) + cand.bit_count() < s:
                return
            for v in _bits(cand):
                dfs(chosen + [v], cand & compat[v] & -(2 << v))
                if found is not None:
                    return

        dfs([], full)
        return found

    value, witness = 0, ()
    for s in range(1, n + 1):
        got = exists(s)
        if got is None:
            break
        value, witness = s, got
    return value, witness, nodes


def _timed(invariant, value, witness, nodes, t0, aux=None):
    return InvariantResult(invariant, value, witness, time.perf_counter() - t0,
                           nodes, aux)


# Isolation-type solvers.

def _isolation_demands(G: Graph, blocked_mask: int = 0):
    demands = []
    for u, v in G.edges():
        watch = (1 << u) | (1 << v)
        if watch & blocked_mask:
            continue
        demands.append((watch, G.closed[u] | G.closed[v]))
    return demands


def isolation_number(G: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    """Minimum set whose removal of its closed neighborhood leaves no edge."""
    t0 = time.perf_counter()
    value, witness, nodes = _min_cover_solve(
        G.closed, _isolation_demands(G), 0, node_budget, "iota")
    assert is_isolating(G, VertexSet.of(G.n, witness))
    return _timed("iota", value, witness, nodes, t0)


def minimum_isolating_set_below(G: Graph, cap: int, *,
                                node_budget: int = DEFAULT_NODE_BUDGET
                                ) -> Optional[InvariantResult]:
    """Search isolating sets of size < cap; ``None`` certifies the value is >= cap."""
    t0 = time.perf_counter()
    value, witness, nodes = _min_cover_solve(
        G.closed, _isolation_demands(G), 0, node_budget, "iota", limit=cap)
    if value is None:
        return None
    assert is_isolating(G, VertexSet.of(G.n, witness))
    return _timed("iota", value, witness, nodes, t0)


def isolation_number_given_dominated(G: Graph, X: VertexSet, *,
                                     node_budget: int = DEFAULT_NODE_BUDGET
                                     ) -> InvariantResult:
    """Minimum isolating set when the vertices of X already count as dominated."""
    if X.order != G.n:
        raise ValueError("vertex set not bound to this graph")
    t0 = time.perf_counter()
    value, witness, nodes = _min_cover_solve(
        G.closed, _isolation_demands(G), X.mask, node_budget, "iota|X")
    assert is_isolating_given_dominated(G, VertexSet.of(G.n, witness), X)
    return _timed("iota|X", value, witness, nodes, t0, aux={"given": X.members()})


def domination_number(G: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    t0 = time.perf_counter()
    demands = [(1 << v, G.closed[v]) for v in range(G.n)]
    value, witness, nodes = _min_cover_solve(
        G.closed, demands, 0, node_budget, "gamma")
    assert is_dominating(G, VertexSet.of(G.n, witness))
    return _timed("gamma", value, witness, nodes, t0)


def total_domination_number(G: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    if G.isolated_vertices():
        raise ValueError(
            f"total domination number undefined: isolated vertex "
            f"{G.isolated_vertices()[0]}")
    t0 = time.perf_counter()
    demands = [(1 << v, G.adj[v]) for v in range(G.n)]
    value, witness, nodes = _min_cover_solve(
        G.adj, demands, 0, node_budget, "gamma_t")
    assert is_total_dominating(G, VertexSet.of(G.n, witness))
    return _timed("gamma_t", value, witness, nodes, t0)


def set_domination_number(G: Graph, S: VertexSet, *,
                          node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    """Minimum D (over all vertices) with S inside N[D]."""
    if S.order != G.n:
        raise ValueError("vertex set not bound to this graph")
    t0 = time.perf_counter()
    demands = [(1 << v, G.closed[v]) for v in S]
    value, witness, nodes = _min_cover_solve(
        G.closed, demands, 0, node_budget, "gamma_S")
    got = 0
    for v in witness:
        got |= G.closed[v]
    assert S.mask & ~got == 0
    return _timed("gamma_S", value, witness, nodes, t0, aux={"targets": S.members()})


def maximal_independent_sets(G: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal independent sets, sorted."""
    n = G.n
    if n == 0:
        return [()]
    full = (1 << n) - 1
    comp = [full & ~G.closed[v] for v in range(n)]
    out = []

    def bk(r, p, x):
        if p == 0 and x == 0:
            out.append(tuple(_bits(r)))
            return
        piv = max(_bits(p | x), key=lambda u: (comp[u] & p).bit_count())
        for v in _bits(p & ~comp[piv]):
            bit = 1 << v
            bk(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit

    bk(0, full, 0)
    return sorted(out)


def independence_domination_number(G: Graph, *,
                                   node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    """Max over independent sets S of the least size of a set dominating S.

    Monotone in S, so only inclusion-maximal independent sets are scanned.
    """
    t0 = time.perf_counter()
    if G.n == 0:
        return _timed("gamma_i", 0, (), 0, t0, aux={"dominating_set": ()})
    best_value = -1
    best_s: tuple[int, ...] = ()
    best_d: tuple[int, ...] = ()
    nodes = 0
    for S in maximal_independent_sets(G):
        res = set_domination_number(G, VertexSet.of(G.n, S), node_budget=node_budget)
        nodes += res.nodes
        if res.value > best_value:
            best_value, best_s, best_d = res.value, S, res.witness
    return _timed("gamma_i", best_value, best_s, nodes, t0,
                  aux={"dominating_set": best_d})


def two_packing_number(G: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    """Largest set of vertices with pairwise disjoint closed neighborhoods."""
    t0 = time.perf_counter()
    full = G.full_mask()
    compat = [full & ~(1 << v) if G.n else 0 for v in range(G.n)]
    for v in range(G.n):
        for u in range(v + 1, G.n):
            if G.closed[u] & G.closed[v]:
                compat[v] &= ~(1 << u)
                compat[u] &= ~(1 << v)
    value, witness, nodes = _max_compat_solve(G.n, compat, node_budget, "rho2")
    for i, u in enumerate(witness):
        for v in witness[i + 1:]:
            assert G.closed[u] & G.closed[v] == 0
    return _timed("rho2", value, witness, nodes, t0)


def independence_number(G: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    t0 = time.perf_counter()
    full = G.full_mask()
    compat = [full & ~G.closed[v] for v in range(G.n)]
    value, witness, nodes = _max_compat_solve(G.n, compat, node_budget, "alpha")
    assert is_independent(G, VertexSet.of(G.n, witness))
    return _timed("alpha", value, witness, nodes, t0)


def vertex_cover_number(G: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    """Via the complement of a maximum independent set (Gallai)."""
    t0 = time.perf_counter()
    alpha = independence_number(G, node_budget=node_budget)
    witness = VertexSet.of(G.n, alpha.witness).complement().members()
    assert all((1 << u) & VertexSet.of(G.n, witness).mask
               or (1 << v) & VertexSet.of(G.n, witness).mask for u, v in G.edges())
    return _timed("beta", G.n - alpha.value, witness, alpha.nodes, t0)


def clique_number(G: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    t0 = time.perf_counter()
    value, witness, nodes = _max_compat_solve(G.n, list(G.adj), node_budget, "omega")
    for i, u in enumerate(witness):
        for v in witness[i + 1:]:
            assert G.has_edge(u, v)
    return _timed("omega", value, witness, nodes, t0)


def matching_number(G: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    """Maximum matching; witness is a tuple of edges."""
    t0 = time.perf_counter()
    edges = list(G.edges())
    endm = [(1 << u) | (1 << v) for u, v in edges]
    compat = [0] * len(edges)
    for i in range(len(edges)):
        for j in range(len(edges)):
            if i != j and not endm[i] & endm[j]:
                compat[i] |= 1 << j
    value, idxs, nodes = _max_compat_solve(len(edges), compat, node_budget, "alpha'")
    witness = tuple(edges[i] for i in idxs)
    used = 0
    for u, v in witness:
        assert not used & ((1 << u) | (1 << v))
        used |= (1 << u) | (1 << v)
    return _timed("alpha'", value, witness, nodes, t0)


def classic_invariants(G: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> dict[str, InvariantResult]:
    """Independence, vertex cover, matching and clique numbers with witnesses."""
    alpha = independence_number(G, node_budget=node_budget)
    beta_witness = VertexSet.of(G.n, alpha.witness).complement().members()
    beta = InvariantResult("beta", G.n - alpha.value, beta_witness,
                           alpha.elapsed, alpha.nodes)
    return {
        "alpha": alpha,
        "beta": beta,
        "alpha_prime": matching_number(G, node_budget=node_budget),
        "omega": clique_number(G, node_budget=node_budget),
    }


def is_maximal_matching(G: Graph, matching: Sequence[tuple[int, int]]) -> bool:
    used = 0
    for u, v in matching:
        e = (1 << u) | (1 << v)
        if used & e or not G.has_edge(u, v):
            return False
        used |= e
    return all(used & ((1 << u) | (1 << v)) for u, v in G.edges())


def saturation_number(G: Graph, *, node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    """Minimum size of a maximal matching; witness is a tuple of edges."""
    t0 = time.perf_counter()
    edges = list(G.edges())
    E = len(edges)
    if E == 0:
        return _timed("s", 0, (), 0, t0)
    endm = [(1 << u) | (1 << v) for u, v in edges]
    conflict = [0] * E
    for i in range(E):
        for j in range(E):
            if endm[i] & endm[j]:
                conflict[i] |= 1 << j
    nodes = 0

    def dfs(chosen, matched, avail, excluded, active, s):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError("s", s, nodes)
        live = [j for j in active if not endm[j] & matched]
        if not live:
            return chosen
        if len(chosen) >= s:
            return None
        used = 0
        lb = 0
        best_f = 0
        best_pc = 1 << 30
        for j in live:
            usable = conflict[j] & avail & ~excluded
            if usable == 0:
                return None
            pc = usable.bit_count()
            if pc < best_pc:
                best_pc, best_f = pc, usable
            if not usable & used:
                lb += 1
                used |= usable
        if len(chosen) + lb > s:
            return None
        tried = 0
        for i in _bits(best_f):
            got = dfs(chosen + [i], matched | endm[i], avail & ~conflict[i],
                      excluded | tried, live, s)
            if got is not None:
                return got
            tried |= 1 << i
        return None

    greedy = []
    matched = 0
    for i in range(E):
        if not endm[i] & matched:
            greedy.append(i)
            matched |= endm[i]
    full = (1 << E) - 1
    for s in range(len(greedy) + 1):
        got = dfs([], 0, full, 0, list(range(E)), s)
        if got is not None:
            witness = tuple(sorted(edges[i] for i in got))
            assert is_maximal_matching(G, witness)
            return _timed("s", s, witness, nodes, t0)
    raise AssertionError("saturation search failed below greedy bound")


# Induced k-colorable subgraphs.

def _k_coloring(G: Graph, members: Sequence[int], k: int) -> Optional[dict[int, int]]:
    """Proper k-coloring of the induced subgraph, or None.

    Vertices are colored in order of decreasing induced degree (ties by
    index); colors are tried in index order.
    """
    members = tuple(members)
    if not members:
        return {}
    wmask = 0
    for v in members:
        wmask |= 1 << v
    order = sorted(members, key=lambda v: (-(G.adj[v] & wmask).bit_count(), v))
    colors: dict[int, int] = {}

    def bt(i):
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[u] for u in _bits(G.adj[v] & wmask) if u in colors}
        for c in range(1, k + 1):
            if c not in taken:
                colors[v] = c
                if bt(i + 1):
                    return True
                del colors[v]
        return False

    return dict(colors) if bt(0) else None


def is_k_colorable(G: Graph, k: int) -> tuple[bool, Optional[dict[int, int]]]:
    if k < 1:
        raise ValueError("k must be >= 1")
    col = _k_coloring(G, range(G.n), k)
    return (col is not None), col


def max_k_colorable_subgraph(G: Graph, k: int, *,
                             node_budget: int = DEFAULT_NODE_BUDGET) -> InvariantResult:
    """Largest vertex set inducing a k-colorable subgraph.

    Scans subset sizes downward, subsets of each size in lexicographic order,
    so the witness is the lexicographically least optimal set.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    t0 = time.perf_counter()
    nodes = 0
    for size in range(G.n, -1, -1):
        for W in combinations(range(G.n), size):
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError("alpha_k", size, nodes)
            col = _k_coloring(G, W, k)
            if col is not None:
                return _timed(f"alpha_k:{k}", size, W, nodes, t0,
                              aux={"coloring": col})
    raise AssertionError("empty set is always k-colorable")
