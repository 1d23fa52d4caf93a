"""Immutable graph substrate: bitmask adjacency, vertex-set algebra, families, I/O.

Vertices are dense 0-based indices.  Adjacency rows are Python ints used as
bitmasks, so membership tests and neighborhood unions are single machine-word
operations for small graphs and stay cheap for the few-hundred-vertex graphs
this package targets.  Display labels (product coordinates, Sierpinski words)
ride along as metadata and are never consulted by algorithms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the open-neighborhood bitmask of ``v``; ``closed[v]`` adds
    ``v`` itself.  Repeated edges are deduplicated silently, self-loops are
    rejected.
    """

    __slots__ = ("n", "adj", "closed", "labels", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError(f"graph order must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.closed = tuple(adj[v] | (1 << v) for v in range(n))
        if labels is not None:
            if len(labels) != n:
                raise ValueError("labels length must equal graph order")
            labels = tuple(str(x) for x in labels)
        self.labels = labels
        self._m = sum(a.bit_count() for a in adj) // 2

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(a.bit_count() for a in self.adj))

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for off in _bits(rest):
                yield (u, u + 1 + off)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.adj[v] == 0)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class VertexSet:
    """Subset of the vertices of a graph of a fixed order.

    Thin wrapper around an int bitmask; all set algebra is word-parallel.
    Operands must be bound to the same order.
    """

    __slots__ = ("order", "mask")

    def __init__(self, order: int, mask: int = 0):
        if order < 0:
            raise ValueError("order must be non-negative")
        if mask < 0 or mask >> order:
            raise ValueError(f"mask has members outside 0..{order - 1}")
        self.order = order
        self.mask = mask

    @classmethod
    def of(cls, order: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < order:
                raise ValueError(f"vertex {v} out of range for order {order}")
            mask |= 1 << v
        return cls(order, mask)

    @classmethod
    def empty(cls, order: int) -> "VertexSet":
        return cls(order, 0)

    @classmethod
    def full(cls, order: int) -> "VertexSet":
        return cls(order, (1 << order) - 1)

    def _check(self, other: "VertexSet") -> None:
        if self.order != other.order:
            raise ValueError("vertex sets bound to different graph orders")

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.order, self.mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.order, self.mask & other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.order, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.order, ~self.mask & ((1 << self.order) - 1))

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def is_empty(self) -> bool:
        return self.mask == 0

    def members(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __iter__(self):
        return _bits(self.mask)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.order and bool(self.mask >> v & 1)

    def __eq__(self, other):
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.order == other.order and self.mask == other.mask

    def __hash__(self):
        return hash((self.order, self.mask))

    def __repr__(self):
        return f"VertexSet(order={self.order}, members={self.members()})"


@dataclass(frozen=True)
class GraphFamilySpec:
    """Named standard family plus integer parameters, e.g. ``cycle`` with (5,)."""

    family: str
    params: tuple[int, ...]

    _ARITY = {
        "path": 1, "cycle": 1, "complete": 1, "complete_bipartite": 2,
        "star": 1, "subdivided_star": 1, "hypercube": 1, "empty": 1,
    }

    def __post_init__(self):
        if self.family not in self._ARITY:
            raise ValueError(f"unknown graph family {self.family!r}")
        if len(self.params) != self._ARITY[self.family]:
            raise ValueError(
                f"family {self.family!r} takes {self._ARITY[self.family]} "
                f"parameter(s), got {self.params}")

    @classmethod
    def parse(cls, text: str) -> "GraphFamilySpec":
        """Parse ``family:p1[,p2]`` notation, e.g. ``complete_bipartite:2,3``."""
        name, _, rest = text.partition(":")
        if not rest:
            raise ValueError(f"family spec {text!r} needs parameters")
        params = tuple(int(p) for p in rest.split(","))
        return cls(name.strip(), params)

    def __str__(self):
        return f"{self.family}:{','.join(str(p) for p in self.params)}"


def build_graph(order: int, edges: Iterable[tuple[int, int]],
                labels: Optional[Sequence[str]] = None) -> Graph:
    """Build a graph from an edge list, deduplicating repeats."""
    return Graph(order, edges, labels)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete bipartite graph needs m, n >= 1")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star_graph(n: int) -> Graph:
    """Star with center 0 and leaves 1..n."""
    if n < 1:
        raise ValueError("star needs n >= 1 leaves")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def subdivided_star_graph(n: int) -> Graph:
    """Star with every edge subdivided once: center 0, subdividers 1..n, leaves n+1..2n."""
    if n < 1:
        raise ValueError("subdivided star needs n >= 1 rays")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, n + i) for i in range(1, n + 1)]
    return Graph(2 * n + 1, edges)


def hypercube_graph(n: int) -> Graph:
    """n-dimensional hypercube; vertex index equals its binary word value."""
    if n < 0:
        raise ValueError("hypercube needs n >= 0")
    order = 1 << n
    edges = [(v, v ^ (1 << b)) for v in range(order) for b in range(n) if v < v ^ (1 << b)]
    labels = [format(v, f"0{n}b") if n else "0" for v in range(order)]
    return Graph(order, edges, labels)


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("empty graph needs n >= 0")
    return Graph(n, [])


_FAMILY_BUILDERS = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "complete_bipartite": complete_bipartite_graph,
    "star": star_graph,
    "subdivided_star": subdivided_star_graph,
    "hypercube": hypercube_graph,
    "empty": empty_graph,
}


def standard_family(spec: GraphFamilySpec) -> Graph:
    """Materialize a named family under its canonical vertex numbering."""
    return _FAMILY_BUILDERS[spec.family](*spec.params)


# Neighborhood and predicate operations.

def closed_neighborhood(G: Graph, A: VertexSet) -> VertexSet:
    """Union of closed neighborhoods of the members of A."""
    if A.order != G.n:
        raise ValueError("vertex set not bound to this graph")
    mask = 0
    for v in A:
        mask |= G.closed[v]
    return VertexSet(G.n, mask)


def closed_neighborhood_mask(G: Graph, mask: int) -> int:
    out = 0
    for v in _bits(mask):
        out |= G.closed[v]
    return out


def is_isolating(G: Graph, A: VertexSet) -> bool:
    """True iff the vertices outside N[A] induce no edge."""
    if A.order != G.n:
        raise ValueError("vertex set not bound to this graph")
    uncovered = G.full_mask() & ~closed_neighborhood_mask(G, A.mask)
    return all(G.adj[v] & uncovered == 0 for v in _bits(uncovered))


def is_isolating_given_dominated(G: Graph, A: VertexSet, X: VertexSet) -> bool:
    """True iff vertices outside N[A] and X induce no edge (X counts as dominated)."""
    if A.order != G.n or X.order != G.n:
        raise ValueError("vertex set not bound to this graph")
    uncovered = G.full_mask() & ~closed_neighborhood_mask(G, A.mask) & ~X.mask
    return all(G.adj[v] & uncovered == 0 for v in _bits(uncovered))


def is_dominating(G: Graph, A: VertexSet) -> bool:
    """True iff N[A] covers every vertex."""
    if A.order != G.n:
        raise ValueError("vertex set not bound to this graph")
    return closed_neighborhood_mask(G, A.mask) == G.full_mask()


def is_total_dominating(G: Graph, A: VertexSet) -> bool:
    """True iff every vertex (including members of A) has a neighbor in A."""
    if A.order != G.n:
        raise ValueError("vertex set not bound to this graph")
    covered = 0
    for v in A:
        covered |= G.adj[v]
    return covered == G.full_mask()


def is_independent(G: Graph, A: VertexSet) -> bool:
    if A.order != G.n:
        raise ValueError("vertex set not bound to this graph")
    return all(G.adj[v] & A.mask == 0 for v in A)


def induced_subgraph(G: Graph, A: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by A plus the map from new indices back to originals.

    Relative vertex order is preserved: new index i corresponds to the i-th
    smallest member of A.
    """
    if A.order != G.n:
        raise ValueError("vertex set not bound to this graph")
    originals = A.members()
    back = {v: i for i, v in enumerate(originals)}
    edges = [(back[u], back[v]) for u, v in G.edges() if u in back and v in back]
    labels = [G.label(v) for v in originals] if G.labels is not None else None
    return Graph(len(originals), edges, labels), originals


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= G.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == G.full_mask()


# Serialization: plain edge-list text, with graph6 accepted on input.

def serialize_graph(G: Graph) -> str:
    """Edge-list text: header "n m" then one "u v" line per edge."""
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def _parse_edge_list(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("malformed header: expected 'n m'")
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise ValueError(f"malformed header: {exc}") from exc
    body = tokens[2:]
    if len(body) != 2 * m:
        raise ValueError(f"edge count mismatch: header says {m}, found {len(body) // 2}")
    edges = []
    for i in range(m):
        u, v = int(body[2 * i]), int(body[2 * i + 1])
        edges.append((u, v))
    return Graph(n, edges)


def _parse_graph6(line: str) -> Graph:
    """Decode one graph in graph6 ASCII format."""
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in line.strip()]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("invalid graph6 character")
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise ValueError("graph6 orders beyond 258047 are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 length mismatch: expected {need} data bytes, got {len(body)}")
    bits = []
    for b in body:
        bits.extend((b >> (5 - k)) & 1 for k in range(6))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def encode_graph6(G: Graph) -> str:
    """Encode as graph6 (used for round-trip tests and compact corpus files)."""
    n = G.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise ValueError("graph too large for supported graph6 encoding")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if G.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = [bits[k:k + 6] for k in range(0, len(bits), 6)]
    body = "".join(chr(sum(b << (5 - i) for i, b in enumerate(ch)) + 63) for ch in chunks)
    return head + body


def parse_graph(text: str) -> Graph:
    """Parse edge-list text, or graph6 when the first line does not start with a digit."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty graph input")
    first = stripped.splitlines()[0].strip()
    if first and (first[0].isdigit() or first[0] == "-"):
        return _parse_edge_list(stripped)
    return _parse_graph6(first)
