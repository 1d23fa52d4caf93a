"""Cartesian and lexicographic graph products with coordinate bookkeeping.

Product vertex (g, h) gets index g * n(H) + h (row-major), which is part of
the public contract so witnesses are reproducible.  The underlying Graph is
exposed directly so every solver runs on products unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, VertexSet


@dataclass(frozen=True)
class ProductGraph:
    """A product graph plus the bijection between indices and coordinate pairs."""

    graph: Graph
    kind: str                 # "cartesian" | "lexicographic"
    g_order: int
    h_order: int

    def index(self, g: int, h: int) -> int:
        if not (0 <= g < self.g_order and 0 <= h < self.h_order):
            raise ValueError(f"coordinates ({g},{h}) out of range")
        return g * self.h_order + h

    def coords(self, p: int) -> tuple[int, int]:
        if not 0 <= p < self.graph.n:
            raise ValueError(f"product index {p} out of range")
        return divmod(p, self.h_order)


def _product(G: Graph, H: Graph, kind: str) -> ProductGraph:
    if G.n == 0 or H.n == 0:
        raise ValueError("product factors must be nonempty")
    nh = H.n
    edges = []
    for g in range(G.n):
        base = g * nh
        for u, v in H.edges():
            edges.append((base + u, base + v))
    for u, v in G.edges():
        if kind == "cartesian":
            for h in range(nh):
                edges.append((u * nh + h, v * nh + h))
        else:
            for h1 in range(nh):
                for h2 in range(nh):
                    edges.append((u * nh + h1, v * nh + h2))
    labels = [f"({G.label(g)},{H.label(h)})" for g in range(G.n) for h in range(nh)]
    return ProductGraph(Graph(G.n * nh, edges, labels), kind, G.n, nh)


def cartesian_product(G: Graph, H: Graph) -> ProductGraph:
    """(g,h) ~ (g',h') iff equal in one coordinate and adjacent in the other."""
    return _product(G, H, "cartesian")


def lexicographic_product(G: Graph, H: Graph) -> ProductGraph:
    """(g,h) ~ (g',h') iff g ~ g', or g = g' and h ~ h'."""
    return _product(G, H, "lexicographic")


def project(P: ProductGraph, A: VertexSet, which: str) -> VertexSet:
    """Project a set of product vertices to the first or second factor."""
    if A.order != P.graph.n:
        raise ValueError("vertex set not bound to this product")
    if which not in ("first", "second"):
        raise ValueError("which must be 'first' or 'second'")
    out = 0
    for p in A:
        g, h = P.coords(p)
        out |= 1 << (g if which == "first" else h)
    return VertexSet(P.g_order if which == "first" else P.h_order, out)


def fiber(P: ProductGraph, which: str, index: int) -> VertexSet:
    """Vertex set of one factor copy: ``first`` gives the G-fiber at second
    coordinate ``index``, ``second`` the H-fiber at first coordinate ``index``."""
    if which == "first":
        if not 0 <= index < P.h_order:
            raise ValueError(f"fiber index {index} out of range")
        members = (g * P.h_order + index for g in range(P.g_order))
    elif which == "second":
        if not 0 <= index < P.g_order:
            raise ValueError(f"fiber index {index} out of range")
        members = (index * P.h_order + h for h in range(P.h_order))
    else:
        raise ValueError("which must be 'first' or 'second'")
    return VertexSet.of(P.graph.n, members)
