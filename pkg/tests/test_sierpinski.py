import random

import pytest

from isolation_lab import (
    GraphFamilySpec,
    VertexCapExceeded,
    build_graph,
    direct_isolation_number,
    extreme_isolation_number,
    is_isolating,
    isolation_number,
    isolation_number_given_dominated,
    recursive_isolating_set,
    sierpinski_bounds,
    sierpinski_graph,
    standard_family,
)
from isolation_lab.sierpinski import sierpinski_rule_edges


def fam(text):
    return standard_family(GraphFamilySpec.parse(text))


def random_graph(rng, n, p=0.5):
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                           if rng.random() < p])


def test_dimension_one_is_base():
    G = fam("cycle:5")
    S = sierpinski_graph(G, 1)
    assert S.graph.adj == G.adj


def test_edge_recurrence():
    rng = random.Random(21)
    for _ in range(8):
        G = random_graph(rng, rng.randint(2, 4))
        expected = G.m
        for t in range(2, 4):
            expected = G.n * expected + G.m
            assert sierpinski_graph(G, t).graph.m == expected
    assert sierpinski_graph(fam("complete:3"), 2).graph.m == 12


def test_rule_and_recursive_constructions_agree():
    rng = random.Random(22)
    cases = [(fam("complete:3"), 2), (fam("complete:3"), 3),
             (fam("cycle:4"), 2), (fam("cycle:4"), 3),
             (fam("path:4"), 2), (fam("star:3"), 2)]
    for _ in range(5):
        cases.append((random_graph(rng, rng.randint(2, 5)), 2))
    for G, t in cases:
        S = sierpinski_graph(G, t)
        assert set(S.graph.edges()) == sierpinski_rule_edges(G, t)


def test_extreme_vertices():
    S = sierpinski_graph(fam("complete:3"), 2)
    assert S.extreme_vertices().members() == (0, 4, 8)
    S1 = sierpinski_graph(fam("complete:3"), 1)
    assert S1.extreme_vertices() .members() == (0, 1, 2)
    rng = random.Random(23)
    for _ in range(5):
        G = random_graph(rng, rng.randint(2, 4))
        for t in (1, 2, 3):
            assert len(sierpinski_graph(G, t).extreme_vertices()) == G.n


def test_extreme_vertex_degrees():
    G = fam("cycle:4")
    S = sierpinski_graph(G, 2)
    assert S.graph.n == 16
    ex = S.extreme_vertices().members()
    assert [S.graph.degree(v) for v in ex] == [2, 2, 2, 2]
    # vertex y x...x has degree d(x) + 1 when xy is a base edge
    rng = random.Random(24)
    for _ in range(5):
        B = random_graph(rng, rng.randint(2, 4))
        for t in (2, 3):
            St = sierpinski_graph(B, t)
            rep = (B.n ** (t - 1) - 1) // (B.n - 1) if B.n > 1 else t - 1
            for x, y in B.edges():
                assert St.graph.degree(y * B.n ** (t - 1) + x * rep) == B.degree(x) + 1
                assert St.graph.degree(x * B.n ** (t - 1) + y * rep) == B.degree(y) + 1


def test_only_extremes_cross_copies():
    rng = random.Random(25)
    for _ in range(6):
        G = random_graph(rng, rng.randint(2, 4))
        t = rng.choice((2, 3))
        S = sierpinski_graph(G, t)
        size = G.n ** (t - 1)
        rep = (size - 1) // (G.n - 1) if G.n > 1 else t - 1
        cross = [(u, v) for u, v in S.graph.edges() if u // size != v // size]
        assert len(cross) == G.m
        expected = {tuple(sorted((x * size + y * rep, y * size + x * rep)))
                    for x, y in G.edges()}
        assert set(cross) == expected
        # cross endpoints are extreme within their copy
        locals_extreme = {y * rep for y in range(G.n)}
        for u, v in cross:
            assert u % size in locals_extreme and v % size in locals_extreme


def test_word_encoding_round_trip():
    S = sierpinski_graph(fam("cycle:4"), 3)
    for v in (0, 5, 21, 63):
        assert S.index_of_word(S.word(v)) == v
    assert S.word_label(S.index_of_word((1, 0, 2))) == "102"


def test_extreme_isolation_complete_bases():
    for n in (3, 4, 5):
        res = extreme_isolation_number(fam(f"complete:{n}"))
        assert res.value == n - 1
        assert res.gamma_cap is not None and res.value <= res.gamma_cap


def test_extreme_isolation_c4():
    res = extreme_isolation_number(fam("cycle:4"))
    assert res.value == 3


def test_extreme_isolation_at_least_isolation():
    rng = random.Random(26)
    for _ in range(8):
        G = random_graph(rng, rng.randint(2, 4))
        S2 = sierpinski_graph(G, 2)
        xi = extreme_isolation_number(G).value
        iota2 = isolation_number(S2.graph).value
        gamma_like = extreme_isolation_number(G).gamma_cap
        assert iota2 <= xi
        assert gamma_like is None or xi <= gamma_like


def test_pre_dominated_extremes_values():
    for n, expect in ((3, 2), (4, 3), (5, 4)):
        S2 = sierpinski_graph(fam(f"complete:{n}"), 2)
        res = isolation_number_given_dominated(S2.graph, S2.extreme_vertices())
        assert res.value == expect
    S2 = sierpinski_graph(fam("cycle:4"), 2)
    assert isolation_number_given_dominated(S2.graph, S2.extreme_vertices()).value == 3


def test_recursive_isolating_set_sizes():
    D = recursive_isolating_set(fam("complete:3"), 3)
    assert len(D) == 6
    D = recursive_isolating_set(fam("cycle:4"), 3)
    assert len(D) == 12
    base = extreme_isolation_number(fam("cycle:4")).witness
    assert recursive_isolating_set(fam("cycle:4"), 2) == base


def test_recursive_isolating_set_is_isolating_random():
    rng = random.Random(27)
    for _ in range(5):
        G = random_graph(rng, rng.randint(2, 4))
        t = rng.choice((2, 3))
        D = recursive_isolating_set(G, t)
        S = sierpinski_graph(G, t)
        assert is_isolating(S.graph, D)


def test_bounds_examples():
    b = sierpinski_bounds(fam("complete:4"), 3)
    assert (b.lower, b.upper, b.exact) == (12, 12, 12)
    b = sierpinski_bounds(fam("cycle:4"), 2)
    assert (b.lower, b.upper, b.exact) == (3, 3, 3)
    rng = random.Random(28)
    for _ in range(6):
        G = random_graph(rng, rng.randint(2, 5))
        for t in (2, 3):
            b = sierpinski_bounds(G, t)
            assert b.lower <= b.upper
            if b.exact is not None:
                assert b.exact == b.lower == b.upper


def test_bounds_match_direct_solves_when_small():
    for text in ("complete:3", "cycle:4"):
        G = fam(text)
        b = sierpinski_bounds(G, 2)
        direct = direct_isolation_number(sierpinski_graph(G, 2)).value
        assert b.lower <= direct <= b.upper
        if b.exact is not None:
            assert direct == b.exact


def test_resource_guards():
    with pytest.raises(ValueError, match="dimension"):
        sierpinski_graph(fam("complete:3"), 0)
    with pytest.raises(VertexCapExceeded):
        sierpinski_graph(fam("complete:10"), 5)
    with pytest.raises(VertexCapExceeded):
        direct_isolation_number(sierpinski_graph(fam("complete:3"), 4))
