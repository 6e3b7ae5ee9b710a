"""Graph type, family constructors, set operations, and text formats."""

import random

import pytest

from specmatch import (
    CapacityError,
    FamilySpec,
    Graph,
    Graph6Error,
    ParameterError,
    barrier_family,
    complete_graph,
    components,
    disjoint_union,
    empty_graph,
    extremal_family,
    extremal_partition,
    family_partition,
    is_connected,
    is_isomorphic,
    is_k_connected,
    isolated_count,
    join,
    mask_from_vertices,
    matches_clique_join,
    odd_components,
    parse_edge_list,
    parse_graph6,
    universal_mask,
    vertices_from_mask,
    write_edge_list,
    write_graph6,
)


def _random_graph(rng, n, p):
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def _components_oracle(g, removed=()):
    # set-based flood fill, independent of the bit-row machinery
    remaining = set(range(g.n)) - set(removed)
    comps = []
    while remaining:
        start = remaining.pop()
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in list(remaining):
                if g.has_edge(u, w):
                    remaining.remove(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def test_basic_construction():
    g = Graph(4, [(0, 1), (1, 2)])
    assert g.n == 4
    assert g.edge_count() == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert sorted(g.edges()) == [(0, 1), (1, 2)]


def test_construction_validation():
    with pytest.raises(ParameterError):
        Graph(3, [(0, 0)])
    with pytest.raises(ParameterError):
        Graph(3, [(0, 3)])
    with pytest.raises(CapacityError):
        Graph(65)
    with pytest.raises(CapacityError):
        complete_graph(65)
    with pytest.raises(ParameterError):
        Graph.from_rows([0b010, 0b000, 0b000])  # asymmetric


def test_add_edge_returns_new_graph():
    g = Graph(3, [(0, 1)])
    h = g.add_edge(1, 2)
    assert h.edge_count() == 2
    assert g.edge_count() == 1
    assert g != h
    assert hash(g.add_edge(1, 2)) == hash(h)


def test_complete_and_empty():
    assert complete_graph(1).edge_count() == 0
    assert complete_graph(3).edge_count() == 3
    assert complete_graph(9).edge_count() == 36
    assert empty_graph(5).edge_count() == 0
    assert all(complete_graph(6).degree(v) == 5 for v in range(6))


def test_union_and_join_counts():
    g = disjoint_union(complete_graph(3), complete_graph(4))
    assert g.n == 7
    assert g.edge_count() == 3 + 6
    h = join(complete_graph(2), empty_graph(4))
    assert h.n == 6
    assert h.edge_count() == 1 + 8


def test_join_edge_count_property():
    rng = random.Random(11)
    for _ in range(30):
        a = _random_graph(rng, rng.randrange(1, 7), rng.random())
        b = _random_graph(rng, rng.randrange(1, 7), rng.random())
        j = join(a, b)
        assert j.n == a.n + b.n
        assert j.edge_count() == a.edge_count() + b.edge_count() + a.n * b.n
        u = disjoint_union(a, b)
        assert u.edge_count() == a.edge_count() + b.edge_count()


def test_capacity_on_combinations():
    with pytest.raises(CapacityError):
        join(complete_graph(40), complete_graph(30))


def test_family_spec_validation():
    FamilySpec(14, 1, (1, 3, 9))
    with pytest.raises(ParameterError):
        FamilySpec(14, 1, (1, 3, 8))  # even part
    with pytest.raises(ParameterError):
        FamilySpec(14, 1, (3, 1, 9))  # not nondecreasing
    with pytest.raises(ParameterError):
        FamilySpec(14, 1, (1, 3, 7))  # wrong total
    with pytest.raises(ParameterError):
        FamilySpec(14, -1, (1, 3, 11))


def test_extremal_family_shape():
    g = extremal_family(14, 1)
    assert g.n == 14
    # hub 1 vertex joined to 13 others, plus C(9,2) + 3 internal edges
    assert g.edge_count() == 13 + 36 + 3
    assert g == barrier_family(FamilySpec(14, 1, (1, 3, 9)))
    assert universal_mask(g) == 1

    h = extremal_family(22, 2)
    assert h.n == 22
    assert universal_mask(h) == 0b11
    assert odd_components(h, 0b11) == 4


def test_extremal_family_validation():
    with pytest.raises(ParameterError):
        extremal_family(13, 1)
    with pytest.raises(ParameterError):
        extremal_family(7, 1)
    with pytest.raises(ParameterError):
        extremal_family(14, 0)


def test_partitions_cover_everything():
    blocks = extremal_partition(14, 1)
    assert [len(b) for b in blocks] == [1, 1, 3, 9]
    assert sorted(v for b in blocks for v in b) == list(range(14))
    spec = FamilySpec(18, 2, (3, 3, 3, 7))
    blocks = family_partition(spec)
    assert [len(b) for b in blocks] == [2, 3, 3, 3, 7]
    assert sorted(v for b in blocks for v in b) == list(range(18))


def test_components_against_oracle():
    rng = random.Random(5)
    for _ in range(120):
        n = rng.randrange(1, 11)
        g = _random_graph(rng, n, rng.uniform(0.1, 0.7))
        removed = [v for v in range(n) if rng.random() < 0.25]
        got = {frozenset(vertices_from_mask(c)) for c in components(g, mask_from_vertices(removed))}
        assert got == set(_components_oracle(g, removed))
        assert is_connected(g) == (len(_components_oracle(g)) <= 1)


def test_odd_components_and_isolated():
    g = extremal_family(14, 1)
    assert odd_components(g, 0b1) == 3
    assert isolated_count(g, 0b1) == 1
    assert odd_components(g, 0) == 0
    assert isolated_count(complete_graph(5), 0) == 0
    star = join(complete_graph(1), empty_graph(3))
    assert isolated_count(star, 0b1) == 3
    hub_and_cliques = barrier_family(FamilySpec(14, 1, (1, 1, 11)))
    assert odd_components(hub_and_cliques, 0b1) == 3
    assert isolated_count(hub_and_cliques, 0b1) == 2


def test_k_connectivity_known_cases():
    assert is_k_connected(complete_graph(5), 4)
    assert not is_k_connected(complete_graph(5), 5)
    g = extremal_family(14, 1)
    assert is_k_connected(g, 1)
    assert not is_k_connected(g, 2)
    h = extremal_family(22, 2)
    assert is_k_connected(h, 2)
    assert not is_k_connected(h, 3)
    with pytest.raises(ParameterError):
        is_k_connected(g, 0)


def test_k_connectivity_against_oracle():
    """Exhaustive deletion oracle over the set-based component count."""
    from itertools import combinations

    rng = random.Random(23)
    for _ in range(80):
        n = rng.randrange(3, 9)
        g = _random_graph(rng, n, rng.uniform(0.2, 0.9))
        for k in range(1, 4):
            expected = n > k and all(
                len(_components_oracle(g, s)) <= 1
                for size in range(k)
                for s in combinations(range(n), size)
            )
            assert is_k_connected(g, k) == expected


def test_structural_family_match():
    g = extremal_family(14, 1)
    assert matches_clique_join(g, 1, (1, 3, 9))
    assert not matches_clique_join(g, 1, (1, 1, 11))
    assert not matches_clique_join(g, 2, (1, 3, 8))
    assert matches_clique_join(extremal_family(30, 3), 3, (1, 1, 1, 3, 21))
    # near miss: drop one big-clique edge and the components are not cliques
    h = Graph(14, [e for e in g.edges() if e != (5, 6)])
    assert not matches_clique_join(h, 1, (1, 3, 9))
    with pytest.raises(ParameterError):
        matches_clique_join(g, 1, (13,))


def test_isomorphism_small():
    c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    p5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert is_isomorphic(c5, p5) is False
    relabeled = Graph(5, [(2, 4), (4, 0), (0, 3), (3, 1), (1, 2)])
    assert is_isomorphic(c5, relabeled) is True
    assert is_isomorphic(complete_graph(4), complete_graph(4)) is True
    assert is_isomorphic(complete_graph(4), empty_graph(4)) is False
    assert is_isomorphic(c5, complete_graph(4)) is False


def test_isomorphism_random_relabelings():
    rng = random.Random(77)
    for _ in range(40):
        n = rng.randrange(2, 11)
        g = _random_graph(rng, n, rng.uniform(0.2, 0.8))
        perm = list(range(n))
        rng.shuffle(perm)
        h = Graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert is_isomorphic(g, h) is True


def test_isomorphism_indeterminate_above_cap():
    g = complete_graph(13)
    assert is_isomorphic(g, g) is None


def test_graph6_known_values():
    assert write_graph6(complete_graph(3)) == "Bw"
    star = parse_graph6("D?{")
    assert star.n == 5
    assert sorted(star.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)


def test_graph6_round_trip():
    rng = random.Random(99)
    for _ in range(400):
        n = rng.randrange(1, 17)
        g = _random_graph(rng, n, rng.random())
        assert parse_graph6(write_graph6(g)) == g


def test_graph6_long_form():
    for n in (63, 64):
        g = Graph(n, [(0, n - 1), (1, 2)])
        text = write_graph6(g)
        assert text.startswith("~")
        assert parse_graph6(text) == g


def test_graph6_errors_carry_offsets():
    with pytest.raises(Graph6Error) as err:
        parse_graph6("")
    assert err.value.offset == 0
    with pytest.raises(Graph6Error):
        parse_graph6("B\x1f")
    with pytest.raises(Graph6Error):
        parse_graph6("Bww")  # payload too long
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # payload missing
    with pytest.raises(Graph6Error):
        parse_graph6("A\x7f")


def test_edge_list_round_trip():
    g = extremal_family(14, 1)
    assert parse_edge_list(write_edge_list(g)) == g
    text = "# comment\n0 1\n\n2 3  # trailing note\n"
    h = parse_edge_list(text)
    assert h.n == 4 and h.edge_count() == 2
    pinned = parse_edge_list("# n=6\n0 1\n")
    assert pinned.n == 6
    with pytest.raises(ParameterError):
        parse_edge_list("0 1 2\n")
    with pytest.raises(ParameterError):
        parse_edge_list("0 x\n")
