import random
from itertools import combinations, product

import pytest

from coronacolor import (
    chi_prime_exact,
    edge_color_product,
    edge_colors_at,
    enumerate_subcubic,
    gen_random_subcubic,
    max_degree,
    new_graph,
    permute_colors,
    vizing_color,
)
from coronacolor.errors import BudgetExceededError, NotABijectionError


def k(n):
    return new_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def cycle(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def assert_proper(g, ecol):
    for v in range(g.n):
        cs = [ecol.colors[(min(v, w), max(v, w))] for w in g.adj[v]]
        assert len(set(cs)) == len(cs), f"clash at {v}"
        assert all(1 <= c <= ecol.k for c in cs)


def test_small_instances():
    p3 = new_graph(3, [(0, 1), (1, 2)])
    ec = vizing_color(p3)
    assert ec.colors == {(0, 1): 1, (1, 2): 2} and ec.k == 3
    ec = vizing_color(k(2))
    assert ec.colors == {(0, 1): 1} and ec.k == 2
    ec = vizing_color(cycle(5))
    assert_proper(cycle(5), ec)
    assert ec.k == 3


def test_c5_needs_three_colors():
    # exhaustive: no proper 2-edge-coloring of the 5-cycle exists
    c5 = cycle(5)
    for assign in product((1, 2), repeat=5):
        ok = True
        for t, (a, b) in enumerate(c5.edges):
            for s in range(t):
                c, d = c5.edges[s]
                if (a in (c, d) or b in (c, d)) and assign[s] == assign[t]:
                    ok = False
                    break
            if not ok:
                break
        assert not ok
    assert chi_prime_exact(c5)[0] == 3


def test_edgeless():
    ec = vizing_color(new_graph(4))
    assert ec.k == 1 and not ec.colors
    assert chi_prime_exact(new_graph(4)) == (1, ec)


def test_vizing_on_all_subcubic_up_to_6():
    for n in range(1, 7):
        for g in enumerate_subcubic(n):
            ec = vizing_color(g)
            assert_proper(g, ec)
            assert ec.k == (max_degree(g) + 1 if g.edges else 1)
            assert all(c <= 4 for c in ec.colors.values())


def test_vizing_on_random_graphs_any_degree():
    rng = random.Random(5)
    for trial in range(200):
        n = rng.randint(2, 12)
        pairs = list(combinations(range(n), 2))
        rng.shuffle(pairs)
        g = new_graph(n, pairs[: rng.randint(0, len(pairs))])
        ec = vizing_color(g)
        assert_proper(g, ec)
        if g.edges:
            assert ec.k == max_degree(g) + 1


def test_vizing_determinism():
    for seed in range(10):
        g = gen_random_subcubic(30, seed)
        assert vizing_color(g) == vizing_color(g)


def test_chi_prime_values():
    assert chi_prime_exact(k(4))[0] == 3
    assert chi_prime_exact(cycle(5))[0] == 3
    assert chi_prime_exact(k(3))[0] == 3
    assert chi_prime_exact(new_graph(2, [(0, 1)]))[0] == 1


def test_chi_prime_in_vizing_range_with_proper_witness():
    seen = set()
    from coronacolor import canonical_form

    for n in range(2, 6):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
            g = new_graph(n, edges)
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
            value, witness = chi_prime_exact(g)
            d = max_degree(g)
            if edges:
                assert value in (d, d + 1)
            else:
                assert value == 1
            assert_proper(g, witness)


def test_chi_prime_budget():
    g = gen_random_subcubic(40, 3)
    with pytest.raises(BudgetExceededError):
        chi_prime_exact(g, budget=5)


def test_permute_colors():
    g = new_graph(2, [(0, 1)])
    ec = vizing_color(g)
    assert permute_colors(ec, {1: 1, 2: 2}) == ec
    swapped = permute_colors(ec, {1: 2, 2: 1})
    assert swapped.colors[(0, 1)] == 2
    with pytest.raises(NotABijectionError):
        permute_colors(ec, {1: 1, 2: 1})
    with pytest.raises(NotABijectionError):
        permute_colors(ec, {1: 2})
    # any permutation keeps properness
    rng = random.Random(9)
    for seed in range(20):
        h = gen_random_subcubic(12, seed)
        ec = vizing_color(h)
        perm = list(range(1, ec.k + 1))
        rng.shuffle(perm)
        mapped = permute_colors(ec, {i + 1: perm[i] for i in range(ec.k)})
        assert_proper(h, mapped)


def test_products_and_color_sets():
    tri = k(3)
    ec = vizing_color(tri)
    prods = sorted(edge_color_product(tri, ec, u) for u in range(3))
    assert prods == [2, 3, 6]  # each vertex sees two of the three colors
    assert edge_color_product(new_graph(1), vizing_color(new_graph(1)), 0) == 1
    p3 = new_graph(3, [(0, 1), (1, 2)])
    ec = vizing_color(p3)
    assert edge_colors_at(p3, ec, 1) == frozenset({1, 2})
    assert edge_colors_at(p3, ec, 0) == frozenset({1})
