import random
from itertools import combinations, permutations

import networkx as nx
import pytest

from coronacolor import (
    canonical_form,
    canonical_graph,
    enumerate_subcubic,
    gen_random_subcubic,
    is_connected,
    max_degree,
    new_graph,
)

# frozen from the independent canonicalizer below (n <= 5) and the direct
# mask enumeration (n = 6); levels 7 and 8 come from the augmentation closure
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 23, 6: 62, 7: 150, 8: 424}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 10, 6: 29, 7: 64, 8: 194}


def _brute_class_count(n):
    """Independent canonical key: minimum edge set over all vertex permutations."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        deg = [0] * n
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        if any(d > 3 for d in deg):
            continue
        best = None
        for perm in permutations(range(n)):
            key = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
            if best is None or key < best:
                best = key
        seen.add(best)
    return len(seen)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_match_brute_force(n):
    assert _brute_class_count(n) == len(enumerate_subcubic(n)) == ALL_COUNTS[n]


def test_n6_count_matches_direct_mask_enumeration():
    pairs = list(combinations(range(6), 2))
    seen = set()
    for mask in range(1 << 15):
        edges = []
        deg = [0] * 6
        ok = True
        for i in range(15):
            if (mask >> i) & 1:
                a, b = pairs[i]
                deg[a] += 1
                deg[b] += 1
                if deg[a] > 3 or deg[b] > 3:
                    ok = False
                    break
                edges.append((a, b))
        if not ok:
            continue
        seen.add(canonical_form(new_graph(6, edges)))
    assert len(seen) == len(enumerate_subcubic(6)) == ALL_COUNTS[6]


@pytest.mark.parametrize("n", sorted(ALL_COUNTS))
def test_frozen_counts(n):
    assert len(enumerate_subcubic(n)) == ALL_COUNTS[n]
    assert len(enumerate_subcubic(n, connected=True)) == CONNECTED_COUNTS[n]


def test_connected_filter():
    for g in enumerate_subcubic(6, connected=True):
        assert is_connected(g)


def test_everything_enumerated_is_subcubic_and_distinct():
    for n in range(1, 8):
        level = enumerate_subcubic(n)
        assert all(g.n == n and max_degree(g) <= 3 for g in level)
        forms = [canonical_form(g) for g in level]
        assert len(set(forms)) == len(forms)
        assert forms == sorted(forms)  # deterministic order


def test_canonical_form_is_relabeling_invariant():
    rng = random.Random(7)
    for trial in range(60):
        n = rng.randint(1, 8)
        g = gen_random_subcubic(n, trial)
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = new_graph(n, [(perm[a], perm[b]) for a, b in g.edges])
        assert canonical_form(g) == canonical_form(relabeled)
        assert canonical_graph(g) == canonical_graph(relabeled)


def test_canonical_form_agrees_with_networkx_isomorphism():
    rng = random.Random(11)
    graphs = [gen_random_subcubic(6, s) for s in range(40)]
    for _ in range(150):
        a, b = rng.choice(graphs), rng.choice(graphs)
        na = nx.Graph()
        na.add_nodes_from(range(a.n))
        na.add_edges_from(a.edges)
        nb = nx.Graph()
        nb.add_nodes_from(range(b.n))
        nb.add_edges_from(b.edges)
        assert (canonical_form(a) == canonical_form(b)) == nx.is_isomorphic(na, nb)
