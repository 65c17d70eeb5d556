import itertools
import random

import pytest

from agspectra.enumeration import (
    CANONICAL_MAX_N,
    canonical_form,
    canonical_graph,
    enumerate_trees,
    enumerate_unicyclic,
    family_counts,
)
from agspectra.graphio import parse_graph6
from agspectra.graphs import Graph, is_tree, is_unicyclic, make_path, make_star
from oracles import ahu_certificate, prufer_decode

TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
UNICYCLIC_COUNTS = [1, 2, 5, 13, 33, 89, 240, 657]


# --- independent oracles -----------------------------------------------------


def brute_canonical(g):
    """Maximum adjacency bit tuple over all vertex permutations."""
    n = g.n
    adj = set(g.edges)
    best = None
    for perm in itertools.permutations(range(n)):
        bits = tuple(
            1 if ((perm[i], perm[j]) in adj or (perm[j], perm[i]) in adj) else 0
            for j in range(1, n)
            for i in range(j)
        )
        if best is None or bits > best:
            best = bits
    return best


def permuted(g, perm):
    return Graph(g.n, tuple((perm[i], perm[j]) for i, j in g.edges))


# --- canonical form ----------------------------------------------------------


def test_canonical_form_partitions_like_brute_force():
    # exhaustive over all graphs on up to 5 vertices
    expected_classes = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        by_brute = {}
        by_form = {}
        for picks in itertools.product((0, 1), repeat=len(pairs)):
            g = Graph(n, tuple(e for e, keep in zip(pairs, picks) if keep))
            by_brute.setdefault(brute_canonical(g), set()).add(canonical_form(g))
            by_form.setdefault(canonical_form(g), set()).add(brute_canonical(g))
        assert len(by_brute) == expected_classes[n]
        assert len(by_form) == expected_classes[n]
        assert all(len(s) == 1 for s in by_brute.values())
        assert all(len(s) == 1 for s in by_form.values())


def test_canonical_form_is_relabelling_invariant():
    rng = random.Random(4021)
    samples = list(enumerate_trees(9)) + list(enumerate_unicyclic(8))
    for g in samples:
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(permuted(g, perm)) == canonical_form(g)


def test_canonical_graph_is_a_relabelling():
    from agspectra.graphs import degrees

    for g in enumerate_unicyclic(6):
        c = canonical_graph(g)
        assert c.n == g.n and c.m == g.m
        assert sorted(degrees(c)) == sorted(degrees(g))
        assert canonical_form(c) == canonical_form(g)
        # the form is the graph6 encoding of the canonical graph
        assert parse_graph6(canonical_form(g).decode("ascii")) == c


def test_canonical_size_limit():
    with pytest.raises(ValueError):
        canonical_form(make_path(CANONICAL_MAX_N + 1))


# --- tree enumeration --------------------------------------------------------


def otter_counts(n_max):
    """Free-tree counts from the rooted-tree convolution recurrence."""
    r = [0] * (n_max + 1)
    r[1] = 1
    for n in range(2, n_max + 1):
        total = 0
        for k in range(1, n):
            s_k = sum(d * r[d] for d in range(1, k + 1) if k % d == 0)
            total += s_k * r[n - k]
        r[n] = total // (n - 1)
    t = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        pair_sum = sum(r[i] * r[n - i] for i in range(1, n))
        if n % 2 == 0:
            pair_sum -= r[n // 2]
        t[n] = r[n] - pair_sum // 2
    return t[1:]


def test_tree_counts_match_otter_recurrence():
    assert otter_counts(12) == TREE_COUNTS
    assert family_counts("tree", 12) == TREE_COUNTS


def test_trees_match_prufer_oracle():
    for n in range(3, 8):
        seen = set()
        for seq in itertools.product(range(n), repeat=n - 2):
            seen.add(ahu_certificate(prufer_decode(n, seq)))
        ours = {ahu_certificate(t) for t in enumerate_trees(n)}
        assert len(ours) == len(enumerate_trees(n))
        assert ours == seen


def test_enumerated_trees_are_trees_sorted_and_distinct():
    for n in range(1, 11):
        trees = enumerate_trees(n)
        forms = [canonical_form(t) for t in trees]
        assert all(is_tree(t) for t in trees)
        assert forms == sorted(forms)
        assert len(set(forms)) == len(forms)
        # results are already canonically labelled
        assert all(canonical_graph(t) == t for t in trees)


def test_enumeration_range_errors():
    with pytest.raises(ValueError):
        enumerate_trees(0)
    with pytest.raises(ValueError):
        enumerate_trees(13)
    with pytest.raises(ValueError):
        enumerate_unicyclic(2)
    with pytest.raises(ValueError):
        enumerate_unicyclic(13)
    with pytest.raises(ValueError):
        family_counts("forest", 5)


# --- unicyclic enumeration ---------------------------------------------------


def test_unicyclic_counts():
    assert family_counts("unicyclic", 10) == UNICYCLIC_COUNTS
    assert enumerate_unicyclic(3) == (canonical_graph(Graph(3, ((0, 1), (1, 2), (0, 2)))),)


def test_enumerated_unicyclic_properties():
    for n in range(3, 10):
        graphs = enumerate_unicyclic(n)
        forms = [canonical_form(g) for g in graphs]
        assert all(is_unicyclic(g) for g in graphs)
        assert all(g.m == g.n for g in graphs)
        assert forms == sorted(forms)
        assert len(set(forms)) == len(forms)


def test_unicyclic_closed_under_tree_plus_edge():
    for n in range(3, 8):
        uni_forms = {canonical_form(g) for g in enumerate_unicyclic(n)}
        # forward: every tree plus one missing edge lands in the family
        built = set()
        for t in enumerate_trees(n):
            present = set(t.edges)
            for j in range(1, n):
                for i in range(j):
                    if (i, j) not in present:
                        built.add(canonical_form(Graph(n, t.edges + ((i, j),))))
        assert built == uni_forms
        # backward: every member loses some edge to become an enumerated tree
        tree_forms = {canonical_form(t) for t in enumerate_trees(n)}
        for g in enumerate_unicyclic(n):
            parents = set()
            for k in range(g.m):
                reduced = Graph(n, g.edges[:k] + g.edges[k + 1 :])
                if is_tree(reduced):
                    parents.add(canonical_form(reduced))
            assert parents
            assert parents <= tree_forms


def test_star_and_path_are_the_extreme_forms_present():
    for n in range(4, 9):
        forms = {canonical_form(t) for t in enumerate_trees(n)}
        assert canonical_form(make_path(n)) in forms
        assert canonical_form(make_star(n)) in forms
