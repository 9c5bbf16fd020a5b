from __future__ import annotations

import itertools

import networkx as nx
import pytest

from abs_spectra import families
from abs_spectra.enumeration import class_members, count_class, enumerate_class, enumerate_trees
from abs_spectra.errors import TooLarge
from abs_spectra.graph_core import ClassSpec, canonical_code, graph6_encode, is_isomorphic, matches
from abs_spectra.transforms import core_subgraph

from conftest import from_nx, naive_class, to_nx

# unlabeled trees, bipartite unicyclic graphs and bicyclic graphs by order
TREES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}
BIP_UNICYCLIC = {3: 0, 4: 1, 5: 1, 6: 5, 7: 10, 8: 34, 9: 85}
BICYCLIC = {4: 1, 5: 5, 6: 19, 7: 67, 8: 236}


def _same_set(ours, theirs) -> bool:
    ours = list(ours)
    if len(ours) != len(theirs):
        return False
    return all(any(nx.is_isomorphic(to_nx(G), H) for H in theirs) for G in ours)


@pytest.mark.parametrize("n", range(1, 8))
def test_trees_match_pruefer_oracle(n):
    # every labeled tree from its Pruefer sequence, deduplicated by networkx
    if n <= 2:
        oracle = [nx.path_graph(n)]
    else:
        oracle = []
        for seq in itertools.product(range(n), repeat=n - 2):
            T = nx.from_prufer_sequence(list(seq))
            if not any(nx.is_isomorphic(T, K) for K in oracle):
                oracle.append(T)
    assert _same_set(enumerate_trees(n), oracle)


@pytest.mark.parametrize("n", range(1, 11))
def test_tree_counts(n):
    assert sum(1 for _ in enumerate_trees(n)) == TREES[n]


@pytest.mark.parametrize("n", range(3, 7))
@pytest.mark.parametrize("rank,bipartite", [(1, True), (1, None), (2, None)])
def test_classes_match_naive_oracle(n, rank, bipartite):
    spec = ClassSpec(n, rank, bipartite=bipartite)
    assert _same_set(enumerate_class(spec), naive_class(n, rank, bipartite))


def test_known_counts():
    for n, k in BIP_UNICYCLIC.items():
        assert count_class(ClassSpec(n, 1, bipartite=True)) == k
    for n, k in BICYCLIC.items():
        assert count_class(ClassSpec(n, 2)) == k


def test_small_classes():
    (c4,) = class_members(ClassSpec(4, 1, bipartite=True))
    assert is_isomorphic(c4, from_nx(nx.cycle_graph(4)))
    (k4e,) = class_members(ClassSpec(4, 2))
    assert is_isomorphic(k4e, families.b_theta(1, 1, 0))


def test_members_are_distinct_and_match():
    spec = ClassSpec(8, 2)
    members = class_members(spec)
    assert len({canonical_code(G) for G in members}) == len(members)
    assert all(matches(G, spec) for G in members)


def test_filters():
    spec = ClassSpec(8, 1, bipartite=True, girth_eq=4, pendant_eq=4)
    members = class_members(spec)
    assert any(is_isomorphic(G, families.h1_bip(8)) for G in members)
    assert all(matches(G, spec) for G in members)


def test_deterministic_stream():
    spec = ClassSpec(7, 2)
    first = [graph6_encode(G) for G in enumerate_class(spec)]
    second = [graph6_encode(G) for G in enumerate_class(spec)]
    assert first == second


def test_caps():
    with pytest.raises(TooLarge):
        list(enumerate_class(ClassSpec(11, 2)))
    with pytest.raises(TooLarge):
        list(enumerate_trees(13))
    with pytest.raises(TooLarge):
        list(enumerate_class(ClassSpec(8, 3)))


def _b_graph_codes(max_order: int) -> set[bytes]:
    codes = set()
    for p in range(3, max_order + 1):
        for q in range(3, max_order + 1):
            for l in range(1, max_order + 1):
                if p + l + q - 2 <= max_order:
                    codes.add(canonical_code(families.b_infinity(p, l, q)))
    for p, l, q in itertools.product(range(max_order), repeat=3):
        if p + l + q + 2 <= max_order and [p, l, q].count(0) <= 1:
            codes.add(canonical_code(families.b_theta(p, l, q)))
    return codes


def test_every_bicyclic_core_is_an_infinity_or_theta_graph():
    codes = _b_graph_codes(9)
    for n in range(4, 10):
        for G in class_members(ClassSpec(n, 2)):
            assert canonical_code(core_subgraph(G)) in codes
