from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abs_spectra import families
from abs_spectra.errors import BadVertex, NotCyclic
from abs_spectra.graph_core import graph6_decode, graph6_encode, is_isomorphic, new_graph
from abs_spectra.spectral import eta1
from abs_spectra.transforms import core_subgraph, core_vertices, kelmans, kelmans_partition
from abs_spectra.verify import kelmans_instances

from conftest import graphs, to_nx


def test_kelmans_on_path_gives_star():
    P4 = new_graph(4, [(0, 1), (1, 2), (2, 3)])
    H = kelmans(P4, 1, 2)
    assert is_isomorphic(H, new_graph(4, [(0, 1), (0, 2), (0, 3)]))
    assert H.deg[2] == 3


def test_partition_sets():
    G = new_graph(6, [(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (0, 5)])
    part = kelmans_partition(G, 0, 1)
    assert part.omega1 == {2, 5}
    assert part.omega2 == {4}
    assert part.omega3 == {3}


def test_bad_vertices():
    G = families.h1_bip(6)
    with pytest.raises(BadVertex):
        kelmans(G, 0, 0)
    with pytest.raises(BadVertex):
        kelmans(G, 0, 6)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=9), st.data())
def test_kelmans_preserves_size_and_is_idempotent(G, data):
    u = data.draw(st.integers(0, G.n - 1))
    v = data.draw(st.integers(0, G.n - 1).filter(lambda x: x != u))
    H = kelmans(G, u, v)
    assert H.m == G.m and H.n == G.n
    # N(u) - N[v] is empty afterwards
    assert not kelmans_partition(H, u, v).omega1
    assert kelmans(H, u, v) == H


def test_kelmans_strictly_raises_eta1_on_sampled_instances():
    for n in (5, 8, 11):
        for G, u, v in kelmans_instances(n, 40, seed=7):
            part = kelmans_partition(G, u, v)
            assert part.omega1 and part.omega2 and not part.omega3
            assert eta1(kelmans(G, u, v)) > eta1(G) + 1e-10


def test_kelmans_instances_are_deterministic():
    a = [(graph6_encode(G), u, v) for G, u, v in kelmans_instances(9, 25, seed=42)]
    b = [(graph6_encode(G), u, v) for G, u, v in kelmans_instances(9, 25, seed=42)]
    assert a == b


def test_core_of_unicyclic_is_its_cycle():
    G = new_graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (6, 7)])
    assert is_isomorphic(core_subgraph(G), new_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]))
    with pytest.raises(NotCyclic):
        core_subgraph(new_graph(3, [(0, 1), (1, 2)]))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=3, max_n=10, connected=True))
def test_core_matches_networkx_k_core(G):
    H = to_nx(G)
    expected = sorted(nx.k_core(H, 2).nodes)
    assert core_vertices(G) == expected


def test_core_of_named_bicyclic_graphs():
    assert is_isomorphic(core_subgraph(families.g2(10)), families.b_infinity(3, 1, 3))
    assert is_isomorphic(core_subgraph(families.g1(10)), families.b_theta(1, 1, 0))
    assert graph6_decode(graph6_encode(core_subgraph(families.g1(10)))).m == 5
