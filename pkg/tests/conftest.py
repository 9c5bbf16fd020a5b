from __future__ import annotations

import sys
from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from abs_spectra.graph_core import Graph, new_graph


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def from_nx(H: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(H.nodes))}
    return new_graph(len(index), [(index[u], index[v]) for u, v in H.edges])


def naive_class(n: int, rank: int, bipartite: bool | None = None) -> list[nx.Graph]:
    """Brute force over every edge subset, deduplicated with networkx isomorphism."""
    pairs = list(combinations(range(n), 2))
    m = n - 1 + rank
    buckets: dict[str, list[nx.Graph]] = {}
    for chosen in combinations(pairs, m):
        H = nx.Graph()
        H.add_nodes_from(range(n))
        H.add_edges_from(chosen)
        if not nx.is_connected(H):
            continue
        if bipartite is not None and nx.is_bipartite(H) != bipartite:
            continue
        key = nx.weisfeiler_lehman_graph_hash(H)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(H, K) for K in bucket):
            bucket.append(H)
    return [H for bucket in buckets.values() for H in bucket]


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if connected and n > 1:
        # random tree first, then extra edges
        edges = set()
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
        extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
        edges.update(extra)
    else:
        edges = set(draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))) if pairs else set()
    return new_graph(n, sorted(edges))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(lines):
        terminalreporter.write_line(lines[key])

