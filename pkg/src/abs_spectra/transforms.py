"""The Kelmans operation and the 2-core (pendant stripping) map."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadVertex, NotCyclic
from .graph_core import Graph, bits, components, induced_subgraph, new_graph


@dataclass(frozen=True)
class KelmansPartition:
    omega1: frozenset[int]  # N(u) - N[v]
    omega2: frozenset[int]  # N(v) - N[u]
    omega3: frozenset[int]  # N(u) & N(v)


def _check_pair(G: Graph, u: int, v: int) -> None:
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise BadVertex(f"vertices ({u}, {v}) not in a graph of order {G.n}")
    if u == v:
        raise BadVertex("Kelmans operation needs two distinct vertices")


def kelmans_partition(G: Graph, u: int, v: int) -> KelmansPartition:
    _check_pair(G, u, v)
    nu, nv = G.adj[u], G.adj[v]
    closed_u, closed_v = nu | (1 << u), nv | (1 << v)
    return KelmansPartition(
        omega1=frozenset(bits(nu & ~closed_v)),
        omega2=frozenset(bits(nv & ~closed_u)),
        omega3=frozenset(bits(nu & nv)),
    )


def kelmans(G: Graph, u: int, v: int) -> Graph:
    """Move every edge u-w with w in N(u) - N[v] over to v-w.

    Defined for any distinct u, v; an empty move set returns an equal graph.
    """
    moved = kelmans_partition(G, u, v).omega1
    edges = []
    for a, b in G.edges:
        if a == u and b in moved:
            edges.append((v, b))
        elif b == u and a in moved:
            edges.append((a, v))
        else:
            edges.append((a, b))
    return new_graph(G.n, edges)


def core_vertices(G: Graph) -> list[int]:
    """Vertices that survive repeated deletion of degree-1 vertices."""
    deg = list(G.deg)
    alive = [True] * G.n
    stack = [v for v in range(G.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w in bits(G.adj[v]):
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return [v for v in range(G.n) if alive[v]]


def core_subgraph(G: Graph) -> Graph:
    """The 2-core of a connected graph containing a cycle.

    The result is relabeled ``0..k-1`` in increasing original-label order.
    """
    rank = G.m - G.n + len(components(G))
    if rank < 1:
        raise NotCyclic("graph has no cycle, so its 2-core is empty")
    return induced_subgraph(G, core_vertices(G))
