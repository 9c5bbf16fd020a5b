"""Simple undirected graphs, structural invariants, canonical codes and graph6.

Vertices are the integers ``0 .. n-1``.  Adjacency is stored as one Python
integer bitmask per vertex, which keeps neighbourhood algebra (the Kelmans
sets, twin detection, refinement counts) to a handful of bit operations.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DuplicateEdge, MalformedGraph6, OutOfRange, SelfLoop

# graph6 with a one-byte header tops out at 62 vertices; canonical codes are
# graph6 strings, so the same cap applies to them.
GRAPH6_MAX_ORDER = 62
# Plain graphs may be larger so that family sweeps can reach n = 500.
MAX_ORDER = 1000

INF = math.inf


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable labeled simple graph.

    ``edges`` keeps the insertion order used by the constructor (it is what
    the edge-list output prints); equality and hashing only look at the
    adjacency relation.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...] = field(repr=False)
    deg: tuple[int, ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted((min(e), max(e)) for e in self.edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return new_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from an edge list.

    Raises OutOfRange, SelfLoop or DuplicateEdge on contract violations.
    """
    if not 1 <= n <= MAX_ORDER:
        raise OutOfRange(f"order {n} outside [1, {MAX_ORDER}]")
    adj = [0] * n
    kept = []
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if adj[u] >> v & 1:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        kept.append((u, v))
    deg = tuple(a.bit_count() for a in adj)
    return Graph(n, tuple(kept), tuple(adj), deg)


def from_adjacency_masks(adj: Sequence[int]) -> Graph:
    n = len(adj)
    edges = [(u, v) for v in range(n) for u in bits(adj[v]) if u < v]
    return new_graph(n, edges)


def induced_subgraph(G: Graph, keep: Sequence[int]) -> Graph:
    """Subgraph induced on ``keep``, relabeled ``0..len(keep)-1`` in that order."""
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return new_graph(len(keep), edges)


# --------------------------------------------------------------------------
# structural invariants
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Profile:
    connected: bool
    bipartite: bool
    girth: float  # int, or INF for forests
    diameter: float  # int, or INF when disconnected
    pendant_count: int
    cycle_rank: int


def bfs_distances(G: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in bits(G.adj[u]):
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in bits(G.adj[u]):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return len(components(G)) == 1


def is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in bits(G.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def girth(G: Graph) -> float:
    # BFS from every root; the shortest closed walk through a non-tree edge
    # at the true minimum is a cycle, so the overall minimum is exact.
    best = INF
    for root in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in bits(G.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def diameter(G: Graph) -> float:
    best = 0.0
    for s in range(G.n):
        best = max(best, max(bfs_distances(G, s)))
        if best == INF:
            break
    return int(best) if best != INF else INF


def structural_profile(G: Graph) -> Profile:
    comps = components(G)
    g = girth(G)
    d = diameter(G)
    return Profile(
        connected=len(comps) == 1,
        bipartite=is_bipartite(G),
        girth=int(g) if g != INF else INF,
        diameter=d,
        pendant_count=sum(1 for d_i in G.deg if d_i == 1),
        cycle_rank=G.m - G.n + len(comps),
    )


@dataclass(frozen=True)
class ClassSpec:
    """Constraints that pick out a class of connected graphs of order ``n``.

    ``diameter_eq`` lets the fixed-diameter bicyclic classes be filtered
    directly.
    """

    n: int
    cycle_rank: int
    bipartite: Optional[bool] = None
    girth_eq: Optional[int] = None
    diameter_max: Optional[int] = None
    pendant_eq: Optional[int] = None
    diameter_eq: Optional[int] = None

    def describe(self) -> str:
        parts = [f"n={self.n}", f"cycle_rank={self.cycle_rank}"]
        for name in ("bipartite", "girth_eq", "diameter_max", "pendant_eq", "diameter_eq"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        return ",".join(parts)


def matches(G: Graph, spec: ClassSpec) -> bool:
    if G.n != spec.n or G.m - G.n + 1 != spec.cycle_rank:
        return False
    if not is_connected(G):
        return False
    if spec.pendant_eq is not None and sum(1 for d in G.deg if d == 1) != spec.pendant_eq:
        return False
    if spec.bipartite is not None and is_bipartite(G) != spec.bipartite:
        return False
    if spec.girth_eq is not None and girth(G) != spec.girth_eq:
        return False
    if spec.diameter_max is not None or spec.diameter_eq is not None:
        d = diameter(G)
        if spec.diameter_max is not None and d > spec.diameter_max:
            return False
        if spec.diameter_eq is not None and d != spec.diameter_eq:
            return False
    return True


# --------------------------------------------------------------------------
# canonical labeling (individualization-refinement)
# --------------------------------------------------------------------------


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by neighbour count into a splitter cell; the pieces are
    ordered by that count, so the result is label-equivariant.
    """
    cells = [list(c) for c in cells]
    while True:
        split_any = False
        for splitter in [sum(1 << v for v in c) for c in cells]:
            new_cells = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                counts = {}
                for v in cell:
                    counts.setdefault((adj[v] & splitter).bit_count(), []).append(v)
                if len(counts) == 1:
                    new_cells.append(cell)
                else:
                    split_any = True
                    new_cells.extend(counts[k] for k in sorted(counts))
            cells = new_cells
            if split_any:
                break
        if not split_any:
            return cells


def _certificate(adj: Sequence[int], order: Sequence[int]) -> int:
    """graph6 upper-triangle bitstring of the relabeled graph, as an integer.

    ``order[k]`` is the old vertex receiving new label ``k``.  Earlier bits
    are more significant, so integer order is lexicographic bitstring order.
    """
    n = len(order)
    cert = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            cert = (cert << 1) | (row >> order[i] & 1)
    return cert


def _twin_representatives(adj: Sequence[int], cell: Sequence[int]) -> list[int]:
    # Swapping two twins is an automorphism fixing every other vertex, so
    # their search subtrees produce the same leaves.
    reps: list[int] = []
    for v in cell:
        open_v = adj[v]
        closed_v = open_v | (1 << v)
        if not any(adj[r] == open_v or (adj[r] | (1 << r)) == closed_v for r in reps):
            reps.append(v)
    return reps


def canonical_order(G: Graph) -> list[int]:
    """Vertex order whose relabeling gives the canonical form of ``G``."""
    adj = G.adj
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        if len(cells) == G.n:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        size = min(len(c) for c in cells if len(c) > 1)
        idx = next(i for i, c in enumerate(cells) if len(c) == size)
        target = cells[idx]
        for v in _twin_representatives(adj, target):
            rest = [w for w in target if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1 :])

    search([list(range(G.n))])
    return best[1]


def canonical_form(G: Graph) -> Graph:
    order = canonical_order(G)
    perm = [0] * G.n
    for new, old in enumerate(order):
        perm[old] = new
    return G.relabel(perm)


def canonical_code(G: Graph) -> bytes:
    """graph6 bytes of the canonical form; equal iff the graphs are isomorphic."""
    if G.n > GRAPH6_MAX_ORDER:
        raise OutOfRange(f"canonical codes need n <= {GRAPH6_MAX_ORDER}")
    return graph6_encode(canonical_form(G)).encode("ascii")


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.m == H.m and canonical_code(G) == canonical_code(H)


# --------------------------------------------------------------------------
# graph6
# --------------------------------------------------------------------------


def graph6_encode(G: Graph) -> str:
    n = G.n
    if n > GRAPH6_MAX_ORDER:
        raise OutOfRange(f"graph6 encoding supports n <= {GRAPH6_MAX_ORDER}")
    bitlist = [G.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    chars = [chr(n + 63)]
    for k in range(0, len(bitlist), 6):
        value = 0
        for b in bitlist[k : k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip()
    if not text:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in text):
        raise MalformedGraph6(f"invalid graph6 character in {text!r}")
    n = ord(text[0]) - 63
    if n == 63:
        raise MalformedGraph6("graph6 orders above 62 are not supported")
    if n < 1:
        raise MalformedGraph6("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    body = text[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    bitlist = []
    for ch in body:
        value = ord(ch) - 63
        bitlist.extend((value >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitlist[k]:
                edges.append((i, j))
            k += 1
    return new_graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line and not line.startswith(">>"):
            yield graph6_decode(line)
