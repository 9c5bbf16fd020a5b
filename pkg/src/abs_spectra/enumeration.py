"""Isomorph-free generation of trees and of connected graphs of cycle rank 1 or 2."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import TooLarge
from .graph_core import (
    ClassSpec,
    Graph,
    _twin_representatives,
    canonical_code,
    canonical_form,
    canonical_order,
    induced_subgraph,
    matches,
    new_graph,
)

MAX_TREE_ORDER = 12
MAX_ORDER_BY_RANK = {0: 12, 1: 11, 2: 10}


def _canonical_parent_code(child: Graph) -> bytes:
    # Delete the leaf carrying the largest canonical label.
    order = canonical_order(child)
    leaf = next(v for v in reversed(order) if child.deg[v] == 1)
    keep = [v for v in range(child.n) if v != leaf]
    return canonical_code(induced_subgraph(child, keep))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (new_graph(1, []),)
    out = []
    seen: set[bytes] = set()
    for parent in _trees(n - 1):
        parent_code = canonical_code(parent)
        for v in _twin_representatives(parent.adj, range(parent.n)):
            child = new_graph(n, list(parent.edges) + [(v, n - 1)])
            if _canonical_parent_code(child) != parent_code:
                continue
            code = canonical_code(child)
            if code not in seen:
                seen.add(code)
                out.append(canonical_form(child))
    return tuple(out)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All unlabeled trees on ``n`` vertices, each once, in canonical form."""
    if n < 1:
        raise ValueError("trees need n >= 1")
    if n > MAX_TREE_ORDER:
        raise TooLarge(f"tree enumeration is capped at n = {MAX_TREE_ORDER}")
    yield from _trees(n)


def _check_caps(spec: ClassSpec) -> None:
    cap = MAX_ORDER_BY_RANK.get(spec.cycle_rank)
    if cap is None:
        raise TooLarge(f"cycle rank {spec.cycle_rank} is not supported (0, 1 or 2 only)")
    if spec.n > cap:
        raise TooLarge(f"cycle rank {spec.cycle_rank} enumeration is capped at n = {cap}")
    if spec.n < 1:
        raise ValueError("order must be positive")


def enumerate_class(spec: ClassSpec) -> Iterator[Graph]:
    """Each connected isomorphism class matching ``spec`` exactly once.

    Every candidate is a spanning tree plus ``cycle_rank`` extra edges; the
    stream order follows the tree order and the lexicographic order of the
    added non-edges, so it is deterministic.  Graphs come out in canonical
    form, so their graph6 text is their canonical code.
    """
    _check_caps(spec)
    seen: set[bytes] = set()
    for tree in enumerate_trees(spec.n):
        non_edges = [(i, j) for i in range(spec.n) for j in range(i + 1, spec.n) if not tree.has_edge(i, j)]
        for extra in combinations(non_edges, spec.cycle_rank):
            G = new_graph(spec.n, list(tree.edges) + list(extra))
            if not matches(G, spec):
                continue
            code = canonical_code(G)
            if code in seen:
                continue
            seen.add(code)
            yield canonical_form(G)


@lru_cache(maxsize=None)
def _class_list(spec: ClassSpec) -> tuple[Graph, ...]:
    return tuple(enumerate_class(spec))


def class_members(spec: ClassSpec) -> tuple[Graph, ...]:
    """Memoized materialization of :func:`enumerate_class`."""
    _check_caps(spec)
    return _class_list(spec)


def count_class(spec: ClassSpec) -> int:
    return len(class_members(spec))
