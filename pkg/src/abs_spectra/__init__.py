"""ABS matrix spectra of small graphs and extremal-graph verification tools."""

from __future__ import annotations

from .errors import AbsSpectraError
from .graph_core import (
    ClassSpec,
    Graph,
    canonical_code,
    canonical_form,
    graph6_decode,
    graph6_encode,
    is_isomorphic,
    new_graph,
    structural_profile,
)
from .spectral import abs_index, abs_matrix, adjacency_matrix, eigenvalues, eta1, lambda1
from .families import build_family
from .enumeration import count_class, enumerate_class
from .transforms import core_subgraph, kelmans
from .verify import CheckReport, check, run_all, top_k

__all__ = [
    "AbsSpectraError",
    "CheckReport",
    "ClassSpec",
    "Graph",
    "abs_index",
    "abs_matrix",
    "adjacency_matrix",
    "build_family",
    "canonical_code",
    "canonical_form",
    "check",
    "core_subgraph",
    "count_class",
    "eigenvalues",
    "enumerate_class",
    "eta1",
    "graph6_decode",
    "graph6_encode",
    "is_isomorphic",
    "kelmans",
    "lambda1",
    "new_graph",
    "run_all",
    "structural_profile",
    "top_k",
]
