"""ABS and adjacency matrices, a cyclic Jacobi eigensolver, and real polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegreeMismatch, NoConvergence, NoRootInBracket
from .graph_core import Graph

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
SPECTRUM_TOL = 1e-8
ROOT_WIDTH = 1e-12
SCAN_STEP = 1e-2


@dataclass(frozen=True)
class SymMatrix:
    order: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        a = self.entries
        if a.shape != (self.order, self.order):
            raise ValueError(f"expected a {self.order}x{self.order} array, got {a.shape}")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix is not symmetric")


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]  # non-increasing
    residual: float

    @property
    def radius(self) -> float:
        return self.values[0]


def abs_weight(di: int, dj: int) -> float:
    return math.sqrt(1.0 - 2.0 / (di + dj))


def abs_matrix(G: Graph) -> SymMatrix:
    a = np.zeros((G.n, G.n))
    for u, v in G.edges:
        a[u, v] = a[v, u] = abs_weight(G.deg[u], G.deg[v])
    return SymMatrix(G.n, a)


def adjacency_matrix(G: Graph) -> SymMatrix:
    a = np.zeros((G.n, G.n))
    for u, v in G.edges:
        a[u, v] = a[v, u] = 1.0
    return SymMatrix(G.n, a)


def abs_index(G: Graph) -> float:
    # fsum is correctly rounded, so this equals fsum(matrix entries) / 2 exactly.
    return math.fsum(abs_weight(G.deg[u], G.deg[v]) for u, v in G.edges)


def eigenvalues(M: SymMatrix, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> Spectrum:
    """Full spectrum by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius mass drops below
    ``tol * ||M||_F``.
    """
    a = np.array(M.entries, dtype=float)
    n = M.order
    norm = float(np.linalg.norm(a))
    if n == 1 or norm == 0.0:
        return Spectrum(tuple(sorted(np.diag(a).tolist(), reverse=True)), 0.0)

    def off_mass() -> float:
        off = a.copy()
        np.fill_diagonal(off, 0.0)
        return float(np.linalg.norm(off))

    for _ in range(max_sweeps + 1):
        if off_mass() < tol * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    off = np.abs(a - np.diag(np.diag(a)))
    values = sorted(np.diag(a).tolist(), reverse=True)
    return Spectrum(tuple(values), float(off.max()))


def spectral_radius(M: SymMatrix) -> float:
    """Largest eigenvalue; equal to max |eigenvalue| for nonnegative input."""
    return eigenvalues(M).values[0]


# --------------------------------------------------------------------------
# graph spectra with twin compression
# --------------------------------------------------------------------------


def twin_classes(G: Graph) -> list[list[int]]:
    """Partition of the vertices into classes of non-adjacent twins.

    Two vertices with the same open neighbourhood have the same degree, so
    their rows agree in both the adjacency and the ABS matrix.
    """
    by_nbhd: dict[int, list[int]] = {}
    for v in range(G.n):
        by_nbhd.setdefault(G.adj[v], []).append(v)
    return sorted(by_nbhd.values())


def compressed_matrix(M: SymMatrix, classes: Sequence[Sequence[int]]) -> SymMatrix:
    """Symmetrized quotient of ``M`` over classes of identical, mutually zero rows.

    The quotient carries every eigenvalue of ``M`` except one zero per
    removed class member.
    """
    reps = [c[0] for c in classes]
    sizes = np.array([len(c) for c in classes], dtype=float)
    root = np.sqrt(sizes)
    q = M.entries[np.ix_(reps, reps)] * np.outer(root, root)
    q = (q + q.T) / 2
    return SymMatrix(len(reps), q)


def graph_spectrum(G: Graph, kind: str = "abs") -> Spectrum:
    """Spectrum of the ABS (``kind="abs"``) or adjacency matrix of ``G``.

    Pendant-heavy graphs collapse to a small quotient before the Jacobi
    solve, which is what makes order-500 family sweeps cheap.
    """
    M = abs_matrix(G) if kind == "abs" else adjacency_matrix(G)
    classes = twin_classes(G)
    if len(classes) == G.n:
        return eigenvalues(M)
    reduced = eigenvalues(compressed_matrix(M, classes))
    zeros = (0.0,) * (G.n - len(classes))
    return Spectrum(tuple(sorted(reduced.values + zeros, reverse=True)), reduced.residual)


def eta1(G: Graph) -> float:
    """ABS spectral radius."""
    return graph_spectrum(G, "abs").values[0]


def lambda1(G: Graph) -> float:
    """Adjacency spectral radius."""
    return graph_spectrum(G, "adj").values[0]


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RealPoly:
    """Real polynomial, coefficients in ascending degree."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0.0]
        object.__setattr__(self, "coeffs", tuple(float(x) for x in c))

    @classmethod
    def from_descending(cls, *coeffs: float) -> "RealPoly":
        return cls(tuple(reversed(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "RealPoly") -> "RealPoly":
        out = [0.0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RealPoly(tuple(out))

    def derivative(self) -> "RealPoly":
        if self.degree == 0:
            return RealPoly((0.0,))
        return RealPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def root_bound(self) -> float:
        """Cauchy bound: every root has modulus below this value."""
        lead = self.coeffs[-1]
        return 1.0 + max((abs(c / lead) for c in self.coeffs[:-1]), default=0.0)

    def real_roots(self) -> list[float]:
        """All simple real roots, ascending.

        Critical points (roots of the derivative, found recursively) cut the
        line into monotone pieces; each piece holds at most one root, which
        bisection pins down.  A root of even multiplicity is invisible to
        this scheme and is not reported.
        """
        if self.degree < 1:
            return []
        if self.degree == 1:
            return [-self.coeffs[0] / self.coeffs[1]]
        bound = self.root_bound()
        points = [-bound] + [c for c in self.derivative().real_roots() if -bound < c < bound] + [bound]
        roots = []
        for a, b in zip(points, points[1:]):
            fa, fb = self(a), self(b)
            if fa == 0.0:
                if not roots or roots[-1] != a:
                    roots.append(a)
                continue
            if fb == 0.0:
                roots.append(b)
                continue
            if (fa < 0) != (fb < 0):
                roots.append(_bisect(self, a, b, fa))
        return roots


def _bisect(p: RealPoly, lo: float, hi: float, f_lo: float, width: float = ROOT_WIDTH) -> float:
    for _ in range(400):
        if hi - lo <= width:
            break
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        f_mid = p(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def largest_real_root(p: RealPoly, bracket_hi: float, step: float = SCAN_STEP) -> float:
    """Largest real root below ``bracket_hi`` by a descending sign scan plus bisection."""
    f_hi = p(bracket_hi)
    if f_hi == 0.0:
        return bracket_hi
    if f_hi < 0:
        raise NoRootInBracket(f"p({bracket_hi}) = {f_hi} is not positive")
    k = 0
    while True:
        x = bracket_hi - (k + 1) * step
        if x < -bracket_hi:
            raise NoRootInBracket(f"no sign change found in [{-bracket_hi}, {bracket_hi}]")
        fx = p(x)
        if fx <= 0.0:
            if fx == 0.0:
                return x
            return _bisect(p, x, bracket_hi - k * step, fx)
        k += 1


def _root_multiset(factors: Sequence[tuple[RealPoly, int]]) -> list[float] | None:
    roots: list[float] = []
    for poly, mult in factors:
        found = poly.real_roots()
        if len(found) != poly.degree:
            return None
        roots.extend(found * mult)
    return sorted(roots, reverse=True)


def factorization_discrepancy(M: SymMatrix, factors: Sequence[tuple[RealPoly, int]]) -> float:
    """Max gap between sorted eigenvalues and sorted roots of the factor system.

    Returns ``inf`` when some factor does not split over the reals.
    """
    if any(mult < 0 for _, mult in factors):
        raise DegreeMismatch("negative multiplicity in factor system")
    total = sum(poly.degree * mult for poly, mult in factors)
    if total != M.order:
        raise DegreeMismatch(f"factor system has degree {total}, matrix order is {M.order}")
    roots = _root_multiset([(p, m) for p, m in factors if m > 0])
    if roots is None:
        return math.inf
    values = eigenvalues(M).values
    return max((abs(a - b) for a, b in zip(values, roots)), default=0.0)


def spectrum_matches_factorization(
    M: SymMatrix, factors: Sequence[tuple[RealPoly, int]], tol: float = SPECTRUM_TOL
) -> bool:
    return factorization_discrepancy(M, factors) <= tol
