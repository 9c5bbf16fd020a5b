"""Named graph families, the associated characteristic-polynomial factors,
and the closed form for the ABS spectral radius of the C4-plus-pendants graph.

Vertex layouts are fixed here because the charpoly checks and the CLI's edge
output depend on them:

* ``h1_bip(n)``: C4 on 0-1-2-3, pendants 4..n-1 on vertex 0.
* ``h2_bip(n)``: C4 on 0-1-2-3, pendants 5..n-1 on vertex 0, pendant 4 on 3.
* ``g1(n)``: hub 0 adjacent to 1, 2, 3 with path 1-2-3 (K4 minus edge 1-3),
  pendants 4..n-1 on the hub.
* ``g2(n)``: triangles 0-1-2 and 0-3-4 sharing hub 0, pendants 5..n-1 on 0.
* ``p_path``/``p_star``/``p_double_star``: path vertex z_k is ``k - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadOrder, BadParams, NotBicyclic, UnknownName
from .graph_core import Graph, canonical_code, diameter, girth, induced_subgraph, is_connected, new_graph
from .spectral import RealPoly
from .transforms import core_subgraph

SQRT2 = math.sqrt(2.0)


def _cycle(vertices: list[int]) -> list[tuple[int, int]]:
    return [(vertices[k], vertices[(k + 1) % len(vertices)]) for k in range(len(vertices))]


def h1_bip(n: int) -> Graph:
    if n < 5:
        raise BadOrder(f"h1 needs n >= 5, got {n}")
    return new_graph(n, _cycle([0, 1, 2, 3]) + [(0, k) for k in range(4, n)])


def h2_bip(n: int) -> Graph:
    if n < 6:
        raise BadOrder(f"h2 needs n >= 6, got {n}")
    return new_graph(n, _cycle([0, 1, 2, 3]) + [(3, 4)] + [(0, k) for k in range(5, n)])


def b_infinity(p: int, l: int, q: int) -> Graph:
    """Cycles C_p and C_q joined by a path on ``l`` vertices (l = 1: shared vertex)."""
    if p < 3 or q < 3 or l < 1:
        raise BadParams(f"b_infinity needs p, q >= 3 and l >= 1, got ({p}, {l}, {q})")
    edges = _cycle(list(range(p)))
    path = [0] + list(range(p, p + l - 1))
    edges += list(zip(path, path[1:]))
    joint = path[-1]
    start = p + l - 1
    edges += _cycle([joint] + list(range(start, start + q - 1)))
    return new_graph(p + l + q - 2, edges)


def b_theta(p: int, l: int, q: int) -> Graph:
    """Vertices 0 and 1 joined by three paths with p, l, q interior vertices."""
    lengths = (p, l, q)
    if min(lengths) < 0 or sum(1 for x in lengths if x == 0) > 1:
        raise BadParams(f"b_theta needs p, l, q >= 0 with at most one zero, got {lengths}")
    edges = []
    nxt = 2
    for k in lengths:
        path = [0] + list(range(nxt, nxt + k)) + [1]
        nxt += k
        edges += list(zip(path, path[1:]))
    return new_graph(p + l + q + 2, edges)


def _check_path_params(n: int, d: int, i: int, min_extra: int) -> None:
    if d < 2 or not 2 <= i <= d or n < d + 1 + min_extra:
        raise BadParams(f"need d >= 2, 2 <= i <= d, n >= d + {1 + min_extra}; got n={n}, d={d}, i={i}")


def _p_path_edges(n: int, d: int, i: int) -> list[tuple[int, int]]:
    z = lambda k: k - 1  # noqa: E731
    edges = [(z(k), z(k + 1)) for k in range(1, d + 1)]
    edges += [(z(i), z(k)) for k in range(d + 2, n + 1)]
    return edges


def p_path(n: int, d: int, i: int) -> Graph:
    _check_path_params(n, d, i, 0)
    return new_graph(n, _p_path_edges(n, d, i))


def p_star(n: int, d: int, i: int) -> Graph:
    _check_path_params(n, d, i, 1)
    edges = _p_path_edges(n, d, i) + [(i - 2, n - 1), (i, n - 1)]
    return new_graph(n, edges)


def p_double_star(n: int, d: int, i: int) -> Graph:
    _check_path_params(n, d, i, 2)
    edges = _p_path_edges(n, d, i) + [(i - 2, n - 2), (i - 2, n - 1)]
    return new_graph(n, edges)


def g1(n: int) -> Graph:
    if n < 5:
        raise BadOrder(f"g1 needs n >= 5, got {n}")
    return new_graph(n, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)] + [(0, k) for k in range(4, n)])


def g2(n: int) -> Graph:
    if n < 5:
        raise BadOrder(f"g2 needs n >= 5, got {n}")
    edges = _cycle([0, 1, 2]) + _cycle([0, 3, 4]) + [(0, k) for k in range(5, n)]
    return new_graph(n, edges)


# --------------------------------------------------------------------------
# Gamma classes
# --------------------------------------------------------------------------

_BUTTERFLY = canonical_code(b_infinity(3, 1, 3))
_DIAMOND = canonical_code(b_theta(1, 1, 0))


def _gamma(G: Graph, core_code: bytes, core_order: int) -> bool:
    if not is_connected(G) or G.m - G.n + 1 != 2:
        raise NotBicyclic("Gamma membership is defined for bicyclic graphs only")
    core = core_subgraph(G)
    if core.n != core_order or canonical_code(core) != core_code:
        return False
    pendants = sum(1 for d in G.deg if d == 1)
    return girth(G) == 3 and diameter(G) <= 4 and pendants == G.n - core_order


def core_kind(G: Graph) -> str:
    """``"infinity"`` if the 2-core of a bicyclic graph has a cut vertex, else ``"theta"``."""
    if not is_connected(G) or G.m - G.n + 1 != 2:
        raise NotBicyclic("core kind is defined for bicyclic graphs only")
    core = core_subgraph(G)
    for v in range(core.n):
        rest = [w for w in range(core.n) if w != v]
        if not is_connected(induced_subgraph(core, rest)):
            return "infinity"
    return "theta"


def in_gamma_infinity(G: Graph) -> bool:
    """Two triangles sharing a vertex, girth 3, diameter <= 4, n - 5 pendants."""
    return _gamma(G, _BUTTERFLY, 5)


def in_gamma_theta(G: Graph) -> bool:
    """K4 minus an edge as core, girth 3, diameter <= 4, n - 4 pendants."""
    return _gamma(G, _DIAMOND, 4)


# --------------------------------------------------------------------------
# closed form and polynomials
# --------------------------------------------------------------------------


def h1_radicand(n: int) -> int:
    return n**6 - 12 * n**5 + 58 * n**4 - 108 * n**3 + 41 * n**2 + 40 * n + 16


def eta1_sq_h1_closed_form(n: int) -> float:
    """Squared ABS spectral radius of ``h1_bip(n)`` from its closed form."""
    if n < 5:
        raise BadOrder(f"closed form holds for n >= 5, got {n}")
    radicand = h1_radicand(n)
    root = math.isqrt(radicand)
    sqrt_a = float(root) if root * root == radicand else math.sqrt(radicand)
    return (n**3 - 4 * n**2 + 5 * n + 4 + sqrt_a) / (2 * n * (n - 1))


POLY_NAMES = ("ZETA", "PHI_PSTAR", "RHO_PSS", "PSI_G2", "PHI_G1")


def named_poly_coeffs(name: str, n, sqrt=math.sqrt) -> list:
    """Descending coefficients of a named polynomial.

    Arithmetic follows the type of ``n`` and the supplied ``sqrt``, so the
    same formulas serve float evaluation and high-precision sign checks.
    """
    key = name.upper()
    if key == "ZETA":
        return [1, 0, -n, 0, 3 * n - 13, 0, 5 - n]
    if key == "PHI_PSTAR":
        return [1, 0, -n, -4, 3 * n - 17]
    if key == "RHO_PSS":
        return [1, 0, -(n + 1), -4, 3 * n - 13]
    if key == "PSI_G2":
        r2 = sqrt(2)
        return [
            2 * n * (n + 1),
            -r2 * n * (n + 1),
            -2 * (n**3 - 2 * n**2 - n + 10),
            r2 * (n**3 - 6 * n**2 + 3 * n + 10),
        ]
    if key == "PHI_G1":
        quad = (5 * n**4 + 6 * n**3 - 7 * n**2 + 52 * n + 80) / (5 * n * (n + 2) * (n + 1))
        lin = 4 * sqrt(15 * n * (n - 1) / ((n + 2) * (n + 1))) / 5
        const = 6 * (n - 2) * (n - 4) / (5 * n)
        return [1, 0, -quad, -lin, const]
    raise UnknownName(f"unknown polynomial {name!r}; expected one of {POLY_NAMES}")


def named_poly(name: str, n: int) -> RealPoly:
    return RealPoly.from_descending(*named_poly_coeffs(name, n))


X = RealPoly((0.0, 1.0))

# charpoly-check name -> (family tag, matrix kind, smallest order)
CHARPOLY_CLAIMS = {
    "zeta": ("h2", "adj", 6),
    "phi": ("pstar", "adj", 6),
    "rho": ("pdstar", "adj", 6),
    "psi": ("g2", "abs", 5),
    "g1": ("g1", "abs", 5),
}


def charpoly_factors(name: str, n: int) -> list[tuple[RealPoly, int]]:
    """Factor system (polynomial, multiplicity) of the stated characteristic polynomial."""
    key = name.lower()
    if key == "zeta":
        return [(X, n - 6), (named_poly("ZETA", n), 1)]
    if key == "phi":
        return [(X, n - 6), (RealPoly((-1.0, 0.0, 1.0)), 1), (named_poly("PHI_PSTAR", n), 1)]
    if key == "rho":
        return [(X, n - 4), (named_poly("RHO_PSS", n), 1)]
    if key == "psi":
        psi = named_poly("PSI_G2", n)
        x_mult = n - 6
        if x_mult < 0:
            # n = 5: psi has a zero constant term that cancels the x^{-1}.
            psi = RealPoly(psi.coeffs[1:])
            x_mult = 0
        return [
            (X, x_mult),
            (RealPoly((1 / SQRT2, 1.0)), 2),
            (RealPoly((-1 / SQRT2, 1.0)), 1),
            (psi, 1),
        ]
    if key == "g1":
        return [(X, n - 4), (named_poly("PHI_G1", n), 1)]
    raise UnknownName(f"unknown factorization {name!r}; expected one of {sorted(CHARPOLY_CLAIMS)}")


def charpoly_graph(name: str, n: int) -> Graph:
    """The graph whose characteristic polynomial the named factor system describes."""
    key = name.lower()
    if key not in CHARPOLY_CLAIMS:
        raise UnknownName(f"unknown factorization {name!r}")
    return {
        "zeta": lambda: h2_bip(n),
        "phi": lambda: p_star(n, 4, 3),
        "rho": lambda: p_double_star(n, 3, 3),
        "psi": lambda: g2(n),
        "g1": lambda: g1(n),
    }[key]()


# --------------------------------------------------------------------------
# tokens ("g2:12", "binf:3,1,3", "pstar:n=10,d=4,i=3")
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyId:
    tag: str
    params: tuple[int, ...]


_TAGS = {
    "h1": ("H1_BIP", ("n",), h1_bip),
    "h2": ("H2_BIP", ("n",), h2_bip),
    "binf": ("B_INF", ("p", "l", "q"), b_infinity),
    "btheta": ("B_THETA", ("p", "l", "q"), b_theta),
    "ppath": ("P_PATH", ("n", "d", "i"), p_path),
    "pstar": ("P_STAR", ("n", "d", "i"), p_star),
    "pdstar": ("P_DSTAR", ("n", "d", "i"), p_double_star),
    "g1": ("G1", ("n",), g1),
    "g2": ("G2", ("n",), g2),
}


def parse_family_token(token: str) -> tuple[str, tuple[int, ...]]:
    """Split a token into its short name and integer parameters."""
    name, sep, rest = token.strip().partition(":")
    name = name.lower()
    if name not in _TAGS or not sep:
        raise BadParams(f"bad family token {token!r}; expected e.g. 'g2:12' or 'binf:3,1,3'")
    keys = _TAGS[name][1]
    parts = [p.strip() for p in rest.split(",") if p.strip()]
    values: dict[str, int] = {}
    try:
        if all("=" in p for p in parts):
            for p in parts:
                k, v = p.split("=", 1)
                values[k.strip()] = int(v)
        else:
            values = dict(zip(keys, (int(p) for p in parts)))
            if len(parts) != len(keys):
                raise BadParams(f"{name} takes {len(keys)} parameters, got {len(parts)}")
    except ValueError as exc:
        raise BadParams(f"bad family token {token!r}: {exc}") from None
    if set(values) != set(keys):
        raise BadParams(f"{name} needs parameters {keys}, got {sorted(values)}")
    return name, tuple(values[k] for k in keys)


def family_id(token: str) -> FamilyId:
    name, params = parse_family_token(token)
    return FamilyId(_TAGS[name][0], params)


def build_family(token: str) -> Graph:
    name, params = parse_family_token(token)
    return _TAGS[name][2](*params)
