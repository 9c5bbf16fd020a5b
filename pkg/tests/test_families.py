from __future__ import annotations

import math
from fractions import Fraction

import networkx as nx
import pytest

from abs_spectra import families
from abs_spectra.errors import BadOrder, BadParams, NotBicyclic, UnknownName
from abs_spectra.graph_core import ClassSpec, girth, is_isomorphic, matches, new_graph, structural_profile
from abs_spectra.spectral import abs_matrix, adjacency_matrix, eta1, factorization_discrepancy

from conftest import to_nx


@pytest.mark.parametrize("n", [5, 6, 9, 20])
def test_unicyclic_constructors(n):
    assert matches(families.h1_bip(n), ClassSpec(n, 1, bipartite=True, girth_eq=4))
    if n >= 6:
        H2 = families.h2_bip(n)
        assert matches(H2, ClassSpec(n, 1, bipartite=True, girth_eq=4, pendant_eq=n - 4))


@pytest.mark.parametrize("n", [5, 7, 12])
def test_bicyclic_constructors(n):
    built = [families.g1(n), families.g2(n)]
    if n >= 7:
        built += [families.p_star(n, 4, 3), families.p_double_star(n, 3, 3)]
    for G in built:
        assert matches(G, ClassSpec(n, 2))


def test_p_star_and_double_star_shapes():
    # z_n is one of the pendants at z_i, so both extra edges close triangles
    G = families.p_star(10, 4, 3)
    assert matches(G, ClassSpec(10, 2, girth_eq=3, diameter_eq=4))
    assert sorted(G.neighbors(9)) == [1, 2, 3]
    G = families.p_double_star(10, 3, 3)
    assert matches(G, ClassSpec(10, 2, girth_eq=3, diameter_eq=3))
    assert sorted(G.neighbors(1)) == [0, 2, 8, 9]
    P = families.p_path(8, 5, 3)
    assert structural_profile(P).cycle_rank == 0
    assert nx.diameter(to_nx(P)) == 5


def test_g_graphs_match_networkx_construction():
    for n in (5, 8):
        H = nx.Graph([(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
        H.add_edges_from((0, k) for k in range(4, n))
        assert nx.is_isomorphic(to_nx(families.g1(n)), H)
        B = nx.Graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        B.add_edges_from((0, k) for k in range(5, n))
        assert nx.is_isomorphic(to_nx(families.g2(n)), B)


def test_b_graph_orders_and_shapes():
    G = families.b_infinity(3, 1, 3)
    assert G.n == 5 and G.m == 6
    G = families.b_infinity(4, 3, 5)
    assert G.n == 10 and G.m == 11 and girth(G) == 4
    T = families.b_theta(1, 1, 0)
    assert T.n == 4 and T.m == 5
    K4e = nx.complete_graph(4)
    K4e.remove_edge(1, 3)
    assert nx.is_isomorphic(to_nx(T), K4e)
    with pytest.raises(BadParams):
        families.b_theta(0, 0, 2)
    with pytest.raises(BadParams):
        families.b_infinity(2, 1, 3)


def test_order_and_param_errors():
    with pytest.raises(BadOrder):
        families.h1_bip(4)
    with pytest.raises(BadOrder):
        families.h2_bip(5)
    with pytest.raises(BadParams):
        families.p_star(5, 4, 3)
    with pytest.raises(BadParams):
        families.p_star(10, 4, 5)


def test_tokens():
    assert families.build_family("h1:8") == families.h1_bip(8)
    assert families.build_family("binf:3,1,3") == families.b_infinity(3, 1, 3)
    assert families.build_family("pstar:n=10,d=4,i=3") == families.p_star(10, 4, 3)
    assert families.build_family("pstar:10,4,3") == families.p_star(10, 4, 3)
    for bad in ("h1", "nope:3", "h1:x", "pstar:n=10,d=4", "binf:3,1"):
        with pytest.raises(BadParams):
            families.build_family(bad)


# --------------------------------------------------------------------------
# closed form and factorizations
# --------------------------------------------------------------------------


def test_h1_closed_form_small_case_exact():
    assert families.h1_radicand(5) == 2116
    assert families.eta1_sq_h1_closed_form(5) == 2.5
    assert abs(eta1(families.h1_bip(5)) ** 2 - 2.5) < 1e-10


@pytest.mark.parametrize("n", [5, 6, 11, 50, 200])
def test_h1_closed_form_vs_eigensolver(n):
    assert abs(families.eta1_sq_h1_closed_form(n) - eta1(families.h1_bip(n)) ** 2) < 1e-9


def test_h1_radicand_identity():
    for n in range(5, 60):
        A = families.h1_radicand(n)
        assert A - (n - 4) ** 2 * (n * n - 2 * n + 3) ** 2 == 16 * (n - 1) ** 2 * (3 * n - 8)


def test_zeta_at_ten_exact():
    # integer coefficients; zeta(sqrt(8)) = 512 - 640 + 136 - 5
    coeffs = families.named_poly_coeffs("ZETA", 10)
    assert all(Fraction(c).denominator == 1 for c in coeffs)
    value = families.named_poly("ZETA", 10)(math.sqrt(8))
    assert abs(value - 3) < 1e-9


@pytest.mark.parametrize("name", sorted(families.CHARPOLY_CLAIMS))
@pytest.mark.parametrize("n", [7, 8, 13, 30])
def test_factorizations(name, n):
    kind = families.CHARPOLY_CLAIMS[name][1]
    G = families.charpoly_graph(name, n)
    M = abs_matrix(G) if kind == "abs" else adjacency_matrix(G)
    assert factorization_discrepancy(M, families.charpoly_factors(name, n)) <= 1e-8


def test_mis_wired_g2_breaks_its_factorization():
    n = 9
    wrong = new_graph(n, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)] + [(1, k) for k in range(5, n)])
    assert factorization_discrepancy(abs_matrix(wrong), families.charpoly_factors("psi", n)) > 1e-3


def test_unknown_factorization():
    with pytest.raises(UnknownName):
        families.charpoly_factors("nope", 9)


# --------------------------------------------------------------------------
# Gamma classes
# --------------------------------------------------------------------------


def test_gamma_membership():
    assert families.in_gamma_infinity(families.g2(9))
    assert not families.in_gamma_theta(families.g2(9))
    assert families.in_gamma_theta(families.g1(9))
    assert families.core_kind(families.g2(9)) == "infinity"
    assert families.core_kind(families.g1(9)) == "theta"
    with pytest.raises(NotBicyclic):
        families.in_gamma_theta(families.h1_bip(7))


def test_named_graphs_are_distinct():
    for n in (7, 9):
        assert not is_isomorphic(families.g1(n), families.g2(n))
