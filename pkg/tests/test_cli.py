from __future__ import annotations

import io
import json
import subprocess
import sys

import networkx as nx
import pytest

from abs_spectra import families
from abs_spectra.cli import main
from abs_spectra.graph_core import graph6_decode, graph6_encode, is_isomorphic, new_graph

from conftest import naive_class, to_nx


def run(*argv: str, stdin: str = "") -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv,stdin,code",
    [
        (["family", "h1:5"], "", 0),
        (["family", "h1:4"], "", 2),
        (["family", "bogus:3"], "", 2),
        (["family", "h1:5", "--format", "json"], "", 2),
        (["spectral", "--family", "g1:5"], "", 0),
        (["spectral", "--matrix", "abs"], "Cl\n", 0),
        (["spectral", "--matrix", "abs"], "", 2),
        (["spectral", "--matrix", "abs"], "not-graph6!\n", 2),
        (["spectral", "--family", "h2:10", "--matrix", "adj", "--what", "charpoly-check:zeta"], "", 0),
        (["spectral", "--family", "h1:10", "--matrix", "adj", "--what", "charpoly-check:zeta"], "", 1),
        (["spectral", "--family", "h2:10", "--matrix", "abs", "--what", "charpoly-check:zeta"], "", 2),
        (["spectral", "--family", "h2:10", "--what", "charpoly-check:nope"], "", 2),
        (["spectral", "--family", "h2:10", "--what", "eigenvectors"], "", 2),
        (["spectral", "--family", "h2:10", "--precision", "13"], "", 2),
        (["enumerate", "--class", "bip-unicyclic", "--n", "4"], "", 0),
        (["enumerate", "--class", "bicyclic", "--n", "11"], "", 2),
        (["enumerate", "--class", "bicyclic", "--n", "6", "--filter", "girth>3"], "", 2),
        (["enumerate", "--class", "tricyclic", "--n", "6"], "", 2),
        (["verify", "--check", "CHK_H1_CLOSED", "--n-range", "5..50"], "", 0),
        (["verify", "--check", "CHK_BOGUS"], "", 2),
        (["verify", "--check", "CHK_H1_CLOSED", "--n-range", "9..5"], "", 2),
        (["verify", "--check", "CHK_BIP_MAX", "--n-range", "5..12"], "", 2),
        (["top", "--class", "bicyclic", "--n", "6", "--k", "2"], "", 0),
        (["top", "--class", "bicyclic", "--n", "6", "--k", "0"], "", 2),
        (["kelmans", "--u", "1", "--v", "2"], "Cs\n", 0),
        (["kelmans", "--u", "1", "--v", "9"], "Cs\n", 2),
        ([], "", 2),
    ],
)
def test_exit_codes(argv, stdin, code):
    assert run(*argv, stdin=stdin)[0] == code


def test_family_edges_layout():
    assert run("family", "h1:5", "--format", "edges")[1].strip() == "0-1 1-2 2-3 3-0 0-4"


def test_family_graph6():
    code, out = run("family", "binf:3,1,3")
    G = graph6_decode(out.strip())
    assert code == 0 and G.n == 5 and is_isomorphic(G, families.b_infinity(3, 1, 3))


def test_spectral_outputs():
    assert run("spectral", "--family", "g1:5")[1].strip() == "2.163784"
    assert run(stdin="Cl\n", *["spectral", "--matrix", "abs", "--what", "radius"])[1].startswith("1.41421")
    _, out = run("spectral", "--matrix", "adj", "--what", "spectrum", "--precision", "3", stdin="Cl\n")
    assert out.split() == ["2.000", "0.000", "0.000", "-2.000"]
    _, out = run("spectral", "--family", "h2:10", "--matrix", "adj", "--what", "charpoly-check:zeta")
    assert out.startswith("pass max_discrepancy=")


def test_enumerate_matches_naive_oracle():
    _, out = run("enumerate", "--class", "bip-unicyclic", "--n", "4")
    (line,) = out.split()
    assert nx.is_isomorphic(to_nx(graph6_decode(line)), nx.cycle_graph(4))
    _, out = run("enumerate", "--class", "bicyclic", "--n", "4")
    ours = [to_nx(graph6_decode(line)) for line in out.split()]
    oracle = naive_class(4, 2)
    assert len(ours) == len(oracle) == 1 and nx.is_isomorphic(ours[0], oracle[0])


def test_enumerate_filter():
    _, out = run("enumerate", "--class", "bicyclic", "--n", "7", "--filter", "girth=3,diam<=2,pendants=2")
    graphs = [graph6_decode(line) for line in out.split()]
    assert graphs and all(sum(1 for d in G.deg if d == 1) == 2 for G in graphs)
    assert any(is_isomorphic(G, families.g2(7)) for G in graphs)


def test_top_values():
    _, out = run("top", "--class", "bicyclic", "--n", "6", "--k", "2")
    rows = out.strip().splitlines()[1:]
    values = [float(r.split()[1]) for r in rows]
    assert [round(v, 3) for v in values] == [2.322, 2.292]
    _, out = run("top", "--class", "bip-unicyclic", "--n", "8", "--k", "1")
    g6 = out.strip().splitlines()[1].split()[-1]
    assert is_isomorphic(graph6_decode(g6), families.h1_bip(8))


def test_kelmans_path_to_star():
    p4 = graph6_encode(new_graph(4, [(0, 1), (1, 2), (2, 3)]))
    _, out = run("kelmans", "--u", "1", "--v", "2", stdin=p4 + "\n")
    assert is_isomorphic(graph6_decode(out.strip()), new_graph(4, [(0, 1), (0, 2), (0, 3)]))


def test_verify_writes_jsonl(tmp_path):
    path = tmp_path / "report.jsonl"
    code, out = run("verify", "--check", "CHK_H1_CLOSED", "--n-range", "5..8", "--out", str(path))
    lines = path.read_text().splitlines()
    assert code == 0 and len(lines) == 4
    assert all(set(json.loads(line)) == {"check_id", "n", "status", "witnesses", "margins", "runtime_ms"} for line in lines)
    assert "finite-range evidence" in out


def test_output_is_byte_identical_across_runs():
    argv = ["enumerate", "--class", "bicyclic", "--n", "6"]
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "abs_spectra", "family", "g2:6", "--format", "edges"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0-1 1-2 2-0 0-3 3-4 4-0 0-5"
