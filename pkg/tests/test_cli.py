from __future__ import annotations

import json
import subprocess
import sys

import pytest

from algraph import families as F
from algraph import homcore, spectral
from algraph.aut import transitivity
from algraph.cli import EXIT_BOUND, EXIT_OK, EXIT_PARSE, EXIT_USAGE, SCHEMA, SKIPPED, build_report, main
from algraph.designs import fano_plane, gq22_from_k6
from algraph.io import format_edge_list, format_incidence, graph6_decode, graph6_encode


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def write_graph(tmp_path, g, name="g.g6"):
    path = tmp_path / name
    path.write_text(graph6_encode(g).decode("ascii") + "\n")
    return str(path)


def test_family_outputs_graph6(capsys, tmp_path):
    rc, out, _ = run(capsys, "family", "petersen")
    assert rc == EXIT_OK and graph6_decode(out.strip()) == F.petersen()
    rc, out, _ = run(capsys, "family", "johnson", "7", "3", "0")
    assert rc == EXIT_OK and graph6_decode(out.strip()).n == 35
    target = tmp_path / "h.g6"
    assert run(capsys, "family", "heawood", "-o", str(target))[0] == EXIT_OK
    assert graph6_decode(target.read_text().strip()) == F.heawood()


@pytest.mark.parametrize(
    "argv,code",
    [
        (["family", "paley", "7"], EXIT_USAGE),
        (["family", "nonesuch"], EXIT_USAGE),
        (["family", "cycle"], EXIT_USAGE),
        (["family", "hypercube", "20"], EXIT_BOUND),
        (["family", "cycle", "50", "--max-n", "10"], EXIT_BOUND),
        ([], EXIT_USAGE),
        (["frobnicate"], EXIT_USAGE),
        (["analyze", "/nonexistent/file"], EXIT_USAGE),
    ],
)
def test_error_exit_codes(capsys, argv, code):
    rc, out, err = run(capsys, *argv)
    assert rc == code
    assert out == "" and err.startswith("algraph:")


def test_parse_errors(capsys, tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("C~~~\n")
    assert run(capsys, "analyze", str(bad))[0] == EXIT_PARSE
    inc = tmp_path / "bad.inc"
    inc.write_text("3 1\n0 7\n")
    assert run(capsys, "verify-design", str(inc))[0] == EXIT_PARSE


def test_analyze_petersen_matches_library(capsys, tmp_path):
    path = write_graph(tmp_path, F.petersen())
    rc, out, _ = run(capsys, "analyze", path, "--json", "--deep")
    assert rc == EXIT_OK
    rep = json.loads(out)
    assert rep["schema"] == SCHEMA and rep["input"]["format"] == "graph6"
    g = F.petersen()
    cert = transitivity(g)
    assert rep["symmetry"]["aut_order"] == cert.aut_order == 120
    assert rep["symmetry"]["max_s_arc_transitive"] == 3
    assert rep["regularity"]["srg"] == [10, 3, 0, 1]
    assert rep["regularity"]["intersection_array"] == {"b": [3, 2], "c": [1, 1]}
    assert rep["regularity"]["moore"] is True
    assert rep["regularity"]["distinct_eigenvalues"] == spectral.distinct_eigenvalue_count(g)
    deep = rep["deep"]
    assert deep["chromatic_number"] == homcore.chromatic_number(g) == 3
    assert deep["independence_number"] == 4
    assert deep["hamiltonian_cycle"]["exists"] is False
    assert deep["hamiltonian_path"]["exists"] is True
    assert deep["max_matching"]["perfect"] is True
    assert deep["edge_connectivity"] == deep["vertex_connectivity"] == 3
    assert deep["is_core"] is True


def test_analyze_text_and_edge_list(capsys, tmp_path):
    path = tmp_path / "folk.txt"
    path.write_text(format_edge_list(F.folkman()))
    rc, out, _ = run(capsys, "analyze", str(path))
    assert rc == EXIT_OK
    lines = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert lines["input.format"] == '"edge-list"'
    assert lines["symmetry.semisymmetric"] == "true"
    assert lines["basic.n"] == "20"


def test_heawood_deep_is_hamiltonian(capsys, tmp_path):
    rc, out, _ = run(capsys, "analyze", write_graph(tmp_path, F.heawood()), "--deep", "--json")
    assert json.loads(out)["deep"]["hamiltonian_cycle"]["exists"] is True


def test_json_is_byte_stable(capsys, tmp_path):
    path = write_graph(tmp_path, F.shrikhande())
    first = run(capsys, "analyze", path, "--json", "--deep")[1]
    second = run(capsys, "analyze", path, "--json", "--deep")[1]
    assert first == second
    # a separate process produces the same bytes
    proc = subprocess.run(
        [sys.executable, "-m", "algraph", "analyze", path, "--json", "--deep"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == first


def test_bounds_become_skipped_fields(tmp_path):
    rep = build_report(F.hoffman_singleton(), "hs", "graph6", deep=True, max_deep_n=64)
    assert rep["deep"]["core"] == SKIPPED
    assert rep["deep"]["max_matching"]["size"] == 25
    small = build_report(F.petersen(), "p", "graph6", deep=True, max_aut_n=5, max_deep_n=5)
    assert small["symmetry"] == SKIPPED
    assert all(v == SKIPPED for v in small["deep"].values())


def test_degenerate_inputs(tmp_path):
    for g in (graph6_decode("?"), F.empty(1), F.complete(2), F.empty(3)):
        rep = build_report(g, "x", "graph6", deep=True)
        assert rep["basic"]["n"] == g.n


def test_verify_design(capsys, tmp_path):
    fano = tmp_path / "fano.inc"
    fano.write_text(format_incidence(fano_plane()))
    rc, out, _ = run(capsys, "verify-design", str(fano), "--json")
    rep = json.loads(out)
    assert rc == EXIT_OK
    assert (rep["verdict"], rep["b"], rep["r"], rep["fisher"]) == ("2-(7,3,1)", 7, 3, True)
    assert rep["lambda_chain"] == [7, 3, 1]
    gq = tmp_path / "gq.inc"
    gq.write_text(format_incidence(gq22_from_k6()))
    rc, out, _ = run(capsys, "verify-design", str(gq), "-t", "2")
    assert rc == EXIT_OK and 'verdict: "not a design"' in out
    mixed = tmp_path / "mixed.inc"
    mixed.write_text("4 2\n0 1 2\n2 3\n")
    rc, out, _ = run(capsys, "verify-design", str(mixed))
    assert rc == EXIT_OK and "not a design" in out
