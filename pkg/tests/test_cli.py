import json

import pytest

from magcurv.cli import main
from magcurv.graphs import from_edge_list, load_graph

T3 = {"ell": 2, "num_vertices": 3,
      "edges": [{"u": 0, "v": 1, "w": 1.0, "s": 0},
                {"u": 1, "v": 2, "w": 1.0, "s": 0},
                {"u": 0, "v": 2, "w": 1.0, "s": 1}]}


@pytest.fixture
def t3_path(tmp_path):
    path = tmp_path / "t3.json"
    path.write_text(json.dumps(T3))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_spectrum_json(t3_path, capsys):
    code, out = run(capsys, "spectrum", t3_path, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["eigenvalues"] == [0.5, 0.5, 2.0]


def test_verify_passes(t3_path, capsys):
    code, out = run(capsys, "verify", t3_path, "--n", "2")
    assert code == 0
    assert "all pass" in out


def test_verify_json_deterministic(t3_path, capsys):
    code1, out1 = run(capsys, "verify", t3_path, "--n", "2", "--json")
    code2, out2 = run(capsys, "verify", t3_path, "--n", "2", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["all_passed"] is True


def test_verify_fails_at_bad_kappa(t3_path, capsys):
    code, _ = run(capsys, "verify", t3_path, "--n", "2", "--kappa", "10")
    assert code == 1


def test_girth_and_curvature(t3_path, capsys):
    code, out = run(capsys, "girth", t3_path, "--json")
    assert code == 0 and json.loads(out)["girth"] == 3
    code, out = run(capsys, "curvature", t3_path, "--n", "2", "--json")
    assert code == 0
    assert abs(json.loads(out)["kappa_max"]) <= 1e-9


def test_girth_inf_encoding(tmp_path, capsys):
    b3 = {"ell": 2, "num_vertices": 3,
          "edges": [{"u": 0, "v": 1, "w": 1.0, "s": 0},
                    {"u": 1, "v": 2, "w": 1.0, "s": 0},
                    {"u": 0, "v": 2, "w": 1.0, "s": 0}]}
    path = tmp_path / "b3.json"
    path.write_text(json.dumps(b3))
    code, out = run(capsys, "girth", str(path), "--json")
    assert code == 0 and json.loads(out)["girth"] == "inf"


def test_cheeger_exact_and_budget(t3_path, tmp_path, capsys):
    code, out = run(capsys, "cheeger", t3_path, "--exact", "--json")
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["h1"] - 1 / 3) <= 1e-9
    assert payload["mode"] == "exact"

    big = from_edge_list(40, 1, [(i, i + 1, 1.0, 0) for i in range(39)])
    path = tmp_path / "big.json"
    path.write_text(big.dumps())
    code, _ = run(capsys, "cheeger", str(path), "--exact")
    assert code == 3


def test_frustration_subcommand(t3_path, capsys):
    code, out = run(capsys, "frustration", t3_path, "--subset", "0,1,2",
                    "--exact", "--json")
    assert code == 0
    assert json.loads(out)["value"] == 2.0


def test_lift_subcommand(t3_path, tmp_path, capsys):
    out_path = tmp_path / "lift.json"
    code, _ = run(capsys, "lift", t3_path, "--out", str(out_path))
    assert code == 0
    lifted = load_graph(out_path.read_text())
    assert lifted.num_vertices == 6 and lifted.ell == 1
    assert all(e.s == 0 for e in lifted.edges)


def test_harnack_subcommand(t3_path, capsys):
    code, out = run(capsys, "harnack", t3_path, "--n", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["records"]) == 3
    assert all(r["passed"] for r in payload["records"])


def test_cheeger_heuristic_seeded(t3_path, capsys):
    code1, out1 = run(capsys, "cheeger", t3_path, "--heuristic", "--seed", "5",
                      "--json")
    code2, out2 = run(capsys, "cheeger", t3_path, "--heuristic", "--seed", "5",
                      "--json")
    assert code1 == code2 == 0 and out1 == out2
    payload = json.loads(out1)
    assert payload["mode"] == "heuristic" and payload["seed"] == 5
    assert payload["h1"] >= 1 / 3 - 1e-9  # upper bound on the exact value


def test_frustration_local_search(t3_path, capsys):
    code, out = run(capsys, "frustration", t3_path, "--subset", "0,1,2",
                    "--local-search", "--seed", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["mode"] == "local-search"
    assert payload["value"] >= 2.0 - 1e-9


def test_generate_deterministic(capsys):
    code1, out1 = run(capsys, "generate", "--vertices", "8", "--edge-prob", "0.5",
                      "--ell", "3", "--seed", "7")
    code2, out2 = run(capsys, "generate", "--vertices", "8", "--edge-prob", "0.5",
                      "--ell", "3", "--seed", "7")
    assert code1 == code2 == 0
    assert out1 == out2
    g = load_graph(out1)
    assert g.num_vertices == 8 and g.ell == 3


def test_stdin_input(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(T3)))
    code, out = run(capsys, "girth", "-")
    assert code == 0 and "3" in out


def test_malformed_document_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{\"nope\": 1}")
    code, _ = run(capsys, "spectrum", str(path))
    assert code == 2


def test_validation_error_exit_2(tmp_path, capsys):
    doc = dict(T3)
    doc["edges"] = [dict(e) for e in T3["edges"]]
    doc["edges"][0]["w"] = -1.0
    path = tmp_path / "neg.json"
    path.write_text(json.dumps(doc))
    code, _ = run(capsys, "spectrum", str(path))
    assert code == 2


def test_disconnected_harnack_exit_2(tmp_path, capsys):
    g = from_edge_list(4, 2, [(0, 1, 1.0, 1), (2, 3, 1.0, 1)])
    path = tmp_path / "disc.json"
    path.write_text(g.dumps())
    code, _ = run(capsys, "harnack", str(path))
    assert code == 2


def test_unknown_flag_usage_error(t3_path):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", t3_path, "--nonsense"])
    assert exc.value.code == 2


def test_missing_file_exit_2(capsys):
    code, _ = run(capsys, "spectrum", "/nonexistent/file.json")
    assert code == 2
