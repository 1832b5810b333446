import json

from bruhatkit.cli import main


def run(capsys, args):
    rc = main(args)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_json(capsys, args):
    rc, out, err = run(capsys, args)
    return rc, json.loads(out) if out.strip() else None, err


def test_phi_table_json_golden(capsys):
    rc, payload, _ = run_json(capsys, ["phi", "BC", "2"])
    assert rc == 0
    assert payload == {
        "family": "BC",
        "rank": 2,
        "order": 8,
        "classes": [
            {"class_label": [[1, 1], []], "size": 1, "d_C": 0, "elliptic": False,
             "phi": [1, 1, 1, 1]},
            {"class_label": [[1], [1]], "size": 2, "d_C": 1, "elliptic": False,
             "phi": [2, 1, 1]},
            {"class_label": [[2], []], "size": 2, "d_C": 1, "elliptic": False,
             "phi": [2, 2]},
            {"class_label": [[], [2]], "size": 2, "d_C": 2, "elliptic": True,
             "phi": [4]},
            {"class_label": [[], [1, 1]], "size": 1, "d_C": 4, "elliptic": True,
             "phi": [2, 2]},
        ],
    }


def test_phi_a2_and_out_of_scope_d(capsys):
    rc, payload, _ = run_json(capsys, ["phi", "A", "2"])
    assert rc == 0
    assert len(payload["classes"]) == 3
    assert all(r["class_label"] == r["phi"] for r in payload["classes"])
    rc, _, err = run(capsys, ["phi", "D", "3"])
    assert rc == 2
    assert "out of scope" in err


def test_classes_d_has_no_phi_column(capsys):
    rc, payload, _ = run_json(capsys, ["classes", "D", "3"])
    assert rc == 0
    assert all(r["phi"] is None for r in payload["classes"])
    assert sum(r["size"] for r in payload["classes"]) == 24


def test_order_command(capsys):
    rc, payload, _ = run_json(capsys, ["order", "A", "2", "--gl", "--q", "2"])
    assert rc == 0 and payload["order"] == 168
    rc, payload, _ = run_json(capsys, ["order", "BC", "2", "--q", "3"])
    assert rc == 0 and payload["order"] == 51840
    rc, _, err = run(capsys, ["order", "BC", "2", "--gl", "--q", "3"])
    assert rc == 2 and "family A" in err
    rc, _, err = run(capsys, ["order", "A", "2", "--q", "6"])
    assert rc == 2 and "prime power" in err


def test_poincare_command(capsys):
    rc, payload, _ = run_json(capsys, ["poincare", "A", "2"])
    assert rc == 0
    assert payload["coefficients"] == [1, 2, 2, 1]
    assert payload["pretty"] == "q^3 + 2*q^2 + 2*q + 1"
    rc, out, _ = run(capsys, ["--format", "table", "poincare", "BC", "2"])
    assert rc == 0 and out.strip() == "q^4 + 2*q^3 + 2*q^2 + 2*q + 1"


def test_hecke_command(capsys):
    rc, payload, _ = run_json(capsys, ["hecke", "1", "1", "A", "2"])
    assert rc == 0
    assert payload["pretty"] == "q*T[e] + (q - 1)*T[2,1,3]"
    terms = {tuple(t["window"]): t["coefficients"] for t in payload["terms"]}
    assert terms == {(1, 2, 3): [0, 1], (2, 1, 3): [-1, 1]}
    rc, payload, _ = run_json(capsys, ["hecke", "1 2 1", "2 1 2", "A", "2"])
    assert rc == 0
    rc, _, err = run(capsys, ["hecke", "9", "1", "A", "2"])
    assert rc == 2 and "generators outside" in err


def test_decompose_command(capsys):
    matrix = json.dumps({"field": {"p": 2}, "rows": 2, "cols": 2,
                         "entries": [[1, 0], [1, 1]]})
    rc, payload, _ = run_json(capsys, ["decompose", matrix])
    assert rc == 0
    assert payload["w"] == [2, 1]
    assert payload["reduced_word"] == [1]
    assert payload["verified"] is True
    assert payload["b1"]["field"] == {"p": 2}


def test_decompose_errors(capsys):
    singular = json.dumps({"field": "Q", "rows": 2, "cols": 2,
                           "entries": [[1, 2], [2, 4]]})
    rc, _, err = run(capsys, ["decompose", singular])
    assert rc == 2
    assert "column 2" in err
    rc, _, err = run(capsys, ["decompose", '{"field": "Q", "rows": 2'])
    assert rc == 2
    assert "parse error" in err and "line 1" in err


def test_decompose_from_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"field": "Q", "rows": 3, "cols": 3,
                                "entries": [[0, 0, 1], [0, 1, 0], [1, 0, 0]]}))
    rc, payload, _ = run_json(capsys, ["decompose", str(path)])
    assert rc == 0
    assert payload["w"] == [3, 2, 1]
    assert payload["length"] == 3


def test_relpos_command(capsys):
    ident = json.dumps({"field": {"p": 5}, "rows": 3, "cols": 3,
                        "entries": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})
    anti = json.dumps({"field": {"p": 5}, "rows": 3, "cols": 3,
                       "entries": [[0, 0, 1], [0, 1, 0], [1, 0, 0]]})
    rc, payload, _ = run_json(capsys, ["relpos", ident, anti])
    assert rc == 0 and payload["w"] == [3, 2, 1]
    rc, payload, _ = run_json(capsys, ["relpos", ident, ident])
    assert rc == 0 and payload["w"] == [1, 2, 3]


def test_cell_count_command(capsys):
    rc, payload, _ = run_json(
        capsys, ["cell-count", "BC", "2", "--w=-1,-2", "--q", "3", "--enumerate"])
    assert rc == 0
    assert payload["length"] == 4
    assert payload["cell_order"] == 3**4 * 324
    assert payload["enumerated"] == payload["cell_order"]
    rc, payload, _ = run_json(capsys, ["cell-count", "A", "2", "--word", "1 2", "--q", "2"])
    assert rc == 0 and payload["cell_order"] == 2**2 * 8
    rc, _, err = run(capsys, ["cell-count", "A", "2", "--q", "2"])
    assert rc == 2 and "exactly one" in err
    rc, _, err = run(capsys, ["cell-count", "A", "2", "--w", "2,1,3", "--q", "4"])
    assert rc == 2 and "prime" in err


def test_verify_command_small(capsys):
    rc, payload, _ = run_json(capsys, ["verify", "sl", "2", "--q", "3", "--seed", "5"])
    assert rc == 0
    assert payload["ok"] is True
    section = payload["theorem_a"][0]
    assert section["all_match"] and section["integrity"]["order_check"]["ok"]
    assert section["spot_checks"]["seed"] == 5


def test_verify_sl3_f2(capsys):
    rc, payload, _ = run_json(capsys, ["verify", "sl", "3", "--q", "2"])
    assert rc == 0
    section = payload["theorem_a"][0]
    assert len(section["classes"]) == 3
    assert all(r["match"] for r in section["classes"])


def test_verify_bad_prime_and_override(capsys):
    rc, _, err = run(capsys, ["verify", "sp", "4", "--q", "2"])
    assert rc == 2 and "bad prime" in err
    rc, payload, _ = run_json(
        capsys, ["verify", "sp", "4", "--q", "2", "--allow-bad-prime", "--no-property-d"])
    assert rc == 0
    assert payload["theorem_a"][0]["advisory"] is True


def test_verify_budget_message(capsys, monkeypatch):
    # a tight budget pushes the run into cell mode, whose unipotent census
    # then refuses with the budget actually required
    rc, _, err = run(capsys, ["verify", "gl", "3", "--q", "3", "--budget", "100"])
    assert rc == 2
    assert "budget" in err and "729" in err
    monkeypatch.setenv("BRUHATKIT_BUDGET", "100")
    rc, _, err = run(capsys, ["verify", "gl", "3", "--q", "3"])
    assert rc == 2 and "729" in err
    # and the cell budget gates the scans themselves
    rc, _, err = run(capsys, ["verify", "sp", "4", "--q", "5", "--cell-budget", "1000"])
    assert rc == 2 and "budget" in err


def test_verify_seed_reproducibility(capsys):
    rc1, out1, _ = run(capsys, ["verify", "sl", "2", "--q", "3", "--seed", "9"])
    rc2, out2, _ = run(capsys, ["verify", "sl", "2", "--q", "3", "--seed", "9"])
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_verify_multi_prime_runs_property_d(capsys):
    rc, payload, _ = run_json(
        capsys, ["verify", "sl", "2", "--q", "3", "--q", "5", "--workers", "2"])
    assert rc == 0
    assert payload["property_d"] is not None
    assert payload["property_d"]["all_match"]
    assert len(payload["theorem_a"]) == 2


def test_verify_report_written_to_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    rc, payload, _ = run_json(
        capsys, ["verify", "sl", "2", "--q", "3", "--out", str(out_path)])
    assert rc == 0
    assert json.loads(out_path.read_text()) == payload


def test_table_format_smoke(capsys):
    for args in (["--format", "table", "phi", "BC", "2"],
                 ["--format", "table", "verify", "sl", "2", "--q", "3"],
                 ["--format", "table", "decompose",
                  '{"field": "Q", "rows": 2, "cols": 2, "entries": [[0, 1], [1, 0]]}']):
        rc, out, _ = run(capsys, args)
        assert rc == 0 and out
