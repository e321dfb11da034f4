import json

from sclflow.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_commutator(capsys):
    code, out, _ = run_cli(capsys, "compute", "a b a^-1 b^-1")
    assert code == 0
    assert "1/2" in out


def test_compute_mixed_word_json(capsys):
    code, out, _ = run_cli(capsys, "--output", "json",
                           "compute", "a1 b1 b2 a1^-1 b1^-1 b2^-1")
    assert code == 0
    data = json.loads(out)
    assert data["scl"] == {"num": "1", "den": "2"}
    assert data["status"] == "stabilized"


def test_compute_invalid_word_exit_code(capsys):
    code, _, err = run_cli(capsys, "compute", "a^2 b")
    assert code == 2
    assert "error" in err


def test_limit_refusal_exit_code(capsys):
    code, _, err = run_cli(capsys, "compute",
                           "a1 a2 a3 a4 a5 a6 b " * 6 + "a1^-6 a2^-6 a3^-6 a4^-6 a5^-6 a6^-6 b^-6")
    assert code in (2, 3)  # word shape may fail first; limits otherwise


def test_bounds_command(capsys):
    code, out, _ = run_cli(capsys, "bounds", "a b a^-1 b^-1")
    assert code == 0
    assert "(0, 1/2)" in out


def test_universal_command(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "universal", "3",
                           "--compute")
    assert code == 0
    data = json.loads(out)
    assert data["word"] == "a1 a2 b1 b2 a1^-1 b1^-1 a2^-1 b2^-1"
    assert data["scl"] == {"num": "1", "den": "2"}


def test_generic_command_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "--output", "json", "--seed", "3",
                             "generic", "4")
    code2, out2, _ = run_cli(capsys, "--output", "json", "--seed", "3",
                             "generic", "4")
    assert code1 == code2 == 0
    assert out1 == out2


def test_discs_command(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "discs",
                           "a b a^-1 b^-1", "--disc-bound", "1")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 1


def test_rays_command(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "rays", "a b a^-1 b^-1")
    assert code == 0
    assert json.loads(out)["count"] == 2


def test_gadget_subset(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "gadget", "subset",
                           "--variant", "SS", "--values", "1,-1,3")
    assert code == 0
    assert json.loads(out)["answer"] is True


def test_gadget_table(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "gadget", "table",
                           "--values", "1,-1", "--r", "1")
    assert code == 0
    data = json.loads(out)
    assert data["columns"][0] == [1, -1, -1, 0, -1]


def test_gadget_smallscl(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "gadget", "smallscl",
                           "--values", "2,-1,-1")
    assert code == 0
    data = json.loads(out)
    assert data["word"] == "a^2 b a^-1 b a^-1 b^-2"


def test_gadget_reduce(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "gadget", "reduce",
                           "--values", "1,-1")
    assert code == 0
    assert json.loads(out)["answer"] is True


def test_gadget_essential(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "gadget", "essential",
                           "--values", "2,-1")
    assert code == 0
    assert json.loads(out)["no_zero_subset"] is True


def test_synth_command(tmp_path, capsys):
    graph_file = tmp_path / "loop.json"
    graph_file.write_text(json.dumps({"vertices": 1, "edges": [[0, 0]]}))
    code, out, _ = run_cli(capsys, "--output", "json", "synth", "--graph",
                           str(graph_file))
    assert code == 0
    data = json.loads(out)
    assert data["checks"]["extremal"] is True


def test_conjecture_command(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "--bound", "1",
                           "conjecture", "1", "2", "1")
    assert code == 0
    data = json.loads(out)
    assert data["predicted"] == {"num": "3", "den": "4"}


def test_essential_command(tmp_path, capsys):
    disc = tmp_path / "disc.json"
    disc.write_text(json.dumps({"n": 2, "entries": [[0, 1], [1, 0]]}))
    code, out, _ = run_cli(capsys, "--output", "json", "essential",
                           "a b a^-1 b^-1", "--side", "a", "--disc", str(disc))
    assert code == 0
    assert json.loads(out)["essential"] is True


def test_missing_file_is_input_error(capsys):
    code, _, err = run_cli(capsys, "synth", "--graph", "/nonexistent.json")
    assert code == 2


def test_config_file_with_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"bound": 1, "output": "json"}))
    code, out, _ = run_cli(capsys, "--config", str(cfg), "compute",
                           "a b a^-1 b^-1")
    assert code == 0
    assert json.loads(out)["status"] in ("stabilized", "upper_bound")
    # flag overrides the config file
    code, out, _ = run_cli(capsys, "--config", str(cfg), "--output", "text",
                           "compute", "a b a^-1 b^-1")
    assert code == 0
    assert "scl = 1/2" in out


def test_json_output_byte_identical(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = run_cli(capsys, "--output", "json", "compute",
                            "a b a^-1 b^-1")
        outs.append(out)
    assert outs[0] == outs[1]
