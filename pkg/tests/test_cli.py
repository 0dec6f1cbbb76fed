"""Command-line surface: outputs, exit codes, JSON stability, DOT export."""

import json

from garside.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "-n", "3", "1 2 1 1")
    assert code == 0 and out == "D^1 (1)\n"


def test_nf_json_schema(capsys):
    code, out, _ = run(capsys, "nf", "-n", "3", "1 2 1 1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"input", "n", "seed", "result", "witness", "stats"}
    assert payload["n"] == 3 and payload["result"] == "D^1 (1)"


def test_json_is_byte_stable(capsys):
    runs = []
    for _ in range(2):
        code, out, _ = run(
            capsys, "conj", "-n", "4", "1 2 3", "2 3 1", "--json", "--seed", "9"
        )
        assert code in (0, 1)
        runs.append(out)
    assert runs[0] == runs[1]


def test_conj_exit_codes_and_witness(capsys):
    code, out, _ = run(capsys, "conj", "-n", "3", "1", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"] == "conjugate"
    assert payload["witness"]
    assert set(payload["stats"]) == {"T", "N", "R_max", "sc_size", "contract_calls"}

    code, out, _ = run(capsys, "conj", "-n", "3", "1", "-1")
    assert code == 1 and out.strip() == "not-conjugate"


def test_conj_oracle_flag(capsys):
    code, out, _ = run(capsys, "conj", "-n", "3", "1", "2", "--oracle")
    assert code == 0
    code, _, err = run(capsys, "conj", "-n", "7", "1", "2", "--oracle")
    assert code == 2 and "refused" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "nf", "-n", "3", "1 x")
    assert code == 2
    assert "position" in err


def test_slide_steps(capsys):
    code, out, _ = run(capsys, "slide", "-n", "3", "1 2", "--steps", "2")
    assert code == 0 and out == "D^0 (1 2)\n"
    code, out, _ = run(capsys, "slide", "-n", "3", "1 2")
    assert code == 0 and out == "D^0 (2 1)\n"


def test_circuit_period(capsys):
    code, out, _ = run(capsys, "circuit", "-n", "5", "D 2 1 4 3 4 . 1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["period"] == 6
    assert len(payload["result"]["elements"]) == 6


def test_sc_and_stats(capsys):
    code, out, _ = run(capsys, "sc", "-n", "3", "1 2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["size"] == 2

    code, out, _ = run(capsys, "stats", "-n", "3", "1 2", "--json")
    assert code == 0
    stats = json.loads(out)["stats"]
    assert stats["sc_size"] == 2 and stats["contract_calls"] > 0


def test_scg_dot_matches_json(capsys):
    code, json_out, _ = run(capsys, "scg", "-n", "3", "1 2", "--json")
    assert code == 0
    arrows = json.loads(json_out)["result"]["arrows"]
    vertices = json.loads(json_out)["result"]["vertices"]

    code, dot_out, _ = run(capsys, "scg", "-n", "3", "1 2", "--dot")
    assert code == 0
    lines = dot_out.strip().splitlines()
    assert lines[0] == "digraph scg {" and lines[-1] == "}"
    node_lines = [l for l in lines if "label=" in l and "->" not in l]
    edge_lines = [l for l in lines if "->" in l]
    assert len(node_lines) == len(vertices)
    assert len(edge_lines) == len(arrows)


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "oracle-check", "-n", "3", "1 2", "2 1")
    assert code == 0 and out.strip() == "agree:conjugate"
    code, out, _ = run(capsys, "oracle-check", "-n", "3", "1", "-1")
    assert code == 0 and out.strip() == "agree:not-conjugate"
