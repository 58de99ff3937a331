"""End-to-end CLI tests: JSON round-trips, exit codes, determinism, and
the bench CSV format.
"""

import json

from click.testing import CliRunner

from alghull.cli import main

runner = CliRunner()


def _invoke(args, stdin=None):
    return runner.invoke(main, args, input=stdin, catch_exceptions=False)


def test_hull_matrix_roundtrip(tmp_path):
    payload = {"matrix": [[0, 2], [1, 0]]}  # companion of x^2 - 2
    src = tmp_path / "in.json"
    src.write_text(json.dumps(payload))
    result = _invoke(["hull", str(src)])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["dim"] == 1
    assert data["certification"] == "proven"
    assert data["witnesses"]["lambda_basis"] == [[1, 1]]
    assert data["basis"] == [[["0", "2"], ["1", "0"]]]


def test_hull_reads_stdin():
    result = _invoke(["hull", "-"], stdin=json.dumps({"matrix": [[1, 1], [0, 1]]}))
    assert result.exit_code == 0
    assert json.loads(result.output)["dim"] == 2


def test_hull_lie_algebra():
    payload = {"lie_algebra": [[[0, 1], [0, 0]], [[0, 0], [1, 0]]]}
    result = _invoke(["hull", "-"], stdin=json.dumps(payload))
    assert result.exit_code == 0
    assert json.loads(result.output)["dim"] == 3


def test_hull_group_route(tmp_path):
    group = tmp_path / "group.json"
    group.write_text(json.dumps([[2, 1]]))  # swap, 1-indexed
    payload = {"matrix": [[0, 2], [1, 0]]}
    result = _invoke(["hull", "-", "--group", str(group)],
                     stdin=json.dumps(payload))
    assert result.exit_code == 0
    assert json.loads(result.output)["dim"] == 1


def test_relations_command():
    payload = {
        "poly": [-2, 0, 1],
        "targets": [[[1, [1, 0]]], [[1, [0, 1]]]],
    }
    result = _invoke(["relations", "-"], stdin=json.dumps(payload))
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["basis"] == [[1, 1]]
    assert data["certification"] == "proven"
    assert data["bounds"]["M_prime"] == 3


def test_iszero_command():
    payload = {"poly": [-2, 0, 1], "target": [[1, [1, 0]], [1, [0, 1]]]}
    result = _invoke(["iszero", "-"], stdin=json.dumps(payload))
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["result"] is True
    payload["poly"] = [-1, -1, 1]
    result = _invoke(["iszero", "-"], stdin=json.dumps(payload))
    assert json.loads(result.output)["result"] is False


def test_iszero_heuristic_mode():
    payload = {"poly": [-2, 0, 1], "target": [[1, [1, 0]], [1, [0, 1]]],
               "k": 3}
    result = _invoke(["iszero", "-", "--mode", "heuristic"],
                     stdin=json.dumps(payload))
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["result"] is True and data["mode"] == "heuristic"


def test_lll_command():
    result = _invoke(["lll", "-"], stdin=json.dumps([[1, 1, 1], [-1, 0, 2], [3, 5, 6]]))
    assert result.exit_code == 0
    rows = [[int(x) for x in row] for row in json.loads(result.output)]
    assert len(rows) == 3


def test_jordan_command():
    result = _invoke(["jordan", "-"], stdin=json.dumps({"matrix": [[1, 1], [0, 1]]}))
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["semisimple"] == [["1", "0"], ["0", "1"]]
    assert data["nilpotent"] == [["0", "1"], ["0", "0"]]


def test_oracle_commands():
    payload = {"poly": [-2, 0, 0, 0, 1]}
    result = _invoke(["oracle-deg4", "-", "--trust-assertion"],
                     stdin=json.dumps(payload))
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["kind"] == "span"
    assert data["gammas"] == [["0", "1", "0", "0"], ["0", "0", "0", "1"]]
    result = _invoke(["oracle-deg6", "-", "--trust-assertion"],
                     stdin=json.dumps({"poly": [-2, 0, 0, 0, 0, 0, 1]}))
    assert json.loads(result.output)["kind"] == "span"


def test_oracle_requires_assertion():
    result = runner.invoke(main, ["oracle-deg4", "-"],
                           input=json.dumps({"poly": [-2, 0, 0, 0, 1]}))
    assert result.exit_code == 2


def test_input_error_exit_code():
    result = runner.invoke(main, ["hull", "-"], input="{not json")
    assert result.exit_code == 2
    result = runner.invoke(main, ["hull", "-"], input=json.dumps({"nope": 1}))
    assert result.exit_code == 2


def test_deterministic_output():
    payload = json.dumps({"matrix": [[0, 2], [1, 0]], "seed": 0})
    a = json.loads(_invoke(["hull", "-"], stdin=payload).output)
    b = json.loads(_invoke(["hull", "-"], stdin=payload).output)
    a.pop("timings")
    b.pop("timings")
    assert a == b


def test_out_option(tmp_path):
    dest = tmp_path / "out.json"
    result = _invoke(["hull", "-", "--out", str(dest)],
                     stdin=json.dumps({"matrix": [[0, 2], [1, 0]]}))
    assert result.exit_code == 0 and result.output == ""
    assert json.loads(dest.read_text())["dim"] == 1


def test_bench_command(tmp_path):
    entries = [
        {"label": "x^2-2", "poly": [-2, 0, 1], "group_order": 2,
         "group_kind": "frobenius", "expected_dim": 1},
        {"label": "x^4-2", "poly": [-2, 0, 0, 0, 1], "group_order": 8,
         "group_kind": "radical", "expected_dim": 2},
    ]
    src = tmp_path / "corpus.json"
    src.write_text(json.dumps(entries))
    plot = tmp_path / "plot.dat"
    result = _invoke(["bench", str(src), "--plot-data", str(plot)])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "label,route,mode,p,f_p,k,seconds,dim,ok"
    assert len(lines) == 5  # header + 2 entries x 2 routes
    for line in lines[1:]:
        fields = line.split(",")
        assert fields[1] in ("A", "B")
        assert fields[8] == "yes"
        float(fields[6])  # seconds parse
    plot_lines = plot.read_text().strip().splitlines()
    assert plot_lines[0].startswith("#")
    assert len(plot_lines) == 5


def test_bench_isolates_bad_entries(tmp_path):
    entries = [
        {"label": "bad", "poly": [1, 2], "group_kind": "frobenius"},
        {"label": "x^2-2", "poly": [-2, 0, 1], "group_order": 2,
         "group_kind": "frobenius", "expected_dim": 1},
    ]
    src = tmp_path / "corpus.json"
    src.write_text(json.dumps(entries))
    result = _invoke(["bench", str(src)])
    assert result.exit_code == 0
    assert "error" in result.output
    assert result.output.count("x^2-2") == 2
