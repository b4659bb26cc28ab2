import json
import subprocess
import sys

import pytest

from giambelli_snf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, out, json.loads(out)


def test_snf_horizontal(capsys):
    code, out, data = run_json(capsys, "snf", "--partition", "2,1", "--kind", "horizontal", "--spec", "phi-t")
    assert code == 0 and data["match"] is True
    assert data["snf"] == [["1/1"], ["0/1", "-1/1", "0/1", "1/1"]]
    code, text, _ = run(capsys, "snf", "--partition", "2,1", "--kind", "horizontal")
    assert "snf:            [1, t^3 - t]" in text


def test_snf_single_cell(capsys):
    code, _, data = run_json(capsys, "snf", "--partition", "1", "--kind", "rim")
    assert code == 0 and data["snf"] == [["0/1", "1/1"]]


def test_snf_direction_and_matrix(capsys):
    code, _, data = run_json(capsys, "snf", "--partition", "2,2", "--direction", "UR", "--show-matrix", "--oracle")
    assert code == 0 and data["match"] and data["oracle_match"]
    assert len(data["matrix"]) == 2


def test_snf_q_diamond_candidates(capsys):
    code, _, data = run_json(capsys, "snf", "--partition", "3,1", "--kind", "rim", "--spec", "q-diamond", "--both-predictions")
    assert code == 0
    assert data["candidates"] == {"y+[c]_q": True, "1-q^c*y": False}


@pytest.mark.parametrize(
    "argv,token",
    [
        (["snf", "--partition", "2,x"], "'x'"),
        (["snf", "--partition", "1,2"], "1,2"),
        (["snf", "--partition", "2,2", "--direction", "URR"], "URR"),
        (["snf", "--partition", "2,2", "--direction", "UX"], "X"),
        (["snf", "--partition", "2,1", "--spec", "nope"], "nope"),
        (["verify", "--max-size", "0"], "'0'"),
        (["verify", "--max-size", "2", "--kinds", "hook,spiral"], "spiral"),
        (["snf"], "--partition"),
    ],
)
def test_usage_errors(capsys, argv, token):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1
    assert token in capsys.readouterr().err


def test_list_decompositions(capsys):
    code, _, data = run_json(capsys, "list-decompositions", "--partition", "2,1")
    assert code == 0 and data["total"] == 4 and len(data["decompositions"]) == 4
    _, _, data = run_json(capsys, "list-decompositions", "--partition", "1")
    assert data["total"] == 1
    _, _, data = run_json(capsys, "list-decompositions", "--partition", "3,2,1", "--limit", "3")
    assert data["total"] == 16
    assert [d["direction"] for d in data["decompositions"]] == ["RRRR", "RRRU", "RRUR"]
    code, text, _ = run(capsys, "list-decompositions", "--partition", "2,1")
    assert text.splitlines()[-1] == "total: 4"


def test_verify(capsys):
    code, _, data = run_json(capsys, "verify", "--max-size", "1", "--spec", "phi-t")
    assert code == 0 and data["total"] == 3 and data["matched"] == 3
    code, _, data = run_json(capsys, "verify", "--max-size", "6", "--spec", "phi-t", "--random-decomps", "4", "--seed", "7")
    assert code == 0 and data["matched"] == data["total"] and data["mismatched"] == []
    _, again, _ = run(capsys, "verify", "--max-size", "6", "--spec", "phi-t", "--random-decomps", "4", "--seed", "7", "--format", "json")
    assert json.loads(again) == data


def test_verify_both_predictions(capsys):
    code, _, data = run_json(capsys, "verify", "--max-size", "5", "--spec", "q-diamond", "--report-both-predictions")
    assert code == 0
    assert all(set(i["candidates"]) == {"y+[c]_q", "1-q^c*y"} for i in data["instances"])
    assert len(data["instances"]) == data["total"]


def test_oracle_check(capsys):
    code, _, data = run_json(capsys, "oracle-check", "--max-size", "3", "--max-t", "2")
    assert code == 0 and data["failures"] == []


@pytest.mark.parametrize(
    "argv",
    [
        ["snf", "--partition", "3,2,1", "--kind", "hook", "--spec", "q-hat", "--show-matrix"],
        ["list-decompositions", "--partition", "2,2"],
        ["verify", "--max-size", "3", "--spec", "q-diamond", "--report-both-predictions"],
    ],
)
def test_json_roundtrip_is_byte_identical(capsys, argv):
    _, out, data = run_json(capsys, *argv)
    assert json.dumps(data, sort_keys=True) + "\n" == out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "giambelli_snf", "snf", "--partition", "2,2", "--kind", "hook"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "match:          true" in proc.stdout


def test_mismatch_exit_code(capsys, monkeypatch):
    import giambelli_snf.smith as smith

    real = smith.predicted_diagonal
    monkeypatch.setattr(smith, "predicted_diagonal", lambda p, m, s, factor=None: [d * 2 + 1 for d in real(p, m, s)])
    code, out, _ = run(capsys, "snf", "--partition", "2,1")
    assert code == 2 and "match:          false" in out
    code, _, data = run_json(capsys, "verify", "--max-size", "2")
    assert code == 2 and len(data["mismatched"]) == data["total"]
