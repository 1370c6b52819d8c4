import csv
import io
import json
import subprocess
import sys

import pytest

from grassmoduli.cli import main, render_moduli
from grassmoduli.moduli import ModuliReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decompose_table(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "2", "--q", "2", "--k", "1", "--format", "table")
    assert code == 0
    rows = [line.split() for line in out.splitlines()[3:]]
    assert [r[0] for r in rows] == ["2,2", "2,1,1", "1,1,1,1"]
    assert [r[4] for r in rows] == ["symmetric", "antisymmetric", "symmetric"]
    assert [r[5] for r in rows] == ["20", "15", "1"]
    assert [r[6] for r in rows] == ["-2", "-1", "0"]
    assert [r[7] for r in rows] == ["yes", "yes", "no"]


def test_decompose_single_row(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "3", "--q", "1", "--k", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [c["partition"] for c in doc["components"]] == [[4], [3, 1], [2, 2]]
    assert doc["components"][1]["center_weight"] == {"num": -8, "den": 3}
    assert doc["components"][0]["dimension"] == "35"


def test_decompose_csv(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "2", "--q", "2", "--k", "1", "--format", "csv")
    assert code == 0
    assert '"2,1,1"' in out
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "partition"
    assert rows[2][:2] == ["2,1,1", "1,0,1"]


def test_decompose_parity_filter(capsys):
    _, out, _ = run(capsys, "decompose", "--p", "2", "--q", "2", "--k", "1", "--parity", "alt", "--format", "json")
    assert [c["partition"] for c in json.loads(out)["components"]] == [[2, 1, 1]]


def test_decompose_rejects_q_above_p(capsys):
    code, _, err = run(capsys, "decompose", "--p", "2", "--q", "3", "--k", "1")
    assert code == 2
    assert "requires p ≥ q" in err
    assert len(err.strip().splitlines()) == 1


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--p", "2", "--q", "2", "--k", "1", "--bogus"])
    assert exc.value.code == 2


def test_moduli_json(capsys):
    code, out, _ = run(capsys, "moduli", "--p", "2", "--q", "2", "--k", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim_Vk"] == "1" and doc["N"] == "-1"
    assert doc["flags"] == {"routes_agree": True, "gs_singleton": True, "skew_label_matches_paper": False}
    assert doc["gs_sym_components"] == [[2, 2]]


def test_moduli_table_notes(capsys):
    code, out, _ = run(capsys, "moduli", "--p", "2", "--q", "2", "--k", "1")
    assert code == 0
    assert "N + 2 = dim V_k gives no target quadric" in out
    assert "one-parameter family" in out


@pytest.mark.parametrize("p, q, k, dim", [(1, 1, 3, "3"), (2, 1, 1, "0")])
def test_moduli_spot_values(capsys, p, q, k, dim):
    _, out, _ = run(capsys, "moduli", "--p", str(p), "--q", str(q), "--k", str(k), "--format", "json")
    assert json.loads(out)["dim_Vk"] == dim


def test_moduli_csv(capsys):
    _, out, _ = run(capsys, "moduli", "--p", "3", "--q", "2", "--k", "1", "--format", "csv")
    header, row = list(csv.reader(io.StringIO(out)))
    rec = dict(zip(header, row))
    assert rec["gs_sym_components"] == "2,2"
    assert rec["routes_agree"] == "true"


def test_moduli_json_round_trip():
    text = render_moduli(3, 2, 2, "json")
    again = ModuliReport.from_json(text).to_json(indent=2) + "\n"
    assert again == text


def test_moduli_bad_input(capsys):
    code, _, err = run(capsys, "moduli", "--p", "2", "--q", "2", "--k", "-1")
    assert code == 2 and "k ≥ 0" in err


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--max-k", "1", "--suite", "weights")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("[")]
    assert lines and all(l.startswith("[PASS] weights") for l in lines)
    assert "discrepancies" not in out


def test_verify_bad_bound(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "0")
    assert code == 2 and "invalid bound" in err


def test_verify_unknown_suite(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_dim_command(capsys):
    assert run(capsys, "dim", "--n", "4", "--partition", "2,2")[1] == "20\n"
    assert run(capsys, "dim", "--n", "4", "--partition", "1,1")[1] == "6\n"
    code, _, err = run(capsys, "dim", "--n", "3", "--partition", "2,1,1,1")
    assert code == 2 and "more than 3 rows" in err
    assert run(capsys, "dim", "--n", "3", "--partition", "2,1,1,1", "--allow-zero")[1] == "0\n"
    assert run(capsys, "dim", "--n", "3", "--partition", "2,x")[0] == 2


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    assert main(["moduli", "--p", "2", "--q", "1", "--k", "2", "--format", "json", "-o", str(path)]) == 0
    # 21 - dim Sym^4 C^3 = 21 - 15
    assert json.loads(path.read_text())["dim_Vk"] == "6"


def test_deterministic_output():
    argv = [sys.executable, "-m", "grassmoduli", "decompose", "--p", "4", "--q", "2", "--k", "2", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second


def test_verify_acceptance_run(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "6", "--max-k", "3")
    assert code == 0
    assert "[FAIL]" not in out
    assert "skew-label     (p,q,k)=(2,2,1)" in out
    assert "weight-factor" in out
    assert out.rstrip().endswith("verify: all checks passed")
