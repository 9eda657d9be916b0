import csv
import io
import json

import pytest

from marypoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly(capsys):
    assert run(capsys, "poly", "--mseq", "2", "--n", "2") == (0, "[0,1,1]\n", "")
    code, out, _ = run(capsys, "poly", "--mseq", "2,3;4", "--n", "5", "--format", "plain")
    assert code == 0 and "t" in out


def test_bad_mseq_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["poly", "--mseq", "1,2", "--n", "3"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["roots", "--m", "1", "--n-max", "3"])
    assert info.value.code == 2


def test_quantum_needs_constant(capsys):
    code, _, _ = run(capsys, "congruence", "--mseq", "2,3;4", "--n-max", "5", "--quantum")
    assert code == 2


def test_verify_all_m2(capsys, tmp_path):
    out = tmp_path / "v.csv"
    code, _, err = run(capsys, "verify-all", "--m", "2", "--n-max", "300", "--out", str(out))
    assert code == 0, err
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 16
    assert {r["pass"] for r in rows} == {"true"}


def test_verify_all_json_is_deterministic(capsys):
    args = ("verify-all", "--m", "3", "--n-max", "60", "--mseq", "2,3;4", "--format", "json")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second and first[0] == 0
    recs = json.loads(first[1])
    assert all(r["pass"] for r in recs)


def test_roots_csv(capsys, tmp_path):
    out = tmp_path / "roots.csv"
    code, summary, _ = run(capsys, "roots", "--m", "4", "--n-max", "400", "--out", str(out))
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == sum(range(1, 401))
    assert max(float(r["modulus"]) for r in rows) < 1.41422
    assert max(float(r["residual"]) for r in rows) < 1e-8
    info = json.loads(summary)
    assert info["inside"] + info["on"] + info["outside"] > 0 and not info["failures"]


def test_table_matches_poly(capsys):
    code, out, _ = run(capsys, "table", "--mseq", "3", "--max-n", "6")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    got = {(int(n), int(j)): int(a) for n, j, a in rows}
    assert code == 0 and got[(6, 2)] == 1 and got[(6, 4)] == 1 and got[(6, 3)] == 0


def test_congruence_and_mahler(capsys):
    code, out, _ = run(capsys, "congruence", "--mseq", "3", "--n-max", "100", "--quantum")
    assert code == 0 and out.count("PASS") == 4
    code, out, _ = run(capsys, "mahler", "--m", "2", "--k", "3")
    payload = json.loads(out)
    assert code == 0 and payload["verified"] and payload["Q"] == [0] * 7 + [-1]


def test_kernel_and_spartitions(capsys):
    code, out, _ = run(capsys, "kernel", "--m", "2", "--depth", "4", "--len", "64")
    assert code == 0 and json.loads(out)["classes_distinguishable_at_this_resolution"] == 4
    code, out, _ = run(capsys, "spartitions", "--mseq", "2", "--max-n", "8")
    assert out.splitlines()[1:] == ["0,1", "1,1", "2,1", "3,2", "4,2", "5,2", "6,3", "7,4", "8,4"]
