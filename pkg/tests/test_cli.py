import json

import pytest

from k12sigma import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_vir(capsys):
    assert run(capsys, "vir", "cc", "3")[1].out.strip() == "4/5"
    assert run(capsys, "vir", "hw", "3", "4", "1")[1].out.strip() == "3"
    code, out = run(capsys, "vir", "fuse", "3", "4", "1", "4", "1")
    assert code == 0 and out.out.startswith("(1,1)")


def test_invalid_vir_label_exit_code(capsys):
    code, out = run(capsys, "vir", "hw", "3", "1", "4")
    assert code == 2 and "invalid Kac" in out.err


def test_codes(capsys, tmp_path):
    code, out = run(capsys, "codes", "enumerate")
    assert code == 0
    info = json.loads(out.out[out.out.index("{"):])
    assert info["weight_enumerator"] == {"0": 1, "4": 45, "6": 18}
    p = tmp_path / "zero.code"
    p.write_text("1 0\n")
    code, out = run(capsys, "codes", "lattice", "--code", str(p))
    assert json.loads(out.out)["gram"] == [[4, -2], [-2, 4]]


def test_missing_file_exit_code(capsys, tmp_path):
    code, out = run(capsys, "codes", "lattice", "--code", str(tmp_path / "nope"))
    assert code == 2 and out.err.startswith("error:")


def test_run_suite(capsys, tmp_path):
    out_path, tsv = tmp_path / "r.json", tmp_path / "r.tsv"
    code, out = run(capsys, "run", "--suite", "virasoro", "--seed", "3", "--out", str(out_path),
                    "--tsv", str(tsv))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["schema"] == 1 and doc["seed"] == 3 and doc["status"] == "pass"
    lemmas = [c["lemma"] for c in doc["checks"]]
    assert lemmas == sorted(lemmas)
    assert "runtime_ms" not in doc["checks"][0]
    assert tsv.read_text().startswith("lemma\tstatus\truntime_ms")


def test_run_unknown_suite():
    with pytest.raises(SystemExit):
        cli.main(["run", "--suite", "nonsense"])


def test_sigma_build_and_group_from_file(capsys, tmp_path):
    perms = tmp_path / "a3.perms"
    code, out = run(capsys, "sigma", "build", "tensor", "A3", "--perms", str(perms))
    info = json.loads(out.out)
    assert code == 0 and info["symbols"] == 18 and all(info["invariants"].values())
    code, out = run(capsys, "group", "order", "--perms", str(perms))
    assert json.loads(out.out)["order"] == 648
    code, out = run(capsys, "group", "check-3t", "--perms", str(perms))
    assert code == 0 and json.loads(out.out)["pairs_checked"] == 153


def test_sigma_build_from_gram_file(capsys, tmp_path):
    g = tmp_path / "a2.gram"
    g.write_text("2\n2 -1\n-1 2\n")
    code, out = run(capsys, "sigma", "build", "tensor", "--lattice", str(g))
    assert code == 0 and json.loads(out.out)["symbols"] == 9


def test_group_check_3t_failure(capsys, tmp_path):
    p = tmp_path / "bad.perms"
    p.write_text("1 0 3 2\n2 1 0 3\n")
    code, out = run(capsys, "group", "check-3t", "--perms", str(p))
    assert code == 1 and json.loads(out.out)["ok"] is False


def test_f3(capsys):
    code, out = run(capsys, "f3", "space", "8", "-")
    info = json.loads(out.out)
    assert info["nonzero_by_Q"] == {"0": 2132, "1": 2214, "2": 2214}
    assert info["norm1_lines"] == 1107
    code, out = run(capsys, "f3", "reflgroup", "2", "+", "+", "--on", "vectors")
    assert json.loads(out.out)["order"] == 2


def test_group_compare(capsys):
    code, out = run(capsys, "group", "compare", "--seed", "2")
    info = json.loads(out.out)
    assert code == 0 and info["ok"] and info["equivariant"]
    assert info["reflection_order"] == info["sigma_order"] == 20303937239040
