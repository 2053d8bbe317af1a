from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from heartbox.cli import main, run


@pytest.fixture
def cli(tmp_path):
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, ["--output-dir", str(tmp_path), *args], catch_exceptions=False)
    invoke.out = tmp_path
    return invoke


def _write(path, obj) -> str:
    path.write_text(json.dumps(obj))
    return str(path)


def test_nakayama_ar_sequence(cli):
    assert cli("fixture", "nakayama", "--p", "7", "--n", "3").exit_code == 0
    r = cli("ar-sequence", "--module", "M2")
    assert r.exit_code == 0
    assert r.output.strip() == "0 -> M2 -> M1⊕M3 -> M2 -> 0"
    rep = json.loads((cli.out / "ar-sequence.json").read_text())
    assert rep["length"] == 3


def test_iyama_check_and_sequence(cli, tmp_path):
    cli("fixture", "a3rad2")
    c = _write(tmp_path / "C.json", {"mode": "ADD", "generators": ["P1", "P2", "P3", "S1"]})
    cat = _write(tmp_path / "cat.json", ["S1", "S2", "S3", "P1", "P2"])
    r = cli("iyama", "check", "--subcat", c, "--n", "1", "--catalog", cat)
    assert r.exit_code == 0
    assert "passes: true" in r.output and "excluded: ['S2']" in r.output
    r = cli("iyama", "sequence", "--module", "S1", "--subcat", c, "--n", "1")
    assert r.output.strip() == "0 -> S3 -> P2 -> P1 -> S1 -> 0"
    r = cli("iyama", "duality", "--module", "S1", "--subcat", c, "--n", "1")
    assert r.output.strip().endswith("equal: true")


def test_strict_convention_flag(cli, tmp_path):
    cli("fixture", "a3rad2")
    c = _write(tmp_path / "C.json", {"mode": "ADD", "generators": ["P1", "P2", "P3", "S1"]})
    r = cli("--convention", "strict", "iyama", "check", "--subcat", c, "--n", "1")
    assert "passes: false" in r.output


def test_verma_ext(cli):
    r = cli("soergel", "verma-ext", "--type", "A1", "--word", "s", "--max-i", "3")
    assert r.exit_code == 0 and json.loads(r.output) == [1, 1, 0, 0]


def test_soergel_decompose_report(cli):
    r = cli("soergel", "decompose", "--type", "A2", "--word", "s,t,s")
    assert r.output.strip() == "B_sts ⊕ B_s"
    rep = json.loads((cli.out / "soergel-decompose.json").read_text())
    assert rep["summands"] == [{"element": "sts", "mult": 1}, {"element": "s", "mult": 1}]


def test_soergel_dims_and_datum_file(cli, tmp_path):
    d = _write(tmp_path / "datum.json", {"type": "B2", "field": {"kind": "Q"}})
    r = cli("soergel", "dims", "--datum", d)
    assert "dim 8" in r.output and "[1, 2, 2, 2, 1]" in r.output


def test_empty_word_rouquier_is_trivial(cli):
    r = cli("soergel", "rouquier", "--type", "A1")
    assert r.exit_code == 0
    rep = json.loads((cli.out / "rouquier.json").read_text())
    assert rep["window"] == [0, 0] and rep["cohomology"] == {"0": 1}


def test_serre_report(cli):
    cli("fixture", "nakayama", "--p", "7", "--n", "2")
    r = cli("serre", "apply", "--module", "k")
    assert r.exit_code == 0
    rep = json.loads((cli.out / "serre.json").read_text())
    assert rep["window"] == [-2, 0]
    assert [rep["labels"][d] for d in ("-2", "-1", "0")] == ["M1", "M2", "M2"]


def test_heart_and_complex_commands(cli, tmp_path):
    cli("fixture", "nakayama", "--p", "7", "--n", "2")
    r = cli("heart", "simple", "--module", "k")
    assert r.exit_code == 0
    simple = json.loads((cli.out / "simple.json").read_text())
    assert simple["simple"] is True
    path = _write(tmp_path / "L.json", simple)
    assert "certified: true" in cli("heart", "certify", path).output
    r = cli("complex", "show", path)
    assert "cohomology dims" in r.output
    assert cli("complex", "minimize", path).exit_code == 0
    r = cli("serre", "check", "--module", "k", "--object", path)
    assert r.output.split() == ["1", "1"]


def test_frobenius_commands(cli):
    cli("fixture", "nakayama")
    assert "frobenius: true" in cli("frobenius", "check").output
    assert cli("frobenius", "dual", "--module", "Lambda").exit_code == 0
    cli("fixture", "a3rad2")
    assert "frobenius: false" in cli("frobenius", "check").output


def test_module_commands(cli):
    cli("fixture", "nakayama", "--p", "7", "--n", "3")
    assert cli("module", "list").exit_code == 0
    assert cli("module", "dtr", "M1").exit_code == 0
    r = cli("module", "ext", "M1", "M1", "--i", "1")
    assert r.exit_code == 0
    assert cli("algebra", "show").exit_code == 0


def test_reports_are_deterministic(cli):
    cli("fixture", "nakayama", "--p", "7", "--n", "3")
    cli("ar-sequence", "--module", "M2")
    first = (cli.out / "ar-sequence.json").read_bytes()
    cli("ar-sequence", "--module", "M2")
    assert (cli.out / "ar-sequence.json").read_bytes() == first


def test_exit_codes(tmp_path):
    out = ["--output-dir", str(tmp_path)]
    assert run(out + ["ar-sequence", "--module", "k"]) == 2   # no workspace yet
    assert run(out + ["fixture", "nakayama"]) == 0
    assert run(out + ["ar-sequence", "--module", "nope"]) == 2
    bad = _write(tmp_path / "bad.json", {"window": [0]})
    assert run(out + ["complex", "show", bad]) == 2
    assert run(out + ["fixture", "a3rad2"]) == 0
    # duality needs a commutative algebra: a domain error
    assert run(out + ["frobenius", "dual", "--module", "S1"]) == 1


def test_output_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("HEARTBOX_OUT", str(tmp_path / "env"))
    r = CliRunner().invoke(main, ["fixture", "nakayama"])
    assert r.exit_code == 0
    assert (tmp_path / "env" / "workspace.json").exists()
