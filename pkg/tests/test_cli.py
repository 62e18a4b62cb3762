import json

import pytest

from belconf.cli import main

FIELD8 = "semifield q=2 n=3\n[1,0,0]\n[0,0,0]\n[0,0,0]\n"
FIELD27 = "semifield q=3 n=3\n[1,0,0]\n[0,0,0]\n[0,0,0]\n"
GTF27 = "gtf q=3 n=3 c=3 a=1 b=2\n"
ZERO8 = "semifield q=2 n=3\n[0,0,0]\n[0,0,0]\n[0,0,0]\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in {"f8": FIELD8, "f27": FIELD27, "g27": GTF27, "z8": ZERO8}.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


def test_gtf_knuth_d(capsys):
    code, rep = run(capsys, "gtf", "knuth", "--q", "3", "--n", "3", "--c", "3", "--a", "1", "--b", "2", "--word", "d")
    assert code == 0
    assert "c=3 a=2 b=1" in rep["gtf"]


def test_gtf_invalid_parameters(capsys):
    code, rep = run(capsys, "gtf", "build", "--q", "3", "--n", "3", "--c", "0", "--a", "1", "--b", "2")
    assert code == 1 and rep["valid"] is False


def test_gtf_n_one_is_usage_error(capsys):
    code, rep = run(capsys, "gtf", "build", "--q", "27", "--n", "1", "--c", "3", "--a", "1", "--b", "2")
    assert code == 2 and rep["error"] == "ValidityError"


def test_semifield_check(capsys, files):
    code, rep = run(capsys, "semifield", "check", files["f8"])
    assert code == 0 and rep["presemifield"] is True
    code, rep = run(capsys, "semifield", "check", files["z8"])
    assert code == 1 and rep["presemifield"] is False


def test_semifield_mult(capsys, files):
    code, rep = run(capsys, "semifield", "mult", files["f8"], "--x", "2", "--y", "3")
    assert code == 0 and rep["product"] == 6


def test_nuclei_of_twisted_field(capsys, files):
    code, rep = run(capsys, "semifield", "nuclei", files["g27"])
    assert (rep["left"], rep["middle"], rep["right"], rep["centre"]) == (3, 3, 3, 3)


def test_iso_test(capsys, files):
    code, rep = run(capsys, "iso", "test", files["f27"], files["f27"])
    assert code == 0 and rep["isotopic"] is True and rep["verified"] is True
    code, rep = run(capsys, "iso", "test", files["g27"], files["f27"])
    assert rep["isotopic"] is False


def test_iso_budget(capsys, tmp_path):
    p = tmp_path / "f32.txt"
    p.write_text("semifield q=2 n=5\n" + "[1,0,0,0,0]\n" + "[0,0,0,0,0]\n" * 4)
    code, rep = run(capsys, "iso", "test", str(p), str(p))
    assert code == 2 and rep["error"] == "BudgetExceeded"


def test_symplectic_roundtrip(capsys, files):
    code, rep = run(capsys, "bel", "symplectic", files["f27"])
    assert code == 0 and rep["bel"].startswith("bel q=3 n=3 r=2")


def test_missing_file(capsys):
    code, rep = run(capsys, "semifield", "check", "/nonexistent/file")
    assert code == 2 and rep["error"] == "UsageError"


def test_malformed_file(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("semifield q=2 n=3\n[1,0]\n")
    code, rep = run(capsys, "semifield", "check", str(p))
    assert code == 2 and rep["error"] == "FormatError"


def test_text_report(capsys, files):
    assert main(["semifield", "check", files["f8"]]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# semifield check\n")
    assert "presemifield: true" in out


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gtf", "knuth", "--word", "zz"])
    assert exc.value.code == 2
