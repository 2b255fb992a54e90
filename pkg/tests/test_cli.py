from __future__ import annotations

import subprocess
import sys

import pytest

from linxlate.cli import INCONCLUSIVE, MISMATCH, OK, USAGE, main


def run(capsys, *argv) -> tuple:
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_translate(capsys):
    assert run(capsys, "translate", "--translation", "gg", "(P & Q) * R")[:2] == (
        OK, "(~~P & ~~Q) * ~~R\n")
    assert run(capsys, "translate", "--translation", "kolm-outer", "(P & Q) * R")[1] == (
        "~~(~~(~~P & ~~Q) * ~~R)\n")
    assert run(capsys, "translate", "--translation", "dagger", "--from", "il", "P /\\ Q")[1] == (
        "P & Q\n")


def test_translate_language_mismatch(capsys):
    code, _, err = run(capsys, "translate", "--translation", "gg", "--from", "il", "P")
    assert code == USAGE and "error" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "translate", "--translation", "gg", "P * * Q")
    assert code == USAGE and "byte 4" in err


def test_translate_file_input(capsys, tmp_path):
    f = tmp_path / "in.txt"
    f.write_text("P\n# skip\nP & Q\n")
    code, out, _ = run(capsys, "--format", "records", "translate", "--translation", "lgg",
                       "--input", str(f))
    assert code == OK
    assert out.count("translation=lgg") == 2 and "output=~~P & ~~Q" in out


def test_simplify_outside_and_inside(capsys):
    eq5 = "~~(~~(~~P & ~~Q) * ~~R)"
    code, out, _ = run(capsys, "simplify", "--trace", eq5)
    lines = out.splitlines()
    assert code == OK and lines[0] == "(~~P & ~~Q) * ~~R" and len(lines) == 3
    assert run(capsys, "simplify", "--strategy", "inside", eq5)[1] == "~~((~~P & ~~Q) * ~~R)\n"
    assert run(capsys, "simplify", "--simplification", "none", eq5)[1] == eq5 + "\n"


def test_prove(capsys):
    code, out, _ = run(capsys, "prove", "--theory", "cllb", "~~P |- P")
    assert code == OK and out.startswith("Proved")
    code, out, _ = run(capsys, "prove", "--timeout-ms", "500", "~~P |- P")
    assert code == INCONCLUSIVE and out.startswith("NotFound")
    assert run(capsys, "prove", "--expect", "notfound", "--timeout-ms", "500", "~~P |- P")[0] == OK
    assert run(capsys, "prove", "--expect", "notfound", "!P |- P")[0] == MISMATCH


def test_prove_show_proof(capsys):
    code, out, _ = run(capsys, "prove", "--show-proof", "P * Q |- Q * P")
    assert code == OK and "⊗L" in out


def test_refute(capsys):
    code, out, _ = run(capsys, "refute", "~~(~~P * ~~Q) -o ~~P * ~~Q")
    assert code == OK and out.startswith("Found countermodel")
    code, out, _ = run(capsys, "refute", "--max-size", "3", "--max-domain", "1", "P -o P")
    assert code == INCONCLUSIVE and "NotFoundWithinBounds" in out
    assert run(capsys, "refute", "--expect", "valid", "P -o Q")[0] == MISMATCH


def test_check_tables_records(capsys):
    code, out, _ = run(capsys, "--format", "records", "check-tables", "prop5")
    assert code == OK
    records = out.strip().split("\n\n")
    assert len(records) == 13
    assert "row=viii" in out and "status=INCONCLUSIVE" in out
    # smaller bounds leave some rows undecided, which is exit code 3
    code, _, _ = run(capsys, "check-tables", "prop5", "--max-size", "3", "--max-domain", "1")
    assert code == INCONCLUSIVE


def test_corpus_is_reproducible(capsys):
    a = run(capsys, "corpus", "--count", "5", "--seed", "9")[1]
    b = run(capsys, "corpus", "--count", "5", "--seed", "9")[1]
    assert a == b and len(a.splitlines()) == 5


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["translate"])
    assert e.value.code == USAGE


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "linxlate", "translate", "--translation",
                        "star", "P + Q"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "!P + !Q\n"
