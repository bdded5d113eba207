import csv
import io
import json
import subprocess
import sys

import pytest

from gradedvol.cli import run

STAIRCASE = '{"kind": "staircase", "coeffs": ["1/5", "1"]}'
VALUATION = '{"kind": "valuation", "weights": ["1", "sqrt(2)"]}'


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_volume_summary_and_csv(tmp_path, capsys):
    target = tmp_path / "vol.csv"
    code, out, _ = call(capsys, "--spec", STAIRCASE, "--command", "volume", "--max-n", "400", "--out", str(target))
    assert code == 0
    assert out.startswith("vol(I_*) = 5 (ℓ/n² → 5/2)")
    text = target.read_bytes().decode()
    assert "\r" not in text
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["n", "raw", "normalized", "extrapolated", "error_proxy"]
    assert rows[-1]["n"] == "400" and rows[-1]["normalized"] == "401/80"


def test_spec_from_file(tmp_path, capsys):
    spec = tmp_path / "fam.json"
    spec.write_text(STAIRCASE)
    code, out, err = call(capsys, "--spec", str(spec), "--command", "table", "--max-n", "8")
    assert code == 0 and out.startswith("n,raw,normalized")
    assert "ℓ/n²" in err


def test_multiplicity(capsys):
    spec = '{"kind": "powers", "d": 2, "gens": [[2, 0], [0, 3]]}'
    code, out, err = call(capsys, "--spec", spec, "--command", "multiplicity", "--format", "json")
    assert code == 0
    assert err.strip() == "e(I) = 6"
    assert json.loads(out)["reference"] == "6"


def test_phi_renders_radical(capsys, tmp_path):
    code, out, _ = call(capsys, "--spec", VALUATION, "--command", "phi", "--max-n", "1000", "--out", str(tmp_path / "p.csv"))
    assert code == 0
    assert "√2/4 ≈ 0.353553" in out


def test_okounkov_json_report(capsys):
    code, out, err = call(capsys, "--spec", STAIRCASE, "--command", "okounkov", "--truncation", "40", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["colength_limit"] == "5/2"
    assert rep["conditions"]["cone3"] is True
    assert rep["constants"] == {"beta": 25, "c": 5, "rho": 5}
    assert "vol(Δ(Γ)) = 310" in err


def test_additivity_and_epsilon(capsys):
    spec = '{"kind": "powers", "d": 2, "gens": [[2, 0], [1, 1]]}'
    code, out, _ = call(capsys, "--spec", spec, "--command", "additivity", "--max-n", "16", "--format", "json")
    assert code == 0 and json.loads(out)["T"] == [{"d": 2, "support": [1]}]
    code, out, err = call(capsys, "--spec", spec, "--command", "epsilon", "--max-n", "32")
    assert code == 0 and err.startswith("ε(I) ≈")


def test_symbolic_requires_prime(capsys):
    spec = '{"kind": "symbolic", "d": 2, "gens": [[2, 0], [1, 1]], "J": [[0, 1]]}'
    code, _, err = call(capsys, "--spec", spec, "--command", "symbolic")
    assert code == 2 and "field=prime" in err
    code, _, err = call(capsys, "--spec", spec, "--command", "symbolic", "--prime", "1,2", "--max-n", "16")
    assert code == 0 and "symbolic multiplicity" in err


def test_outputs_are_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        assert call(capsys, "--spec", VALUATION, "--command", "volume", "--max-n", "64", "--threads", "3", "--out", str(p))[0] == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


@pytest.mark.parametrize(
    "argv, code, needle",
    [
        (["--spec", '{"kind": "spiral"}', "--command", "volume"], 2, "field=kind"),
        (["--spec", '{"kind": "powers", "d": 2}', "--command", "volume"], 2, "field=gens"),
        (["--spec", "/nonexistent.json", "--command", "volume"], 2, "field=spec"),
        (["--spec", "{not json", "--command", "volume"], 2, "field=spec"),
        (["--spec", STAIRCASE, "--command", "volume", "--max-n", "1"], 2, "field=max-n"),
        (["--command", "check", "--suite", "nonsense"], 2, "field=suite"),
        (["--spec", '{"kind": "powers", "d": 2, "gens": [[1, 0]]}', "--command", "volume"], 3, "n=1"),
        (["--spec", STAIRCASE, "--command", "volume", "--max-n", "100000", "--cap-seconds", "1"], 4, "resource-cap"),
    ],
)
def test_error_exit_codes(argv, code, needle):
    # run in a subprocess: the time cap exits the interpreter
    proc = subprocess.run([sys.executable, "-m", "gradedvol", *argv], capture_output=True, text=True, timeout=60)
    assert proc.returncode == code
    lines = proc.stderr.strip().splitlines()
    assert len(lines) == 1 and lines[0].startswith("error=") and needle in lines[0]


def test_check_suite_json(capsys):
    code, out, err = call(capsys, "--command", "check", "--suite", "intro-example")
    assert code == 0
    rep = json.loads(out)
    assert rep["passed"] is True and rep["suite"] == "intro-example"
    assert err.startswith("PASS intro-example")


def test_console_script_installed():
    proc = subprocess.run(["gradedvol", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "--cap-seconds" in proc.stdout
