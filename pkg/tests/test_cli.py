import json
import subprocess
import sys
from pathlib import Path

import pytest

from blowade.cli import main

CORPUS = Path(__file__).resolve().parents[1] / "corpus"
SUPERISOLATED = "z1*z2*z3 + z1^4 + z2^4 + z3^4"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_analyze_json(capsys):
    code, out = run_cli(capsys, "analyze", SUPERISOLATED)
    assert code == 0
    res = json.loads(out)["result"]
    assert res["is_blow_ade"] and res["m"] == 1 and res["zeta"] == [{"d": 4, "nu": -3}]


def test_output_is_byte_deterministic(capsys):
    _, a = run_cli(capsys, "deform-check", "z1*z2*z3 + z1^4 + z2^4 + z3^4 + s*z2^4", "--samples", "0,1", "--seed", "3")
    _, b = run_cli(capsys, "deform-check", "z1*z2*z3 + z1^4 + z2^4 + z3^4 + s*z2^4", "--samples", "0,1", "--seed", "3")
    assert a == b
    assert json.loads(a)["diagnostics"]["seed"] == 3


def test_classify_vars(capsys):
    code, out = run_cli(capsys, "classify", "--vars", "x2,x3", "x2^2 + x3^5")
    assert code == 0 and json.loads(out)["result"]["index"] == 4


def test_exit_codes(capsys):
    assert run_cli(capsys, "analyze", str(CORPUS / "non_reduced.poly"))[0] == 1
    assert run_cli(capsys, "analyze", "z1 + ")[0] == 2
    assert run_cli(capsys, "compare", SUPERISOLATED)[0] == 2
    assert run_cli(capsys, "analyze", SUPERISOLATED, "--point", "1:x:0")[0] == 2
    with pytest.raises(SystemExit) as err:
        main(["analyze", SUPERISOLATED, "--truncation", "lots"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_user_points(capsys):
    code, out = run_cli(capsys, "analyze", SUPERISOLATED, "--point", "1:0:0", "--point", "0:1:0", "--point", "0:0:1")
    assert code == 0 and json.loads(out)["result"]["k0"] == 3
    code, out = run_cli(capsys, "analyze", SUPERISOLATED, "--point", "1:1:1")
    assert code == 2 and "not singular" in json.loads(out)["diagnostics"]["error"]["message"]


def test_text_format(capsys):
    code, out = run_cli(capsys, "zeta", "z1^2+z2^2+z3^2", "--format", "text")
    assert code == 0 and "degree: -2" in out


def test_corpus_mode(capsys):
    code, out = run_cli(capsys, "analyze", "--corpus", str(CORPUS))
    body = json.loads(out)
    names = [r["file"] for r in body["reports"]]
    assert names == sorted(p.name for p in CORPUS.glob("*.poly"))
    assert code == 1  # the non-reduced example is a domain error
    by = {r["file"]: r for r in body["reports"]}
    assert by["superisolated_nodal_cubic.poly"]["result"]["le_yomdin"] is True
    assert by["nodal_cubic_m2_not_le_yomdin.poly"]["result"]["le_yomdin"] is False


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "blowade.cli", "zeta", "z1^2+z2^3+z3^4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["newton_number"] == 6
