from __future__ import annotations

import json
import subprocess
import sys

import pytest

from skewfact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_row(capsys):
    code, out, _ = run(capsys, "verify", "table1", "--row", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc[0]["scenario"] == "table1.row1" and doc[0]["status"] == "pass"


def test_verify_row_with_m(capsys):
    code, out, _ = run(capsys, "verify", "table1", "--row", "4", "--m", "2")
    assert code == 0 and "PASS" in out


def test_m_without_parametric_row(capsys):
    assert run(capsys, "verify", "table1", "--row", "2", "--m", "3")[0] == 2
    assert run(capsys, "verify", "table1", "--m", "3")[0] == 2


def test_lemma_item(capsys):
    code, out, _ = run(capsys, "verify", "lemma-magma", "--item", "4")
    assert code == 0 and "lemma24.item4" in out


def test_theorem2_out_of_scope(capsys):
    code, out, _ = run(capsys, "verify", "theorem2", "--case", "1.3", "--json")
    assert code == 0
    assert json.loads(out)[0]["status"] == "out-of-scope"


def test_theorem2_case12(capsys):
    assert run(capsys, "verify", "theorem2", "--case", "1.2")[0] == 0


def test_theorem2_bad_m(capsys):
    assert run(capsys, "verify", "theorem2", "--case", "2", "--m", "6")[0] == 2


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "A:5", "--json")
    assert code == 0 and json.loads(out)["simple"] == "simple"


def test_analyze_cosets(capsys):
    code, out, _ = run(capsys, "analyze", "PGL2:11", "--action", "cosets:PSL2:11")
    assert code == 0 and "degree: 2" in out


def test_search(capsys):
    code, out, _ = run(capsys, "search-dihedral", "PGL2:11", "--order", "22", "--json")
    assert code == 0 and json.loads(out)["found"]


def test_search_exhaustive_none(capsys):
    code, out, _ = run(capsys, "search-dihedral", "prod(PSL2:11, C:2)", "--order", "22", "--exhaustive")
    assert code == 0 and "none [deterministic" in out


def test_search_randomized_none_is_inconclusive(capsys):
    code, _, _ = run(capsys, "search-dihedral", "prod(PSL2:11, C:2)", "--order", "22")
    assert code == 3


def test_search_regular(capsys):
    assert run(capsys, "search-dihedral", "A:8", "--order", "8", "--regular")[0] == 0
    assert run(capsys, "search-dihedral", "A:8", "--order", "6", "--regular")[0] == 2


def test_core(capsys):
    # <(1 2), (3 4)> is not normal in S4 and its core is trivial
    code, out, _ = run(capsys, "core", "S:4", "--sub", "prod(C:2, C:2)", "--json")
    assert code == 0 and json.loads(out)["core_order"] == "1"
    code, out, _ = run(capsys, "core", "PGL2:11", "--sub", "PSL2:11", "--json")
    assert code == 0 and json.loads(out)["core_order"] == "660"


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "Q:4"],
        ["core", "A:5", "--sub", "S:5"],
        ["search-dihedral", "A:5", "--order", "7"],
        ["verify", "table1", "--row", "9"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_fixture_error(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SKEWFACT_FIXTURES", str(tmp_path))
    assert run(capsys, "analyze", "M12")[0] == 2


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "skewfact.cli", "analyze", "S:4"], capture_output=True, text=True)
    assert proc.returncode == 0 and "order 24" in proc.stdout
