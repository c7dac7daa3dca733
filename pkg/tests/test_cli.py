import csv
import subprocess
import sys
from math import log

import pytest

from quasiboson import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    return list(csv.DictReader(lines))


def test_single_default(capsys):
    code, out, _ = run(capsys, "single", "--points", "5")
    assert code == 0
    assert out.startswith("# quasiboson ")
    data = rows(out)
    assert len(data) == 5
    assert float(data[0]["S_1_quasibos"]) == 0.0
    assert float(data[0]["P_pur_def"]) == 1.0


def test_bosonic_single_endpoint(capsys):
    code, out, _ = run(capsys, "single", "--eps", "-1", "--points", "4")
    data = rows(out)
    assert float(data[-1]["E_over_hbar_omega"]) == 2.5
    assert float(data[-1]["S_1_quasibos"]) == 0.0


def test_divergent_grid_is_domain_error(capsys, tmp_path):
    target = tmp_path / "x.csv"
    code, out, err = run(capsys, "single", "--grid", "0.5:1.5:3", "--out", str(target))
    assert code == 2
    assert "diverges" in err
    assert not target.exists()


def test_fock_vs_n(capsys):
    code, out, _ = run(capsys, "fock", "--m", "4", "--eps", "+1", "--n", "4")
    data = rows(out)
    assert [int(r["n"]) for r in data] == [0, 1, 2, 3, 4]
    assert float(data[2]["S_ex1"]) == pytest.approx(log(6))


def test_fock_energy_sweep_branches(capsys):
    code, out, _ = run(capsys, "fock", "--f", "0.5", "--grid", "0.5:1.5:3")
    data = rows(out)
    assert {r["branch"] for r in data} == {"minus", "plus"}
    assert {r["m"] for r in data} == {"4"}


def test_f_and_m_are_exclusive():
    with pytest.raises(SystemExit) as info:
        cli.main(["fock", "--m", "2", "--f", "1"])
    assert info.value.code == 2


def test_bad_f_rejected(capsys):
    code, _, err = run(capsys, "fock", "--f", "0.7")
    assert code == 2


def test_bad_eps_rejected():
    with pytest.raises(SystemExit) as info:
        cli.main(["single", "--eps", "0"])
    assert info.value.code == 2


def test_out_of_range_energy(capsys):
    code, _, err = run(capsys, "fock", "--m", "2", "--grid", "0.5:3:4")
    assert code == 2 and "outside" in err


def test_permode(capsys):
    code, out, _ = run(capsys, "permode", "--m", "3", "--omega0", "1", "--delta-omega", "0", "--grid", "0:3:4")
    data = rows(out)
    assert code == 0 and len(data) == 4
    assert float(data[0]["n"]) == 0.0


def test_coherent(capsys):
    code, out, _ = run(capsys, "coherent", "--m", "2,3", "--amp-max", "1", "--points", "3")
    data = rows(out)
    assert len(data) == 6
    assert float(data[0]["E_coherent"]) == 0.5


def test_hydrogen_levels(capsys):
    code, out, _ = run(capsys, "hydrogen", "--n", "3", "--vol-ratio", "1000")
    data = rows(out)
    assert [int(r["n"]) for r in data] == [1, 2, 3]
    for r in data:
        assert float(r["S_ent3"]) - float(r["delta_S_S_ent4"]) == pytest.approx(log(1000))


def test_convergence_failure_exit_code(capsys):
    code, _, err = run(capsys, "hydrogen", "--grid=-1:-0.5:2", "--tol", "1e-300")
    assert code == 3


def test_general_and_oracle_check(capsys):
    code, out, _ = run(capsys, "general", "--m", "3", "--eps", "-1", "--n", "0,1,2")
    data = rows(out)
    assert float(data[0]["abs_diff"]) < 1e-10
    code, out, _ = run(capsys, "oracle-check", "--m", "3,4", "--n", "1,2", "--seed", "3")
    assert code == 0
    assert all(r["pass"] == "1" for r in rows(out))


def test_oracle_check_mismatch_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli, "entropy_fock", lambda n, p: 99.0)
    code, out, err = run(capsys, "oracle-check", "--m", "2", "--n", "1")
    assert code == 1
    assert rows(out)[0]["pass"] == "0"


def test_unknown_figure(capsys):
    code, _, err = run(capsys, "figure", "15")
    assert code == 2


def test_figure_headers_name_anchors(capsys):
    expected = {1: "S_1_quasibos", 6: "S_1quas_ferm", 7: "S_1quas_bos", 11: "P_Fock_ferm", 12: "P_Fock_bos", 3: "delta_S_S_ent4"}
    for number, column in expected.items():
        code, out, _ = run(capsys, "figure", str(number), "--points", "3")
        assert column in rows(out)[0]


def test_figure_1_excludes_divergence(capsys):
    code, out, _ = run(capsys, "figure", "1")
    data = rows(out)
    assert {r["m"] for r in data} == {"2", "3", "5"}
    assert max(float(r["E_over_hbar_omega"]) for r in data) < 1.5


def test_figure_8_units(capsys):
    code, out, _ = run(capsys, "figure", "8", "--m", "2", "--grid", "0:1:2")
    data = rows(out)
    assert "omega=|omega0-delta_omega/2|=0.94999999999999996" in out
    assert float(data[1]["E_over_hbar_omega2_per_delta_omega"]) == 1.0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quasiboson.cli", "single", "--points", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "S_1_quasibos" in proc.stdout
