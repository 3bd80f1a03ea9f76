import csv

import pytest

from chebcube.cli import main


def read_csv(path):
    with open(path) as fh:
        return list(csv.reader(fh))


def test_rule_csv(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["rule", "--dim", "3", "--n", "4", "--sigma", "EEE", "--out", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["x1", "x2", "x3", "weight"]
    assert len(rows) == 36
    assert sum(float(r[3]) for r in rows[1:]) == pytest.approx(1.0, abs=1e-15)
    assert out.read_bytes().count(b"\r") == 0


def test_rule_lebesgue_and_tensor(tmp_path):
    out = tmp_path / "l.csv"
    assert main(["rule", "--n", "4", "--measure", "lebesgue", "--out", str(out)]) == 0
    assert sum(float(r[3]) for r in read_csv(out)[1:]) == pytest.approx(8.0, abs=1e-12)
    assert main(["rule", "--dim", "2", "--n", "3", "--kind", "gauss_legendre", "--out", str(out)]) == 0
    assert len(read_csv(out)) == 10


def test_rule_stdout(capsys):
    assert main(["rule", "--dim", "1", "--n", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "x1,weight"


def test_integrate(capsys):
    assert main(["integrate", "--n", "8", "--fn", "EXP"]) == 0
    out = dict(line.split("=") for line in capsys.readouterr().out.splitlines())
    assert float(out["rel_error"]) < 1e-12


def test_hyper(tmp_path, capsys):
    out = tmp_path / "c.csv"
    assert main(["hyper", "--n", "6", "--sigma", "EOE", "--fn", "GAUSSIAN",
                 "--coeffs-out", str(out), "--control-grid", "12"]) == 0
    rows = read_csv(out)
    assert rows[0] == ["alpha1", "alpha2", "alpha3", "c"]
    assert len(rows) == 1 + 7 * 8 * 9 // 6
    assert "control_grid=12^3" in capsys.readouterr().out


def test_cc(tmp_path, capsys):
    assert main(["cc", "--n", "4", "--sigma", "EEE", "--fn", "RUNGE"]) == 0
    text = capsys.readouterr().out
    for key in ("approx=", "reference=", "rel_error="):
        assert key in text
    out = tmp_path / "w.csv"
    assert main(["cc", "--n", "5", "--weights-out", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["x1", "x2", "x3", "lambda"]
    assert sum(float(r[3]) for r in rows[1:]) == pytest.approx(8.0, abs=1e-12)


def test_bench(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "--suite", "EXP,RUNGE", "--rules", "sigma_EEE,clenshaw_curtis",
                 "--n-min", "2", "--n-max", "6", "--stride", "2", "--out", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["rule", "measure", "n", "nodes", "function", "approx", "reference", "rel_error"]
    assert len(rows) == 1 + 2 * 2 * 3


def test_bench_sigma_override(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "--suite", "EXP", "--rules", "sigma_EEE", "--sigma", "EOO",
                 "--n-min", "4", "--n-max", "4", "--out", str(out)]) == 0
    assert read_csv(out)[1][0] == "sigma_EOO"


@pytest.mark.parametrize("argv", [
    ["bench", "--sigma", "EOX"],
    ["bench", "--rules", "sigma_EOX"],
    ["bench", "--suite", "SINC"],
    ["bench", "--n-min", "5", "--n-max", "2"],
    ["rule", "--dim", "3", "--n", "4", "--sigma", "EE"],
    ["rule", "--n", "1"],
    ["hyper", "--n", "0", "--fn", "EXP"],
    ["cc", "--n", "3"],
    ["integrate", "--dim", "2", "--n", "3", "--fn", "EXP"],
    ["frobnicate"],
    [],
])
def test_invalid_arguments(argv, capsys):
    assert main(argv) == 2
    assert "usage" in capsys.readouterr().err


def test_numerical_failure(monkeypatch, capsys):
    from chebcube import bench
    from chebcube.errors import ConvergenceError

    def boom(*a, **k):
        raise ConvergenceError("no convergence")

    monkeypatch.setattr(bench, "gauss_legendre_1d", boom)
    assert main(["rule", "--n", "3", "--kind", "gauss_legendre"]) == 3
    assert "numerical failure" in capsys.readouterr().err
