"""End-to-end tests for the command-line interface: output formats, exit
codes, determinism, and the JSON round trip."""

import csv
import json

import numpy as np
import pytest

from casorati.cli import main


def run(args, tmp_path, name="out"):
    path = tmp_path / name
    rc = main(list(args) + ["--out", str(path)])
    return rc, path.read_text(encoding="utf-8")


def write_synthetic(tmp_path, data, name="syn.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


class TestCatalog:
    def test_lists_all_charts(self, tmp_path):
        rc, text = run(["catalog"], tmp_path)
        assert rc == 0
        entries = json.loads(text)
        assert set(entries) == {"hypersphere", "chen_ideal",
                                "flat_torus", "paraboloid"}
        assert entries["chen_ideal"]["axes"] == ["t", "u", "v"]


class TestReport:
    def test_sphere_slack(self, tmp_path):
        rc, text = run(["report", "--chart", "hypersphere",
                        "--param", "R=1,n=3",
                        "--point", "phi1=0.9,phi2=1.2,phi3=2.0"], tmp_path)
        assert rc == 0
        rep = json.loads(text)
        assert rep["slack_41"] == pytest.approx(1.0 / 6.0, abs=1e-6)
        assert rep["classification"] == "Umbilical"

    def test_chen_ideal_classification(self, tmp_path):
        rc, text = run(["report", "--chart", "chen_ideal", "--param", "a=1",
                        "--point", "t=0.8,u=0.3,v=1.1"], tmp_path)
        assert rc == 0
        rep = json.loads(text)
        assert rep["classification"] == "Ideal41"
        assert rep["slack_41"] <= 1e-6

    def test_synthetic_geodesic(self, tmp_path):
        syn = write_synthetic(tmp_path, {
            "n": 3, "p": 1, "c_tilde": 1.0,
            "h": np.zeros((1, 3, 3)).tolist()})
        rc, text = run(["report", "--synthetic", syn], tmp_path)
        assert rc == 0
        rep = json.loads(text)
        assert rep["classification"] == "TotallyGeodesic"
        assert rep["rho"] == pytest.approx(1.0, abs=1e-12)

    def test_roundtrip_bit_identical(self, tmp_path):
        rng = np.random.default_rng(8)
        h = rng.uniform(-1, 1, (2, 4, 4))
        h = 0.5 * (h + h.transpose(0, 2, 1))
        syn = write_synthetic(tmp_path, {
            "n": 4, "p": 2, "c_tilde": 0.25, "h": h.tolist()})
        rc, first = run(["report", "--synthetic", syn], tmp_path, "a.json")
        assert rc == 0
        # Feed the emitted report (which echoes h) back through the
        # synthetic-input path; every value must reproduce bit for bit.
        back = write_synthetic(tmp_path, json.loads(first), "back.json")
        rc, second = run(["report", "--synthetic", back], tmp_path, "b.json")
        assert rc == 0
        assert first == second

    def test_inadmissible_point_exit_2(self, tmp_path, capsys):
        rc = main(["report", "--chart", "chen_ideal", "--param", "a=1",
                   "--point", "t=0.0,u=0.3,v=1.1"])
        capsys.readouterr()
        assert rc == 2

    def test_missing_arguments_exit_2(self, tmp_path, capsys):
        rc = main(["report", "--chart", "hypersphere"])
        capsys.readouterr()
        assert rc == 2

    def test_nonzero_c_tilde_needs_synthetic(self, capsys):
        rc = main(["report", "--chart", "hypersphere", "--param", "R=1,n=3",
                   "--point", "phi1=0.9,phi2=1.2,phi3=2.0",
                   "--c-tilde", "1.0"])
        capsys.readouterr()
        assert rc == 2


class TestSweep:
    def test_inadmissible_rows_kept(self, tmp_path):
        rc, text = run(["sweep", "--chart", "chen_ideal", "--param", "a=1",
                        "--grid", "t=0.0:2.0:5,u=0.3,v=1.1"], tmp_path,
                       "sweep.csv")
        assert rc == 0
        rows = list(csv.DictReader(text.splitlines()))
        assert len(rows) == 5
        assert rows[0]["status"] == "inadmissible"
        for row in rows[1:]:
            assert row["status"] == "ok"
            assert float(row["slack_41"]) <= 1e-6
            assert row["classification"] == "Ideal41"

    def test_sphere_radius_sweep(self, tmp_path):
        for i, R in enumerate((0.5, 1.0, 2.0)):
            rc, text = run(["sweep", "--chart", "hypersphere",
                            "--param", f"R={R},n=3",
                            "--grid", "phi1=0.9,phi2=1.2,phi3=2.0"],
                           tmp_path, f"s{i}.csv")
            assert rc == 0
            row = next(csv.DictReader(text.splitlines()))
            assert float(row["slack_41"]) == pytest.approx(
                1.0 / (6.0 * R * R), abs=1e-6)

    def test_json_format(self, tmp_path):
        rc, text = run(["sweep", "--chart", "hypersphere",
                        "--param", "R=1,n=3",
                        "--grid", "phi1=0.8:1.2:2,phi2=1.0,phi3=2.0",
                        "--format", "json"], tmp_path, "sweep.json")
        assert rc == 0
        rows = json.loads(text)
        assert len(rows) == 2
        assert all(r["status"] == "ok" for r in rows)

    def test_deterministic_output(self, tmp_path):
        args = ["sweep", "--chart", "chen_ideal", "--param", "a=1",
                "--grid", "t=0.3:2.1:4,u=-0.4:0.4:3,v=1.0"]
        _, a = run(args, tmp_path, "a.csv")
        _, b = run(args, tmp_path, "b.csv")
        assert a == b

    def test_bad_grid_axis_exit_2(self, capsys):
        rc = main(["sweep", "--chart", "paraboloid", "--grid", "q=0:1:5,y=0"])
        capsys.readouterr()
        assert rc == 2

    def test_oversized_grid_exit_2(self, capsys):
        rc = main(["sweep", "--chart", "paraboloid",
                   "--grid", "x=0:0.5:2000,y=0:0.5:2000"])
        capsys.readouterr()
        assert rc == 2


class TestVerify:
    def test_chart_grid_passes(self, tmp_path, capsys):
        rc = main(["verify", "--chart", "hypersphere", "--param", "R=2,n=3",
                   "--grid", "phi1=0.5:2.5:3,phi2=0.6:2.4:3,phi3=1.0:5.0:2"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "0 violations" in out

    def test_synthetic_corpus_passes(self, tmp_path, capsys):
        rng = np.random.default_rng(9)
        corpus = []
        for _ in range(25):
            h = rng.uniform(-1, 1, (2, 4, 4))
            h = 0.5 * (h + h.transpose(0, 2, 1))
            corpus.append({"n": 4, "p": 2,
                           "c_tilde": float(rng.uniform(-1, 1)),
                           "h": h.tolist()})
        path = write_synthetic(tmp_path, corpus, "corpus.json")
        rc = main(["verify", "--synthetic", path])
        capsys.readouterr()
        assert rc == 0

    def test_corrupted_input_exit_2(self, tmp_path, capsys):
        path = write_synthetic(tmp_path, [{
            "n": 3, "p": 1,
            "h": [[[1.0, 2.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]]}],
            "bad.json")
        rc = main(["verify", "--synthetic", path])
        capsys.readouterr()
        assert rc == 2

    def test_missing_file_exit_2(self, capsys):
        rc = main(["verify", "--synthetic", "/nonexistent/corpus.json"])
        capsys.readouterr()
        assert rc == 2


class TestQP:
    def test_golden_point(self, tmp_path):
        rc, text = run(["qp", "--variant", "P", "--n", "3", "--k", "5"],
                       tmp_path, "qp.json")
        assert rc == 0
        sol = json.loads(text)
        assert sol["point"] == pytest.approx([2.0, 2.0, 1.0], abs=1e-12)
        assert sol["value"] == pytest.approx(0.0, abs=1e-12)
        assert sol["min_restricted_hessian_eig"] == pytest.approx(
            5.0, abs=1e-10)

    def test_q_variant(self, tmp_path):
        rc, text = run(["qp", "--variant", "Q", "--n", "3", "--k", "4"],
                       tmp_path, "qp.json")
        assert rc == 0
        sol = json.loads(text)
        assert sol["point"] == pytest.approx([1.0, 1.0, 2.0], abs=1e-12)

    def test_bad_n_exit_2(self, capsys):
        rc = main(["qp", "--variant", "P", "--n", "2", "--k", "1"])
        capsys.readouterr()
        assert rc == 2
