import json

import pytest

from qruscheweyh.cli import SPEC_ENV_VAR, main

REF_SPEC = {"q": 0.5, "m": 2, "l": 1, "alpha": 1.0, "A": 0.5, "B": -0.5}


@pytest.fixture
def spec_file(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(REF_SPEC))
    return str(path)


@pytest.fixture
def extremal_file(tmp_path, spec_file):
    path = tmp_path / "f2.json"
    assert main(["extremal", "--spec", spec_file, "-k", "2", "-o", str(path)]) == 0
    return str(path)


def scale_series(path, factor, out):
    payload = json.loads(open(path).read())
    payload["coefficients"][1][0] *= factor
    with open(out, "w") as handle:
        json.dump(payload, handle)
    return str(out)


class TestExtremal:
    def test_writes_sharp_coefficient(self, extremal_file):
        payload = json.loads(open(extremal_file).read())
        assert payload["degree"] == 2
        assert payload["coefficients"][0] == [1.0, 0.0]
        assert payload["coefficients"][1][0] == pytest.approx(-4.0 / 9.0, abs=1e-15)

    def test_index_one_gives_identity(self, tmp_path, spec_file):
        out = tmp_path / "f1.json"
        assert main(["extremal", "--spec", spec_file, "-k", "1", "-o", str(out)]) == 0
        payload = json.loads(out.read_text())
        assert payload == {"degree": 1, "coefficients": [[1.0, 0.0]]}

    def test_index_zero_is_usage_error(self, spec_file, capsys):
        assert main(["extremal", "--spec", spec_file, "-k", "0"]) == 2
        capsys.readouterr()


class TestCheck:
    def test_member_exits_zero(self, spec_file, extremal_file, capsys):
        code = main(["check", extremal_file, "--spec", spec_file, "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["member"] is True
        assert out["exact_member"] is True
        assert abs(out["slack"]) < 1e-12
        assert out["mu"] == [2.25]
        assert out["bound_per_k"][0] == pytest.approx(4.0 / 9.0)
        assert out["grid_check"]["verdict"] == "pass"

    def test_violator_exits_one_with_witness(self, tmp_path, spec_file, extremal_file, capsys):
        bad = scale_series(extremal_file, 1.5, tmp_path / "bad.json")
        code = main(["check", bad, "--spec", spec_file, "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 1
        assert out["member"] is False
        assert out["witness"] is not None
        assert 0 < out["witness"][0] < 1

    def test_malformed_series_exits_two(self, tmp_path, spec_file, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["check", str(path), "--spec", spec_file]) == 2
        capsys.readouterr()

    def test_invalid_spec_exits_three(self, tmp_path, extremal_file, capsys):
        path = tmp_path / "badspec.json"
        path.write_text(json.dumps({**REF_SPEC, "m": 1, "l": 3}))
        assert main(["check", extremal_file, "--spec", str(path)]) == 3
        capsys.readouterr()

    def test_missing_spec_exits_two(self, extremal_file, capsys, monkeypatch):
        monkeypatch.delenv(SPEC_ENV_VAR, raising=False)
        assert main(["check", extremal_file]) == 2
        capsys.readouterr()

    def test_spec_from_environment(self, spec_file, extremal_file, capsys, monkeypatch):
        monkeypatch.setenv(SPEC_ENV_VAR, spec_file)
        assert main(["check", extremal_file]) == 0
        capsys.readouterr()


class TestBounds:
    def test_csv_tables(self, tmp_path, spec_file):
        out = tmp_path / "bounds.csv"
        code = main(["bounds", "--spec", spec_file, "--r-list", "0,0.5",
                     "--psi-list", "0", "--format", "csv", "-o", str(out)])
        assert code == 0
        text = out.read_text()
        lines = text.strip().split("\n")
        assert lines[0] == "r,lower_f,upper_f,lower_fprime,upper_fprime"
        assert lines[1].startswith("0.0,0.0,0.0,1.0,1.0")
        assert "kind,psi,radius,minimizing_k,unclamped_inf" in text
        assert "convex,0.0,0.5625,2,0.5625" in text
        assert "starlike,0.0,1.0,2,1.125" in text

    def test_rejects_radius_at_one(self, spec_file, capsys):
        assert main(["bounds", "--spec", spec_file, "--r-list", "1.0", "--psi-list", "0"]) == 2
        capsys.readouterr()


class TestDecompose:
    def test_extremal_weights(self, spec_file, extremal_file, capsys):
        code = main(["decompose", extremal_file, "--spec", spec_file, "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["weights"][1] == pytest.approx(1.0, abs=1e-12)

    def test_non_member_exits_one(self, tmp_path, spec_file, extremal_file, capsys):
        bad = scale_series(extremal_file, 1.5, tmp_path / "bad.json")
        assert main(["decompose", bad, "--spec", spec_file]) == 1
        capsys.readouterr()

    def test_complex_series_exits_two(self, tmp_path, spec_file, capsys):
        path = tmp_path / "cx.json"
        path.write_text(json.dumps({"degree": 2, "coefficients": [[1, 0], [0.1, 0.2]]}))
        assert main(["decompose", str(path), "--spec", spec_file]) == 2
        capsys.readouterr()


class TestIntegralMeans:
    def test_member_dominated(self, spec_file, extremal_file, capsys):
        code = main(["integral-means", extremal_file, "--spec", spec_file,
                     "--r", "0.5", "--s", "2", "--format", "csv"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.splitlines()[0] == "r,s,mean,extremal_mean,dominated"
        assert ",True" in out

    def test_plain_series_has_no_benchmark(self, tmp_path, spec_file, capsys):
        path = tmp_path / "cx.json"
        path.write_text(json.dumps({"degree": 2, "coefficients": [[1, 0], [0.05, 0.1]]}))
        code = main(["integral-means", str(path), "--spec", spec_file,
                     "--r", "0.5", "--s", "2", "--format", "csv"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.splitlines()[0] == "r,s,mean"


class TestAudit:
    def test_small_grid_passes_and_is_deterministic(self, tmp_path, capsys):
        grid = tmp_path / "grid.json"
        grid.write_text(json.dumps([REF_SPEC]))
        out1, out2 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        args = ["audit", "--grid", str(grid), "--samples", "6", "--dominance-samples", "3",
                "--seed", "7"]
        assert main(args + ["-o", str(out1)]) == 0
        assert main(args + ["-o", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        lines = out1.read_text().strip().split("\n")
        assert all(json.loads(line)["verdict"] == "pass" for line in lines)
        capsys.readouterr()

    def test_empty_grid_exits_zero(self, tmp_path, capsys):
        grid = tmp_path / "empty.json"
        grid.write_text("[]")
        out = tmp_path / "out.jsonl"
        assert main(["audit", "--grid", str(grid), "-o", str(out)]) == 0
        assert out.read_text() == ""
        capsys.readouterr()

    def test_invalid_entry_keeps_sweeping_and_flags_failure(self, tmp_path, capsys):
        grid = tmp_path / "grid.json"
        grid.write_text(json.dumps([REF_SPEC, {**REF_SPEC, "m": 1, "l": 3}]))
        out = tmp_path / "out.jsonl"
        code = main(["audit", "--grid", str(grid), "--samples", "4",
                     "--dominance-samples", "2", "-o", str(out)])
        assert code == 1
        lines = [json.loads(line) for line in out.read_text().strip().split("\n")]
        verdicts = {line["verdict"] for line in lines}
        assert "error" in verdicts and "pass" in verdicts
        capsys.readouterr()

    def test_csv_summary_written(self, tmp_path, capsys):
        grid = tmp_path / "grid.json"
        grid.write_text(json.dumps([REF_SPEC]))
        out, summary = tmp_path / "out.jsonl", tmp_path / "summary.csv"
        assert main(["audit", "--grid", str(grid), "--samples", "4", "--dominance-samples", "2",
                     "-o", str(out), "--csv", str(summary)]) == 0
        assert summary.read_text().startswith("claim,q,m,l,alpha,A,B,verdict")
        capsys.readouterr()


class TestParser:
    def test_help_exits_zero_and_lists_subcommands(self, capsys):
        assert main(["--help"]) == 0
        out = capsys.readouterr().out
        for name in ("check", "extremal", "bounds", "audit", "integral-means", "decompose"):
            assert name in out

    def test_subcommand_help_lists_flags(self, capsys):
        assert main(["audit", "--help"]) == 0
        out = capsys.readouterr().out
        for flag in ("--seed", "--grid-radial", "--grid-angular", "--rmax", "--kmax", "--nodes"):
            assert flag in out

    def test_unknown_flag_is_error(self, capsys):
        assert main(["check", "x.json", "--frobnicate"]) == 2
        capsys.readouterr()

    def test_missing_subcommand_is_error(self, capsys):
        assert main([]) == 2
        capsys.readouterr()
