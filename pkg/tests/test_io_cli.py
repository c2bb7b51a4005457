import json
import math

import numpy as np
import pytest
from click.testing import CliRunner

from fcprofile.cli import main
from fcprofile.examples import sine_profile
from fcprofile.profile_io import (
    ProfileLoadError,
    load_csv,
    load_profile,
    load_smd,
    save_csv,
    save_smd,
)

from conftest import make_profile


class TestCsv:
    def test_two_column(self, tmp_path):
        f = tmp_path / "p.csv"
        f.write_text("0.0,1.0\n0.5,2.0\n1.0,3.0\n")
        p = load_csv(f)
        assert p.dx == 0.5
        assert list(p.z) == [1.0, 2.0, 3.0]

    def test_one_column_needs_dx(self, tmp_path):
        f = tmp_path / "p.csv"
        f.write_text("1.0\n2.0\n3.0\n")
        p = load_csv(f, dx=0.5)
        assert p.dx == 0.5 and list(p.z) == [1.0, 2.0, 3.0]
        with pytest.raises(ProfileLoadError, match="dx"):
            load_csv(f)

    def test_comments_and_delimiters(self, tmp_path):
        f = tmp_path / "p.csv"
        f.write_text("# header\n0 1\n0.5;2\n1.0,3 # trailing\n\n")
        p = load_csv(f)
        assert list(p.z) == [1.0, 2.0, 3.0]

    def test_non_equidistant_rejected(self, tmp_path):
        f = tmp_path / "p.csv"
        f.write_text("0,1\n0.5,2\n1.7,3\n")
        with pytest.raises(ProfileLoadError, match="equidistant"):
            load_csv(f)

    def test_non_numeric_names_line(self, tmp_path):
        f = tmp_path / "p.csv"
        f.write_text("0,1\n0.5,oops\n")
        with pytest.raises(ProfileLoadError, match=":2"):
            load_csv(f)

    def test_inconsistent_columns(self, tmp_path):
        f = tmp_path / "p.csv"
        f.write_text("0,1\n0.5\n")
        with pytest.raises(ProfileLoadError, match="column"):
            load_csv(f)

    def test_unit_conversion(self, tmp_path):
        f = tmp_path / "p.csv"
        f.write_text("0,0.001\n0.0005,0.002\n0.001,0.003\n")
        p = load_csv(f, unit="mm")
        assert p.dx == pytest.approx(0.5)
        assert list(p.z) == pytest.approx([1.0, 2.0, 3.0])

    def test_round_trip_exact(self, tmp_path):
        rng = np.random.default_rng(2)
        p = make_profile(rng.standard_normal(40), dx=0.125)
        f = tmp_path / "p.csv"
        save_csv(p, f)
        q = load_csv(f)
        assert q.dx == p.dx
        assert list(q.z) == list(p.z)


class TestSmd:
    def test_round_trip_exact(self, tmp_path):
        rng = np.random.default_rng(3)
        p = make_profile(rng.standard_normal(40), dx=0.7)
        f = tmp_path / "p.smd"
        save_smd(p, f)
        q = load_smd(f)
        assert q.dx == p.dx
        assert list(q.z) == list(p.z)

    def test_dual_format_fixture_equality(self, tmp_path):
        p = sine_profile()
        save_csv(p, tmp_path / "s.csv")
        save_smd(p, tmp_path / "s.smd")
        a = load_profile(tmp_path / "s.csv")
        b = load_profile(tmp_path / "s.smd")
        assert a.dx == b.dx
        assert list(a.z) == list(b.z)

    def test_bad_magic(self, tmp_path):
        f = tmp_path / "p.smd"
        f.write_text("SOMETHING ELSE\n")
        with pytest.raises(ProfileLoadError, match="not a supported"):
            load_smd(f)

    def test_missing_end(self, tmp_path):
        f = tmp_path / "p.smd"
        f.write_text("ISO5436-2 PROFILE\nNumPoints = 2\nDX = 1.0\nDATA\n1.0\n2.0\n")
        with pytest.raises(ProfileLoadError, match="END"):
            load_smd(f)

    def test_point_count_mismatch(self, tmp_path):
        f = tmp_path / "p.smd"
        f.write_text("ISO5436-2 PROFILE\nNumPoints = 3\nDX = 1.0\nDATA\n1.0\n2.0\nEND\n")
        with pytest.raises(ProfileLoadError, match="NumPoints"):
            load_smd(f)

    def test_zscale_and_units(self, tmp_path):
        f = tmp_path / "p.smd"
        f.write_text("ISO5436-2 PROFILE\nNumPoints = 2\nDX = 0.001\n"
                     "XUnit = mm\nZUnit = nm\nZScale = 2.0\nDATA\n500.0\n1000.0\nEND\n")
        p = load_smd(f)
        assert p.dx == pytest.approx(1.0)
        assert list(p.z) == pytest.approx([1.0, 2.0])


@pytest.fixture(scope="module")
def sine_csv(tmp_path_factory):
    path = tmp_path_factory.mktemp("data") / "sine.csv"
    save_csv(sine_profile(), path)
    return str(path)


class TestCli:
    runner = CliRunner()

    def test_eval_prints_value(self, sine_csv):
        res = self.runner.invoke(main, ["eval", "--input", sine_csv,
                                        "--spec", "FC;D;None;All;HDh;Mean"])
        assert res.exit_code == 0
        assert res.output.startswith("2 µm")

    def test_eval_json_document(self, sine_csv):
        res = self.runner.invoke(main, ["eval", "--input", sine_csv, "--json",
                                        "--spec", "FC;D;None;All;HDh;Mean"])
        assert res.exit_code == 0
        doc = json.loads(res.output)
        assert doc["value"] == 2
        assert doc["meta"]["AT"] == "HDh"
        assert len(doc["motifs"]) == 3
        assert len(doc["overlays"]) == 3

    def test_eval_malformed_spec_fails(self, sine_csv):
        res = self.runner.invoke(main, ["eval", "--input", sine_csv,
                                        "--spec", "FC;D;None;All;HDh"])
        assert res.exit_code != 0
        assert "FC" in res.output

    def test_lenient_case_flag(self, sine_csv):
        args = ["eval", "--input", sine_csv, "--spec", "fc;d;none;all;hdh;mean"]
        assert self.runner.invoke(main, args).exit_code != 0
        res = self.runner.invoke(main, args + ["--lenient-case"])
        assert res.exit_code == 0 and res.output.startswith("2 µm")

    def test_segment_motif_json(self, sine_csv):
        res = self.runner.invoke(main, ["segment", "--input", sine_csv,
                                        "--spec", "FC;D;None;All;HDh;Mean"])
        assert res.exit_code == 0
        motifs = json.loads(res.output)["motifs"]
        assert [m["iv"] for m in motifs] == [1801, 4201, 6601]
        assert all(set(m) == {"iv", "ilp", "ihp", "ihi", "sig"} for m in motifs)

    def test_named_all(self, sine_csv):
        res = self.runner.invoke(main, ["named", "--input", sine_csv, "--json"])
        assert res.exit_code == 0
        values = json.loads(res.output)
        assert set(values) == {"Rpd", "Rvd", "Rmpc", "Rmvc", "R5p", "R5v", "R10z"}
        assert values["R10z"] == pytest.approx(values["R5p"] + values["R5v"])

    def test_examples_and_softgauge(self, tmp_path):
        out = str(tmp_path / "fixtures")
        res = self.runner.invoke(main, ["examples", "--out", out])
        assert res.exit_code == 0
        res = self.runner.invoke(main, ["softgauge", "--dir", out, "--json"])
        assert res.exit_code == 0
        report = json.loads(res.output)
        assert set(report) == {"sine-1200.smd", "turned.smd", "riblet.smd", "honed.smd"}
        for row in report.values():
            assert set(row) == {"Rpd", "Rvd", "Rmpc", "Rmvc", "R5p", "R5v", "R10z"}

    def test_degenerate_is_exit_zero(self, tmp_path):
        f = tmp_path / "ramp.csv"
        save_csv(make_profile(np.linspace(0, 1, 32)), f)
        res = self.runner.invoke(main, ["eval", "--input", str(f),
                                        "--spec", "FC;D;None;All;HDh;Mean"])
        assert res.exit_code == 0
        assert "NaN" in res.output
        assert "EMPTY_MOTIFS" in res.output
