import json

import pytest

from chromadisk import format_graph
from chromadisk.cli import main
from chromadisk.corpus import (
    claw_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    prism_graph,
    random_graph,
)


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def gfile(tmp_path, name, g):
    p = tmp_path / name
    p.write_text(format_graph(g))
    return str(p)


class TestAnalyze:
    def test_k4_certificate(self, tmp_path, capsys):
        path = gfile(tmp_path, "k4.txt", complete_graph(4))
        code, out, _ = run(capsys, "analyze", path)
        assert code == 0
        assert "claw_free=True" in out
        assert "kappa: 0" in out
        assert "radius=C*delta=9.000000" in out
        assert "disk verdict: yes" in out

    def test_k4_json(self, tmp_path, capsys):
        path = gfile(tmp_path, "k4.txt", complete_graph(4))
        code, out, _ = run(capsys, "analyze", path, "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["kappa"]["exact"] == "0"
        assert doc["bound"]["applicable"] and doc["bound"]["radius"] == 9.0
        assert doc["disk_verdict"] == "yes"
        roots = sorted(r["re"] for r in doc["roots"])
        assert roots == [0.0, 1.0, 2.0, 3.0]

    def test_c5_skips_bound_below_degree_three(self, tmp_path, capsys):
        path = gfile(tmp_path, "c5.txt", cycle_graph(5))
        code, out, _ = run(capsys, "analyze", path)
        assert code == 0
        assert "index=1" in out
        assert "kappa: 1 " in out
        assert "theorem requires max degree >= 3" in out
        assert out.count("root:") == 5
        assert "disk verdict: not-computed" in out

    def test_claw_reports_out_of_range_kappa(self, tmp_path, capsys):
        path = gfile(tmp_path, "claw.txt", claw_graph())
        code, out, _ = run(capsys, "analyze", path, "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["claw_free"] is False and doc["class_index"] is None
        assert doc["kappa"]["exact"] == "3/2"
        assert "outside [0, 1]" in doc["kappa"]["note"]
        assert doc["bound"] == {"applicable": False, "reason": "graph is not claw-free"}

    def test_parse_error_exits_one(self, tmp_path, capsys):
        p = tmp_path / "bad.txt"
        p.write_text("3 1\n0 zero\n")
        code, _, err = run(capsys, "analyze", str(p))
        assert code == 1
        assert "error: line 2" in err

    def test_missing_file_exits_one(self, capsys):
        code, _, err = run(capsys, "analyze", "/nonexistent/g.txt")
        assert code == 1
        assert "error:" in err

    def test_cap_marks_not_computed(self, tmp_path, capsys):
        path = gfile(tmp_path, "p17.txt", path_graph(17))
        code, out, _ = run(capsys, "analyze", path, "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["chromatic"]["computed"] is False
        assert doc["disk_verdict"] == "not-computed"

    def test_cap_flag_override(self, tmp_path, capsys):
        path = gfile(tmp_path, "p17.txt", path_graph(17))
        code, out, _ = run(capsys, "analyze", path, "--max-enum", "17", "--json")
        assert code == 0
        assert json.loads(out)["chromatic"]["computed"] is True

    def test_cap_env_override(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("CHROMADISK_MAX_ENUM", "17")
        path = gfile(tmp_path, "p17.txt", path_graph(17))
        code, out, _ = run(capsys, "analyze", path, "--json")
        assert code == 0
        assert json.loads(out)["chromatic"]["computed"] is True

    def test_bad_env_value_exits_one(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("CHROMADISK_MAX_ENUM", "lots")
        path = gfile(tmp_path, "k3.txt", complete_graph(3))
        code, _, err = run(capsys, "analyze", path)
        assert code == 1
        assert "CHROMADISK_MAX_ENUM" in err

    def test_duplicate_edge_warning_surfaces(self, tmp_path, capsys):
        p = tmp_path / "dup.txt"
        p.write_text("3 3\n0 1\n0 1\n1 2\n")
        code, out, _ = run(capsys, "analyze", str(p))
        assert code == 0
        assert "warning: line 3: duplicate edge 0 1" in out


class TestBounds:
    def test_kappa_one_class0(self, capsys):
        code, out, _ = run(capsys, "bounds", "--class", "0", "--kappa", "1.0")
        assert code == 0
        assert "C=3.802747" in out and "a*=0.376232" in out

    def test_kappa_point_two_class1(self, capsys):
        code, out, _ = run(capsys, "bounds", "--class", "1", "--kappa", "0.2")
        assert code == 0
        assert "C=3.214447" in out

    def test_delta_gives_radius(self, capsys):
        code, out, _ = run(capsys, "bounds", "--class", "0", "--kappa", "0", "--delta", "3")
        assert code == 0
        assert "radius=9.000000" in out
        assert "z*=0.111111" in out

    def test_fixed_a(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--class", "0", "--kappa", "0", "--a", "0.25"
        )
        assert code == 0
        assert "x=0.333333" in out and "C=4.000000" in out

    def test_missing_kappa_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "bounds", "--class", "0")
        assert code == 1

    def test_bad_class_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "bounds", "--class", "2", "--kappa", "0.5")
        assert code == 1

    def test_kappa_out_of_range_exits_one(self, capsys):
        code, _, err = run(capsys, "bounds", "--class", "0", "--kappa", "1.5")
        assert code == 1
        assert "error:" in err


class TestTable:
    def test_endpoints_only(self, capsys):
        code, out, _ = run(capsys, "table1", "--step", "1.0", "--json")
        assert code == 0
        doc = json.loads(out)
        assert [r["kappa"] for r in doc["rows"]] == [0.0, 1.0]
        assert doc["rows"][0]["c0"] == 3.0

    def test_check_against_reference(self, capsys):
        code, out, _ = run(capsys, "table1", "--step", "0.1", "--check")
        assert code == 0
        assert "-> pass" in out

    def test_check_needs_tenth_step(self, capsys):
        code, _, err = run(capsys, "table1", "--step", "0.5", "--check")
        assert code == 1
        assert "error:" in err

    def test_half_twentieth_grid_monotone(self, capsys):
        code, out, _ = run(capsys, "table1", "--step", "0.05", "--json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert len(rows) == 21
        for col in ("c0", "c1"):
            vals = [r[col] for r in rows]
            assert all(a <= b + 1e-9 for a, b in zip(vals, vals[1:]))
        assert all(r["c1"] <= r["c0"] + 1e-9 for r in rows)

    def test_non_dividing_step_exits_one(self, capsys):
        code, _, err = run(capsys, "table1", "--step", "0.3")
        assert code == 1
        assert "error:" in err


class TestVerifyScheme:
    def test_k3(self, tmp_path, capsys):
        path = gfile(tmp_path, "k3.txt", complete_graph(3))
        code, out, _ = run(capsys, "verify-scheme", path)
        assert code == 0
        assert "partition check: pass" in out
        assert "forest identity check: pass (2 orderings)" in out

    def test_c4(self, tmp_path, capsys):
        path = gfile(tmp_path, "c4.txt", cycle_graph(4))
        code, out, _ = run(capsys, "verify-scheme", path)
        assert code == 0

    def test_seeded_random_graph(self, tmp_path, capsys):
        path = gfile(tmp_path, "r7.txt", random_graph(7, 0.5, seed=42))
        code, out, _ = run(capsys, "verify-scheme", path, "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["partition"]["passed"] and doc["identity"]["passed"]
        assert doc["partition"]["edge_sets_checked"] > 0

    def test_rmax_flag(self, tmp_path, capsys):
        path = gfile(tmp_path, "k5.txt", complete_graph(5))
        code, out, _ = run(capsys, "verify-scheme", path, "--rmax", "3", "--json")
        assert code == 0
        assert json.loads(out)["r_max"] == 3

    def test_cap_exits_two(self, tmp_path, capsys):
        path = gfile(tmp_path, "p13.txt", path_graph(13))
        code, _, err = run(capsys, "verify-scheme", path)
        assert code == 2
        assert "error:" in err

    def test_cap_override_runs(self, tmp_path, capsys):
        path = gfile(tmp_path, "p13.txt", path_graph(13))
        code, out, _ = run(capsys, "verify-scheme", path, "--max-enum", "13")
        assert code == 0
        assert "partition check: pass" in out


class TestRoots:
    def test_k3(self, tmp_path, capsys):
        path = gfile(tmp_path, "k3.txt", complete_graph(3))
        code, out, _ = run(capsys, "roots", path, "--json")
        assert code == 0
        doc = json.loads(out)
        assert sorted(r["re"] for r in doc["roots"]) == [0.0, 1.0, 2.0]
        assert all(r["accepted"] for r in doc["roots"])
        assert doc["ill_conditioned"] is False

    def test_c5(self, tmp_path, capsys):
        path = gfile(tmp_path, "c5.txt", cycle_graph(5))
        code, out, _ = run(capsys, "roots", path, "--json")
        assert code == 0
        got = sorted((r["re"], r["im"]) for r in json.loads(out)["roots"])
        assert got == [(0.0, 0.0), (1.0, -1.0), (1.0, 0.0), (1.0, 1.0), (2.0, 0.0)]

    def test_edgeless_triple_zero(self, tmp_path, capsys):
        p = tmp_path / "e3.txt"
        p.write_text("3 0\n")
        code, out, _ = run(capsys, "roots", str(p), "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["coefficients"] == [0, 0, 0, 1]
        assert [r["re"] for r in doc["roots"]] == [0.0, 0.0, 0.0]

    def test_cap_exits_two(self, tmp_path, capsys):
        path = gfile(tmp_path, "p17.txt", path_graph(17))
        code, _, err = run(capsys, "roots", path)
        assert code == 2
        assert "error:" in err


class TestDeterminism:
    def test_analyze_json_bytes_stable(self, tmp_path, capsys):
        path = gfile(tmp_path, "prism.txt", prism_graph())
        _, first, _ = run(capsys, "analyze", path, "--json")
        _, second, _ = run(capsys, "analyze", path, "--json")
        assert first == second

    def test_roots_json_bytes_stable(self, tmp_path, capsys):
        path = gfile(tmp_path, "c5.txt", cycle_graph(5))
        _, first, _ = run(capsys, "roots", path, "--json")
        _, second, _ = run(capsys, "roots", path, "--json")
        assert first == second


class TestParser:
    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0

    def test_no_command_is_usage_error(self, capsys):
        assert main([]) == 1
