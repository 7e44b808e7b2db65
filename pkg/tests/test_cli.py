"""CLI behavior: exit-code gating, determinism, sweeps, plane export."""

import json

import pytest

from frplane.assessment import assess
from frplane.cli import (
    EXIT_ERROR,
    EXIT_NON_INTERVENTION,
    EXIT_OK,
    EXIT_OUT_OF_PLANE,
    format_sweep_table,
    main,
    sweep,
)
from frplane.domain import Decision
from frplane.geometry import deployment_frontier_w
from frplane.store import builtin_scenarios, write_builtin_scenarios


@pytest.fixture()
def scenario_files(tmp_path):
    paths = write_builtin_scenarios(tmp_path)
    return {p.stem: p for p in paths}


class TestAssessCommand:
    def test_exit_codes_per_verdict(self, scenario_files, tmp_path, capsys):
        assert main(["assess", "--scenario", str(scenario_files["london-terror-escapee"]),
                     "--out", str(tmp_path / "l.json")]) == EXIT_OK
        assert main(["assess", "--scenario", str(scenario_files["met-lfr-trials"]),
                     "--out", str(tmp_path / "m.json")]) == EXIT_OK
        # the street-trials case under the moderate ratio: the documented near-miss
        assert main(["assess", "--scenario", str(scenario_files["met-lfr-trials"]),
                     "--ratio", "moderate", "--out", str(tmp_path / "mm.json")]) == EXIT_NON_INTERVENTION
        assert main(["assess", "--scenario", str(scenario_files["brondby-stadium"]),
                     "--out", str(tmp_path / "b.json")]) == EXIT_OUT_OF_PLANE

    def test_missing_file_is_an_error(self, tmp_path, capsys):
        assert main(["assess", "--scenario", str(tmp_path / "absent.json")]) == EXIT_ERROR
        assert "error:" in capsys.readouterr().err

    def test_malformed_file_is_an_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"schema_version": 1, "scenario": {"id": "x"}}')
        assert main(["assess", "--scenario", str(bad)]) == EXIT_ERROR

    def test_usage_error_exits_one_not_two(self, capsys):
        # argparse's native status 2 would collide with the non-intervention gate
        assert main(["assess"]) == EXIT_ERROR

    def test_stdout_document_when_no_out(self, scenario_files, capsys):
        code = main(["assess", "--scenario", str(scenario_files["brondby-stadium"])])
        assert code == EXIT_OUT_OF_PLANE
        data = json.loads(capsys.readouterr().out)
        assert data["overall"] == "out-of-plane"

    def test_byte_stable_documents(self, scenario_files, tmp_path):
        out1, out2 = tmp_path / "run1.json", tmp_path / "run2.json"
        for out in (out1, out2):
            main(["assess", "--scenario", str(scenario_files["london-terror-escapee"]),
                  "--out", str(out)])
        assert out1.read_bytes() == out2.read_bytes()

    def test_ratio_flag_accepts_float(self, scenario_files, tmp_path):
        code = main(["assess", "--scenario", str(scenario_files["london-terror-escapee"]),
                     "--ratio", "0.6", "--out", str(tmp_path / "c.json")])
        data = json.loads((tmp_path / "c.json").read_text())
        assert data["context"] == {"name": "custom", "hw_ratio": 0.6}
        assert code == EXIT_NON_INTERVENTION  # conservative-like ratio rejects p3


class TestSweep:
    def test_w_sweep_has_single_transition_at_frontier(self, scenario_files):
        scenario = builtin_scenarios()[1]  # london, moderate grid
        rows = sweep(scenario, "w", 0.1, 0.9, 9)
        # block (p2,h2) is index 3 in row-major order
        states = [row.decisions[3] for row in rows]
        flips = sum(1 for a, b in zip(states, states[1:]) if a is not b)
        assert flips == 1
        from frplane.classification import build_grid

        block = build_grid(scenario.context).block_at(2, 2)
        w_star = deployment_frontier_w(block, scenario.function.r, scenario.function.t)
        for row in rows:
            expected = Decision.DEPLOY if row.value > w_star else Decision.NOT_DEPLOY
            if abs(row.value - w_star) > 1e-9:
                assert row.decisions[3] is expected

    def test_t_sweep_shrinks_deploy_set(self):
        scenario = builtin_scenarios()[1]
        rows = sweep(scenario, "t", 0.0, 0.5, 3)
        deploy_counts = [sum(d is Decision.DEPLOY for d in row.decisions) for row in rows]
        assert deploy_counts[0] >= deploy_counts[1] >= deploy_counts[2]

    def test_ratio_sweep_rows_match_direct_assessment(self):
        import dataclasses

        from frplane.domain import CulturalContext

        scenario = builtin_scenarios()[1]
        rows = sweep(scenario, "ratio", 3 / 13, 3 / 5, 5)
        for row in rows:
            probe = dataclasses.replace(scenario, context=CulturalContext("custom", row.value))
            assert row.overall is assess(probe).overall

    def test_range_errors(self):
        scenario = builtin_scenarios()[0]
        from frplane.cli import RangeError

        with pytest.raises(RangeError):
            sweep(scenario, "w", 0.0, 1.2, 5)
        with pytest.raises(RangeError):
            sweep(scenario, "t", 0.0, 0.9, 3)
        with pytest.raises(RangeError):
            sweep(scenario, "ratio", -1.0, 1.0, 3)
        with pytest.raises(RangeError):
            sweep(scenario, "w", 0.5, 0.1, 3)

    def test_cli_sweep_table(self, scenario_files, capsys):
        code = main(["sweep", "--scenario", str(scenario_files["london-terror-escapee"]),
                     "--vary", "w", "--range", "0.1:0.9", "--steps", "5"])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        lines = out.strip().splitlines()
        assert len(lines) == 6  # header + 5 samples
        assert lines[0].startswith("w")
        assert "overall" in lines[0]

    def test_cli_sweep_bad_range_exits_one(self, scenario_files, capsys):
        assert main(["sweep", "--scenario", str(scenario_files["london-terror-escapee"]),
                     "--vary", "w", "--range", "0:2", "--steps", "5"]) == EXIT_ERROR

    def test_format_sweep_table_deterministic(self):
        scenario = builtin_scenarios()[1]
        rows = sweep(scenario, "w", 0.2, 0.8, 4)
        assert format_sweep_table("w", rows) == format_sweep_table("w", rows)


class TestExportPlane:
    def test_svg_export_is_deterministic(self, scenario_files, tmp_path):
        out1, out2 = tmp_path / "p1.svg", tmp_path / "p2.svg"
        for out in (out1, out2):
            code = main(["export-plane", "--scenario",
                         str(scenario_files["london-terror-escapee"]), "--out", str(out)])
            assert code == EXIT_OK
        assert out1.read_bytes() == out2.read_bytes()
        svg = out1.read_text()
        assert svg.count("<rect") == 8  # background + 6 blocks + frame
        assert "Security Harm" in svg and "Privacy Loss" in svg

    def test_svg_shows_deploy_count_for_london(self, scenario_files, tmp_path):
        out = tmp_path / "plane.svg"
        main(["export-plane", "--scenario", str(scenario_files["london-terror-escapee"]),
              "--out", str(out)])
        svg = out.read_text()
        # moderate grid, w=0.75, r=0.9: every h2 block plus (p1,h1) clears the rule
        assert svg.count(": deploy") == 4
        assert svg.count(": not deploy") == 2

    def test_document_format_has_curve_and_blocks(self, scenario_files, tmp_path):
        out = tmp_path / "plane.json"
        main(["export-plane", "--scenario", str(scenario_files["brondby-stadium"]),
              "--out", str(out), "--format", "document"])
        data = json.loads(out.read_text())
        assert len(data["blocks"]) == 6
        assert len(data["curve"]) >= 64
        assert data["kind"] == "plane-render"

    def test_unwritable_out_path(self, scenario_files, tmp_path, capsys):
        dest = tmp_path / "no-such-dir" / "plane.svg"
        assert main(["export-plane", "--scenario", str(scenario_files["brondby-stadium"]),
                     "--out", str(dest)]) == EXIT_ERROR


class TestFixturesCommand:
    def test_writes_three_files(self, tmp_path, capsys):
        assert main(["fixtures", "--outdir", str(tmp_path / "scen")]) == EXIT_OK
        created = sorted(p.name for p in (tmp_path / "scen").iterdir())
        assert created == [
            "brondby-stadium.json",
            "london-terror-escapee.json",
            "met-lfr-trials.json",
        ]
