"""Command line behaviour: output shapes, files and exit codes."""

import io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout

import pytest

from bechex.cli import main


def run_cli(*argv, stdin: str = ""):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            try:
                code = main(list(argv))
            except SystemExit as exc:
                code = exc.code if isinstance(exc.code, int) else 1
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


class TestAnalyze:
    def test_human_output(self):
        code, out, _ = run_cli("analyze", "5351")
        assert code == 0
        assert "winding:      6" in out
        assert "class:        pseudo-convex" in out
        assert "condensation: catacondensed-unbranched" in out

    def test_json_output(self):
        code, out, _ = run_cli("analyze", "5351", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["schema_version"] == 1
        (result,) = data["results"]
        assert result["canonical"] == "5351"
        assert result["deficit"] == 1
        assert result["embeddable"] is True
        assert result["hexagons"] == 3

    def test_not_embeddable_is_still_analyzable(self):
        code, out, _ = run_cli("analyze", "535151", "--json")
        assert code == 0
        (result,) = json.loads(out)["results"]
        assert result["embeddable"] is False
        assert result["reason"] == "NotClosed"

    def test_stdin_batch(self):
        code, out, _ = run_cli("analyze", "--stdin", "--json", stdin="55\n444\n")
        assert code == 0
        results = json.loads(out)["results"]
        assert [r["code"] for r in results] == ["55", "444"]

    def test_missing_argument(self):
        code, _, err = run_cli("analyze")
        assert code == 3
        assert "error" in err

    def test_bad_code_exits_1(self):
        code, _, err = run_cli("analyze", "90210")
        assert code == 1
        assert "error" in err


class TestSimpleCommands:
    def test_canonical(self):
        assert run_cli("canonical", "1535")[:2] == (0, "5351\n")

    def test_validate_ok(self):
        code, out, _ = run_cli("validate", "444")
        assert code == 0
        assert "valid: 3 hexagon" in out

    def test_validate_rejects_open_walk(self):
        code, _, _ = run_cli("validate", "535151")
        assert code == 2

    def test_validate_json(self):
        code, out, _ = run_cli("validate", "5111153333", "--json")
        assert code == 2
        data = json.loads(out)
        assert data["valid"] is False
        assert data["reason"] == "SelfIntersecting"

    def test_embed_writes_cells(self, tmp_path):
        target = tmp_path / "cells.txt"
        code, out, _ = run_cli("embed", "55", "--cells-out", str(target))
        assert code == 0
        assert target.read_text() == "0 0\n0 1\n"
        assert out == "0 0\n0 1\n"

    def test_embed_json(self):
        code, out, _ = run_cli("embed", "444", "--json")
        data = json.loads(out)
        assert data["cells"] == [[0, 1], [1, 0], [1, 1]]
        assert data["condensation"] == "pericondensed"

    def test_embed_not_closed_exits_2(self):
        assert run_cli("embed", "22222222")[0] == 2


class TestRender:
    def test_svg_to_file(self, tmp_path):
        target = tmp_path / "out.svg"
        code, _, _ = run_cli("render", "4343", "-o", str(target))
        assert code == 0
        text = target.read_text()
        assert text.count("<path ") == 4

    def test_tikz_to_stdout(self):
        code, out, _ = run_cli("render", "55", "--format", "tikz")
        assert code == 0
        assert out.count("\\draw[") == 2

    def test_from_cell_file(self, tmp_path):
        cells = tmp_path / "cells.txt"
        cells.write_text("0 0\n0 1\n# comment\n\n1 1\n")
        code, out, _ = run_cli("render", "--cells", str(cells))
        assert code == 0
        assert out.count("<path ") == 3

    def test_render_unembeddable_exits_2(self):
        assert run_cli("render", "535151")[0] == 2

    def test_bad_cell_file(self, tmp_path):
        cells = tmp_path / "cells.txt"
        cells.write_text("0 0 7\n")
        assert run_cli("render", "--cells", str(cells))[0] == 3


class TestFamilyAndLookup:
    def test_family_generation(self):
        code, out, _ = run_cli("family", "L", "4")
        assert code == 0
        assert "code:     522522" in out
        assert "hexagons: 4" in out

    def test_family_json(self):
        code, out, _ = run_cli("family", "Spiral", "6", "--json")
        data = json.loads(out)
        assert data["code"] == "5333252111"
        assert data["deficit"] == 4

    def test_family_list(self):
        code, out, _ = run_cli("family", "--list")
        assert code == 0
        assert "Spiral" in out and "DihedralS" in out

    def test_family_errors(self):
        assert run_cli("family", "Nope", "2")[0] == 3
        assert run_cli("family", "L", "1")[0] == 3
        assert run_cli("family", "L")[0] == 3

    def test_lookup_by_name(self):
        code, out, _ = run_cli("lookup", "coronene")
        assert code == 0
        assert "code:     333333" in out

    def test_lookup_by_code_and_synonyms(self):
        code, out, _ = run_cli("lookup", "3434", "--json")
        data = json.loads(out)
        assert data["names"] == ["pyrene"]
        assert data["kind"] == "convex"

    def test_lookup_all(self):
        code, out, _ = run_cli("lookup", "--all")
        assert code == 0
        assert len(out.splitlines()) == 38

    def test_lookup_unknown(self):
        assert run_cli("lookup", "adamantane")[0] == 3


class TestEnumerate:
    def test_json_report(self):
        code, out, _ = run_cli("enumerate", "--hexagons", "4", "--json")
        assert code == 0
        levels = json.loads(out)["levels"]
        assert [lv["count"] for lv in levels] == [1, 3, 7]

    def test_table_and_files(self, tmp_path):
        code, out, _ = run_cli("enumerate", "--hexagons", "3", "--out", str(tmp_path))
        assert code == 0
        assert (tmp_path / "benzenoids_h3.txt").read_text() == "444\n5252\n5351\n"
        assert (tmp_path / "report_h3.json").exists()
        assert (tmp_path / "extremal_h3.txt").read_text() == "5351\n"

    def test_bad_hexagons(self):
        assert run_cli("enumerate", "--hexagons", "0")[0] == 3


class TestUnbranchedMax:
    def test_json(self):
        code, out, _ = run_cli("unbranched-max", "--hexagons", "5", "--json")
        data = json.loads(out)
        assert data["max_deficit"] == 3
        assert "52325212" in data["witnesses"]

    def test_bad_hexagons(self):
        assert run_cli("unbranched-max", "--hexagons", "1")[0] == 3


class TestConsoleScript:
    def test_entry_point_runs(self):
        proc = subprocess.run(
            [sys.executable, "-m", "bechex.cli", "canonical", "1535"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "5351\n"

    def test_unknown_subcommand_exits_3(self):
        proc = subprocess.run(
            [sys.executable, "-m", "bechex.cli", "frobnicate"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 3
