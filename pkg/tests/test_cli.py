"""Command surface: output formats, exit-code contract, determinism."""

import json
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from gasket.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDist:
    def test_plain_output(self, capsys):
        code, out, _ = run(capsys, "dist", "(012)", "(1)")
        assert code == 0
        assert out.startswith("5/7 (≈0.714286), k=1, route=P")
        assert "sum_p=5/7" in out and "sum_edge=19/14" in out

    def test_tie_output(self, capsys):
        code, out, _ = run(capsys, "dist", "000(2)", "0122(0)")
        assert code == 0
        assert out.startswith("7/16") and "route=TIE" in out

    def test_json_envelope(self, capsys):
        code, out, _ = run(capsys, "dist", "(012)", "(1)", "--json")
        assert code == 0
        payload = json.loads(out)
        assert list(payload) == ["command", "inputs", "result", "exact"]
        assert payload["command"] == "dist"
        assert payload["inputs"] == ["(012)", "(1)"]
        assert payload["exact"] is True
        assert payload["result"]["distance"] == {"num": 5, "den": 7}
        assert payload["result"]["route"] == "P"

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "dist", "(0)", "(3)")
        assert code == 2
        assert "MalformedCode at offset 1" in err

    def test_rationals_in_lowest_terms(self, capsys):
        _, out, _ = run(capsys, "dist", "(0)", "0(1)", "--json")
        payload = json.loads(out)
        num = payload["result"]["distance"]["num"]
        den = payload["result"]["distance"]["den"]
        assert Fraction(num, den) == Fraction(1, 2)
        assert (num, den) == (1, 2)


class TestThinWrappers:
    def test_canon_round_trip(self, capsys):
        code, out, _ = run(capsys, "canon", "012(02)")
        assert code == 0
        assert out.strip() == "01(20)"
        code2, out2, _ = run(capsys, "canon", out.strip())
        assert code2 == 0 and out2.strip() == out.strip()

    def test_twin(self, capsys):
        code, out, _ = run(capsys, "twin", "01(2)")
        assert code == 0
        assert out.strip() == "02(1)"

    def test_twin_rejects_corner(self, capsys):
        code, out, _ = run(capsys, "twin", "(0)")
        assert code == 1
        assert "NotAJunction" in out

    def test_coords(self, capsys):
        code, out, _ = run(capsys, "coords", "0(1)")
        assert code == 0
        assert "1/2" in out and "(0.500000, 0.000000)" in out

    def test_geodesic_json(self, capsys):
        code, out, _ = run(capsys, "geodesic", "(0)", "(1)", "--depth", "4")
        assert code == 0
        payload = json.loads(out)
        assert list(payload) == ["route", "length", "waypoints"]
        assert payload["length"] == {"num": 1, "den": 1}
        assert payload["waypoints"] == ["(0)", "0(1)", "(1)"]

    def test_geodesic_same_point_exit_1(self, capsys):
        code, _, err = run(capsys, "geodesic", "0(1)", "1(0)", "--depth", "5")
        assert code == 1
        assert "SamePoint" in err

    def test_oracle(self, capsys):
        code, out, _ = run(capsys, "oracle", "(012)", "(1)", "--level", "6")
        assert code == 0
        assert "oracle=" in out and "exact=5/7" in out and "gap=" in out

    def test_oracle_level_guard(self, capsys):
        code, _, err = run(capsys, "oracle", "(0)", "(1)", "--level", "0")
        assert code == 2


class TestCheck:
    def test_passes_and_is_deterministic(self, capsys):
        args = ("check", "--samples", "40", "--level", "6", "--seed", "1")
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert "40/40 passed" in out1

    def test_zero_samples_usage_error(self, capsys):
        code, _, err = run(capsys, "check", "--samples", "0", "--level", "6", "--seed", "1")
        assert code == 2

    def test_different_seeds_differ(self, capsys):
        _, out1, _ = run(capsys, "check", "--samples", "5", "--level", "5", "--seed", "1")
        _, out2, _ = run(capsys, "check", "--samples", "5", "--level", "5", "--seed", "2")
        assert "5/5 passed" in out1 and "5/5 passed" in out2


class TestPlot:
    def test_writes_parseable_svg(self, capsys, tmp_path):
        out_file = tmp_path / "g.svg"
        code, out, _ = run(capsys, "plot", "(012)", "(1)", "--depth", "8", "-o", str(out_file))
        assert code == 0
        root = ET.fromstring(out_file.read_text())
        assert root.tag.endswith("svg")
        assert root.get("viewBox") == "0 0 1 0.8660254"
        ns = {"svg": "http://www.w3.org/2000/svg"}
        polyline = root.find(".//svg:polyline", ns)
        assert polyline is not None
        # declared exact length matches the polyline's geometric length
        num, den = map(int, polyline.get("data-length").split("/"))
        pts = [tuple(map(float, p.split(","))) for p in polyline.get("points").split()]
        euclid = sum(
            ((x2 - x1) ** 2 + (y2 - y1) ** 2) ** 0.5
            for (x1, y1), (x2, y2) in zip(pts, pts[1:])
        )
        assert abs(euclid - num / den) < 1e-6
        assert abs(num / den - 5 / 7) <= 2 ** -7

    def test_same_point_exit_1(self, capsys, tmp_path):
        code, _, err = run(capsys, "plot", "(0)", "(0)", "--depth", "4", "-o", str(tmp_path / "x.svg"))
        assert code == 1
        assert "SamePoint" in err

    def test_io_error_exit_3(self, capsys, tmp_path):
        target = tmp_path / "missing" / "deep" / "g.svg"
        code, _, err = run(capsys, "plot", "(012)", "(1)", "--depth", "5", "-o", str(target))
        assert code == 3


class TestUsage:
    def test_no_command(self, capsys):
        assert main([]) == 2

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
