import json
import math
import re
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

import tropt as t
from tropt.cli import main
from tropt.errors import ProblemFileError
from tropt.probfile import (
    canonical_json,
    dump_json,
    load_problem,
    parse_problem,
    report_dict,
    solve_parsed,
)
from tropt.svg import render_svg

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


class TestParsing:
    def test_all_shipped_files_parse(self):
        for path in sorted(PROBLEMS.glob("*.json")):
            parsed = load_problem(path)
            assert parsed.problem_type == path.stem

    def test_round_trip(self):
        for path in sorted(PROBLEMS.glob("*.json")):
            first = load_problem(path)
            text = canonical_json(first)
            second = parse_problem(json.loads(text))
            assert canonical_json(second) == text

    def test_inf_literals(self):
        doc = {
            "problem": "general",
            "p": [0, 1],
            "q": [0, 0],
            "B": [["-inf", -2], [0, "-inf"]],
        }
        parsed = parse_problem(doc)
        assert parsed.instance.B[0, 0] == -math.inf

    def test_semifield_default_and_override(self):
        doc = {"problem": "unconstrained", "p": [1], "q": [-1]}
        assert parse_problem(doc).sf is t.MAX_PLUS
        assert parse_problem(doc, semifield_override="min-plus").sf is t.MIN_PLUS

    @pytest.mark.parametrize(
        "doc,fragment",
        [
            ([1, 2], "expected a JSON object"),
            ({"problem": "bogus"}, "field 'problem'"),
            ({"problem": "box", "p": [1], "q": [1], "g": [1]}, "'h': required"),
            ({"problem": "unconstrained", "p": [1], "q": [1], "B": [[0]]}, "not expected"),
            ({"problem": "unconstrained", "p": [1], "q": "x"}, "expected a non-empty array"),
            ({"problem": "unconstrained", "p": [1], "q": [True]}, "expected a number"),
            ({"problem": "unconstrained", "p": [1], "q": ["oops"]}, "expected a number"),
            ({"problem": "linear", "p": [1, 2], "q": [1, 2], "B": [[0, 0], [0]]}, "ragged"),
            ({"problem": "unconstrained", "semifield": "nope", "p": [1], "q": [1]}, "unknown tag"),
            ({"problem": "location", "semifield": "min-plus",
              "points": [[0, 0]], "weights": [1]}, "max-plus only"),
            ({"problem": "location", "points": [[0, 0]], "weights": [1, 2]},
             "one weight per point"),
            ({"problem": "box", "p": [1, 2], "q": [1], "g": [1, 2], "h": [1, 2]},
             "column vector of length"),
        ],
    )
    def test_diagnostics(self, doc, fragment):
        with pytest.raises(ProblemFileError, match=re.escape(fragment)):
            parse_problem(doc)

    def test_invalid_json_reports_line(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{\n  "problem": oops\n}\n')
        with pytest.raises(ProblemFileError, match="line 2"):
            load_problem(bad)


class TestReports:
    def test_solution_report(self):
        parsed = load_problem(PROBLEMS / "general.json")
        rep = report_dict(solve_parsed(parsed))
        assert rep["status"] == "optimal"
        assert rep["theta"] == 14
        assert rep["u_lo"].tolist() == [2, 0]
        assert rep["u_hi"].tolist() == [2, 6]

    def test_infeasible_report(self, mp):
        rep = report_dict(
            t.solve_box_constrained(
                t.tvector(mp, [0, 0]), t.tvector(mp, [0, 0]),
                t.tvector(mp, [3, 0]), t.tvector(mp, [1, 5]),
            )
        )
        assert rep == {"status": "infeasible", "reason": "BoundsIncompatible", "detail": 2}

    def test_json_rendering(self):
        text = dump_json({"a": -math.inf, "b": 2.0, "c": [True, 0.25], "d": 1e300})
        doc = json.loads(text)
        assert doc == {"a": "-inf", "b": 2, "c": [True, 0.25], "d": 1e300}
        assert '"b": 2,' in text  # integral floats drop the decimal point


class TestCliSolve:
    def test_solve_optimal(self, capsys):
        code = main(["solve", str(PROBLEMS / "general.json")])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["status"] == "optimal" and doc["theta"] == 14

    def test_solve_location(self, capsys):
        code = main(["solve", str(PROBLEMS / "location.json")])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["theta"] == 14
        assert doc["p"] == [3, 14] and doc["q"] == [-12, -4]

    def test_solve_infeasible_exit_1(self, tmp_path, capsys):
        f = tmp_path / "bad.json"
        f.write_text(json.dumps({
            "problem": "box", "p": [0, 0], "q": [0, 0], "g": [3, 0], "h": [1, 5],
        }))
        code = main(["solve", str(f)])
        assert code == 1
        assert json.loads(capsys.readouterr().out)["status"] == "infeasible"

    def test_missing_file_exit_2(self, capsys):
        assert main(["solve", "/no/such/file.json"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_malformed_file_exit_2(self, tmp_path, capsys):
        f = tmp_path / "bad.json"
        f.write_text('{"problem": "box"}')
        assert main(["solve", str(f)]) == 2
        assert "required" in capsys.readouterr().err

    def test_semifield_override(self, tmp_path, capsys):
        # the same numbers read as min-plus give a different optimum
        f = tmp_path / "p.json"
        f.write_text(json.dumps({"problem": "unconstrained", "p": [3, 14], "q": [12, 4]}))
        assert main(["solve", str(f), "--semifield", "min-plus"]) == 0
        doc = json.loads(capsys.readouterr().out)
        # min-plus theta: min over (q_i^-1 p_i) halved, here (3-12)/2 etc.
        assert doc["theta"] == -4.5

    def test_out_file(self, tmp_path):
        dest = tmp_path / "report.json"
        assert main(["solve", str(PROBLEMS / "box.json"), "--out", str(dest)]) == 0
        assert json.loads(dest.read_text())["theta"] == 14


class TestCliVerify:
    def test_verify_agrees(self, capsys):
        for name in ("unconstrained", "box", "linear", "general", "location"):
            code = main(["verify", str(PROBLEMS / f"{name}.json")])
            doc = json.loads(capsys.readouterr().out)
            assert code == 0, name
            assert doc["status"] == "agree"
            assert doc["argmins_contained"] is True

    def test_verify_summary_line(self, capsys):
        main(["verify", str(PROBLEMS / "general.json")])
        doc = json.loads(capsys.readouterr().out)
        assert doc["summary"] == "agree: theta = 14"
        assert doc["argmin_count"] == 13

    def test_verify_infeasible_agreement(self, tmp_path, capsys):
        f = tmp_path / "inf.json"
        f.write_text(json.dumps({
            "problem": "box", "p": [0, 0], "q": [0, 0], "g": [3, 0], "h": [1, 5],
        }))
        code = main(["verify", str(f), "--grid-lo=-5,-5", "--grid-hi=5,5"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 1
        assert doc["status"] == "agree"
        assert doc["summary"] == "agree: infeasible"

    def test_explicit_grid(self, capsys):
        code = main([
            "verify", str(PROBLEMS / "unconstrained.json"),
            "--grid-lo=-10,-10", "--grid-hi=10,10", "--grid-step", "0.5",
        ])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["summary"] == "agree: theta = 9"

    def test_half_grid_exit_2(self, capsys):
        assert main(["verify", str(PROBLEMS / "box.json"), "--grid-lo", "0,0"]) == 2
        assert "together" in capsys.readouterr().err

    def test_grid_guard_exit_2(self, capsys):
        code = main([
            "verify", str(PROBLEMS / "unconstrained.json"),
            "--grid-lo=-1000,-1000", "--grid-hi=1000,1000", "--grid-step", "0.5",
        ])
        assert code == 2
        assert "limit" in capsys.readouterr().err

    def test_epsilon_env(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("TROPT_EPSILON", "0.75")
        # a grid too coarse to hit the optimizer exactly still agrees
        # within the widened tolerance
        f = tmp_path / "p.json"
        f.write_text(json.dumps({"problem": "unconstrained", "p": [1], "q": [-2]}))
        code = main(["verify", str(f), "--grid-lo=-4", "--grid-hi=4", "--grid-step", "1"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 0 and doc["status"] == "agree"


def _svg_elements(text, cls):
    root = ET.fromstring(text)
    return [
        el for el in root.iter()
        if el.get("class") == cls
    ]


class TestCliPlot:
    def test_plot_writes_svg(self, tmp_path):
        dest = tmp_path / "plot.svg"
        assert main(["plot", str(PROBLEMS / "general.json"), "--out", str(dest)]) == 0
        text = dest.read_text()
        assert text.startswith("<?xml")
        ET.fromstring(text)  # well-formed

    def test_byte_stable(self):
        parsed = load_problem(PROBLEMS / "location.json")
        result = solve_parsed(parsed)
        assert render_svg(parsed, result) == render_svg(parsed, result)

    def test_geometry_carries_exact_values(self):
        parsed = load_problem(PROBLEMS / "general.json")
        result = solve_parsed(parsed)
        text = render_svg(parsed, result)

        (pq,) = _svg_elements(text, "pq-rect")
        assert [pq.get(k) for k in ("x", "y", "width", "height")] == ["-12", "-4", "15", "18"]

        (box,) = _svg_elements(text, "bounds-rect")
        assert [box.get(k) for k in ("x", "y", "width", "height")] == ["2", "-8", "4", "16"]

        (seg,) = _svg_elements(text, "solution-segment")
        assert [seg.get(k) for k in ("x1", "y1", "x2", "y2")] == ["2", "0", "2", "6"]

        lines = _svg_elements(text, "constraint-line")
        assert len(lines) == 2

    def test_location_plot_has_demand_points(self):
        parsed = load_problem(PROBLEMS / "location.json")
        result = solve_parsed(parsed)
        text = render_svg(parsed, result)
        pts = _svg_elements(text, "demand-point")
        assert [(el.get("cx"), el.get("cy")) for el in pts] == [
            ("-7", "12"), ("2", "10"), ("-10", "3"), ("-4", "4"), ("-4", "-3"),
        ]

    def test_point_solution_rendered_as_marker(self):
        parsed = parse_problem({
            "problem": "linear", "p": [3, 14], "q": [-12, -4],
            "B": [[0, -4], [-8, -6]],
        })
        text = render_svg(parsed, solve_parsed(parsed))
        (pt,) = _svg_elements(text, "solution-point")
        assert (pt.get("cx"), pt.get("cy")) == ("-1", "3")

    def test_rejects_wrong_dimension(self):
        parsed = parse_problem({"problem": "unconstrained", "p": [1, 2, 3], "q": [0, 0, 0]})
        with pytest.raises(t.DomainError):
            render_svg(parsed, solve_parsed(parsed))
