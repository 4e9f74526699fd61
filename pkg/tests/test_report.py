import json
from pathlib import Path

import pytest

from helpsolver.report import build_report, full_report, parse_report, render_json, render_text
from helpsolver.solver import Solver, Status
from helpsolver.tables import parse_group_data

GOLDEN = Path(__file__).parent / "golden" / "a6_report.txt"


@pytest.fixture(scope="module")
def report(a6_solver, a6):
    return build_report(a6, a6_solver.solve_all(), a6_solver.tables_used)


def test_text_matches_golden(report):
    assert render_text(report) == GOLDEN.read_text()


def test_text_lines(report):
    lines = render_text(report).splitlines()
    assert "order 15: no solutions" in lines
    assert "order 2: trivial only (2a)" in lines
    assert "order 6: EXCEPTIONAL (2 solutions)" in lines
    assert lines[-1] == "status: open (2 exceptional solutions)"


def test_json_order6(report):
    doc = json.loads(render_json(report))
    assert doc["status"] == "open" and doc["open_exceptions"] == 2
    six = next(o for o in doc["orders"] if o["n"] == 6)
    assert six["status"] == "exceptional"
    found = [s["tuple"] for s in six["solutions"]]
    assert {"2a": -2, "3a": 2, "3b": 1} in found
    assert {"2a": -2, "3a": 1, "3b": 2} in found
    for s in six["solutions"]:
        assert s["classification"] == "exceptional" and s["class"] is None
        assert set(s["powers"]) == {"2", "3"}


def test_json_round_trip(report):
    text = render_json(report)
    again = parse_report(text)
    assert again == report
    assert render_json(again) == text


def test_rendering_is_deterministic(a6):
    one, two = full_report(a6), full_report(a6)
    assert render_json(one) == render_json(two)
    assert render_text(one) == render_text(two)


def test_single_order_report(a6_solver, a6):
    r = build_report(a6, [a6_solver.solve_order(15)], a6_solver.tables_used)
    assert [o.n for o in r.orders] == [15]
    assert r.status == "verified"
    assert r.order(15).status is Status.NO_SOLUTIONS
    assert render_text(r).splitlines()[-2:] == ["order 15: no solutions", "status: verified"]


def test_trivial_group_report():
    g = parse_group_data({
        "name": "1", "group_order": 1,
        "classes": [{"name": "1a", "element_order": 1, "centralizer_order": 1, "powermap": {}}],
        "ordinary": [{"name": "chi_1", "values": {"1a": 1}}],
    })
    r = full_report(g)
    assert "no nontrivial orders" in render_text(r)
    assert json.loads(render_json(r))["status"] == "verified"


def test_exceptional_summary_order(report):
    six = report.order(6)
    assert six.trivial == [] and len(six.exceptional) == 2
    assert six.data == 2 and len(six.rows) == 2
