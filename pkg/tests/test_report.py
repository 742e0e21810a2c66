"""Tests for JSON documents."""

import json
from pathlib import Path

from aci_betti import report
from aci_betti.betti import shape_from_positions
from aci_betti.commands.compare import build_report
from aci_betti.hilbert import aci_hilbert
from aci_betti.models import DegreeTuple, Route
from aci_betti.predictor import predict


def _t(n, *degrees):
    return DegreeTuple.of(n, degrees)


class TestTableJson:
    def test_entries_sorted(self):
        table = shape_from_positions([{3: 2, 2: 1}, {5: 2}]).table()
        doc = report.table_json(table, 2)
        assert doc["entries"] == [
            {"i": 0, "j": 0, "mult": 1},
            {"i": 1, "j": 2, "mult": 1},
            {"i": 1, "j": 3, "mult": 2},
            {"i": 2, "j": 5, "mult": 2},
        ]
        assert doc["status"] == "exact"
        assert doc["module"] == "R/I"

    def test_oracle_json(self):
        table = shape_from_positions([{2: 3}, {3: 2}]).table()
        doc = report.oracle_json(table, 2, "R/I", [0, 1], 101)
        assert doc["status"] == "oracle"
        assert doc["seeds"] == [0, 1]
        assert doc["prime"] == 101


class TestPredictionJson:
    def test_ghost_tuple(self):
        doc = report.prediction_json(predict(_t(3, 4, 4, 4, 8)))
        assert doc["source"] == "three-variables-compressed-even"
        assert doc["status"] == "exact"
        assert doc["degrees"] == [4, 4, 4, 8]
        assert doc["conjectural"] is False
        assert doc["ghosts"][0] == {"positions": [1, 2], "twist": 8, "mult": 1,
                                    "reason": "koszul-vs-generator"}
        assert all(e["status"] == "exact" for e in doc["entries"])
        assert doc["gorenstein"]["module"] == "R/G"

    def test_every_source_documented(self):
        readme = (Path(__file__).parents[1] / "README.md").read_text()
        for route in Route:
            assert f"| `{route.value}` |" in readme, route

    def test_bounds_marked(self):
        doc = report.prediction_json(predict(_t(4, 5, 5, 5, 5, 5)))
        assert doc["status"] == "bound"
        bounded = {(e["i"], e["j"]) for e in doc["entries"] if e["status"] == "bound"}
        assert bounded == {(2, 12), (3, 12), (3, 13), (4, 13)}


class TestRunReportJson:
    def test_matching_oracle(self):
        t = _t(3, 4, 4, 4, 8)
        pred = predict(t)
        run = build_report(t, pred, pred.table(), seeds=[0], prime=32003, elapsed=0.1234)
        doc = report.run_report_json(run)
        assert doc["ok"] is True
        assert doc["diff"] == []
        assert doc["cancellations"] is None
        assert doc["elapsed"] == 0.123
        assert doc["oracle"]["seeds"] == [0]

    def test_bound_family(self):
        t = _t(4, 5, 5, 5, 5, 5)
        pred = predict(t)
        measured = shape_from_positions([{5: 5}, {10: 10, 11: 16, 12: 15},
                                         {12: 34, 13: 34}, {13: 15, 14: 16}]).table()
        doc = report.run_report_json(build_report(t, pred, measured))
        assert doc["ok"] is True
        assert doc["cancellations"] == [{"i": 2, "j": 12, "mult": 2}, {"i": 3, "j": 13, "mult": 2}]
        assert {"i": 2, "j": 12, "mult": 15} in doc["measured_bounds"]


class TestHilbertJson:
    def test_keys(self):
        t = _t(3, 4, 4, 4, 8)
        doc = report.hilbert_json(t, {"R/I": aci_hilbert(t)}, None)
        assert doc["classification"] == "proper-aci"
        assert doc["hilbert"]["R/I"][-1] == 2
        assert "gorenstein_profile" not in doc


class TestDumps:
    def test_sorted_and_stable(self):
        doc = report.prediction_json(predict(_t(3, 2, 3, 5, 5)))
        text = report.dumps(doc)
        assert text == report.dumps(json.loads(text))
        assert list(json.loads(text)) == sorted(json.loads(text))

    def test_compact(self):
        assert report.dumps({"b": 1, "a": [1, 2]}, indent=None) == '{"a": [1, 2], "b": 1}'
