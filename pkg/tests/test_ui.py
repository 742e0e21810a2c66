"""Tests for terminal rendering helpers."""

from rich.console import Console

from aci_betti import ui
from aci_betti.betti import shape_from_positions


def _render(renderable):
    console = Console(width=120, theme=ui.THEME, record=True)
    console.print(renderable)
    return console.export_text()


class TestBettiGrid:
    def test_staircase_rows(self):
        table = shape_from_positions([{4: 3, 8: 1}, {8: 3, 9: 2, 10: 1}, {10: 1, 11: 2}]).table()
        grid = ui.betti_grid(table)
        # rows j - i: 0, 3, 6, 7, 8
        assert grid.row_count == 5
        assert len(grid.columns) == 5

    def test_bounds_marked(self):
        table = shape_from_positions([{2: 3}, {3: 2}]).table()
        text = _render(ui.betti_grid(table, {(2, 3)}))
        assert "≤2" in text
        assert "3" in text


class TestModuleList:
    def test_arrows(self):
        shape = shape_from_positions([{2: 3}, {3: 2}])
        assert ui.module_list(shape) == "0 → R(-3)^2 → R(-2)^3 → R"
