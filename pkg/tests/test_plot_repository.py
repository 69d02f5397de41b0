import csv

import numpy as np
import pytest

from abel_inversion.exception.invalid_argument_exception import InvalidArgumentException
from abel_inversion.model.plot_series import PlotSeries
from abel_inversion.repository.plot_repository import PlotRepository


@pytest.fixture
def overlay():
    r = np.linspace(0.0, 1.0, 11)
    return [PlotSeries("k", r, 1.0 - r**2), PlotSeries("k_alpha", r, 0.95 * (1.0 - r**2))]


class TestEmitPlotData:
    def test_long_format_rows(self, overlay, tmp_path):
        path = tmp_path / "plot.csv"
        PlotRepository().emit_plot_data(overlay, str(path))
        with open(path, encoding="utf-8", newline="") as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ["series", "x", "y"]
        assert len(rows) == 2 * 11 + 1
        assert rows[1][0] == "k" and rows[12][0] == "k_alpha"
        assert float(rows[12][2]) == pytest.approx(0.95)

    def test_empty_series_list(self, tmp_path):
        path = tmp_path / "plot.csv"
        PlotRepository().emit_plot_data([], str(path))
        assert path.read_text(encoding="utf-8") == "series,x,y\n"

    def test_series_must_conform(self):
        with pytest.raises(InvalidArgumentException):
            PlotSeries("k", np.zeros(3), np.zeros(4))


class TestEmitSvg:
    def test_one_group_per_series(self, overlay, tmp_path):
        path = tmp_path / "plot.svg"
        PlotRepository().emit_svg(overlay, str(path))
        svg = path.read_text(encoding="utf-8")
        assert svg.lstrip().startswith("<?xml")
        assert 'id="series-k"' in svg
        assert 'id="series-k_alpha"' in svg

    def test_byte_identical_reruns(self, overlay, tmp_path):
        first, second = tmp_path / "a.svg", tmp_path / "b.svg"
        PlotRepository().emit_svg(overlay, str(first))
        PlotRepository().emit_svg(overlay, str(second))
        assert first.read_bytes() == second.read_bytes()
