import csv
import logging
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from abel_inversion.constant.abel_constant import ColumnConstant  # noqa: E402
from abel_inversion.constant.solver_constant import TableConstant  # noqa: E402
from abel_inversion.context_manager.output_file_context_manager import OutputFileContextManager  # noqa: E402
from abel_inversion.model.plot_series import PlotSeries  # noqa: E402

logger = logging.getLogger(__name__)


class PlotRepository:
    """Plot data in long format, with an optional static SVG line chart."""

    def emit_plot_data(self, series: Sequence[PlotSeries], path: str) -> None:
        """Write rows (series, x, y) for every point of every series.

        Args:
            series (Sequence[PlotSeries]): Curves to write, in order
            path (str): Target CSV file
        """
        with OutputFileContextManager(path) as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow([ColumnConstant.SERIES, ColumnConstant.X, ColumnConstant.Y])
            for curve in series:
                for x, y in zip(curve.x, curve.y):
                    writer.writerow(
                        [curve.name, format(float(x), TableConstant.FLOAT_FORMAT), format(float(y), TableConstant.FLOAT_FORMAT)]
                    )
        logger.info(f"Wrote {len(series)} plot series to {path}")

    def emit_svg(self, series: Sequence[PlotSeries], path: str, x_label: str = "r", y_label: str = "k") -> None:
        """Render the series as polylines on one set of axes.

        Each curve is grouped under id "series-<name>". The output carries no
        timestamp and uses fixed element ids, so equal input gives equal bytes.
        """
        with plt.rc_context({"svg.hashsalt": "abel-inversion", "svg.fonttype": "none"}):
            figure, axes = plt.subplots(figsize=(6.0, 4.0))
            try:
                for curve in series:
                    axes.plot(curve.x, curve.y, label=curve.name, gid=f"series-{curve.name}")
                axes.set_xlabel(x_label)
                axes.set_ylabel(y_label)
                if series:
                    axes.legend()
                with OutputFileContextManager(path, binary=True) as handle:
                    figure.savefig(handle, format="svg", metadata={"Date": None})
            finally:
                plt.close(figure)
        logger.info(f"Rendered {len(series)} plot series to {path}")
