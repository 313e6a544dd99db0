"""
Static SVG figures.  Figures are drawn on a bare matplotlib Figure
(no pyplot state) and the SVG writer is given a fixed hash salt and
no date, so the same data always gives the same bytes.
"""
import logging

import numpy as np
import matplotlib
from matplotlib.figure import Figure

from ..errors import PlotError

logger = logging.getLogger(__name__)

STYLES = ("line", "scatter")

RC = {
    "svg.hashsalt": "dynoprior",
    "svg.fonttype": "path",
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
}


def _check_series(series):
    if isinstance(series, dict):
        series = [(label, x, y) for label, (x, y) in series.items()]
    series = list(series)
    if not series:
        raise PlotError('nothing to plot')

    checked = []
    for label, x, y in series:
        x = np.asarray(x, dtype = float).reshape(-1)
        y = np.asarray(y, dtype = float).reshape(-1)
        if x.size == 0:
            raise PlotError(f'series {label!r} is empty')
        if x.shape != y.shape:
            raise PlotError(f'series {label!r} has {x.size} x values and {y.size} y values')
        checked.append((str(label), x, y))
    return checked


def render_plot(series, style, path, title = "", xlabel = "", ylabel = "", logy = False):
    """
    Writes a standalone SVG with one data artist per series.

    series is a list of (label, x, y) triples or a dict mapping labels
    to (x, y).  Artist i carries the SVG id series-i.
    """
    if style not in STYLES:
        raise PlotError(f'unknown plot style {style!r}')
    series = _check_series(series)

    with matplotlib.rc_context(RC):
        fig = Figure(figsize = (6, 4))
        ax = fig.subplots()

        for i, (label, x, y) in enumerate(series):
            if style == "line":
                ax.plot(x, y, label = label, gid = f'series-{i}', lw = 1)
            else:
                ax.scatter(x, y, label = label, gid = f'series-{i}', s = 2)

        if logy:
            ax.set_yscale("log")
        ax.set_title(title)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.legend(loc = "best")
        fig.tight_layout()
        fig.savefig(path, format = "svg", metadata = {"Date": None})

    logger.debug("Wrote %s", path)
    return path
