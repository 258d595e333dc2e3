import typing

import matplotlib
matplotlib.use("Agg")
from matplotlib import pyplot as plt

from plc.utils.math import log4


FONT_SERIF_10 = dict(family="serif", size=10)
FONT_SERIF_14 = dict(family="serif", size=14)


def format_axis_basic(ax: plt.Axes, font: dict):
    for tick in ax.get_xticklabels():
        tick.set_fontfamily(font["family"])
        tick.set_fontsize(font["size"])
    for tick in ax.get_yticklabels():
        tick.set_fontfamily(font["family"])
        tick.set_fontsize(font["size"])


def format_axis_scientific(ax: plt.Axes, font: dict):
    format_axis_basic(ax, font)
    ax.minorticks_on()
    ax.tick_params(which="minor", direction="in", left=True, bottom=True, top=True, right=True)
    ax.tick_params(which="major", direction="in", left=True, bottom=True, top=True, right=True)


def plot_growth(stages: typing.Sequence[int], point_counts: typing.Sequence[int], file_name: str):
    """
    Saves a figure of :math:`\\log_4 \\log_4 n_k` against the stage index. Doubly exponential growth appears as a
    straight line with slope :math:`\\log_4 b` for :math:`n_k \\approx 4^{b^k}`.
    """
    fig, ax = plt.subplots(figsize=(6, 4))
    y = [log4(log4(n)) if n > 4 else 0.0 for n in point_counts]
    ax.plot(list(stages), y, marker="o", color="steelblue", label=r"$\log_4 \log_4 n_k$")
    ax.plot(list(stages), list(stages), ls="--", color="grey", label=r"upper envelope $k$")
    ax.set_xlabel("stage $k$", fontdict=FONT_SERIF_14)
    ax.set_ylabel(r"$\log_4 \log_4 n_k$", fontdict=FONT_SERIF_14)
    ax.legend(prop=FONT_SERIF_10)
    format_axis_scientific(ax, FONT_SERIF_10)
    fig.tight_layout()
    fig.savefig(file_name)
    plt.close(fig)
    return file_name
