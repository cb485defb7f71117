#!/usr/bin/env python3
"""Overlay excited-state population curves from trajectory CSVs.

Input files follow the simulator's trajectory schema
(t, re_ce, im_ce, abs_ce, pop_e); one curve is drawn per file, with an
optional zoomed inset over a time sub-window.
"""

import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd

REQUIRED_COLUMNS = {"t", "pop_e"}


def read_trajectory(path):
    df = pd.read_csv(path)
    missing = REQUIRED_COLUMNS - set(df.columns)
    if missing:
        raise ValueError(f"{path}: missing column(s) {sorted(missing)}")
    return df


def make_population_figure(csv_paths, labels=None, inset=None):
    """Return a figure with one |C_e(t)|^2 curve per CSV.

    labels default to the file stems; inset, if given, is a (t0, t1) window
    rendered as zoomed child axes with exactly those x-limits.
    """
    if not csv_paths:
        raise ValueError("need at least one trajectory CSV")
    if not labels:
        labels = [Path(p).stem for p in csv_paths]
    if len(labels) != len(csv_paths):
        raise ValueError(f"got {len(labels)} labels for {len(csv_paths)} files")

    frames = [read_trajectory(p) for p in csv_paths]
    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    for df, label in zip(frames, labels):
        ax.plot(df["t"], df["pop_e"], lw=1.2, label=label)
    ax.set_xlabel(r"$Jt$")
    ax.set_ylabel(r"$|C_e(t)|^2$")
    ax.legend(frameon=False)

    if inset is not None:
        t0, t1 = inset
        axins = ax.inset_axes([0.45, 0.42, 0.52, 0.52])
        for df, label in zip(frames, labels):
            window = df[(df["t"] >= t0) & (df["t"] <= t1)]
            axins.plot(window["t"], window["pop_e"], lw=1.0)
        axins.set_xlim(t0, t1)
        ax.indicate_inset_zoom(axins, edgecolor="gray")

    fig.tight_layout()
    return fig


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--in", dest="inputs", nargs="+", required=True, metavar="CSV")
    parser.add_argument("--labels", nargs="*", default=None)
    parser.add_argument("--inset", nargs=2, type=float, default=None, metavar=("T0", "T1"))
    parser.add_argument("--out", required=True, metavar="PNG")
    args = parser.parse_args(argv)

    fig = make_population_figure(args.inputs, labels=args.labels, inset=args.inset)
    fig.savefig(args.out, dpi=200)
    plt.close(fig)
    print(args.out)


if __name__ == "__main__":
    main()
