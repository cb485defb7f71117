#!/usr/bin/env python3
"""Time-site heatmap of the photon population from a transport-grid CSV.

The input follows the simulator's transport schema: first column t, then
one column per 1-based site index holding |C_j(t)|^2.  Coupling sites can
be marked with vertical guide lines.
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd


def read_transport_grid(path):
    df = pd.read_csv(path)
    if df.columns[0] != "t" or len(df.columns) < 2:
        raise ValueError(f"{path}: expected a 't' column followed by site columns")
    try:
        sites = np.array([int(c) for c in df.columns[1:]])
    except ValueError as exc:
        raise ValueError(f"{path}: site columns must be integer labels: {exc}") from exc
    times = df["t"].to_numpy()
    grid = df.iloc[:, 1:].to_numpy()
    return times, sites, grid


def make_heatmap_figure(grid_csv, markers=(), cmap="magma", vmax=None):
    """Return a figure showing |C_j(t)|^2 over the (site, time) plane."""
    times, sites, grid = read_transport_grid(grid_csv)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    image = ax.imshow(
        grid,
        origin="lower",
        aspect="auto",
        cmap=cmap,
        vmax=vmax,
        extent=(sites[0] - 0.5, sites[-1] + 0.5, times[0], times[-1]),
    )
    for site in markers:
        ax.axvline(site, color="cyan", lw=0.8, ls="--")
    ax.set_xlabel("site $j$")
    ax.set_ylabel(r"$Jt$")
    fig.colorbar(image, ax=ax, label=r"$|C_j(t)|^2$")
    fig.tight_layout()
    return fig


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--in", dest="grid_csv", required=True, metavar="CSV")
    parser.add_argument("--markers", nargs="*", type=int, default=[])
    parser.add_argument("--vmax", type=float, default=None)
    parser.add_argument("--out", required=True, metavar="PNG")
    args = parser.parse_args(argv)

    fig = make_heatmap_figure(args.grid_csv, markers=args.markers, vmax=args.vmax)
    fig.savefig(args.out, dpi=200)
    plt.close(fig)
    print(args.out)


if __name__ == "__main__":
    main()
