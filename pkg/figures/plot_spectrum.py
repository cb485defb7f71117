#!/usr/bin/env python3
"""Energy spectrum along a parameter sweep, bound branches highlighted.

Reads the simulator's long spectrum schema (param_value, eig_index, energy,
is_bound, ipr) and scatters energy against the sweep value, drawing
band eigenvalues and bound-flagged eigenvalues in distinct colors.
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd

REQUIRED_COLUMNS = {"param_value", "eig_index", "energy", "is_bound"}

AXIS_LABELS = {
    "detuning": r"$\Delta/J$",
    "hopping": r"$J_{\mathrm{eff}}/J$",
    "coupling": r"$g/J$",
}


def read_spectrum(path):
    df = pd.read_csv(path)
    missing = REQUIRED_COLUMNS - set(df.columns)
    if missing:
        raise ValueError(f"{path}: missing column(s) {sorted(missing)}")
    return df


def make_spectrum_figure(scan_csv, sweep_label=None):
    """Return a figure with the band block in gray and bound branches in red."""
    df = read_spectrum(scan_csv)
    band = df[df["is_bound"] == 0]
    bound = df[df["is_bound"] == 1]
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    if len(band):
        ax.scatter(band["param_value"], band["energy"], s=1.0, c="0.45", label="band")
    if len(bound):
        ax.scatter(bound["param_value"], bound["energy"], s=4.0, c="crimson", label="bound")
    ax.set_xlabel(sweep_label or "sweep value")
    ax.set_ylabel(r"$E/J$")
    ax.legend(frameon=False, markerscale=4)
    fig.tight_layout()
    return fig


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--in", dest="scan_csv", required=True, metavar="CSV")
    parser.add_argument("--sweep-label", default=None, choices=sorted(AXIS_LABELS))
    parser.add_argument("--out", required=True, metavar="PNG")
    args = parser.parse_args(argv)

    label = AXIS_LABELS.get(args.sweep_label) if args.sweep_label else None
    fig = make_spectrum_figure(args.scan_csv, sweep_label=label)
    fig.savefig(args.out, dpi=200)
    plt.close(fig)
    print(args.out)


if __name__ == "__main__":
    main()
