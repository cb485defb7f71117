"""CSV artifact and metadata writers.

All CSVs are RFC-4180-style: header row, UTF-8, LF line endings, floats
printed with up to 17 significant digits so values round-trip exactly.
The run metadata JSON doubles as the artifact manifest: every output file
is listed with its SHA-256 content checksum.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .memory import MemoryReport, SweepNResult
from .model import PRNG_ALGORITHM
from .propagate import AmplitudeTrajectory
from .spectrum import SpectrumScan


def fmt(x: float) -> str:
    """Round-trip decimal rendering of a float."""
    return format(float(x), ".17g")


def _write_rows(path: Path, header: list[str], rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    path.write_text(buf.getvalue(), encoding="utf-8", newline="")


def write_trajectory_csv(path: Path, traj: AmplitudeTrajectory) -> None:
    rows = (
        (fmt(t), fmt(c.real), fmt(c.imag), fmt(a), fmt(a * a))
        for t, c, a in zip(traj.times, traj.ce, traj.abs_ce)
    )
    _write_rows(path, ["t", "re_ce", "im_ce", "abs_ce", "pop_e"], rows)


def write_transport_csv(path: Path, traj: AmplitudeTrajectory, grid: np.ndarray) -> None:
    header = ["t"] + [str(j) for j in range(1, grid.shape[1] + 1)]
    rows = ([fmt(t)] + [fmt(p) for p in row] for t, row in zip(traj.times, grid))
    _write_rows(path, header, rows)


def write_memory_csv(path: Path, traj: AmplitudeTrajectory, report: MemoryReport) -> None:
    rows = (
        (fmt(t), fmt(a), fmt(nv), fmt(n))
        for t, a, nv, n in zip(
            traj.times, traj.abs_ce, report.nv_cumulative, report.n_cumulative
        )
    )
    _write_rows(path, ["t", "abs_ce", "nv", "n"], rows)


def write_growth_windows_csv(path: Path, report: MemoryReport) -> None:
    rows = ((fmt(a), fmt(b)) for a, b in report.growth_windows)
    _write_rows(path, ["t_start", "t_end"], rows)


def write_sweep_n_csv(path: Path, result: SweepNResult) -> None:
    rows = (
        (fmt(r.W), fmt(r.n_mean), fmt(r.n_std), fmt(r.n_min), fmt(r.n_max), str(r.num_seeds))
        for r in result.rows
    )
    _write_rows(path, ["W", "n_mean", "n_std", "n_min", "n_max", "num_seeds"], rows)


def write_spectrum_csv(path: Path, scan: SpectrumScan) -> None:
    def rows():
        for k, v in enumerate(scan.values):
            for i in range(scan.eigenvalues.shape[1]):
                ipr = "" if scan.ipr is None else fmt(scan.ipr[k, i])
                yield (
                    fmt(v),
                    str(i),
                    fmt(scan.eigenvalues[k, i]),
                    str(int(scan.bound_flags[k, i])),
                    ipr,
                )

    _write_rows(path, ["param_value", "eig_index", "energy", "is_bound", "ipr"], rows())


def sha256_of(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_metadata(
    path: Path,
    resolved_config: dict,
    seeds: list[int],
    artifacts: list[Path],
    wall_time_s: float,
    tool_version: str,
) -> None:
    record = {
        "tool": "giant-lattice-sim",
        "tool_version": tool_version,
        "prng_algorithm": PRNG_ALGORITHM,
        "numpy_version": np.__version__,
        "seeds": seeds,
        "wall_time_s": wall_time_s,
        "resolved_config": resolved_config,
        "artifacts": [
            {"path": p.name, "sha256": sha256_of(p), "bytes": p.stat().st_size}
            for p in artifacts
        ],
    }
    path.write_text(json.dumps(record, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def resolved_config_dict(run_cfg) -> dict:
    """JSON-safe dump of a RunConfig, model block included."""
    data = asdict(run_cfg)
    data["model"] = asdict(run_cfg.model)
    for key, value in list(data.items()):
        if isinstance(value, tuple):
            data[key] = list(value)
    return data
