"""Command-line front end: one mode per invocation, CSV artifacts + metadata.

Usage::

    giant-lattice-sim <config-path> [--out DIR] [--seed N] [--quiet]

<config-path> is a TOML run document (see `config`); the name of a bundled
preset (e.g. ``fig2a``) is accepted in place of a path.  Exit codes:
0 success, 2 config error, 3 numeric failure, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import __version__
from .config import ConfigError, RunConfig, load_config
from .memory import disorder_sweep_n, memory_report
from .model import build_hamiltonian, sample_disorder
from .propagate import PropagationError, evolve_exact, time_grid, transport_grid
from .presets import preset_path
from .spectrum import scan_spectrum
from . import output

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


def run(cfg: RunConfig, out_dir: str | Path | None = None, quiet: bool = False) -> tuple[int, list[Path]]:
    """Execute one run configuration; returns (exit code, artifact manifest)."""
    t_start = time.perf_counter()
    out = Path(out_dir) if out_dir is not None else Path(cfg.out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        _error_record(f"cannot create output directory {out}: {exc}", EXIT_IO)
        return EXIT_IO, []

    artifacts: list[Path] = []
    seeds_used: list[int] = []
    try:
        if cfg.mode in ("evolve", "transport", "memory"):
            dis = sample_disorder(cfg.model.L, cfg.W, cfg.seed)
            seeds_used = [cfg.seed]
            H = build_hamiltonian(cfg.model, dis)
            times = time_grid(cfg.t_end, cfg.dt)
            want_sites = cfg.want_sites or cfg.mode == "transport"
            traj = evolve_exact(H, times, want_sites=want_sites)
            path = out / "trajectory.csv"
            output.write_trajectory_csv(path, traj)
            artifacts.append(path)
            if want_sites:
                grid = transport_grid(traj)
                path = out / "transport.csv"
                output.write_transport_csv(path, traj, grid)
                artifacts.append(path)
            if cfg.mode == "memory":
                report = memory_report(traj)
                path = out / "memory.csv"
                output.write_memory_csv(path, traj, report)
                artifacts.append(path)
                path = out / "growth_windows.csv"
                output.write_growth_windows_csv(path, report)
                artifacts.append(path)
        elif cfg.mode == "sweep-n":
            times = time_grid(cfg.t_end, cfg.dt)
            result = disorder_sweep_n(cfg.model, list(cfg.W_values), list(cfg.seeds), times)
            seeds_used = sorted(set(cfg.seeds))
            path = out / "sweep_n.csv"
            output.write_sweep_n_csv(path, result)
            artifacts.append(path)
        elif cfg.mode == "spectrum":
            dis = sample_disorder(cfg.model.L, cfg.W, cfg.seed)
            seeds_used = [cfg.seed]
            values = np.linspace(cfg.sweep_start, cfg.sweep_stop, cfg.sweep_points)
            scan = scan_spectrum(cfg.model, dis, cfg.sweep, values, want_ipr=cfg.ipr)
            path = out / "spectrum.csv"
            output.write_spectrum_csv(path, scan)
            artifacts.append(path)
        else:  # unreachable once parse_config has validated the mode
            raise ConfigError(f"unknown mode {cfg.mode!r}")
    except ConfigError as exc:
        _error_record(str(exc), EXIT_CONFIG)
        return EXIT_CONFIG, []
    except (PropagationError, np.linalg.LinAlgError, ValueError, RuntimeError) as exc:
        _error_record(str(exc), EXIT_NUMERIC)
        return EXIT_NUMERIC, []
    except OSError as exc:
        _error_record(str(exc), EXIT_IO)
        return EXIT_IO, []

    try:
        meta_path = out / "run_metadata.json"
        output.write_metadata(
            meta_path,
            output.resolved_config_dict(replace(cfg, out_dir=str(out))),
            seeds_used,
            artifacts,
            wall_time_s=time.perf_counter() - t_start,
            tool_version=__version__,
        )
        artifacts.append(meta_path)
    except OSError as exc:
        _error_record(f"cannot write metadata: {exc}", EXIT_IO)
        return EXIT_IO, artifacts

    if not quiet:
        for p in artifacts:
            print(p)
    return EXIT_OK, artifacts


def _error_record(message: str, code: int) -> None:
    print(json.dumps({"error": message, "exit_code": code}), file=sys.stderr)


def _resolve_config_arg(arg: str) -> Path:
    path = Path(arg)
    if path.exists():
        return path
    bundled = preset_path(arg)
    if bundled is not None:
        return bundled
    raise ConfigError(f"config not found: {arg} (not a file and not a bundled preset)")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="giant-lattice-sim",
        description="Simulate a two-point-coupled emitter on a disordered tight-binding lattice.",
    )
    parser.add_argument("config", help="path to a TOML run document, or a bundled preset name")
    parser.add_argument("--out", help="output directory (overrides the config)")
    parser.add_argument("--seed", type=int, help="disorder seed (overrides the config)")
    parser.add_argument("--quiet", action="store_true", help="suppress the artifact listing")
    args = parser.parse_args(argv)

    try:
        cfg = load_config(_resolve_config_arg(args.config))
    except ConfigError as exc:
        _error_record(str(exc), EXIT_CONFIG)
        return EXIT_CONFIG
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
        if cfg.seeds is not None:
            cfg = replace(cfg, seeds=tuple(range(args.seed, args.seed + len(cfg.seeds))))
    code, _ = run(cfg, out_dir=args.out, quiet=args.quiet)
    return code


if __name__ == "__main__":
    sys.exit(main())
