"""Run configuration: TOML schema, validation and defaults.

A run document has up to three tables::

    [model]                         [disorder]            [run]
    L = 200                         W = 0.0               mode = "evolve"
    omega0 = 2.0                    seed = 1              dt = 0.01
    omega_e = 2.0                   # sweep-n only:       t_end = 40.0
    J = 1.0                         # W_values = [...]    want_sites = false
    gm = 0.35                       # seeds = [...]       out_dir = "out"
    gn = 0.35                       # num_seeds = 20      # spectrum only:
    m = 99                                                # sweep = "detuning"
    n = 102                                               # sweep_start = -4.0
                                                          # sweep_stop = 4.0
                                                          # sweep_points = 161
                                                          # ipr = false

Every key is optional (defaults reproduce the default decay scenario);
unknown keys or tables are errors, not warnings.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field, fields
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .model import ModelConfig
from .spectrum import SWEEP_PARAMETERS

MODES = ("evolve", "transport", "memory", "sweep-n", "spectrum")


class ConfigError(ValueError):
    """Invalid or unparseable run configuration."""


@dataclass(frozen=True)
class RunConfig:
    """Fully validated configuration of one CLI invocation."""

    model: ModelConfig = field(default_factory=ModelConfig)
    mode: str = "evolve"
    W: float = 0.0
    seed: int = 1
    seeds: tuple[int, ...] | None = None
    W_values: tuple[float, ...] | None = None
    dt: float = 0.01
    t_end: float = 40.0
    want_sites: bool = False
    sweep: str = "detuning"
    sweep_start: float = -4.0
    sweep_stop: float = 4.0
    sweep_points: int = 161
    ipr: bool = False
    out_dir: str = "out"


_MODEL_KEYS = {f.name for f in fields(ModelConfig)}
_DISORDER_KEYS = {"W", "seed", "seeds", "num_seeds", "W_values"}
_RUN_KEYS = {
    "mode",
    "dt",
    "t_end",
    "want_sites",
    "sweep",
    "sweep_start",
    "sweep_stop",
    "sweep_points",
    "ipr",
    "out_dir",
}


def _reject_unknown(table: dict, allowed: set[str], where: str) -> None:
    unknown = sorted(set(table) - allowed)
    if unknown:
        raise ConfigError(f"unknown key(s) in [{where}]: {', '.join(unknown)}")


def _coerce(value, kind, where: str, key: str):
    if kind is float and isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if kind is int and isinstance(value, int) and not isinstance(value, bool):
        return value
    if kind is bool and isinstance(value, bool):
        return value
    if kind is str and isinstance(value, str):
        return value
    raise ConfigError(f"[{where}] {key} must be of type {kind.__name__}, got {value!r}")


def parse_config(text: str, source: str = "<config>") -> RunConfig:
    """Parse and validate a TOML run document into a RunConfig."""
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{source}: TOML parse failure: {exc}") from exc

    _reject_unknown(doc, {"model", "disorder", "run"}, "<root>")
    model_tbl = doc.get("model", {})
    dis_tbl = doc.get("disorder", {})
    run_tbl = doc.get("run", {})
    for tbl, name in ((model_tbl, "model"), (dis_tbl, "disorder"), (run_tbl, "run")):
        if not isinstance(tbl, dict):
            raise ConfigError(f"[{name}] must be a table")
    _reject_unknown(model_tbl, _MODEL_KEYS, "model")
    _reject_unknown(dis_tbl, _DISORDER_KEYS, "disorder")
    _reject_unknown(run_tbl, _RUN_KEYS, "run")

    model_kwargs = {}
    for f in fields(ModelConfig):
        if f.name in model_tbl:
            kind = int if f.name in ("L", "m", "n") else float
            model_kwargs[f.name] = _coerce(model_tbl[f.name], kind, "model", f.name)
    try:
        model = ModelConfig(**model_kwargs)
    except ValueError as exc:
        raise ConfigError(f"[model]: {exc}") from exc

    W = _coerce(dis_tbl.get("W", 0.0), float, "disorder", "W")
    if W < 0:
        raise ConfigError(f"[disorder] W must be >= 0, got {W}")
    seed = _coerce(dis_tbl.get("seed", 1), int, "disorder", "seed")

    seeds: tuple[int, ...] | None = None
    if "seeds" in dis_tbl:
        raw = dis_tbl["seeds"]
        if not isinstance(raw, list) or not raw or not all(
            isinstance(s, int) and not isinstance(s, bool) for s in raw
        ):
            raise ConfigError("[disorder] seeds must be a non-empty array of integers")
        seeds = tuple(raw)
    if "num_seeds" in dis_tbl:
        if seeds is not None:
            raise ConfigError("[disorder] give either seeds or num_seeds, not both")
        count = _coerce(dis_tbl["num_seeds"], int, "disorder", "num_seeds")
        if count < 1:
            raise ConfigError(f"[disorder] num_seeds must be >= 1, got {count}")
        seeds = tuple(range(seed, seed + count))

    W_values: tuple[float, ...] | None = None
    if "W_values" in dis_tbl:
        raw = dis_tbl["W_values"]
        if not isinstance(raw, list) or not raw:
            raise ConfigError("[disorder] W_values must be a non-empty array")
        W_values = tuple(_coerce(w, float, "disorder", "W_values") for w in raw)
        if any(w < 0 for w in W_values):
            raise ConfigError("[disorder] W_values must all be >= 0")

    mode = _coerce(run_tbl.get("mode", "evolve"), str, "run", "mode")
    if mode not in MODES:
        raise ConfigError(f"[run] mode must be one of {MODES}, got {mode!r}")
    dt = _coerce(run_tbl.get("dt", 0.01), float, "run", "dt")
    t_end = _coerce(run_tbl.get("t_end", 40.0), float, "run", "t_end")
    if dt <= 0:
        raise ConfigError(f"[run] dt must be positive, got {dt}")
    if t_end < dt:
        raise ConfigError(f"[run] t_end must be >= dt, got {t_end}")
    sweep = _coerce(run_tbl.get("sweep", "detuning"), str, "run", "sweep")
    if sweep not in SWEEP_PARAMETERS:
        raise ConfigError(f"[run] sweep must be one of {SWEEP_PARAMETERS}, got {sweep!r}")
    sweep_points = _coerce(run_tbl.get("sweep_points", 161), int, "run", "sweep_points")
    if sweep_points < 1:
        raise ConfigError(f"[run] sweep_points must be >= 1, got {sweep_points}")
    sweep_start = _coerce(run_tbl.get("sweep_start", -4.0), float, "run", "sweep_start")
    sweep_stop = _coerce(run_tbl.get("sweep_stop", 4.0), float, "run", "sweep_stop")
    if sweep_points > 1 and not sweep_stop > sweep_start:
        raise ConfigError(
            f"[run] sweep_stop must exceed sweep_start, got [{sweep_start}, {sweep_stop}]"
        )

    cfg = RunConfig(
        model=model,
        mode=mode,
        W=W,
        seed=seed,
        seeds=seeds,
        W_values=W_values,
        dt=dt,
        t_end=t_end,
        want_sites=_coerce(run_tbl.get("want_sites", mode == "transport"), bool, "run", "want_sites"),
        sweep=sweep,
        sweep_start=sweep_start,
        sweep_stop=sweep_stop,
        sweep_points=sweep_points,
        ipr=_coerce(run_tbl.get("ipr", False), bool, "run", "ipr"),
        out_dir=_coerce(run_tbl.get("out_dir", "out"), str, "run", "out_dir"),
    )
    if cfg.mode == "sweep-n":
        if cfg.W_values is None:
            raise ConfigError("[disorder] sweep-n mode requires W_values")
        if cfg.seeds is None:
            raise ConfigError("[disorder] sweep-n mode requires seeds or num_seeds")
    if cfg.mode == "transport" and not cfg.want_sites:
        raise ConfigError("[run] transport mode requires want_sites = true")
    return cfg


def load_config(path: str | Path) -> RunConfig:
    """Read and parse a run document from a file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text, source=str(path))
