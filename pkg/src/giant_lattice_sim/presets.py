"""Bundled run recipes for the standard study scenarios.

fig2a / fig2b   population decay for narrow / wide coupling-point separation
fig3 / fig4     site-resolved transport for the two separations
fig5a..fig5h    spectrum sweeps (detuning, hopping, coupling; clean and disordered)
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def preset_names() -> list[str]:
    files = resources.files("giant_lattice_sim") / "presets"
    return sorted(p.name[: -len(".toml")] for p in files.iterdir() if p.name.endswith(".toml"))


def preset_path(name: str) -> Path | None:
    """Filesystem path of a bundled preset, or None if no such preset."""
    candidate = resources.files("giant_lattice_sim") / "presets" / f"{name}.toml"
    try:
        with resources.as_file(candidate) as concrete:
            return concrete if concrete.is_file() else None
    except FileNotFoundError:
        return None
