"""Single-excitation simulator for a two-point-coupled emitter on a 1D
disordered tight-binding photonic lattice: population decay, photon
transport, memory (information-backflow) measures and energy spectra."""

__version__ = "0.1.0"

from .config import ConfigError, RunConfig, load_config, parse_config
from .memory import (
    MemoryReport,
    SweepNResult,
    WStatistics,
    compute_n,
    compute_nv,
    disorder_sweep_n,
    memory_report,
    segment_growth,
)
from .model import (
    ATOM_INDEX,
    DisorderRealization,
    ModelConfig,
    build_hamiltonian,
    hamiltonian_entries,
    sample_disorder,
)
from .propagate import (
    AmplitudeTrajectory,
    PropagationError,
    evolve_exact,
    evolve_rk4,
    time_grid,
    transport_grid,
)
from .spectrum import (
    SpectrumScan,
    classify_bound_states,
    eigenvector_ipr,
    scan_spectrum,
)

__all__ = [
    "ATOM_INDEX",
    "AmplitudeTrajectory",
    "ConfigError",
    "DisorderRealization",
    "MemoryReport",
    "ModelConfig",
    "PropagationError",
    "RunConfig",
    "SpectrumScan",
    "SweepNResult",
    "WStatistics",
    "build_hamiltonian",
    "classify_bound_states",
    "compute_n",
    "compute_nv",
    "disorder_sweep_n",
    "eigenvector_ipr",
    "evolve_exact",
    "evolve_rk4",
    "hamiltonian_entries",
    "load_config",
    "memory_report",
    "parse_config",
    "sample_disorder",
    "scan_spectrum",
    "segment_growth",
    "time_grid",
    "transport_grid",
]
