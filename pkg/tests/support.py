"""Shared fixtures' building blocks for the test suite."""

import numpy as np

from giant_lattice_sim import ModelConfig, build_hamiltonian, sample_disorder

CFG_NARROW = ModelConfig(m=99, n=102)
CFG_WIDE = ModelConfig(m=83, n=118)


def clean_hamiltonian(cfg: ModelConfig) -> np.ndarray:
    return build_hamiltonian(cfg, sample_disorder(cfg.L, 0.0, 1))
