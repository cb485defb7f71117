"""Physical configuration, disorder sampling and Hamiltonian assembly.

The single-excitation basis is ordered as index 0 = emitter excitation,
indices 1..L = lattice sites.  Site indices are 1-based in all public
interfaces, so the coupling sites m, n address matrix rows m, n directly.
All energies are expressed in units of the hopping strength J and all
times in units of 1/J.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: basis index of the emitter excitation in the (L+1)-dimensional matrix
ATOM_INDEX = 0

#: bit generator used for disorder sampling, recorded in run metadata
PRNG_ALGORITHM = "numpy.random.PCG64 (PCG XSL RR 128/64)"


@dataclass(frozen=True)
class ModelConfig:
    """Geometry, energies and couplings of the emitter-lattice system.

    Parameters
    ----------
    L : int
        Number of lattice sites (>= 2).
    omega0 : float
        Lattice mode frequency, units of J.
    omega_e : float
        Emitter transition frequency, units of J.
    J : float
        Nearest-neighbour hopping strength; fixed to 1 as the energy unit.
    gm, gn : float
        Coupling strengths at the two coupling sites (>= 0).
    m, n : int
        1-based coupling site indices with 1 <= m < n <= L.
    """

    L: int = 200
    omega0: float = 2.0
    omega_e: float = 2.0
    J: float = 1.0
    gm: float = 0.35
    gn: float = 0.35
    m: int = 99
    n: int = 102

    def __post_init__(self) -> None:
        if self.L < 2:
            raise ValueError(f"L must be >= 2, got {self.L}")
        if self.J <= 0:
            raise ValueError(f"J must be positive (it is the energy unit), got {self.J}")
        if self.gm < 0 or self.gn < 0:
            raise ValueError(f"coupling strengths must be >= 0, got gm={self.gm}, gn={self.gn}")
        if not (1 <= self.m < self.n <= self.L):
            raise ValueError(
                f"coupling sites must satisfy 1 <= m < n <= L, got m={self.m}, n={self.n}, L={self.L}"
            )

    @property
    def detuning(self) -> float:
        """Lattice-emitter detuning omega0 - omega_e."""
        return self.omega0 - self.omega_e


@dataclass(frozen=True, eq=False)
class DisorderRealization:
    """One draw of per-site frequency offsets delta_j, uniform on [-W, W]."""

    deltas: np.ndarray
    W: float
    seed: int

    def __post_init__(self) -> None:
        if self.W < 0:
            raise ValueError(f"disorder half-width W must be >= 0, got {self.W}")
        if self.deltas.ndim != 1 or len(self.deltas) < 1:
            raise ValueError("deltas must be a non-empty 1D sequence")
        if self.W == 0 and np.any(self.deltas != 0.0):
            raise ValueError("W = 0 requires all offsets to be zero")
        if np.any(np.abs(self.deltas) > self.W):
            raise ValueError("offsets exceed the stated window [-W, W]")


def sample_disorder(L: int, W: float, seed: int) -> DisorderRealization:
    """Draw L i.i.d. offsets uniform on [-W, W], reproducible from the seed.

    The same (L, W, seed) triple reproduces the sequence bit-for-bit; W = 0
    yields the all-zero sequence.  Sampling uses the PCG64 bit generator so
    streams are stable across platforms.
    """
    if L < 1:
        raise ValueError(f"L must be >= 1, got {L}")
    if W < 0:
        raise ValueError(f"W must be >= 0, got {W}")
    rng = np.random.Generator(np.random.PCG64(seed))
    deltas = rng.uniform(-W, W, size=L)
    deltas.flags.writeable = False
    return DisorderRealization(deltas=deltas, W=W, seed=seed)


def hamiltonian_entries(
    L: int,
    omega_e: float,
    omega0: float,
    J: float,
    gm: float,
    gn: float,
    m: int,
    n: int,
    deltas: np.ndarray,
) -> np.ndarray:
    """Assemble the (L+1)x(L+1) real symmetric single-excitation matrix.

    Row/column 0 is the emitter; the lattice block is tridiagonal with
    diagonal omega0 + delta_j and off-diagonal -J on an open chain (no
    wraparound).  No sign restriction is placed on J here; parameter sweeps
    may pass J <= 0.
    """
    if len(deltas) != L:
        raise ValueError(f"deltas has length {len(deltas)}, expected L = {L}")
    if not (1 <= m < n <= L):
        raise ValueError(f"coupling sites out of range: m={m}, n={n}, L={L}")
    dim = L + 1
    H = np.zeros((dim, dim))
    H[ATOM_INDEX, ATOM_INDEX] = omega_e
    sites = np.arange(1, L + 1)
    H[sites, sites] = omega0 + deltas
    hop = np.arange(1, L)
    H[hop, hop + 1] = -J
    H[hop + 1, hop] = -J
    H[ATOM_INDEX, m] = H[m, ATOM_INDEX] = gm
    H[ATOM_INDEX, n] = H[n, ATOM_INDEX] = gn
    return H


def build_hamiltonian(cfg: ModelConfig, dis: DisorderRealization) -> np.ndarray:
    """Build the single-excitation Hamiltonian for a configuration and a disorder draw.

    Returns a dense real symmetric array of dimension cfg.L + 1 with the
    basis ordering documented in the module docstring.
    """
    if len(dis.deltas) != cfg.L:
        raise ValueError(
            f"disorder realization has {len(dis.deltas)} sites but the model has L = {cfg.L}"
        )
    return hamiltonian_entries(
        cfg.L, cfg.omega_e, cfg.omega0, cfg.J, cfg.gm, cfg.gn, cfg.m, cfg.n, dis.deltas
    )
