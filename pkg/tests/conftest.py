import pytest

from giant_lattice_sim import evolve_exact, time_grid

from support import CFG_NARROW, CFG_WIDE, clean_hamiltonian


@pytest.fixture(scope="session")
def times_40():
    return time_grid(40.0, 0.01)


@pytest.fixture(scope="session")
def traj_narrow(times_40):
    """Clean-lattice decay trajectory for the (99, 102) geometry."""
    return evolve_exact(clean_hamiltonian(CFG_NARROW), times_40)


@pytest.fixture(scope="session")
def traj_wide(times_40):
    """Clean-lattice decay trajectory for the (83, 118) geometry."""
    return evolve_exact(clean_hamiltonian(CFG_WIDE), times_40)
