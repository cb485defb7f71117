import numpy as np
import pytest

from giant_lattice_sim import (
    ModelConfig,
    PropagationError,
    build_hamiltonian,
    evolve_exact,
    evolve_rk4,
    sample_disorder,
    time_grid,
    transport_grid,
)
from giant_lattice_sim.propagate import _initial_state, _propagate_eig

from support import CFG_NARROW, clean_hamiltonian


class TestEvolveExact:
    def test_decoupled_atom_stays_excited(self):
        cfg = ModelConfig(gm=0.0, gn=0.0)
        traj = evolve_exact(clean_hamiltonian(cfg), time_grid(20.0, 0.1))
        assert np.abs(traj.pop_e - 1.0).max() <= 1e-12

    def test_initial_condition_is_exact(self, traj_narrow):
        assert traj_narrow.times[0] == 0.0
        assert traj_narrow.ce[0] == 1.0 + 0.0j

    def test_norm_conservation_long_run(self):
        dis = sample_disorder(200, 0.02, 3)
        traj = evolve_exact(build_hamiltonian(ModelConfig(), dis), time_grid(200.0, 0.5))
        assert traj.norm_drift <= 1e-10

    def test_wide_separation_decay_then_revival(self, traj_wide):
        pop = traj_wide.pop_e
        i20 = np.searchsorted(traj_wide.times, 20.0)
        # decays deep (bound-state retention floors it near 0.012, not below
        # 0.01) and revives strongly through delayed reabsorption
        assert pop[: i20 + 1].min() < 0.013
        assert pop[i20:].max() > 0.10

    def test_golden_rule_rate_single_coupling_point(self):
        cfg = ModelConfig(gm=0.35, gn=0.0, m=100, n=102)
        traj = evolve_exact(clean_hamiltonian(cfg), time_grid(10.0, 0.01))
        mask = (traj.times >= 1.0) & (traj.times <= 8.0)
        slope = np.polyfit(traj.times[mask], np.log(traj.pop_e[mask]), 1)[0]
        gamma_expected = 2 * 0.35**2 / np.sqrt(4.0)  # 2 g^2 / sqrt(4 J^2 - Delta^2)
        assert abs(-slope - gamma_expected) <= 0.1 * gamma_expected

    def test_rejects_non_hermitian(self):
        H = clean_hamiltonian(CFG_NARROW).copy()
        H[3, 5] += 1e-6
        with pytest.raises(PropagationError, match="not symmetric"):
            evolve_exact(H, time_grid(1.0, 0.1))

    def test_rejects_bad_time_grids(self):
        H = clean_hamiltonian(CFG_NARROW)
        with pytest.raises(ValueError):
            evolve_exact(H, np.array([]))
        with pytest.raises(ValueError):
            evolve_exact(H, np.array([1.0, 2.0]))
        with pytest.raises(ValueError):
            evolve_exact(H, np.array([0.0, 2.0, 2.0]))

    def test_linearity_of_propagation(self):
        H = clean_hamiltonian(CFG_NARROW)
        times = time_grid(5.0, 0.5)
        c0 = _initial_state(H.shape[0])
        full = _propagate_eig(H, times, c0)
        half = _propagate_eig(H, times, 0.5 * c0)
        assert np.abs(half - 0.5 * full).max() <= 1e-14


class TestEvolveRK4:
    def test_decoupled_atom(self):
        cfg = ModelConfig(gm=0.0, gn=0.0)
        traj = evolve_rk4(clean_hamiltonian(cfg), dt=1e-3, t_end=5.0, sample_every=100)
        assert np.abs(traj.pop_e - 1.0).max() <= 1e-10

    def test_matches_exact_propagator(self):
        H = clean_hamiltonian(CFG_NARROW)
        rk = evolve_rk4(H, dt=1e-3, t_end=5.0, sample_every=10)
        ex = evolve_exact(H, rk.times)
        assert np.abs(rk.pop_e - ex.pop_e).max() <= 1e-6

    def test_fourth_order_convergence(self):
        H = clean_hamiltonian(CFG_NARROW)
        ref = evolve_exact(H, np.array([0.0, 5.0])).ce[-1]
        err = []
        for dt in (0.02, 0.01):
            traj = evolve_rk4(H, dt=dt, t_end=5.0, sample_every=10**9)
            err.append(abs(traj.ce[-1] - ref))
        ratio = err[0] / err[1]
        assert 13.0 <= ratio <= 19.0

    def test_oversized_step_raises_diagnostic(self):
        H = clean_hamiltonian(CFG_NARROW)
        with pytest.raises(PropagationError, match="norm drift"):
            evolve_rk4(H, dt=0.5, t_end=4.0)

    def test_rejects_bad_steps(self):
        H = clean_hamiltonian(CFG_NARROW)
        with pytest.raises(ValueError):
            evolve_rk4(H, dt=0.0, t_end=1.0)
        with pytest.raises(ValueError):
            evolve_rk4(H, dt=0.5, t_end=0.1)


class TestTransportGrid:
    @pytest.fixture(scope="class")
    @staticmethod
    def traj_sites():
        return evolve_exact(clean_hamiltonian(CFG_NARROW), time_grid(45.0, 0.05), want_sites=True)

    def test_initial_row_is_vacuum(self, traj_sites):
        grid = transport_grid(traj_sites)
        assert np.all(grid[0] == 0.0)

    def test_rows_complete_the_norm(self, traj_sites):
        grid = transport_grid(traj_sites)
        assert np.abs(grid.sum(axis=1) - (1.0 - traj_sites.pop_e)).max() <= 1e-9

    def test_mirror_symmetry_of_centered_pair(self, traj_sites):
        # sites m=99, n=102 mirror each other about the chain midpoint, so
        # the photon field is left-right symmetric at all times
        grid = transport_grid(traj_sites)
        assert np.abs(grid - grid[:, ::-1]).max() <= 1e-12

    def test_wavefront_speed_matches_band_velocity(self, traj_sites):
        grid = transport_grid(traj_sites)
        mask = (traj_sites.times >= 2.0) & (traj_sites.times <= 45.0)
        fronts = [np.where(row > 1e-4)[0][-1] + 1 for row in grid[mask]]
        slope = np.polyfit(traj_sites.times[mask], fronts, 1)[0]
        assert abs(slope - 2.0) <= 0.2

    def test_sites_absent_is_an_error(self, traj_narrow):
        with pytest.raises(ValueError, match="want_sites"):
            transport_grid(traj_narrow)
