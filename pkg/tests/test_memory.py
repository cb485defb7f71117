import numpy as np
import pytest

from giant_lattice_sim import (
    ModelConfig,
    build_hamiltonian,
    compute_n,
    compute_nv,
    disorder_sweep_n,
    evolve_exact,
    memory_report,
    sample_disorder,
    segment_growth,
    time_grid,
)

from support import CFG_NARROW, CFG_WIDE, clean_hamiltonian


class TestSegmentGrowth:
    def test_monotone_decay_has_no_windows(self):
        t = np.arange(5.0)
        assert segment_growth(t, np.array([1.0, 0.8, 0.6, 0.4, 0.2])) == []

    def test_single_rise(self):
        windows = segment_growth(np.arange(4.0), np.array([1.0, 0.5, 0.7, 0.4]))
        assert windows == [(1.0, 2.0)]

    def test_rise_extending_to_the_end(self):
        windows = segment_growth(np.arange(3.0), np.array([1.0, 0.5, 0.7]))
        assert windows == [(1.0, 2.0)]

    def test_threshold_suppresses_plateau_noise(self):
        t = np.arange(4.0)
        x = np.array([1.0, 0.5, 0.5 + 1e-13, 0.4])
        assert segment_growth(t, x) == []
        assert segment_growth(t, x, threshold=0.0) == [(1.0, 2.0)]

    def test_windows_are_disjoint_ordered_positive(self):
        rng = np.random.Generator(np.random.PCG64(42))
        t = np.arange(200.0)
        x = np.abs(np.cumsum(rng.normal(size=200)))
        windows = segment_growth(t, x)
        for (a, b), (c, d) in zip(windows, windows[1:]):
            assert a < b <= c < d
        assert all(b > a for a, b in windows)

    def test_needs_two_samples(self):
        with pytest.raises(ValueError):
            segment_growth(np.array([0.0]), np.array([1.0]))


class TestComputeNv:
    def test_monotone_decay_is_zero(self):
        nv = compute_nv(np.linspace(1.0, 0.0, 50))
        assert np.all(nv == 0.0)

    def test_dip_and_revival_closed_form(self):
        nv = compute_nv(np.array([1.0, 0.2, 0.6, 0.1]))
        assert nv[-1] == pytest.approx(0.6**4 - 0.2**4, abs=1e-15)
        assert nv[-1] == pytest.approx(0.1280, abs=1e-12)

    def test_nondecreasing_from_zero(self, traj_narrow):
        nv = compute_nv(traj_narrow.abs_ce)
        assert nv[0] == 0.0
        assert np.all(np.diff(nv) >= 0.0)

    def test_additivity_over_concatenation(self):
        rng = np.random.Generator(np.random.PCG64(3))
        x = rng.uniform(0.0, 1.0, size=60)
        x[0] = 1.0
        left, right = x[:30], x[29:]
        total = compute_nv(x)[-1]
        assert total == pytest.approx(compute_nv(left)[-1] + compute_nv(right)[-1], rel=1e-12)

    def test_population_variant(self):
        x = np.array([1.0, 0.2, 0.6, 0.1])
        assert compute_nv(x, power=2)[-1] == pytest.approx(0.6**2 - 0.2**2, abs=1e-15)
        with pytest.raises(ValueError):
            compute_nv(x, power=3)

    def test_grid_refinement_stability(self, traj_narrow):
        nv_coarse = compute_nv(traj_narrow.abs_ce)[-1]
        fine = evolve_exact(clean_hamiltonian(CFG_NARROW), time_grid(40.0, 0.005))
        nv_fine = compute_nv(fine.abs_ce)[-1]
        assert nv_coarse > 0.0
        assert abs(nv_fine - nv_coarse) / nv_coarse < 0.01


class TestComputeN:
    def test_markovian_limit(self):
        n = compute_n(np.linspace(1.0, 0.0, 50))
        assert np.all(n == 0.0)

    def test_half_for_unit_backflow(self):
        # one full fall and one full rise: N_V = 1 with |C_e|^4 -> 0
        n = compute_n(np.array([1.0, 0.0, 1.0, 0.0]))
        assert n[-1] == pytest.approx(0.5, abs=1e-15)

    def test_initial_sample_maps_to_zero(self, traj_narrow):
        n = compute_n(traj_narrow.abs_ce)
        assert n[0] == 0.0
        assert np.all((n >= 0.0) & (n < 1.0))

    def test_requires_unit_start(self):
        with pytest.raises(ValueError, match="C_e"):
            compute_n(np.array([0.9, 0.5, 0.2]))

    def test_denominator_is_nondecreasing(self, traj_wide):
        n = compute_n(traj_wide.abs_ce)
        nv = compute_nv(traj_wide.abs_ce)
        den = nv + 1.0 - traj_wide.abs_ce**4
        assert np.all(np.diff(den) >= -1e-15)
        assert 0.0 <= n[-1] < 1.0

    def test_geometry_ordering_of_peaks_under_disorder(self):
        # at W = 0.02 (seed 1) the wide pair accumulates more backflow
        times = time_grid(40.0, 0.01)
        peaks = {}
        for key, cfg in (("narrow", CFG_NARROW), ("wide", CFG_WIDE)):
            dis = sample_disorder(cfg.L, 0.02, 1)
            traj = evolve_exact(build_hamiltonian(cfg, dis), times)
            peaks[key] = compute_n(traj.abs_ce).max()
        assert peaks["wide"] > peaks["narrow"]


class TestMemoryReport:
    def test_report_consistency(self, traj_wide):
        report = memory_report(traj_wide)
        assert report.nv_final == report.nv_cumulative[-1]
        assert report.n_final == report.n_cumulative[-1]
        assert report.nv_final > 0.0
        # delayed reabsorption re-excites the emitter inside [20, 40]; the
        # very first rise (bound-state beating) comes earlier
        assert any(20.0 <= a <= 40.0 for a, _ in report.growth_windows)
        assert report.growth_windows[0][0] == pytest.approx(14.87, abs=0.05)


class TestDisorderSweepN:
    def test_zero_width_has_zero_spread(self):
        cfg = ModelConfig(L=60, m=25, n=36)
        result = disorder_sweep_n(cfg, [0.0], [1, 2, 3], time_grid(10.0, 0.05))
        row = result.rows[0]
        assert row.n_std == 0.0
        assert row.n_min == row.n_max == row.n_mean
        assert row.num_seeds == 3

    def test_per_seed_values_do_not_depend_on_the_list(self):
        cfg = ModelConfig(L=60, m=25, n=36)
        times = time_grid(10.0, 0.05)
        short = disorder_sweep_n(cfg, [0.05], [4, 5], times)
        longer = disorder_sweep_n(cfg, [0.05], [4, 5, 6, 7], times)
        assert short.per_seed[0.05] == longer.per_seed[0.05][:2]

    def test_statistics_shape(self):
        cfg = ModelConfig(L=60, m=25, n=36)
        result = disorder_sweep_n(cfg, [0.0, 0.05], [1, 2], time_grid(5.0, 0.05))
        assert [r.W for r in result.rows] == [0.0, 0.05]
        assert all(r.num_seeds == 2 for r in result.rows)
        for r in result.rows:
            assert r.n_min <= r.n_mean <= r.n_max

    def test_rejects_empty_inputs(self):
        cfg = ModelConfig(L=60, m=25, n=36)
        with pytest.raises(ValueError):
            disorder_sweep_n(cfg, [], [1], time_grid(1.0, 0.1))
        with pytest.raises(ValueError):
            disorder_sweep_n(cfg, [0.0], [], time_grid(1.0, 0.1))
