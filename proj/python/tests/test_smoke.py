# SPDX-License-Identifier: Apache-2.0
# panelbeam: multi-panel analog beamforming under stochastic path blockage
# Copyright (C) 2026 The panelbeam authors

import math

import pytest

import panelbeam as pb


def test_reference_scenario():
    cfg = pb.default_config()
    assert cfg.n_t == 256
    assert cfg.p_blk == pytest.approx(0.4)
    assert sum(pb.path_variances(10.0, 4)) == pytest.approx(1.0)


def test_allocations_and_closed_form():
    cfg = pb.default_config()
    los = pb.los_concentration(cfg)
    assert los.counts == [8, 0, 0, 0]
    assert pb.uniform_allocation(cfg) == pb.PanelAllocation.parse("2,2,2,2")
    assert pb.average_rsnr(los, cfg) == pytest.approx(1396.3636363636)
    assert pb.outage_probability(los, cfg, 1e-12) == pytest.approx(0.4)
    mix = pb.rsnr_mixture(pb.uniform_allocation(cfg), cfg)
    assert mix.zero_mass == pytest.approx(0.0256)
    assert len(mix.weights) == 15
    assert mix.cdf(0.0) == pytest.approx(0.0256)


def test_optimizers():
    cfg = pb.default_config()
    assert pb.allocation_count(8, 4) == 120
    assert len(pb.enumerate_allocations(8, 4)) == 120
    assert pb.optimize_outmin(cfg, 0.5).chosen.counts == [1, 2, 2, 3]
    report = pb.optimize_outmin_ase(cfg, 1.0, 0.05)
    assert report.chosen.counts == [4, 0, 2, 2]
    assert report.g_los == 0.5
    assert report.num_candidates == 120
    assert pb.maximize_average_se(cfg).counts == [8, 0, 0, 0]


def test_monte_carlo():
    cfg = pb.default_config()
    q = pb.uniform_allocation(cfg)
    a = pb.run_trials(cfg, q, trials=20000, seed=3)
    b = pb.run_trials(cfg, q, trials=20000, seed=3, threads=1)
    assert a.se_samples == b.se_samples
    assert a.ks_distance(pb.rsnr_mixture(q, cfg)) < 0.02
    aods = pb.sample_aods(cfg, 1)
    r = pb.run_trials(cfg, q, aods, pb.SimulationMode.realistic, 5000, 4)
    assert min(r.se_samples) > 0.0
    assert r.mean_se <= pb.average_se_upper_bound(q, cfg)


def test_beams():
    cfg = pb.default_config()
    aods = pb.sample_aods(cfg, 2)
    gain = pb.beam_pattern(pb.los_concentration(cfg), aods, cfg, [aods[0]])
    assert gain[0] == pytest.approx(16.0)
    a_eq = pb.equivalent_array_response(pb.los_concentration(cfg), aods, cfg)
    assert abs(a_eq[0]) == pytest.approx(16.0)
    assert len(pb.array_response(4, 0.0)) == 4


def test_errors():
    cfg = pb.default_config()
    with pytest.raises(ValueError):
        pb.PanelAllocation([0, 0])
    with pytest.raises(pb.CapacityError):
        pb.enumerate_allocations(8, 4, capacity=10)
    with pytest.raises(ValueError):
        pb.optimize_outmin_ase(cfg, 1.0, 2.0)
    with pytest.raises(ValueError):
        pb.path_variances(1.0, 1)
    bad = pb.default_config()
    bad.n_p = 0
    with pytest.raises(pb.ConfigError):
        bad.validate()
    assert math.isfinite(pb.linear_to_db(10.0))
