import pytest
from scipy.stats import spearmanr

from treechase.sim import (
    CHUNK,
    CSV_HEADER,
    SweepConfig,
    parse_snr_spec,
    rows_to_csv,
    run_point,
    run_sweep,
    validate_config,
)
from treechase.stats import wilson_interval


def small_cfg(**kw) -> SweepConfig:
    base = dict(p=2, m=4, n=15, k=11, snr_db=(5.0,), algorithms=("tcgs",),
                L=16, eta=4, max_frames=400, min_errors=0, seed=9, workers=1)
    base.update(kw)
    return SweepConfig(**base)


def test_parse_snr_spec_forms():
    assert parse_snr_spec("5.0") == (5.0,)
    assert parse_snr_spec("4,5,6.5") == (4.0, 5.0, 6.5)
    assert parse_snr_spec("4:6:1") == (4.0, 5.0, 6.0)
    assert parse_snr_spec("4:6:0.5") == (4.0, 4.5, 5.0, 5.5, 6.0)
    with pytest.raises(ValueError):
        parse_snr_spec("4:6")
    with pytest.raises(ValueError):
        parse_snr_spec("4:6:-1")
    with pytest.raises(ValueError):
        parse_snr_spec("abc")


def test_validate_config_rejections():
    with pytest.raises(ValueError):
        validate_config(small_cfg(algorithms=("magic",)))
    with pytest.raises(ValueError):
        validate_config(small_cfg(algorithms=()))
    with pytest.raises(ValueError):
        validate_config(small_cfg(snr_db=()))
    with pytest.raises(ValueError):
        validate_config(small_cfg(L=0))
    with pytest.raises(ValueError):
        validate_config(small_cfg(algorithms=("lcc",), eta=16))
    with pytest.raises(ValueError):
        validate_config(small_cfg(workers=0))
    with pytest.raises(ValueError):
        validate_config(small_cfg(p=5, m=1, n=4, k=2, threshold_eps=0.01))
    with pytest.raises(ValueError):
        validate_config(small_cfg(threshold_eps=2.0))
    with pytest.raises(ValueError):
        validate_config(small_cfg(max_frames=0))


def test_csv_layout_and_self_consistency():
    rows = run_sweep(small_cfg(max_frames=300))
    text = rows_to_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 2
    cells = lines[1].split(",")
    assert cells[0] == "tcgs" and cells[1] == "5"
    assert cells[-1] == "0.000"  # wall zeroed for reproducibility
    frames, errors = int(cells[2]), int(cells[3])
    assert float(cells[4]) == pytest.approx(errors / frames)
    lo, hi = wilson_interval(errors, frames)
    assert lo <= float(cells[4]) <= hi


def test_csv_timing_flag_reports_nonzero():
    rows = run_sweep(small_cfg(max_frames=50))
    text = rows_to_csv(rows, timing=True)
    wall = float(text.strip().split("\n")[1].split(",")[-1])
    assert wall > 0.0


def test_worker_count_invariance_small():
    cfg1 = small_cfg(max_frames=250, workers=1)
    cfg2 = small_cfg(max_frames=250, workers=3)
    assert rows_to_csv(run_sweep(cfg1)) == rows_to_csv(run_sweep(cfg2))


def test_min_errors_stops_on_chunk_boundary():
    # 1 dB is noisy enough to hit 30 errors inside the first chunk
    cfg = small_cfg(snr_db=(1.0,), max_frames=5000, min_errors=30)
    row = run_point(cfg, "tcgs", 1.0)
    assert row.frame_errors >= 30
    assert row.frames % CHUNK == 0 or row.frames == cfg.max_frames
    cfg2 = small_cfg(snr_db=(1.0,), max_frames=5000, min_errors=30, workers=2)
    row2 = run_point(cfg2, "tcgs", 1.0)
    assert (row2.frames, row2.frame_errors) == (row.frames, row.frame_errors)


def test_noiseless_limit():
    row = run_point(small_cfg(snr_db=(20.0,), max_frames=200), "tcgs", 20.0)
    assert row.frame_errors == 0
    assert row.fer == 0.0
    assert row.avg_trials == 1.0
    assert row.e_upper_rate == 0.0


def test_hdd_equals_unit_budget_tcgs():
    r_hdd = run_point(small_cfg(max_frames=300), "hdd", 5.0)
    r_one = run_point(small_cfg(max_frames=300, L=1), "tcgs", 5.0)
    assert (r_hdd.frames, r_hdd.frame_errors) == (r_one.frames, r_one.frame_errors)
    assert r_hdd.avg_trials == 1.0


def test_row_order_is_algorithm_major():
    cfg = small_cfg(algorithms=("tcgs", "hdd"), snr_db=(5.0, 6.0), max_frames=50)
    rows = run_sweep(cfg)
    assert [(r.algorithm, r.snr_db) for r in rows] == [
        ("tcgs", 5.0), ("tcgs", 6.0), ("hdd", 5.0), ("hdd", 6.0)]


def test_genie_mode_never_increases_fer():
    plain = run_point(small_cfg(max_frames=400, snr_db=(4.0,)), "tcgs", 4.0)
    aided = run_point(small_cfg(max_frames=400, snr_db=(4.0,), genie=True), "tcgs", 4.0)
    assert aided.frame_errors <= plain.frame_errors
    assert aided.avg_trials <= plain.avg_trials


def test_avg_trials_decrease_with_snr():
    snrs = (3.0, 4.0, 5.0, 6.0, 7.0)
    for alg in ("tcgs", "lcc"):
        cfg = small_cfg(algorithms=(alg,), snr_db=snrs, max_frames=800)
        rows = run_sweep(cfg)
        trials = [r.avg_trials for r in rows]
        rho = spearmanr(snrs, trials).statistic
        assert rho <= -0.9, f"{alg} avg_trials not decreasing: {trials}"
