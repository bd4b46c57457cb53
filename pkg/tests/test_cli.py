from importlib import resources

import pytest

from treechase.cli import main
from treechase.sim import CSV_HEADER

PI_PATH = str(resources.files("treechase") / "fixtures" / "example1.pi")
TRACE_PATH = str(resources.files("treechase") / "fixtures" / "example1.trace")


def test_replay_golden_exit_zero(capsys):
    rc = main(["replay", "--pi", PI_PATH, "--L", "16"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "EXIT reason=certified_tree trials=10 msg=1+2x weight=0.4800" in out
    assert "Z z=1,0,2,0" in out


def test_replay_explicit_golden_path(capsys):
    rc = main(["replay", "--pi", PI_PATH, "--L", "16", "--golden", TRACE_PATH])
    assert rc == 0


def test_replay_mismatch_exit_two(capsys):
    rc = main(["replay", "--pi", PI_PATH, "--L", "5"])
    captured = capsys.readouterr()
    assert rc == 2
    assert "trace mismatch" in captured.err
    assert "budget_exhausted trials=5 msg=1+4x weight=0.6200" in captured.out


def test_replay_missing_file_exit_one(capsys):
    rc = main(["replay", "--pi", "/does/not/exist.pi", "--L", "16"])
    assert rc == 1
    assert "error:" in capsys.readouterr().err


def test_replay_malformed_matrix_exit_one(tmp_path, capsys):
    bad = tmp_path / "bad.pi"
    bad.write_text("5 4\n1 2 3\n")
    rc = main(["replay", "--pi", str(bad), "--L", "16"])
    assert rc == 1


def test_unknown_subcommand_exit_one(capsys):
    assert main(["warp"]) == 1
    assert main([]) == 1


def test_chi2_subcommand(capsys):
    rc = main(["chi2", "--eps", "0.7357588823428847", "--dof", "2"])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert float(out) == pytest.approx(2.0, abs=1e-6)


def test_chi2_bad_eps_exit_one(capsys):
    assert main(["chi2", "--eps", "2.0", "--dof", "2"]) == 1


def test_sweep_to_file(tmp_path, capsys):
    out = tmp_path / "rows.csv"
    rc = main(["sweep", "--code", "2,4,15,11", "--snr", "6.0", "--alg", "tcgs",
               "--frames", "60", "--min-errors", "0", "--seed", "5",
               "--out", str(out)])
    assert rc == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert lines[1].startswith("tcgs,6,60,")


def test_sweep_stdout_and_bad_code(capsys):
    rc = main(["sweep", "--code", "2,4,15,11", "--snr", "6.0", "--alg", "tcgs",
               "--frames", "30", "--min-errors", "0"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.startswith(CSV_HEADER)
    assert main(["sweep", "--code", "15,11", "--snr", "5"]) == 1
    assert main(["sweep", "--code", "2,4,15,11", "--alg", "nope"]) == 1


def test_replay_gf16_matrix_roundtrip(tmp_path, code16):
    """A 16x15 matrix replays under the extension-field convention; the trace
    differs from the packaged golden so the exit code is 2, but the decode
    itself must run and print an EXIT line."""
    import numpy as np
    from treechase.channel import likelihoods, modulate, save_pi, transmit, frame_rng
    from treechase.rscode import encode
    tx = encode(code16, [3] * 11)
    r = transmit(modulate(code16.field, tx), 0.4, frame_rng(0, 0))
    pi = likelihoods(code16.field, 15, r, 0.16)
    path = tmp_path / "g16.pi"
    save_pi(str(path), pi)
    rc = main(["replay", "--pi", str(path), "--L", "8", "--k", "11"])
    assert rc == 2


def test_main_module_entrypoint():
    import subprocess, sys
    proc = subprocess.run([sys.executable, "-m", "treechase", "chi2",
                           "--eps", "0.5", "--dof", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert float(proc.stdout.strip()) > 0
