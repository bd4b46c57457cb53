"""Seeded Monte-Carlo frame-error sweeps.

Frames are generated from per-frame random streams keyed by (seed, frame
index), so frame i is the same message and noise realization no matter how
many workers run the sweep or which algorithm consumes it; reruns are
byte-reproducible.  Stopping is evaluated at fixed-size chunk boundaries
(again worker-independent): a sweep point ends at max_frames or once
min_errors frame errors have accumulated, whichever comes first.

The CSV report deliberately writes 0.000 in the wall_seconds column unless
timing is explicitly requested, because measured wall time is the one field
that would break byte-for-byte reproducibility.
"""

from __future__ import annotations

import io
import math
import time
from dataclasses import dataclass
from multiprocessing import get_context

import numpy as np

from .baselines import BoundTally, LccConfig, classify_ml, lcc_decode
from .channel import frame_rng, likelihoods, modulate, sigma_from_snr_db, transmit
from .decoder import DecoderConfig, tcgs_decode
from .rscode import CodeParams, encode, make_code
from .stats import chi2_threshold, wilson_interval  # re-exported for callers

ALGORITHMS = ("tcgs", "lcc", "hdd")
CHUNK = 1000
CSV_HEADER = "algorithm,snr_db,frames,frame_errors,fer,avg_trials,e_upper_rate,e_lower_rate,wall_seconds"


@dataclass(frozen=True)
class SweepConfig:
    p: int = 2
    m: int = 4
    n: int = 15
    k: int = 11
    snr_db: tuple[float, ...] = (5.0,)
    algorithms: tuple[str, ...] = ("tcgs",)
    L: int = 16
    eta: int = 4
    max_frames: int = 20000
    min_errors: int = 100  # 0 disables the error target
    seed: int = 0
    threshold_eps: float | None = None
    genie: bool = False
    workers: int = 1


@dataclass
class SweepRow:
    algorithm: str
    snr_db: float
    frames: int
    frame_errors: int
    fer: float
    avg_trials: float
    e_upper_rate: float
    e_lower_rate: float
    wall_seconds: float


def validate_config(cfg: SweepConfig) -> CodeParams:
    code = make_code(cfg.p, cfg.m, cfg.n, cfg.k)
    if not cfg.algorithms:
        raise ValueError("no algorithms selected")
    for alg in cfg.algorithms:
        if alg not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {alg!r} (choose from {ALGORITHMS})")
    if not cfg.snr_db:
        raise ValueError("no SNR points")
    if cfg.L < 1:
        raise ValueError("L must be >= 1")
    if "lcc" in cfg.algorithms and not 0 <= cfg.eta <= cfg.n:
        raise ValueError("eta must be in [0, n]")
    if cfg.max_frames < 1:
        raise ValueError("max_frames must be >= 1")
    if cfg.min_errors < 0:
        raise ValueError("min_errors must be >= 0")
    if cfg.workers < 1:
        raise ValueError("workers must be >= 1")
    if cfg.threshold_eps is not None:
        if cfg.p != 2:
            raise ValueError("threshold mode requires a characteristic-2 field")
        if not 0.0 < cfg.threshold_eps < 1.0:
            raise ValueError("threshold-eps must be in (0, 1)")
    return code


class _PointCtx:
    """Per-process state for one (algorithm, SNR) sweep point."""

    def __init__(self, cfg: SweepConfig, alg: str, snr_db: float):
        self.cfg = cfg
        self.alg = alg
        self.code = make_code(cfg.p, cfg.m, cfg.n, cfg.k)
        self.sigma = sigma_from_snr_db(snr_db, cfg.k / cfg.n)
        self.sigma2 = self.sigma * self.sigma
        if alg == "tcgs":
            self.dec_cfg = DecoderConfig(max_trials=cfg.L,
                                         threshold_eps=cfg.threshold_eps,
                                         sigma2=self.sigma2 if cfg.threshold_eps is not None else None)
        elif alg == "hdd":
            self.dec_cfg = DecoderConfig(max_trials=1)
        else:
            self.dec_cfg = LccConfig(eta=cfg.eta)

    def run_frame(self, idx: int) -> tuple[bool, int, int, int]:
        cfg, code = self.cfg, self.code
        rng = frame_rng(cfg.seed, idx)
        msg = [int(v) for v in rng.integers(0, code.field.q, size=code.k)]
        tx = encode(code, msg)
        r = transmit(modulate(code.field, tx), self.sigma, rng)
        pi = likelihoods(code.field, code.n, r, self.sigma2)
        genie = tx if cfg.genie else None
        if self.alg == "lcc":
            res = lcc_decode(code, pi, self.dec_cfg, genie_codeword=genie)
        else:
            res = tcgs_decode(code, pi, self.dec_cfg, genie_codeword=genie)
        err = res.codeword is None or tuple(res.codeword) != tx
        eu, el = classify_ml(code, pi, res, tx)
        return err, eu, el, res.trials


_WORKER_CTX: _PointCtx | None = None


def _worker_init(cfg: SweepConfig, alg: str, snr_db: float) -> None:
    global _WORKER_CTX
    _WORKER_CTX = _PointCtx(cfg, alg, snr_db)


def _worker_span(span: tuple[int, int]) -> BoundTally:
    tally = BoundTally()
    for idx in range(span[0], span[1]):
        tally.add(*_WORKER_CTX.run_frame(idx))
    return tally


def _spans(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    step = max(1, math.ceil((hi - lo) / parts))
    return [(a, min(a + step, hi)) for a in range(lo, hi, step)]


def _stop(cfg: SweepConfig, tally: BoundTally) -> bool:
    return cfg.min_errors > 0 and tally.errors >= cfg.min_errors


def run_point(cfg: SweepConfig, alg: str, snr_db: float) -> SweepRow:
    start = time.perf_counter()
    tally = BoundTally()
    if cfg.workers <= 1:
        ctx = _PointCtx(cfg, alg, snr_db)
        done = 0
        while done < cfg.max_frames and not _stop(cfg, tally):
            hi = min(done + CHUNK, cfg.max_frames)
            for idx in range(done, hi):
                tally.add(*ctx.run_frame(idx))
            done = hi
    else:
        mp = get_context("fork")
        with mp.Pool(cfg.workers, initializer=_worker_init,
                     initargs=(cfg, alg, snr_db)) as pool:
            done = 0
            while done < cfg.max_frames and not _stop(cfg, tally):
                hi = min(done + CHUNK, cfg.max_frames)
                for part in pool.map(_worker_span, _spans(done, hi, cfg.workers)):
                    tally = tally + part
                done = hi
    wall = time.perf_counter() - start
    return SweepRow(algorithm=alg, snr_db=snr_db, frames=tally.frames,
                    frame_errors=tally.errors, fer=tally.fer,
                    avg_trials=tally.avg_trials, e_upper_rate=tally.e_upper_rate,
                    e_lower_rate=tally.e_lower_rate, wall_seconds=wall)


def run_sweep(cfg: SweepConfig) -> list[SweepRow]:
    validate_config(cfg)
    return [run_point(cfg, alg, snr) for alg in cfg.algorithms for snr in cfg.snr_db]


def rows_to_csv(rows: list[SweepRow], timing: bool = False) -> str:
    out = io.StringIO()
    out.write(CSV_HEADER + "\n")
    for r in rows:
        wall = r.wall_seconds if timing else 0.0
        out.write(f"{r.algorithm},{r.snr_db:g},{r.frames},{r.frame_errors},"
                  f"{r.fer:.8g},{r.avg_trials:.8g},{r.e_upper_rate:.8g},"
                  f"{r.e_lower_rate:.8g},{wall:.3f}\n")
    return out.getvalue()


def parse_snr_spec(spec: str) -> tuple[float, ...]:
    """Either 'a:b:step' (inclusive endpoints, positive step) or 'v1,v2,...'."""
    spec = spec.strip()
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad SNR range {spec!r}, expected a:b:step")
        a, b, step = (float(t) for t in parts)
        if step <= 0:
            raise ValueError("SNR step must be > 0")
        count = int(round((b - a) / step))
        vals = [a + i * step for i in range(count + 1) if a + i * step <= b + 1e-9]
        if not vals:
            raise ValueError(f"empty SNR range {spec!r}")
        return tuple(vals)
    return tuple(float(t) for t in spec.split(",") if t.strip())
