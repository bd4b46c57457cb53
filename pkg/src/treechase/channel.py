"""BPSK/AWGN channel model and symbol-level soft information.

Each q-ary symbol (q = 2^m) is sent as m BPSK uses, least significant bit
first, with bit b mapped to the real sample 1 - 2b.  The receiver keeps the
per-symbol log-likelihood matrix pi with one row per field value and one
column per code coordinate:

    pi[i][j] = sum_b log N(r[j][b]; sign of bit b of value i, sigma^2)

Everything downstream works on pi alone; noise variance follows the
Eb/N0 convention sigma^2 = 1 / (2 * rate * 10^(snr_db / 10)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .galois import Field, BinaryField


def sigma_from_snr_db(snr_db: float, rate: float) -> float:
    return math.sqrt(1.0 / (2.0 * rate * 10.0 ** (snr_db / 10.0)))


def frame_rng(seed: int, frame_index: int) -> np.random.Generator:
    """Independent per-frame stream; identical regardless of worker layout."""
    return np.random.default_rng((seed, frame_index))


def modulate(field: Field, codeword) -> np.ndarray:
    """Codeword -> n*m array of +-1 samples, LSB-first within each symbol."""
    c = np.asarray(codeword, dtype=np.int64)
    bits = (c[:, None] >> np.arange(field.m)[None, :]) & 1
    return (1.0 - 2.0 * bits).reshape(-1)


def transmit(signal: np.ndarray, sigma: float, rng: np.random.Generator) -> np.ndarray:
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    return signal + sigma * rng.standard_normal(signal.shape)


def likelihoods(field: Field, n: int, samples: np.ndarray, sigma2: float) -> np.ndarray:
    """(q, n) matrix of per-symbol Gaussian log-likelihoods."""
    if sigma2 <= 0:
        raise ValueError("sigma2 must be > 0")
    m = field.m
    r = np.asarray(samples, dtype=np.float64).reshape(n, m)
    vals = np.arange(field.q, dtype=np.int64)
    signs = 1.0 - 2.0 * ((vals[:, None] >> np.arange(m)[None, :]) & 1)
    d = r[None, :, :] - signs[:, None, :]
    return -(d * d).sum(axis=2) / (2.0 * sigma2) - 0.5 * m * math.log(2.0 * math.pi * sigma2)


def hard_decision(pi: np.ndarray) -> tuple[int, ...]:
    """Columnwise argmax; ties resolve to the smallest field value."""
    return tuple(int(v) for v in np.argmax(pi, axis=0))


def _sub_table(field: Field, z: np.ndarray, deltas: np.ndarray) -> np.ndarray:
    # index [d-1][j] = z_j - d in the field
    if isinstance(field, BinaryField):
        return z[None, :] ^ deltas[:, None]
    return (z[None, :] - deltas[:, None]) % field.p


@dataclass
class SoftWeights:
    """Weights lam[d-1][j] = pi[z_j][j] - pi[z_j - d][j] >= 0 for d in 1..q-1."""

    z: tuple[int, ...]
    lam: np.ndarray  # shape (q-1, n)

    def weight_of(self, j: int, delta: int) -> float:
        return float(self.lam[delta - 1, j])

    def pattern_weight(self, e) -> float:
        """Total weight of an error vector (0 entries contribute nothing)."""
        return float(sum(self.lam[ej - 1, j] for j, ej in enumerate(e) if ej))


def soft_weights(field: Field, pi: np.ndarray, z: tuple[int, ...] | None = None) -> SoftWeights:
    if z is None:
        z = hard_decision(pi)
    q, n = pi.shape
    zv = np.asarray(z, dtype=np.int64)
    deltas = np.arange(1, q, dtype=np.int64)
    idx = _sub_table(field, zv, deltas)
    cols = np.arange(n)
    lam = pi[zv, cols][None, :] - pi[idx, cols[None, :]]
    return SoftWeights(z=tuple(int(v) for v in z), lam=lam)


# ---------------------------------------------------------------------------
# Likelihood matrix files: first line "q n", then q rows of n reals.

def save_pi(path: str, pi: np.ndarray) -> None:
    q, n = pi.shape
    with open(path, "w") as fh:
        fh.write(f"{q} {n}\n")
        for row in pi:
            fh.write(" ".join(f"{v:.6g}" for v in row) + "\n")


def load_pi(path: str) -> np.ndarray:
    with open(path) as fh:
        stripped = (line.split("#", 1)[0] for line in fh)
        raw = [line.split() for line in stripped if line.strip()]
    if not raw:
        raise ValueError(f"{path}: empty likelihood file")
    try:
        q, n = (int(t) for t in raw[0])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{path}: bad header {raw[0]!r}") from exc
    if q < 2 or n < 1:
        raise ValueError(f"{path}: bad dimensions q={q} n={n}")
    if len(raw) - 1 != q:
        raise ValueError(f"{path}: expected {q} matrix rows, found {len(raw) - 1}")
    rows = []
    for i, toks in enumerate(raw[1:]):
        if len(toks) != n:
            raise ValueError(f"{path}: row {i} has {len(toks)} entries, expected {n}")
        try:
            rows.append([float(t) for t in toks])
        except ValueError as exc:
            raise ValueError(f"{path}: row {i}: non-numeric entry") from exc
    pi = np.array(rows, dtype=np.float64)
    if not np.all(np.isfinite(pi)):
        raise ValueError(f"{path}: non-finite entries")
    return pi
