"""Gray-coded low-complexity Chase baseline and ML-performance bookkeeping.

The baseline ranks coordinates by the gap between the two best column
log-likelihoods, takes the eta least reliable positions, and walks all
2^eta hard-decision test vectors built from {best, second-best} symbols in
Gray-code order, so consecutive vectors differ in a single coordinate and
reuse the interpolation basis through one point swap.  The same early
termination floor as the tree decoder (kaneko_B0) applies.

classify_ml sandwiches the simulated ML frame-error rate: every frame
contributes indicator bounds e_lower <= E_ML <= e_upper based on whether the
decode was certified and whether its output out-scores the transmitted word.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import hard_decision, soft_weights
from .chase import build_atom_chain, kaneko_B0
from .decoder import (
    EXIT_BUDGET,
    EXIT_CERTIFIED_KANEKO,
    EXIT_GENIE,
    DecodeResult,
)
from .interp import backward_remove, basis_init, factorize, forward_add
from .rscode import CodeParams, encode


@dataclass(frozen=True)
class LccConfig:
    """eta least reliable positions; 2^eta test vectors; 0 <= eta <= n."""

    eta: int = 4

    def __post_init__(self):
        if self.eta < 0:
            raise ValueError("eta must be >= 0")


def lcc_decode(code: CodeParams, pi: np.ndarray, cfg: LccConfig | None = None,
               genie_codeword: tuple[int, ...] | None = None) -> DecodeResult:
    cfg = cfg or LccConfig()
    field = code.field
    if pi.shape != (field.q, code.n):
        raise ValueError(f"pi shape {pi.shape} != ({field.q}, {code.n})")
    if cfg.eta > code.n:
        raise ValueError("eta must be <= n")
    sub = field.sub
    z = hard_decision(pi)
    sw = soft_weights(field, pi, z)
    chain = build_atom_chain(sw)
    d_min = code.d_min
    genie = tuple(genie_codeword) if genie_codeword is not None else None

    # reliability of a coordinate = weight of its cheapest single-symbol change
    rel = sw.lam.min(axis=0)
    delta_star = sw.lam.argmin(axis=0) + 1
    lrps = [int(j) for j in np.argsort(rel, kind="stable")[:cfg.eta]]
    second = {j: sub(z[j], int(delta_star[j])) for j in lrps}

    e_star = z
    w_star = sw.pattern_weight(z)
    u_star: list[int] | None = None
    c_star: tuple[int, ...] | None = None
    backward_ops = 0
    forward_ops = 0

    def attempt(b) -> str | None:
        nonlocal e_star, w_star, u_star, c_star
        u = factorize(b)
        if u is None:
            return None
        c = encode(code, u)
        e = tuple(sub(zj, cj) for zj, cj in zip(z, c))
        w = sw.pattern_weight(e)
        if not (w < w_star or (u_star is None and w == w_star)):
            return None
        e_star, w_star, u_star, c_star = e, w, u, c
        if w <= kaneko_B0(chain, e, d_min):
            return EXIT_CERTIFIED_KANEKO
        if genie is not None and c == genie:
            return EXIT_GENIE
        return None

    basis = basis_init(field, code.k)
    for j, x in enumerate(code.eval_points):
        basis = forward_add(basis, x, z[j])
    forward_ops += code.n
    trials = 1
    exit_reason = attempt(basis)

    state = list(z)
    if exit_reason is None:
        for i in range(1, 1 << cfg.eta):
            gray, prev = i ^ (i >> 1), (i - 1) ^ ((i - 1) >> 1)
            b = (gray ^ prev).bit_length() - 1
            j = lrps[b]
            x = code.eval_points[j]
            y_new = second[j] if state[j] == z[j] else z[j]
            basis = backward_remove(basis, x, state[j])
            backward_ops += 1
            basis = forward_add(basis, x, y_new)
            forward_ops += 1
            state[j] = y_new
            trials += 1
            exit_reason = attempt(basis)
            if exit_reason is not None:
                break
        else:
            exit_reason = EXIT_BUDGET

    return DecodeResult(message=u_star, codeword=c_star, best_error=e_star,
                        best_weight=w_star, trials=trials, steps=trials - 1,
                        exit_reason=exit_reason, backward_ops=backward_ops,
                        forward_ops=forward_ops)


def classify_ml(code: CodeParams, pi: np.ndarray, result: DecodeResult,
                transmitted: tuple[int, ...]) -> tuple[int, int]:
    """Per-frame ML-error indicator bounds (e_upper, e_lower).

    Correct and certified frames cannot be ML errors (0, 0); correct but
    uncertified frames might be (1, 0); wrong outputs that strictly out-score
    the transmitted word definitely are (1, 1); other wrong outputs,
    including score ties, count only toward the upper bound (1, 0).
    """
    tx = tuple(transmitted)
    if result.codeword is not None and tuple(result.codeword) == tx:
        return (0, 0) if result.certified else (1, 0)
    if result.codeword is None:
        return (1, 0)
    field = code.field
    z = hard_decision(pi)
    sw = soft_weights(field, pi, z)
    e_tx = tuple(field.sub(zj, cj) for zj, cj in zip(z, tx))
    w_tx = sw.pattern_weight(e_tx)
    return (1, 1) if result.best_weight < w_tx else (1, 0)


@dataclass
class BoundTally:
    """Aggregated frame counts; merge tallies by +."""

    frames: int = 0
    errors: int = 0
    e_upper: int = 0
    e_lower: int = 0
    trials: int = 0

    def add(self, error: bool, eu: int, el: int, trials: int) -> None:
        if not (el <= int(error) <= eu):
            raise ValueError("per-frame bound ordering violated")
        self.frames += 1
        self.errors += int(error)
        self.e_upper += eu
        self.e_lower += el
        self.trials += trials

    def __add__(self, other: "BoundTally") -> "BoundTally":
        return BoundTally(self.frames + other.frames, self.errors + other.errors,
                          self.e_upper + other.e_upper, self.e_lower + other.e_lower,
                          self.trials + other.trials)

    @property
    def fer(self) -> float:
        return self.errors / self.frames if self.frames else 0.0

    @property
    def avg_trials(self) -> float:
        return self.trials / self.frames if self.frames else 0.0

    @property
    def e_upper_rate(self) -> float:
        return self.e_upper / self.frames if self.frames else 0.0

    @property
    def e_lower_rate(self) -> float:
        return self.e_lower / self.frames if self.frames else 0.0
