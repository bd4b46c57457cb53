"""Ordered error-pattern search space for soft-decision Chase decoding.

An atom is a single-coordinate modification (j, delta): subtract delta from
the hard decision at coordinate j.  Atoms carry the nonnegative soft weight
lam_j(delta) and are totally ordered by (weight, coordinate, delta); the
sorted sequence is the atom chain, and every error hypothesis is a
rank-increasing sub-chain with distinct coordinates (a flipping pattern).

For a code with half-distance radius t_min, a pattern f opens the candidate
set G(f) of t_min-coordinate completions further down the chain; the greedy
scan gives min over G(f) exactly, and

    B(f) = weight(f) + greedy_min(f)

lower-bounds the weight of every error hypothesis whose minimal decomposition
starts with f.  B is monotone along the sibling order and from parent to
child, which is what makes best-first traversal with a sorted frontier exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Any

import numpy as np

from .channel import SoftWeights


@dataclass(frozen=True)
class AtomChain:
    """All n*(q-1) atoms sorted ascending; parallel tuples indexed by 0-based rank."""

    n: int
    q: int
    coords: tuple[int, ...]
    deltas: tuple[int, ...]
    weights: tuple[float, ...]
    rank_of: dict = dc_field(compare=False, repr=False, default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.coords)

    def atom(self, rank: int) -> tuple[int, int]:
        return (self.coords[rank], self.deltas[rank])


def build_atom_chain(sw: SoftWeights) -> AtomChain:
    qm1, n = sw.lam.shape
    w = sw.lam.ravel()
    if w.size and float(w.min()) < 0.0:
        raise ValueError("negative soft weight: z must be the columnwise argmax")
    coords = np.tile(np.arange(n), qm1)
    deltas = np.repeat(np.arange(1, qm1 + 1), n)
    order = np.lexsort((deltas, coords, w))
    cs = tuple(int(v) for v in coords[order])
    ds = tuple(int(v) for v in deltas[order])
    ws = tuple(float(v) for v in w[order])
    rank_of = {(c, d): r for r, (c, d) in enumerate(zip(cs, ds))}
    return AtomChain(n=n, q=qm1 + 1, coords=cs, deltas=ds, weights=ws, rank_of=rank_of)


@dataclass(frozen=True)
class FlippingPattern:
    """Strictly rank-increasing atom ranks with pairwise distinct coordinates."""

    ranks: tuple[int, ...]
    coords: frozenset[int]
    weight: float

    @property
    def wh(self) -> int:
        return len(self.ranks)

    @property
    def upper_rank(self) -> int:
        """Rank of the last atom; -1 for the empty pattern (scan sentinel)."""
        return self.ranks[-1] if self.ranks else -1

    @property
    def lower_rank(self) -> float:
        return self.ranks[0] if self.ranks else math.inf


ROOT = FlippingPattern((), frozenset(), 0.0)


def pattern_from_ranks(chain: AtomChain, ranks) -> FlippingPattern:
    ranks = tuple(sorted(ranks))
    coords = [chain.coords[r] for r in ranks]
    if len(set(coords)) != len(coords):
        raise ValueError("pattern atoms must sit on distinct coordinates")
    # weight summed in rank order so equal patterns always get bit-equal weights
    return FlippingPattern(ranks, frozenset(coords),
                           sum(chain.weights[r] for r in ranks))


def pattern_atoms(chain: AtomChain, f: FlippingPattern) -> list[tuple[int, int]]:
    return [chain.atom(r) for r in f.ranks]


def render_pattern(chain: AtomChain, f: FlippingPattern) -> str:
    if not f.ranks:
        return "0"
    return "+".join(f"({c},{d})" for c, d in pattern_atoms(chain, f))


def greedy_g_min(chain: AtomChain, f: FlippingPattern, t_min: int) -> float:
    """Exact min weight over G(f): t_min atoms past R_u(f) on fresh coordinates.

    Returns +inf when fewer than t_min such atoms remain.
    """
    if t_min == 0:
        return 0.0
    taken = set(f.coords)
    total = 0.0
    got = 0
    coords, weights = chain.coords, chain.weights
    for r in range(f.upper_rank + 1, len(coords)):
        c = coords[r]
        if c in taken:
            continue
        taken.add(c)
        total += weights[r]
        got += 1
        if got == t_min:
            return total
    return math.inf


def bound_B(chain: AtomChain, f: FlippingPattern, t_min: int) -> float:
    return f.weight + greedy_g_min(chain, f, t_min)


def leftmost_child(chain: AtomChain, f: FlippingPattern) -> FlippingPattern | None:
    """Lowest-rank extension of f on an unused coordinate, or None."""
    coords = chain.coords
    for r in range(f.upper_rank + 1, len(coords)):
        c = coords[r]
        if c not in f.coords:
            return FlippingPattern(f.ranks + (r,), f.coords | {c},
                                   sum(chain.weights[i] for i in f.ranks) + chain.weights[r])
    return None


def next_sibling(chain: AtomChain, f: FlippingPattern) -> FlippingPattern | None:
    """Replace f's last atom by the next valid one at a higher rank, or None."""
    if not f.ranks:
        raise ValueError("the empty pattern has no siblings")
    head = f.ranks[:-1]
    head_coords = frozenset(chain.coords[r] for r in head)
    head_weight = sum(chain.weights[r] for r in head)
    coords = chain.coords
    for r in range(f.ranks[-1] + 1, len(coords)):
        c = coords[r]
        if c not in head_coords:
            return FlippingPattern(head + (r,), head_coords | {c},
                                   head_weight + chain.weights[r])
    return None


def kaneko_B0(chain: AtomChain, e, d_min: int) -> float:
    """Early-termination floor: every rival hypothesis weighs at least this much.

    Greedy sum of the (d_min - wt(e)) lightest atoms on coordinates outside
    the support of e; 0 once e already touches d_min coordinates.  A decoded
    hypothesis whose weight does not exceed its own floor is maximum-likelihood.
    """
    support = {j for j, v in enumerate(e) if v}
    need = d_min - len(support)
    if need <= 0:
        return 0.0
    total = 0.0
    taken = support
    for r in range(len(chain.coords)):
        c = chain.coords[r]
        if c in taken:
            continue
        taken = taken | {c}
        total += chain.weights[r]
        need -= 1
        if need == 0:
            return total
    return math.inf


def minimal_decompose(chain: AtomChain, e, t_min: int) -> tuple[FlippingPattern, FlippingPattern]:
    """Split e's atoms (rank-sorted) into the minimal pattern f and tail g.

    f keeps all but the t_min highest-ranked atoms of e; g keeps those t_min.
    This is the unique split with |supp(g)| = t_min, disjoint supports and
    R_u(f) < R_l(g).
    """
    ranks = sorted(chain.rank_of[(j, v)] for j, v in enumerate(e) if v)
    if len(ranks) < t_min:
        raise ValueError("wt(e) < t_min: the minimal pattern degenerates to the empty one")
    cut = len(ranks) - t_min
    return (pattern_from_ranks(chain, ranks[:cut]),
            pattern_from_ranks(chain, ranks[cut:]))


def pattern_key(bound: float, f: FlippingPattern) -> tuple[float, int, tuple[int, ...]]:
    """Total search order: bound, then Hamming weight, then leftmost position."""
    return (bound, len(f.ranks), f.ranks)


def pattern_order_less(chain: AtomChain, t_min: int,
                       a: FlippingPattern, b: FlippingPattern) -> bool:
    return pattern_key(bound_B(chain, a, t_min), a) < pattern_key(bound_B(chain, b, t_min), b)


@dataclass(frozen=True)
class TreeNode:
    """Frontier entry: a pattern, its bound, and the basis of its parent."""

    pattern: FlippingPattern
    bound: float
    basis: Any

    def key(self):
        return pattern_key(self.bound, self.pattern)
