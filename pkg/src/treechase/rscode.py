"""Reed-Solomon codes defined by the evaluation map.

A message polynomial u of degree < k is encoded as the vector of its values
at n distinct evaluation points, so the code has minimum distance n - k + 1
and classical half-distance decoding radius floor((n - k) / 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .galois import Field, make_field, poly_deg, poly_eval, lagrange_interpolate


@dataclass(frozen=True, eq=False)
class CodeParams:
    """An [n, k] evaluation code over the given field.

    eval_points are the n distinct evaluation abscissas, in the order that
    defines codeword coordinates.
    """

    field: Field
    n: int
    k: int
    eval_points: tuple[int, ...]

    def __post_init__(self):
        if not (0 < self.k < self.n <= self.field.q):
            raise ValueError(f"need 0 < k < n <= q, got n={self.n} k={self.k} q={self.field.q}")
        if len(self.eval_points) != self.n:
            raise ValueError("eval point count != n")
        if len(set(self.eval_points)) != self.n:
            raise ValueError("eval points must be distinct")

    @property
    def d_min(self) -> int:
        return self.n - self.k + 1

    @property
    def t_min(self) -> int:
        return (self.n - self.k) // 2

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.n, self.k, self.eval_points))

    def __eq__(self, other):
        if not isinstance(other, CodeParams):
            return NotImplemented
        return (self.field.p, self.field.m, self.n, self.k, self.eval_points) == (
            other.field.p, other.field.m, other.n, other.k, other.eval_points)


def make_code(p: int, m: int, n: int, k: int) -> CodeParams:
    """Standard code construction.

    Prime fields evaluate at 0, 1, ..., n-1.  Binary extension fields
    evaluate at the first n nonzero elements in exp-table order (the usual
    n = q - 1 setting takes all of them).
    """
    fld = make_field(p, m)
    if m == 1:
        if n > p:
            raise ValueError("prime-field code needs n <= p")
        pts = tuple(range(n))
    else:
        if n > fld.q - 1:
            raise ValueError("extension-field code needs n <= q - 1")
        pts = tuple(fld.exp_order()[:n])
    return CodeParams(field=fld, n=n, k=k, eval_points=pts)


def encode(code: CodeParams, message: list[int]) -> tuple[int, ...]:
    """Evaluate the message polynomial at the code's points."""
    if poly_deg(message) >= code.k:
        raise ValueError(f"message degree {poly_deg(message)} >= k = {code.k}")
    fld = code.field
    return tuple(poly_eval(fld, message, x) for x in code.eval_points)


def is_codeword(code: CodeParams, v: tuple[int, ...] | list[int]) -> bool:
    """True iff v interpolates to a polynomial of degree < k."""
    if len(v) != code.n:
        raise ValueError("length != n")
    u = lagrange_interpolate(code.field, list(code.eval_points), list(v))
    return poly_deg(u) < code.k


def message_of(code: CodeParams, v: tuple[int, ...] | list[int]) -> list[int]:
    """Interpolated message for a vector already known to be a codeword."""
    u = lagrange_interpolate(code.field, list(code.eval_points), list(v))
    if poly_deg(u) >= code.k:
        raise ValueError("not a codeword")
    return u


@lru_cache(maxsize=8)
def codebook(code: CodeParams) -> list[tuple[list[int], tuple[int, ...]]]:
    """All (message, codeword) pairs; intended for small codes (q^k <= 1e6)."""
    if code.field.q**code.k > 1_000_000:
        raise ValueError("codebook too large to enumerate")
    q, k = code.field.q, code.k
    out = []
    for idx in range(q**k):
        msg = []
        t = idx
        for _ in range(k):
            msg.append(t % q)
            t //= q
        while msg and msg[-1] == 0:
            msg.pop()
        out.append((msg, encode(code, msg)))
    return out
