"""Incremental bivariate interpolation for multiplicity-1 list decoding.

The decoder maintains a two-element Groebner basis {Q0, Q1} of the module of
polynomials q0(x) + q1(x)*y that vanish on a set of points (x_j, y_j) with
distinct x coordinates, with deg_y <= 1.  Polynomials are ordered by
(1, k-1)-weighted degree, ties broken in favour of the y-bearing leading
monomial, so a well-formed basis always holds one polynomial with a y-free
leading term and one with a y-bearing leading term.

Three point operations keep the basis updated in O(n) per call:

  forward_add     adjoin one interpolation point (Koetter's update)
  backward_remove delete one interpolation point (division update)
  factorize       read a degree-< k message off the minimal basis element

All operations are pure: they return new objects and never mutate their
inputs, so bases branched across search-tree nodes may share structure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .galois import (
    Field,
    poly_deg,
    poly_div_linear,
    poly_divrem,
    poly_eval,
    poly_mul_linear,
    poly_scale,
    poly_sub,
)

_NEG = -(10**9)  # stand-in for the weighted degree of a zero part


@dataclass(frozen=True)
class BivarPoly:
    """q0(x) + q1(x) * y with list coefficients, low degree first."""

    q0: tuple[int, ...]
    q1: tuple[int, ...]

    def is_zero(self) -> bool:
        return not self.q0 and not self.q1


def bivar(q0, q1) -> BivarPoly:
    return BivarPoly(tuple(q0), tuple(q1))


def bivar_eval(field: Field, P: BivarPoly, x: int, y: int) -> int:
    return field.add(poly_eval(field, P.q0, x),
                     field.mul(y, poly_eval(field, P.q1, x)))


def wdeg_key(k: int, P: BivarPoly) -> tuple[int, int]:
    """(weighted degree, leading-monomial y-degree) under the (1, k-1) order."""
    d0 = len(P.q0) - 1 if P.q0 else _NEG
    d1 = len(P.q1) - 1 + (k - 1) if P.q1 else _NEG
    return (max(d0, d1), 1 if d1 >= d0 else 0)


def weighted_degree(k: int, P: BivarPoly) -> int:
    return wdeg_key(k, P)[0]


@dataclass(frozen=True)
class GroebnerBasis:
    field: Field
    k: int
    polys: tuple[BivarPoly, BivarPoly]
    points: tuple[tuple[int, int], ...]

    def point_xs(self) -> set[int]:
        return {x for x, _ in self.points}


def basis_init(field: Field, k: int) -> GroebnerBasis:
    """The module of all q0 + q1*y: basis {1, y}, no points."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return GroebnerBasis(field=field, k=k,
                         polys=(bivar([1], []), bivar([], [1])),
                         points=())


def _combine(field: Field, a: int, P: BivarPoly, b: int, R: BivarPoly) -> BivarPoly:
    """a*P - b*R, componentwise."""
    q0 = poly_sub(field, poly_scale(field, P.q0, a), poly_scale(field, R.q0, b))
    q1 = poly_sub(field, poly_scale(field, P.q1, a), poly_scale(field, R.q1, b))
    return bivar(q0, q1)


def forward_add(basis: GroebnerBasis, x: int, y: int) -> GroebnerBasis:
    """Koetter update: constrain the module to also vanish at (x, y)."""
    field, k = basis.field, basis.k
    if any(px == x for px, _ in basis.points):
        raise ValueError(f"x = {x} already interpolated")
    P0, P1 = basis.polys
    d = (bivar_eval(field, P0, x, y), bivar_eval(field, P1, x, y))
    pts = basis.points + ((x, y),)
    if d == (0, 0):
        # the whole module already vanishes here; nothing to update
        return GroebnerBasis(field, k, basis.polys, pts)
    cands = [l for l in (0, 1) if d[l] != 0]
    mu = min(cands, key=lambda l: wdeg_key(k, basis.polys[l]))
    nu = 1 - mu
    new = [P0, P1]
    if d[nu] != 0:
        new[nu] = _combine(field, d[mu], new[nu], d[nu], new[mu])
    new[mu] = bivar(poly_mul_linear(field, new[mu].q0, x),
                    poly_mul_linear(field, new[mu].q1, x))
    return GroebnerBasis(field, k, (new[0], new[1]), pts)


def backward_remove(basis: GroebnerBasis, x: int, y: int) -> GroebnerBasis:
    """Release the constraint at (x, y), enlarging the module by one point."""
    field, k = basis.field, basis.k
    if (x, y) not in basis.points:
        raise ValueError(f"point ({x}, {y}) not interpolated")
    P = list(basis.polys)
    e = (poly_eval(field, P[0].q1, x), poly_eval(field, P[1].q1, x))
    cands = [l for l in (0, 1) if e[l] != 0]
    if not cands:
        raise RuntimeError("degenerate basis: no y-part is nonzero at the removed x")
    mu = min(cands, key=lambda l: wdeg_key(k, P[l]))
    nu = 1 - mu
    if e[nu] != 0:
        P[nu] = _combine(field, e[mu], P[nu], e[nu], P[mu])
    P[nu] = bivar(poly_div_linear(field, P[nu].q0, x),
                  poly_div_linear(field, P[nu].q1, x))
    pts = tuple(pt for pt in basis.points if pt != (x, y))
    return GroebnerBasis(field, k, (P[0], P[1]), pts)


def minimal_poly(basis: GroebnerBasis) -> BivarPoly:
    P0, P1 = basis.polys
    k = basis.k
    return P0 if wdeg_key(k, P0) <= wdeg_key(k, P1) else P1


def factorize(basis: GroebnerBasis) -> list[int] | None:
    """Message u = -q0/q1 of the minimal basis element, if it exists.

    Returns the coefficient list (possibly empty, meaning the zero message)
    when q1 divides q0 exactly and the quotient has degree < k; None when the
    minimal element admits no such root.  Note: test the result with
    `is not None`, since the zero message is falsy.
    """
    field, k = basis.field, basis.k
    P = minimal_poly(basis)
    if not P.q1:
        return None
    quo, rem = poly_divrem(field, P.q0, P.q1)
    if rem:
        return None
    u = [field.neg(c) for c in quo]
    if poly_deg(u) >= k:
        return None
    return u


def interpolate_points(field: Field, k: int, points) -> GroebnerBasis:
    """Fold forward_add over a point sequence, starting from {1, y}."""
    basis = basis_init(field, k)
    for x, y in points:
        basis = forward_add(basis, x, y)
    return basis
