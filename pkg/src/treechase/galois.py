"""Finite field arithmetic for prime fields GF(p) and binary extensions GF(2^m).

Field elements are plain Python ints in the range [0, q).  A Field object
carries the arithmetic; there is no element wrapper class.  For GF(2^m) an
element's integer value is the binary vector of its polynomial coefficients
(bit i holds the coefficient of alpha^i), so addition is XOR and
multiplication goes through exp/log tables built from a fixed primitive
polynomial:

    m   primitive polynomial      mask
    2   x^2 + x + 1               0x7
    3   x^3 + x + 1               0xb
    4   x^4 + x + 1               0x13
    5   x^5 + x^2 + 1             0x25
    6   x^6 + x + 1               0x43
    7   x^7 + x^3 + 1             0x89
    8   x^8 + x^4 + x^3 + x^2 + 1 0x11d
    9   x^9 + x^4 + 1             0x211
    10  x^10 + x^3 + 1            0x409
    11  x^11 + x^2 + 1            0x805
    12  x^12 + x^6 + x^4 + x + 1  0x1053

Univariate polynomials are plain lists of ints, lowest degree first, with no
trailing zeros (the zero polynomial is the empty list).
"""

from __future__ import annotations

PRIMITIVE_POLY = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
}

MAX_Q = 65536


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface; use make_field() to construct a concrete field."""

    p: int
    m: int
    q: int

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def __repr__(self) -> str:
        return f"GF({self.q})"


class PrimeField(Field):
    def __init__(self, p: int):
        self.p = p
        self.m = 1
        self.q = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)


class BinaryField(Field):
    """GF(2^m) with exp/log tables over a fixed primitive polynomial."""

    def __init__(self, m: int):
        self.p = 2
        self.m = m
        self.q = 1 << m
        poly = PRIMITIVE_POLY[m]
        order = self.q - 1
        exp = [0] * (2 * order)
        log = [0] * self.q
        x = 1
        for i in range(order):
            exp[i] = x
            exp[i + order] = x  # doubled table avoids a mod in mul
            log[x] = i
            x <<= 1
            if x & self.q:
                x ^= poly
        if x != 1:
            raise ValueError(f"0x{poly:x} is not primitive for m={m}")
        self._exp = exp
        self._log = log
        self._order = order

    def add(self, a, b):
        return a ^ b

    def sub(self, a, b):
        return a ^ b

    def neg(self, a):
        return a

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[self._order - self._log[a]]

    def exp_order(self) -> list[int]:
        """Nonzero elements as powers of the primitive element: 1, a, a^2, ..."""
        return self._exp[: self._order]


def make_field(p: int, m: int = 1) -> Field:
    """Construct GF(p^m).  Prime p <= 257 for m = 1; p = 2, 2 <= m <= 12 otherwise."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if p**m > MAX_Q:
        raise ValueError(f"field size {p}^{m} exceeds {MAX_Q}")
    if m == 1:
        if p > 257:
            raise ValueError("prime fields supported up to p = 257")
        return PrimeField(p)
    if p != 2:
        raise ValueError("extension fields require p = 2")
    if m not in PRIMITIVE_POLY:
        raise ValueError(f"no primitive polynomial on file for m = {m}")
    return BinaryField(m)


# ---------------------------------------------------------------------------
# Univariate polynomials: list[int] low-degree first, no trailing zeros.

def poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_deg(c: list[int]) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(c) - 1


def poly_add(field: Field, a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    add = field.add
    out = list(a)
    for i, v in enumerate(b):
        out[i] = add(out[i], v)
    return poly_trim(out)


def poly_sub(field: Field, a: list[int], b: list[int]) -> list[int]:
    sub = field.sub
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        out[i] = sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
    return poly_trim(out)


def poly_scale(field: Field, a: list[int], s: int) -> list[int]:
    if s == 0:
        return []
    mul = field.mul
    return poly_trim([mul(v, s) for v in a])


def poly_mul(field: Field, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    add, mul = field.add, field.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av == 0:
            continue
        for j, bv in enumerate(b):
            out[i + j] = add(out[i + j], mul(av, bv))
    return poly_trim(out)


def poly_eval(field: Field, a: list[int], x: int) -> int:
    """Horner evaluation."""
    add, mul = field.add, field.mul
    acc = 0
    for v in reversed(a):
        acc = add(mul(acc, x), v)
    return acc


def poly_divrem(field: Field, num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder with deg rem < deg den."""
    den = poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    num = poly_trim(num)
    if len(num) < len(den):
        return [], list(num)
    sub, mul = field.sub, field.mul
    inv_lead = field.inv(den[-1])
    rem = list(num)
    qdeg = len(num) - len(den)
    quo = [0] * (qdeg + 1)
    for i in range(qdeg, -1, -1):
        c = mul(rem[i + len(den) - 1], inv_lead)
        quo[i] = c
        if c:
            for j, dv in enumerate(den):
                rem[i + j] = sub(rem[i + j], mul(c, dv))
    return poly_trim(quo), poly_trim(rem)


def poly_mul_linear(field: Field, a: list[int], beta: int) -> list[int]:
    """a(x) * (x - beta)."""
    if not a:
        return []
    sub, mul = field.sub, field.mul
    nb = field.neg(beta)
    out = [0] * (len(a) + 1)
    for i, v in enumerate(a):
        out[i + 1] = field.add(out[i + 1], v)
        out[i] = field.add(out[i], mul(v, nb))
    return poly_trim(out)


def poly_div_linear(field: Field, a: list[int], beta: int) -> list[int]:
    """a(x) / (x - beta) by synthetic division; raises if the division is inexact."""
    if not a:
        return []
    add, mul = field.add, field.mul
    out = [0] * (len(a) - 1)
    acc = 0
    for i in range(len(a) - 1, -1, -1):
        acc = add(mul(acc, beta), a[i])
        if i > 0:
            out[i - 1] = acc
        elif acc != 0:
            raise RuntimeError("inexact division by linear factor")
    return poly_trim(out)


def poly_str(c: list[int]) -> str:
    """Human form, low degree first: [] -> "0", [1, 3] -> "1+3x", [0, 1, 2] -> "x+2x^2"."""
    terms = []
    for i, v in enumerate(c):
        if v == 0:
            continue
        if i == 0:
            terms.append(str(v))
        else:
            coef = "" if v == 1 else str(v)
            xpow = "x" if i == 1 else f"x^{i}"
            terms.append(coef + xpow)
    return "+".join(terms) if terms else "0"


def lagrange_interpolate(field: Field, xs: list[int], ys: list[int]) -> list[int]:
    """Unique polynomial of degree < len(xs) through the given points."""
    if len(xs) != len(ys):
        raise ValueError("point count mismatch")
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate x coordinates")
    out: list[int] = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = [1]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = poly_mul_linear(field, basis, xj)
            denom = field.mul(denom, field.sub(xi, xj))
        out = poly_add(field, out, poly_scale(field, basis, field.div(yi, denom)))
    return out
