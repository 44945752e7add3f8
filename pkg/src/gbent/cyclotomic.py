"""Exact arithmetic in Z[zeta] for zeta a primitive 2^t-th root of unity.

Elements are coordinate vectors in the power basis 1, zeta, ..., zeta^(h-1)
with h = 2^(t-1), using zeta^h = -1.  Coordinates are Python ints guarded to
stay inside the signed 64-bit range (``Fraction`` coordinates are accepted for
the rationality tests and are not range-checked).
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

MAX_T = 6
_I64 = 1 << 63


class CycOverflow(OverflowError):
    pass


class NotRational(ArithmeticError):
    """A value expected to lie in Z was a non-rational cyclotomic integer."""


def half(t: int) -> int:
    return 1 << (t - 1)


def _check_t(t: int) -> int:
    if not 1 <= t <= MAX_T:
        raise ValueError(f"t must be in 1..{MAX_T}, got {t}")
    return t


def _guard(coords):
    for c in coords:
        if isinstance(c, (int, np.integer)) and not -_I64 <= c < _I64:
            raise CycOverflow(f"coordinate {c} leaves the 64-bit range")
    return coords


class CycInt:
    __slots__ = ("t", "coords")

    def __init__(self, t: int, coords: Iterable):
        self.t = _check_t(t)
        cs = tuple(int(c) if isinstance(c, np.integer) else c for c in coords)
        if len(cs) != half(t):
            raise ValueError(f"expected {half(t)} coordinates for t={t}, got {len(cs)}")
        self.coords = _guard(cs)

    @classmethod
    def zero(cls, t: int) -> CycInt:
        return cls(t, (0,) * half(t))

    @classmethod
    def rational(cls, t: int, r) -> CycInt:
        return cls(t, (r,) + (0,) * (half(t) - 1))

    def _same(self, other: CycInt) -> None:
        if not isinstance(other, CycInt) or other.t != self.t:
            raise ValueError("cyclotomic operands with mismatched t")

    def __add__(self, other: CycInt) -> CycInt:
        self._same(other)
        return CycInt(self.t, (a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: CycInt) -> CycInt:
        self._same(other)
        return CycInt(self.t, (a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> CycInt:
        return CycInt(self.t, (-a for a in self.coords))

    def scale(self, k) -> CycInt:
        return CycInt(self.t, (k * a for a in self.coords))

    def __mul__(self, other) -> CycInt:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CycInt.rational(self.t, other)
        return isinstance(other, CycInt) and self.t == other.t and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.t, self.coords))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def to_complex(self) -> complex:
        """Floating-point value; for display only."""
        z = cmath.exp(2j * cmath.pi / (1 << self.t))
        return sum(complex(c) * z**k for k, c in enumerate(self.coords))

    def to_list(self) -> list:
        return list(self.coords)

    def __repr__(self) -> str:
        return f"CycInt(t={self.t}, {list(self.coords)})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coords):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*z^{k}")
        return " + ".join(terms) if terms else "0"


def root_power(t: int, k: int) -> CycInt:
    """zeta^k reduced into the power basis."""
    h = half(_check_t(t))
    k %= 1 << t
    coords = [0] * h
    coords[k % h] = -1 if k >= h else 1
    return CycInt(t, coords)


def mul(a: CycInt, b: CycInt) -> CycInt:
    """Negacyclic convolution of coordinates (zeta^h = -1)."""
    a._same(b)
    h = half(a.t)
    out = [0] * h
    for i, x in enumerate(a.coords):
        if not x:
            continue
        for j, y in enumerate(b.coords):
            k = i + j
            if k < h:
                out[k] += x * y
            else:
                out[k - h] -= x * y
    return CycInt(a.t, out)


def conj(a: CycInt) -> CycInt:
    """Complex conjugate: zeta^k -> zeta^(-k) = -zeta^(h-k) for 0 < k < h."""
    h = half(a.t)
    out = [0] * h
    out[0] = a.coords[0]
    for k in range(1, h):
        out[h - k] = -a.coords[k]
    return CycInt(a.t, out)


def squared_modulus(a: CycInt) -> int:
    """|a|^2 as an integer; raises NotRational if a*conj(a) is not in Z."""
    p = mul(a, conj(a))
    if not p.is_rational():
        raise NotRational(f"a*conj(a) = {p} is not rational")
    if p.coords[0] < 0:
        raise AssertionError(f"negative squared modulus {p.coords[0]}")
    return p.coords[0]


def root_sum(t: int, exponents: Iterable[int]) -> CycInt:
    """sum of zeta^k over the given exponents."""
    h = half(_check_t(t))
    coords = [0] * h
    q = 1 << t
    for k in exponents:
        k %= q
        coords[k % h] += -1 if k >= h else 1
    return CycInt(t, coords)


def as_regular_value(a: CycInt, half_n: int) -> int | None:
    """Return j if a == 2^half_n * zeta^j, else None."""
    scale = 1 << half_n
    nz = [(k, c) for k, c in enumerate(a.coords) if c != 0]
    if len(nz) != 1:
        return None
    k, c = nz[0]
    if c == scale:
        return k
    if c == -scale:
        return k + half(a.t)
    return None


def weighted_root_sum(weights: Sequence, t: int, power: int = 1) -> CycInt:
    """sum_k weights[k] * zeta^(power*k) for weights indexed by Z_q."""
    q = 1 << _check_t(t)
    if len(weights) != q:
        raise ValueError(f"expected {q} weights, got {len(weights)}")
    h = q >> 1
    coords = [0] * h
    for k, w in enumerate(weights):
        e = power * k % q
        if e < h:
            coords[e] += w
        else:
            coords[e - h] -= w
    return CycInt(t, coords)


def rational_symmetry_holds(weights: Sequence, t: int) -> bool:
    """Is sum_k w_k zeta^k rational?  Decided twice: by the symmetry
    w_j == w_(h+j) for 1 <= j < h, and by evaluating the sum in the power
    basis.  The two answers must agree."""
    if t <= 1:
        raise ValueError("rationality symmetry needs t > 1")
    h = half(t)
    if len(weights) != 2 * h:
        raise ValueError(f"expected {2 * h} weights, got {len(weights)}")
    by_symmetry = all(weights[j] == weights[h + j] for j in range(1, h))
    by_basis = weighted_root_sum(weights, t).is_rational()
    if by_symmetry != by_basis:
        raise AssertionError(f"rationality tests disagree on {list(weights)}")
    return by_basis


# -- vectorised helpers over arrays of shape (N, h) -------------------------


def array_from_exponents(exps: np.ndarray, t: int) -> np.ndarray:
    """Rows zeta^exps[i] as an int64 array of shape (len(exps), h)."""
    h = half(t)
    exps = np.asarray(exps, dtype=np.int64) % (1 << t)
    out = np.zeros((exps.shape[0], h), dtype=np.int64)
    out[np.arange(exps.shape[0]), exps % h] = np.where(exps >= h, -1, 1)
    return out


def array_squared_modulus(values: np.ndarray) -> np.ndarray:
    """Row-wise coordinates of v*conj(v); shape preserved."""
    n_rows, h = values.shape
    cv = np.zeros_like(values)
    cv[:, 0] = values[:, 0]
    if h > 1:
        cv[:, 1:] = -values[:, :0:-1]
    out = np.zeros_like(values)
    for i in range(h):
        xi = values[:, i : i + 1]
        # shift conj by i: positions i..h-1 get +, wrap gets -
        out[:, i:] += xi * cv[:, : h - i]
        if i:
            out[:, :i] -= xi * cv[:, h - i :]
    return out
