"""Relative difference sets in G = V_n x Z_q^m relative to N = {0} x Z_q^m.

Two independent certificates: brute-force difference counting, and the
character-sum criterion.  The group is written additively with XOR on the
first factor and coordinatewise subtraction mod q on the second.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import cyclotomic as cyc
from .errors import RDSParamsError
from .gbfunc import GBFunc, fwht
from .vectorial import VecGBFunc

COUNTING_GROUP_CAP = 1 << 16


@dataclass(frozen=True)
class RDSParams:
    mu: int
    nu: int
    k: int
    lam: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.mu, self.nu, self.k, self.lam)


def vectorial_params(n: int) -> RDSParams:
    """(2^n, 2^(n/2), 2^n, 2^(n/2))."""
    return RDSParams(1 << n, 1 << (n // 2), 1 << n, 1 << (n // 2))


@dataclass(frozen=True, eq=False)
class GraphSet:
    """A subset R of V_n x Z_q^m; ``xs[i]`` and ``zs[i]`` are the coordinates of element i."""

    n: int
    t: int
    m: int
    xs: np.ndarray = field(repr=False)
    zs: np.ndarray = field(repr=False)

    def __post_init__(self):
        xs = np.asarray(self.xs, dtype=np.int64).reshape(-1)
        zs = np.asarray(self.zs, dtype=np.int64).reshape(len(xs), self.m) % self.q
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "zs", zs)
        if np.unique(self.encode(xs, zs)).size != len(xs):
            raise ValueError("set elements must be distinct")

    @classmethod
    def from_vectorial(cls, F: VecGBFunc) -> GraphSet:
        """R = {(x, F(x))}."""
        return cls(F.n, F.t, F.m, np.arange(1 << F.n), F.values())

    @classmethod
    def from_function(cls, f: GBFunc) -> GraphSet:
        return cls(f.n, f.t, 1, np.arange(1 << f.n), f.table.reshape(-1, 1))

    @property
    def q(self) -> int:
        return 1 << self.t

    @property
    def group_order(self) -> int:
        return (1 << self.n) * self.q**self.m

    @property
    def subgroup_order(self) -> int:
        return self.q**self.m

    def __len__(self) -> int:
        return len(self.xs)

    def is_graph(self) -> bool:
        return len(self) == 1 << self.n and np.array_equal(np.sort(self.xs), np.arange(1 << self.n))

    def encode(self, xs: np.ndarray, zs: np.ndarray) -> np.ndarray:
        weights = self.q ** np.arange(self.m, dtype=np.int64)
        return xs + (zs @ weights) * (1 << self.n)

    def elements(self) -> list[tuple[int, tuple[int, ...]]]:
        return [(int(x), tuple(int(a) for a in z)) for x, z in zip(self.xs, self.zs)]


def _check_params(R: GraphSet, params: RDSParams) -> None:
    if params.mu * params.nu != R.group_order:
        raise RDSParamsError(f"mu*nu = {params.mu * params.nu} but |G| = {R.group_order}")
    if params.nu != R.subgroup_order:
        raise RDSParamsError(f"nu = {params.nu} but |N| = {R.subgroup_order}")
    if params.k != len(R):
        raise RDSParamsError(f"k = {params.k} but |R| = {len(R)}")


def difference_counts(R: GraphSet) -> np.ndarray:
    """Number of representations r1 - r2 of every group element (encoded index)."""
    if R.group_order > COUNTING_GROUP_CAP:
        raise RDSParamsError(f"difference counting is capped at |G| <= {COUNTING_GROUP_CAP}")
    dx = R.xs[:, None] ^ R.xs[None, :]
    dz = (R.zs[:, None, :] - R.zs[None, :, :]) % R.q
    codes = R.encode(dx.reshape(-1), dz.reshape(-1, R.m))
    return np.bincount(codes, minlength=R.group_order)


def check_rds_counting(R: GraphSet, params: RDSParams) -> bool:
    _check_params(R, params)
    counts = difference_counts(R).reshape(-1, 1 << R.n)  # [z code, x]
    in_N = counts[1:, 0]  # x = 0, z != 0
    outside = counts[:, 1:]  # x != 0
    return bool(np.all(in_N == 0) and np.all(outside == params.lam))


@dataclass(frozen=True)
class CharacterFailure:
    u: int
    c: tuple[int, ...]
    squared: int | None  # None when |chi(R)|^2 came out irrational
    expected: int


def character_sums(R: GraphSet, c: tuple[int, ...]) -> np.ndarray:
    """chi_(u,c)(R) for every u, as (2^n, h) power-basis coordinates."""
    exps = (R.zs @ np.asarray(c, dtype=np.int64)) % R.q
    weights = np.zeros((1 << R.n, cyc.half(R.t)), dtype=np.int64)
    np.add.at(weights, R.xs, cyc.array_from_exponents(exps, R.t))
    return fwht(weights)


def rds_character_failures(R: GraphSet, params: RDSParams, first_only: bool = False) -> list[CharacterFailure]:
    """Characters violating |chi(R)|^2 in {k^2, k - lam*nu, k}."""
    _check_params(R, params)
    k, principal = params.k, params.k - params.lam * params.nu
    out = []
    for c in itertools.product(range(R.q), repeat=R.m):
        sq = cyc.array_squared_modulus(character_sums(R, c))
        irrational = np.any(sq[:, 1:] != 0, axis=1)
        expected = np.full(1 << R.n, k if any(c) else principal, dtype=np.int64)
        if not any(c):
            expected[0] = k * k
        bad = np.flatnonzero(irrational | (sq[:, 0] != expected))
        for u in bad:
            out.append(
                CharacterFailure(int(u), tuple(c), None if irrational[u] else int(sq[u, 0]), int(expected[u]))
            )
            if first_only:
                return out
    return out


def check_rds_characters(R: GraphSet, params: RDSParams) -> bool:
    return not rds_character_failures(R, params, first_only=True)


def rds_report(R: GraphSet, params: RDSParams) -> dict:
    """Both verdicts plus the failing characters (capped) as a JSON-ready dict."""
    failures = rds_character_failures(R, params)
    report = {
        "params": dict(zip(("mu", "nu", "k", "lambda"), params.as_tuple())),
        "characters": not failures,
        "character_failures": len(failures),
        "failing_characters": [
            {"u": f.u, "c": list(f.c), "squared": f.squared, "expected": f.expected} for f in failures[:16]
        ],
    }
    if R.group_order <= COUNTING_GROUP_CAP:
        report["counting"] = check_rds_counting(R, params)
    else:
        report["counting"] = None
    return report
