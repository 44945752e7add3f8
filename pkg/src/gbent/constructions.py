"""Spread-based gbent constructions and the partial-spread classification."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import cyclotomic as cyc
from .errors import (
    BadParameters,
    ConditionViolated,
    HypothesisViolated,
    IncompleteSpread,
    InvalidSpread,
    ZeroValueOnSpread,
)
from .gbfunc import GBFunc
from .gf2m import FieldCtx
from .space import Form, PartialSpread, TraceForm, member_index_table, verify_partial_spread

# -- generalized Dillon on a complete spread ------------------------------------


def spread_table(spread: PartialSpread, values: Sequence[int], at_zero: int, background: int = 0) -> np.ndarray:
    """Table constant ``values[i]`` on U_i minus 0, ``at_zero`` at 0, ``background`` elsewhere."""
    if len(values) != len(spread):
        raise ValueError(f"{len(spread)} spread members but {len(values)} values")
    idx = member_index_table(spread)
    out = np.full(idx.shape, background, dtype=np.int64)
    inside = idx >= 0
    out[inside] = np.asarray(values, dtype=np.int64)[idx[inside]]
    out[0] = at_zero
    return out


def dillon_full_spread(spread: PartialSpread, k: Sequence[int], r: int, t: int, form: Form | None = None) -> GBFunc:
    """f = k_i on U_i minus 0 and f(0) = r, requiring sum_i zeta^k_i == zeta^r."""
    if not verify_partial_spread(spread):
        raise InvalidSpread("members are not pairwise trivially intersecting n/2-spaces")
    if not spread.is_complete:
        raise IncompleteSpread(f"need {(1 << spread.n // 2) + 1} members, got {len(spread)}")
    if cyc.root_sum(t, k) != cyc.root_power(t, r):
        raise ConditionViolated(f"sum of zeta^k_i is {cyc.root_sum(t, k)}, not zeta^{r}")
    q = 1 << t
    return GBFunc(spread.n, t, spread_table(spread, [v % q for v in k], r % q), form)


def orthogonal_spread_table(spread: PartialSpread, values: Sequence[int], at_zero: int, form: Form | None = None) -> np.ndarray:
    """Same assignment carried over to the orthogonal spread U_i^perp."""
    return spread_table(spread.orthogonal(form), values, at_zero)


# -- PS_ap ------------------------------------------------------------------------


def _as_table(ctx: FieldCtx, g) -> list[int]:
    if callable(g):
        return [int(g(s)) & 1 for s in ctx.elements()]
    g = [int(v) for v in g]
    if len(g) != ctx.order or any(v not in (0, 1) for v in g):
        raise BadParameters(f"a Boolean table on GF(2^{ctx.m}) needs {ctx.order} bits")
    return g


def psap_exponents(ctx: FieldCtx, G: Sequence) -> list[int]:
    """e(s) = sum_j 2^j G_j(s) for every s in GF(2^m)."""
    tables = [_as_table(ctx, g) for g in G]
    return [sum(tab[s] << j for j, tab in enumerate(tables)) for s in ctx.elements()]


def _psap_table(ctx: FieldCtx, e: list[int], swap: bool) -> np.ndarray:
    m = ctx.m
    mask = ctx.order - 1
    inv = ctx.inv_table
    out = np.empty(1 << (2 * m), dtype=np.int64)
    for p in range(1 << (2 * m)):
        x, y = p & mask, p >> m
        num, den = (y, x) if swap else (x, y)
        out[p] = e[ctx.mul(num, inv[den])]
    return out


def psap_explicit(ctx: FieldCtx, G: Sequence) -> GBFunc:
    """f(x, y) = sum_j 2^j G_j(x / y) with 1/0 = 0, under the trace form.

    Each G_j is a callable on field elements (ints) or a 0/1 table of length
    2^m.  Requires G_j(0) = 0 and sum_s zeta^e(s) = 0.
    """
    if not G:
        raise BadParameters("need at least one component Boolean function")
    t = len(G)
    tables = [_as_table(ctx, g) for g in G]
    bad = [j for j, tab in enumerate(tables) if tab[0] != 0]
    if bad:
        raise HypothesisViolated(f"G_{bad[0]}(0) != 0")
    e = psap_exponents(ctx, tables)
    total = cyc.root_sum(t, e)
    if total != 0:
        raise HypothesisViolated(f"sum over s of zeta^(sum 2^j G_j(s)) is {total}, not 0")
    return GBFunc(2 * ctx.m, t, _psap_table(ctx, e, swap=False), TraceForm(ctx))


def psap_dual_table(ctx: FieldCtx, G: Sequence) -> np.ndarray:
    """Direct table of sum_j 2^j G_j(y / x)."""
    return _psap_table(ctx, psap_exponents(ctx, G), swap=True)


def psap_trace_pair(ctx: FieldCtx, a: int, b: int) -> GBFunc:
    """Z_4-valued Tr(a x / y) + 2 Tr(b x / y) for distinct nonzero a, b."""
    if a == 0 or b == 0:
        raise BadParameters("a and b must be nonzero")
    if a == b:
        raise BadParameters("a and b must be distinct")
    ctx.check(a)
    ctx.check(b)
    tr = ctx.trace_table
    G0 = [tr[ctx.mul(a, s)] for s in ctx.elements()]
    G1 = [tr[ctx.mul(b, s)] for s in ctx.elements()]
    return psap_explicit(ctx, [G0, G1])


# -- partial spreads --------------------------------------------------------------


@dataclass(frozen=True)
class SpreadAssignment:
    """Value k_i on each member U_i (minus 0), rho at 0, 0 off the union."""

    spread: PartialSpread
    values: tuple[int, ...]
    rho: int
    t: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != len(self.spread):
            raise ValueError(f"{len(self.spread)} members but {len(self.values)} values")
        q = 1 << self.t
        if not all(0 <= v < q for v in self.values) or not 0 <= self.rho < q:
            raise ValueError(f"values must be residues mod {q}")

    @property
    def q(self) -> int:
        return 1 << self.t

    @property
    def m(self) -> int:
        return self.spread.n // 2

    def table(self) -> np.ndarray:
        return spread_table(self.spread, self.values, self.rho)

    def function(self, form: Form | None = None) -> GBFunc:
        """The assigned function with no condition checked."""
        return GBFunc(self.spread.n, self.t, self.table(), form)

    def profile(self) -> ClassProfile:
        return ClassProfile.from_values(self.values, self.rho, self.t)


def partial_spread_condition(values: Iterable[int], rho: int, t: int, m: int) -> bool:
    """sum_i zeta^k_i == A - (2^m + 1) + zeta^rho, exactly."""
    values = list(values)
    lhs = cyc.root_sum(t, values)
    rhs = cyc.CycInt.rational(t, len(values) - (1 << m) - 1) + cyc.root_power(t, rho)
    return lhs == rhs


def partial_spread_gbent(assign: SpreadAssignment, form: Form | None = None) -> GBFunc:
    if not verify_partial_spread(assign.spread):
        raise InvalidSpread("members are not pairwise trivially intersecting n/2-spaces")
    if any(v == 0 for v in assign.values):
        raise ZeroValueOnSpread("every spread member must carry a nonzero value")
    if not partial_spread_condition(assign.values, assign.rho, assign.t, assign.m):
        raise ConditionViolated(
            f"sum zeta^k_i != A - (2^m + 1) + zeta^rho for k={list(assign.values)}, rho={assign.rho}"
        )
    return assign.function(form)


def partial_spread_dual_table(assign: SpreadAssignment, form: Form | None = None) -> np.ndarray:
    return orthogonal_spread_table(assign.spread, assign.values, assign.rho, form)


# -- classification of value profiles ------------------------------------------------


@dataclass(frozen=True)
class ClassProfile:
    """rho and the counts c_1..c_(q-1) of members carrying each nonzero value."""

    t: int
    rho: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        q = 1 << self.t
        if len(self.counts) != q - 1:
            raise ValueError(f"need {q - 1} counts for q={q}, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")
        if not 0 <= self.rho < q:
            raise ValueError(f"rho must lie in 0..{q - 1}")

    @classmethod
    def from_values(cls, values: Iterable[int], rho: int, t: int) -> ClassProfile:
        counts = [0] * ((1 << t) - 1)
        for v in values:
            if v == 0:
                raise ZeroValueOnSpread("profiles count nonzero values only")
            counts[v - 1] += 1
        return cls(t, rho, tuple(counts))

    @property
    def q(self) -> int:
        return 1 << self.t

    def c(self, j: int) -> int:
        return self.counts[j - 1]

    @property
    def A(self) -> int:
        return sum(self.counts)

    @property
    def delta(self) -> int:
        return sum(self.c(j) for j in range(1, cyc.half(self.t)))

    @property
    def cbar(self) -> int:
        return self.c(cyc.half(self.t))

    def values(self) -> list[int]:
        """Member values in nondecreasing order, as generators assign them."""
        return [j for j in range(1, self.q) for _ in range(self.c(j))]

    def __str__(self) -> str:
        return f"rho={self.rho},A={self.A},c={','.join(map(str, self.counts))}"


def classify_profile(p: ClassProfile, m: int) -> str | None:
    """Which of the conditions I-IV the profile meets, or None."""
    h = cyc.half(p.t)
    half = 1 << (m - 1)
    A, delta, cbar, rho = p.A, p.delta, p.cbar, p.rho

    def symmetric(skip: int | None = None) -> bool:
        return all(p.c(h + j) == p.c(j) for j in range(1, h) if j != skip)

    if rho == 0:
        if symmetric() and A == half + delta and cbar == half - delta:
            return "I"
    elif rho < h:
        if (symmetric(skip=rho) and p.c(h + rho) == p.c(rho) - 1
                and A == half + delta and cbar == half + 1 - delta):
            return "II"
    elif rho == h:
        if symmetric() and A == half + 1 + delta and cbar == half + 1 - delta:
            return "III"
    else:
        if (symmetric(skip=rho - h) and p.c(rho) == p.c(rho - h) + 1
                and A == half + 1 + delta and cbar == half - delta):
            return "IV"
    return None


def profile_condition_holds(p: ClassProfile, m: int) -> bool:
    """The root-of-unity condition evaluated on counts instead of members."""
    return partial_spread_condition(p.values(), p.rho, p.t, m)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def generate_profiles(q: int, m: int, A_min: int, A_max: int) -> list[ClassProfile]:
    """Every profile with A_min <= A <= A_max meeting one of I-IV.

    A is additionally clipped to the partial spread range 0..2^m + 1.  The
    lower half c_1..c_(h-1) is enumerated freely; the conditions fix the rest.
    Output is sorted by (A, rho, counts).
    """
    t = q.bit_length() - 1
    if q < 2 or 1 << t != q:
        raise BadParameters(f"q must be a power of two, got {q}")
    h = q // 2
    half = 1 << (m - 1)
    A_lo = max(A_min, 0)
    A_hi = min(A_max, (1 << m) + 1)
    found = []
    for rho in range(q):
        if rho == 0:
            base, cbar_of = half, lambda d: half - d
        elif rho < h:
            base, cbar_of = half, lambda d: half + 1 - d
        elif rho == h:
            base, cbar_of = half + 1, lambda d: half + 1 - d
        else:
            base, cbar_of = half + 1, lambda d: half - d
        for A in range(A_lo, A_hi + 1):
            delta = A - base
            if delta < 0 or cbar_of(delta) < 0:
                continue
            for low in _compositions(delta, h - 1):
                upper = list(low)
                if 0 < rho < h:
                    upper[rho - 1] -= 1
                elif rho > h:
                    upper[rho - h - 1] += 1
                if any(c < 0 for c in upper):
                    continue
                counts = (*low, cbar_of(delta), *upper)
                p = ClassProfile(t, rho, counts)
                assert classify_profile(p, m) is not None, p
                found.append(p)
    found.sort(key=lambda p: (p.A, p.rho, p.counts))
    return found


def realize_profile(p: ClassProfile, spread: PartialSpread) -> SpreadAssignment:
    """Assign the profile's values to the first A members, in member order."""
    if p.A > len(spread):
        raise BadParameters(f"profile needs {p.A} members, spread has {len(spread)}")
    return SpreadAssignment(spread.subset(range(p.A)), tuple(p.values()), p.rho, p.t)


def all_assignments(spread: PartialSpread, t: int) -> Iterable[SpreadAssignment]:
    """Every subset of members, every nonzero value vector, every rho."""
    q = 1 << t
    members = range(len(spread))
    for size in range(len(spread) + 1):
        for subset in itertools.combinations(members, size):
            sub = spread.subset(subset)
            for values in itertools.product(range(1, q), repeat=size):
                for rho in range(q):
                    yield SpreadAssignment(sub, values, rho, t)


def parse_profile(text: str, t: int) -> ClassProfile:
    """Accepts ``rho,A,c1,...`` or ``rho=0,A=2,c=0,2,0``."""
    text = text.strip()
    if "=" in text:
        head, _, cs = text.partition("c=")
        kv = dict(tok.split("=", 1) for tok in head.strip(", ").split(",") if tok)
        rho = int(kv["rho"])
        A = int(kv["A"]) if "A" in kv else None
        counts = [int(c) for c in cs.split(",") if c.strip()]
    else:
        nums = [int(tok) for tok in text.split(",")]
        rho, A, counts = nums[0], nums[1], nums[2:]
    p = ClassProfile(t, rho, tuple(counts))
    if A is not None and A != p.A:
        raise BadParameters(f"A={A} disagrees with the counts, which sum to {p.A}")
    return p
