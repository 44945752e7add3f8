"""Vectorial gbent functions V_n -> Z_q^m and the spread-bijection construction."""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import cyclotomic as cyc
from .errors import (
    BoundViolated,
    FormMismatch,
    IncompleteSpread,
    InvalidSpread,
    NotABijection,
    OddDimension,
    ZeroCoefficientVector,
)
from .gbfunc import GBFunc, form_from_header, form_header, is_gbent, parse_header
from .space import Form, PartialSpread, member_index_table, verify_partial_spread


def default_workers() -> int:
    return max(1, int(os.environ.get("GBENT_WORKERS", "1")))


@dataclass(frozen=True)
class VecGBFunc:
    components: tuple[GBFunc, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("a vectorial function needs m >= 1 components")
        f0 = comps[0]
        for f in comps[1:]:
            if (f.n, f.t) != (f0.n, f0.t):
                raise ValueError("components must share n and t")
            if f.form != f0.form:
                raise FormMismatch("components must share the inner-product mode")
        object.__setattr__(self, "components", comps)

    @property
    def n(self) -> int:
        return self.components[0].n

    @property
    def t(self) -> int:
        return self.components[0].t

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def q(self) -> int:
        return 1 << self.t

    @property
    def form(self) -> Form:
        return self.components[0].form

    def values(self) -> np.ndarray:
        """Array of shape (2^n, m): row x is F(x)."""
        return np.stack([f.table for f in self.components], axis=1)


def component(F: VecGBFunc, c: Sequence[int]) -> GBFunc:
    """F_c = c_1 f_1 + ... + c_m f_m mod q."""
    c = [int(ci) % F.q for ci in c]
    if len(c) != F.m:
        raise ValueError(f"coefficient vector must have length {F.m}")
    if not any(c):
        raise ZeroCoefficientVector("component functions need c != 0")
    table = sum(ci * f.table for ci, f in zip(c, F.components)) % F.q
    return F.components[0].with_table(table)


def nonzero_vectors(q: int, m: int) -> Iterable[tuple[int, ...]]:
    for c in itertools.product(range(q), repeat=m):
        if any(c):
            yield c


def is_vectorial_gbent(F: VecGBFunc, workers: int | None = None) -> bool:
    """Every one of the q^m - 1 nonzero components is gbent."""
    cs = list(nonzero_vectors(F.q, F.m))
    workers = workers or default_workers()
    if workers == 1:
        return all(is_gbent(component(F, c)) for c in cs)
    with ThreadPoolExecutor(workers) as pool:
        return all(pool.map(lambda c: is_gbent(component(F, c)), cs))


def nyberg_bound(n: int, t: int) -> int:
    if n % 2:
        raise OddDimension(f"the dimension bound needs even n, got {n}")
    return n // (2 * t)


def nyberg_gate(n: int, t: int, m: int) -> bool:
    """m <= n / (2t), the largest dimension a vectorial gbent map can have."""
    if n % 2:
        raise OddDimension(f"the dimension bound needs even n, got {n}")
    return 2 * t * m <= n


# -- bijections ------------------------------------------------------------------


Bijection = Mapping[int, tuple[int, ...]]


def check_bijection(phi: Bijection, size: int, q: int, m: int) -> None:
    if sorted(phi) != list(range(1, size + 1)):
        raise NotABijection(f"domain must be exactly 1..{size}")
    images = {tuple(int(a) % q for a in v) for v in phi.values()}
    if any(len(v) != m for v in phi.values()):
        raise NotABijection(f"every image must have {m} coordinates")
    if len(images) != size or size != q**m:
        raise NotABijection(f"phi does not hit all {q**m} points of Z_{q}^{m} exactly once")


def digits_bijection(q: int, m: int) -> dict[int, tuple[int, ...]]:
    """s -> base-q digits of s-1, least significant first."""
    out = {}
    for s in range(1, q**m + 1):
        v, digits = s - 1, []
        for _ in range(m):
            v, d = divmod(v, q)
            digits.append(d)
        out[s] = tuple(digits)
    return out


def random_bijection(q: int, m: int, rng: random.Random) -> dict[int, tuple[int, ...]]:
    targets = list(itertools.product(range(q), repeat=m))
    rng.shuffle(targets)
    return {s + 1: v for s, v in enumerate(targets)}


def bijection_character_sum(phi: Bijection, c: Sequence[int], t: int) -> cyc.CycInt:
    """sum_s zeta^(c . phi(s)); zero for every c != 0 when phi is bijective."""
    return cyc.root_sum(t, (sum(ci * ai for ci, ai in zip(c, v)) for v in phi.values()))


def spread_bijection_vectorial(
    spread: PartialSpread, phi: Bijection, t: int, form: Form | None = None
) -> VecGBFunc:
    """f_j = phi_j(s) on U_s minus 0 for s >= 1 and f_j = 0 on U_0.

    U_0 is the first member of ``spread``; phi maps 1..2^(n/2) onto Z_q^m
    with m = n / (2t).
    """
    n = spread.n
    m = len(next(iter(phi.values()))) if phi else 0
    if not nyberg_gate(n, t, m):
        raise BoundViolated(f"m={m} exceeds n/(2t) = {nyberg_bound(n, t)}")
    if 2 * t * m != n:
        raise NotABijection(f"a bijection onto Z_{1 << t}^{m} needs m = n/(2t) = {n / (2 * t):g}")
    if not verify_partial_spread(spread):
        raise InvalidSpread("members are not pairwise trivially intersecting n/2-spaces")
    if not spread.is_complete:
        raise IncompleteSpread(f"need {(1 << n // 2) + 1} members, got {len(spread)}")
    q = 1 << t
    check_bijection(phi, 1 << (n // 2), q, m)
    idx = member_index_table(spread)
    # row s of lut: value of F on U_s minus 0; U_0 and the origin map to 0
    lut = np.zeros((len(spread), m), dtype=np.int64)
    for s, v in phi.items():
        lut[s] = [a % q for a in v]
    rows = np.where(idx >= 0, idx, 0)
    vals = lut[rows]
    vals[0] = 0
    return VecGBFunc(tuple(GBFunc(n, t, vals[:, j], form) for j in range(m)))


# -- file formats ------------------------------------------------------------------


def dump_vectorial(F: VecGBFunc) -> str:
    lines = [f"n={F.n} t={F.t} m={F.m} {form_header(F.form)}"]
    for f in F.components:
        lines += [str(int(v)) for v in f.table]
    return "\n".join(lines) + "\n"


def parse_vectorial(text: str) -> VecGBFunc:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    fields = parse_header(lines[0])
    n, t, m = int(fields["n"]), int(fields["t"]), int(fields["m"])
    form = form_from_header(fields, n)
    size = 1 << n
    body = [int(v) for v in lines[1:]]
    if len(body) != m * size:
        raise ValueError(f"expected {m * size} rows for {m} stacked tables, found {len(body)}")
    return VecGBFunc(tuple(GBFunc(n, t, body[j * size : (j + 1) * size], form) for j in range(m)))


def dump_bijection(phi: Bijection) -> str:
    return "".join(f"{s} -> ({','.join(map(str, phi[s]))})\n" for s in sorted(phi))


def parse_bijection(text: str) -> dict[int, tuple[int, ...]]:
    out = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        left, _, right = ln.partition("->")
        s = int(left)
        if s in out:
            raise NotABijection(f"{s} listed twice")
        out[s] = tuple(int(a) for a in right.strip().strip("()").split(","))
    return out
