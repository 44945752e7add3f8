"""The ambient space V_n = F_2^n, its subspaces, inner products and spreads.

Points are ints (bit i = coordinate i).  In bivariate mode a point of V_{2m}
encodes (x, y) in GF(2^m) x GF(2^m) as ``x | (y << m)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .gf2m import FieldCtx

MAX_N = 24


class SpaceError(ValueError):
    pass


def _check_n(n: int) -> int:
    if not 1 <= n <= MAX_N:
        raise SpaceError(f"n must be in 1..{MAX_N}, got {n}")
    return n


def parity(x: int) -> int:
    return x.bit_count() & 1


def dot(a: int, b: int) -> int:
    return parity(a & b)


# -- GF(2) linear algebra on int rows ----------------------------------------


def echelon(vectors: Iterable[int]) -> list[int]:
    """Reduced row echelon basis of span(vectors), pivots = leading bits."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            if v ^ b < v:
                v ^= b
        if v:
            # clear v's leading bit from the existing rows
            lead = 1 << (v.bit_length() - 1)
            basis = [b ^ v if b & lead else b for b in basis]
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def rank(vectors: Iterable[int]) -> int:
    return len(echelon(vectors))


def nullspace(rows: Sequence[int], n: int) -> list[int]:
    """Basis of {v in F_2^n : dot(v, r) = 0 for every r in rows}."""
    basis = echelon(rows)
    pivots = {b.bit_length() - 1: b for b in basis}
    free = [i for i in range(n) if i not in pivots]
    out = []
    for f in free:
        v = 1 << f
        for p, row in pivots.items():
            # row has pivot p and possibly bit f among free positions
            if row >> f & 1:
                v |= 1 << p
        out.append(v)
    return out


def span_elements(basis: Sequence[int]) -> list[int]:
    pts = [0]
    for b in basis:
        pts += [p ^ b for p in pts]
    return pts


# -- inner products ------------------------------------------------------------


@dataclass(frozen=True)
class DotForm:
    """Standard dot product on F_2^n."""

    n: int
    name = "dot"

    def __call__(self, a: int, b: int) -> int:
        return dot(a, b)

    def image(self, u: int) -> int:
        return u


@dataclass(frozen=True)
class TraceForm:
    """<(x1,y1),(x2,y2)> = Tr(x1*x2 + y1*y2) on GF(2^m)^2 = V_{2m}."""

    ctx: FieldCtx
    name = "trace"

    @property
    def n(self) -> int:
        return 2 * self.ctx.m

    def split(self, p: int) -> tuple[int, int]:
        mask = self.ctx.order - 1
        return p & mask, p >> self.ctx.m

    def join(self, x: int, y: int) -> int:
        return x | (y << self.ctx.m)

    def __call__(self, a: int, b: int) -> int:
        if a >> self.n or b >> self.n:
            raise SpaceError(f"points must lie in V_{self.n}")
        x1, y1 = self.split(a)
        x2, y2 = self.split(b)
        c = self.ctx
        return c.trace(c.mul(x1, x2) ^ c.mul(y1, y2))

    @cached_property
    def _gram_columns(self) -> tuple[int, ...]:
        # column i = the vector w_i with <e_i, x> = dot(w_i, x)
        n = self.n
        return tuple(
            sum(self(1 << i, 1 << j) << j for j in range(n)) for i in range(n)
        )

    def image(self, u: int) -> int:
        w = 0
        i = 0
        while u:
            if u & 1:
                w ^= self._gram_columns[i]
            u >>= 1
            i += 1
        return w


Form = DotForm | TraceForm


def inner_product(a: int, b: int, form: Form | None = None) -> int:
    if form is None:
        return dot(a, b)
    return form(a, b)


def image_table(form: Form) -> np.ndarray:
    """w[u] such that <u, x> = dot(w[u], x) for all x."""
    n = form.n
    if isinstance(form, DotForm):
        return np.arange(1 << n, dtype=np.int64)
    cols = np.array(form._gram_columns, dtype=np.int64)
    u = np.arange(1 << n, dtype=np.int64)
    w = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        w ^= np.where((u >> i) & 1, cols[i], 0)
    return w


def form_to_str(form: Form) -> str:
    return form.name


# -- subspaces -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Subspace:
    n: int
    basis: tuple[int, ...]
    membership: int = field(repr=False)

    @classmethod
    def span(cls, n: int, vectors: Iterable[int]) -> Subspace:
        _check_n(n)
        vectors = list(vectors)
        for v in vectors:
            if v >> n or v < 0:
                raise SpaceError(f"point {v:#x} lies outside V_{n}")
        basis = tuple(echelon(vectors))
        mask = 0
        for p in span_elements(basis):
            mask |= 1 << p
        return cls(n, basis, mask)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def points(self) -> list[int]:
        return span_elements(self.basis)

    def __contains__(self, p: int) -> bool:
        return bool(self.membership >> p & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.n == other.n and self.membership == other.membership

    def __hash__(self) -> int:
        return hash((self.n, self.membership))

    def __repr__(self) -> str:
        return f"Subspace(n={self.n}, basis=[{', '.join(format(b, 'x') for b in self.basis)}])"


def orthogonal_complement(U: Subspace, form: Form | None = None) -> Subspace:
    """U^perp with respect to ``form`` (dot product when None)."""
    form = form or DotForm(U.n)
    if form.n != U.n:
        raise SpaceError(f"form lives on V_{form.n}, subspace on V_{U.n}")
    rows = [form.image(b) for b in U.basis]
    return Subspace.span(U.n, nullspace(rows, U.n))


@dataclass(frozen=True)
class PartialSpread:
    """Ordered collection of n/2-dimensional subspaces of V_n.

    Validity is not enforced here; :func:`verify_partial_spread` is the gate.
    """

    n: int
    members: tuple[Subspace, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    @property
    def is_complete(self) -> bool:
        return self.n % 2 == 0 and len(self.members) == (1 << self.n // 2) + 1

    def subset(self, indices: Iterable[int]) -> PartialSpread:
        return PartialSpread(self.n, tuple(self.members[i] for i in indices))

    def orthogonal(self, form: Form | None = None) -> PartialSpread:
        return PartialSpread(self.n, tuple(orthogonal_complement(U, form) for U in self.members))


def verify_partial_spread(s: PartialSpread) -> bool:
    if s.n % 2:
        return False
    half = s.n // 2
    if len(s.members) > (1 << half) + 1:
        return False
    seen = 1  # the zero point
    for U in s.members:
        if U.n != s.n or U.dim != half:
            return False
        if (U.membership & seen) != 1:
            return False
        seen |= U.membership
    return True


def desarguesian_spread(ctx: FieldCtx) -> PartialSpread:
    """{(x, s*x)} for each s in GF(2^m), followed by {(0, y)}."""
    m = ctx.m
    n = 2 * m
    members = []
    for s in ctx.elements():
        members.append(Subspace.span(n, [(1 << i) | (ctx.mul(s, 1 << i) << m) for i in range(m)]))
    members.append(Subspace.span(n, [1 << (m + i) for i in range(m)]))
    return PartialSpread(n, tuple(members))


def member_index_table(s: PartialSpread) -> np.ndarray:
    """For each point: index of the member containing it, -1 if none, -2 at 0."""
    idx = np.full(1 << s.n, -1, dtype=np.int64)
    for i, U in enumerate(s.members):
        pts = np.array(U.points()[1:], dtype=np.int64)
        if pts.size and np.any(idx[pts] != -1):
            raise SpaceError("spread members overlap outside 0")
        idx[pts] = i
    idx[0] = -2
    return idx


# -- spread file format ----------------------------------------------------------


def dump_spread(s: PartialSpread) -> str:
    lines = [f"n={s.n}"]
    for U in s.members:
        lines.append(",".join(format(b, "x") for b in U.basis))
    return "\n".join(lines) + "\n"


def parse_spread(text: str) -> PartialSpread:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise SpaceError("spread file must start with a 'n=<n>' header")
    n = int(lines[0][2:])
    members = []
    for ln in lines[1:]:
        members.append(Subspace.span(n, [int(tok, 16) for tok in ln.split(",")]))
    return PartialSpread(n, tuple(members))
