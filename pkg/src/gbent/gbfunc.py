"""Generalized Boolean functions V_n -> Z_{2^t} and their exact Walsh spectra."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import cyclotomic as cyc
from .cyclotomic import CycInt
from .errors import FormMismatch, NotGbent, OddDimension, RegularityViolation
from .gf2m import FieldCtx
from .space import MAX_N, DotForm, Form, TraceForm, image_table

STREAMING_THRESHOLD = 16


@dataclass(frozen=True, eq=False)
class GBFunc:
    """Value table of f: V_n -> Z_q, q = 2^t, tagged with its inner product."""

    n: int
    t: int
    table: np.ndarray = field(repr=False)
    form: Form = None

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must be in 1..{MAX_N}, got {self.n}")
        if not 1 <= self.t <= cyc.MAX_T:
            raise ValueError(f"t must be in 1..{cyc.MAX_T}, got {self.t}")
        table = np.array(self.table, dtype=np.int64)
        if table.shape != (1 << self.n,):
            raise ValueError(f"table must have {1 << self.n} entries, got {table.shape}")
        if table.size and (table.min() < 0 or table.max() >= self.q):
            raise ValueError(f"table entries must lie in 0..{self.q - 1}")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        form = self.form if self.form is not None else DotForm(self.n)
        if form.n != self.n:
            raise FormMismatch(f"form lives on V_{form.n}, function on V_{self.n}")
        object.__setattr__(self, "form", form)

    @classmethod
    def from_callable(cls, n: int, t: int, fn: Callable[[int], int], form: Form | None = None) -> GBFunc:
        q = 1 << t
        return cls(n, t, np.array([fn(x) % q for x in range(1 << n)], dtype=np.int64), form)

    @classmethod
    def zero(cls, n: int, t: int, form: Form | None = None) -> GBFunc:
        return cls(n, t, np.zeros(1 << n, dtype=np.int64), form)

    @property
    def q(self) -> int:
        return 1 << self.t

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GBFunc)
            and (self.n, self.t, self.form) == (other.n, other.t, other.form)
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.n, self.t, self.table.tobytes()))

    def with_table(self, table) -> GBFunc:
        return GBFunc(self.n, self.t, table, self.form)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Exact spectrum; ``values[u]`` holds the power-basis coordinates of H_f(u)."""

    n: int
    t: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.values.setflags(write=False)

    def __getitem__(self, u: int) -> CycInt:
        return CycInt(self.t, self.values[u])

    def __len__(self) -> int:
        return self.values.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Spectrum)
            and (self.n, self.t) == (other.n, other.t)
            and np.array_equal(self.values, other.values)
        )

    def squared_moduli(self) -> np.ndarray:
        """|H(u)|^2 per u; raises NotRational if any product has an irrational part."""
        sq = cyc.array_squared_modulus(self.values)
        if np.any(sq[:, 1:]):
            u = int(np.flatnonzero(np.any(sq[:, 1:], axis=1))[0])
            raise cyc.NotRational(f"H({u}) * conj(H({u})) is not rational")
        return sq[:, 0]

    def mass(self) -> CycInt:
        """sum_u H(u) * conj(H(u)), kept in CycInt form."""
        sq = cyc.array_squared_modulus(self.values)
        return CycInt(self.t, sq.sum(axis=0))


def fwht(a: np.ndarray) -> np.ndarray:
    """Unnormalised Walsh-Hadamard butterfly along axis 0 (integer, exact)."""
    a = np.array(a, dtype=np.int64, copy=True)
    size = a.shape[0]
    rest = a.shape[1:]
    h = 1
    while h < size:
        blocks = a.reshape(size // (2 * h), 2, h, *rest)
        lo = blocks[:, 0]
        hi = blocks[:, 1]
        a = np.stack((lo + hi, lo - hi), axis=1).reshape(size, *rest)
        h *= 2
    return a


def _check_form(f: GBFunc, form: Form | None) -> Form:
    if form is not None and form != f.form:
        raise FormMismatch(f"function carries form {f.form.name!r}, asked for {form.name!r}")
    return f.form


def level_set_transforms(f: GBFunc) -> np.ndarray:
    """W[w, k] = sum_x [f(x) = k] (-1)^(w.x) for the dot product."""
    ind = np.zeros((1 << f.n, f.q), dtype=np.int64)
    ind[np.arange(1 << f.n), f.table] = 1
    return fwht(ind)


def walsh_transform(f: GBFunc, form: Form | None = None) -> Spectrum:
    """H_f(u) = sum_x zeta^f(x) (-1)^<u,x>, via one butterfly per level set."""
    form = _check_form(f, form)
    W = level_set_transforms(f)
    h = cyc.half(f.t)
    vals = np.zeros((1 << f.n, h), dtype=np.int64)
    for k in range(f.q):
        if k < h:
            vals[:, k] += W[:, k]
        else:
            vals[:, k - h] -= W[:, k]
    if not isinstance(form, DotForm):
        vals = vals[image_table(form)]
    return Spectrum(f.n, f.t, vals)


@lru_cache(maxsize=8)
def sign_matrix(form: Form) -> np.ndarray:
    """S[u, x] = (-1)^<u,x>, evaluated entry by entry from the form itself."""
    size = 1 << form.n
    if isinstance(form, DotForm):
        u = np.arange(size, dtype=np.uint64)[:, None]
        x = np.arange(size, dtype=np.uint64)[None, :]
        bits = u & x
        par = np.zeros(bits.shape, dtype=np.uint64)
        for i in range(form.n):
            par ^= (bits >> np.uint64(i)) & np.uint64(1)
        S = 1 - 2 * par.astype(np.int64)
    else:
        S = np.array([[1 - 2 * form(u, x) for x in range(size)] for u in range(size)], dtype=np.int64)
    S.setflags(write=False)
    return S


def naive_walsh_transform(f: GBFunc, form: Form | None = None) -> Spectrum:
    """Direct O(4^n) double sum; the reference the butterfly is checked against."""
    form = _check_form(f, form)
    Z = cyc.array_from_exponents(f.table, f.t)
    return Spectrum(f.n, f.t, sign_matrix(form) @ Z)


def _is_gbent_streaming(f: GBFunc) -> bool:
    # n even: gbent over Z_{2^t} means every H(u) is +-2^(n/2) times a basis
    # vector; check one coordinate column at a time in O(2^n) memory.
    target = 1 << (f.n // 2)
    h = cyc.half(f.t)
    nonzero = np.zeros(1 << f.n, dtype=np.uint8)
    for j in range(h):
        col = np.where(f.table == j, 1, 0) - np.where(f.table == j + h, 1, 0)
        col = fwht(col)
        nz = col != 0
        if np.any(np.abs(col[nz]) != target):
            return False
        nonzero += nz
    return bool(np.all(nonzero == 1))


def is_gbent(f: GBFunc, streaming: bool | None = None) -> bool:
    """|H_f(u)|^2 == 2^n at every u, decided in exact arithmetic.

    Gbentness does not depend on the choice of nondegenerate form, so the
    function's own form is used.  For n above ``STREAMING_THRESHOLD`` (even n
    only) the spectrum is never materialised.
    """
    if streaming is None:
        streaming = f.n > STREAMING_THRESHOLD and f.n % 2 == 0
    if streaming:
        if f.n % 2:
            raise OddDimension("streaming verification needs even n")
        return _is_gbent_streaming(f)
    sq = cyc.array_squared_modulus(walsh_transform(f).values)
    return bool(np.all(sq[:, 0] == (1 << f.n)) and not np.any(sq[:, 1:]))


def regular_exponents(spec: Spectrum) -> list[int | None]:
    """j_u with H(u) = 2^(n/2) zeta^j_u, or None where H(u) is not of that form."""
    if spec.n % 2:
        raise OddDimension("regularity needs even n")
    return [cyc.as_regular_value(spec[u], spec.n // 2) for u in range(len(spec))]


def is_regular(f: GBFunc) -> bool:
    if f.n % 2:
        return False
    return all(j is not None for j in regular_exponents(walsh_transform(f)))


def dual(f: GBFunc) -> GBFunc:
    """f* with 2^(n/2) zeta^f*(u) = H_f(u), in the same inner-product mode."""
    if f.n % 2:
        raise OddDimension("the dual is only defined for even n")
    if not is_gbent(f, streaming=False):
        raise NotGbent("dual requested for a function that is not gbent")
    js = regular_exponents(walsh_transform(f))
    bad = [u for u, j in enumerate(js) if j is None]
    if bad:
        raise RegularityViolation(
            f"gbent function with non-regular Walsh value at u={bad[0]}; "
            "every gbent function over Z_(2^t) must be regular"
        )
    return f.with_table(np.array(js, dtype=np.int64))


def _inverse_sum(f: GBFunc, vals: np.ndarray) -> np.ndarray:
    # rows y: sum_u (-1)^<u,y> vals[u]
    G = fwht(vals)
    if isinstance(f.form, DotForm):
        return G
    return G[image_table(f.form)]


def inversion_identity_holds(f: GBFunc) -> bool:
    """sum_u (-1)^<u,y> H_f(u) == 2^n zeta^f(y) for all y (true for any f)."""
    lhs = _inverse_sum(f, walsh_transform(f).values)
    rhs = (1 << f.n) * cyc.array_from_exponents(f.table, f.t)
    return bool(np.array_equal(lhs, rhs))


def dual_inversion_holds(f: GBFunc, fstar: GBFunc | None = None) -> bool:
    """2^n zeta^f(y) == 2^(n/2) sum_u (-1)^<u,y> zeta^f*(u) for gbent f."""
    fstar = fstar if fstar is not None else dual(f)
    lhs = (1 << f.n) * cyc.array_from_exponents(f.table, f.t)
    rhs = (1 << (f.n // 2)) * _inverse_sum(f, cyc.array_from_exponents(fstar.table, f.t))
    return bool(np.array_equal(lhs, rhs))


def value_distribution(f: GBFunc) -> list[int]:
    """b_j = |f^-1(j)| for j in Z_q."""
    return [int(b) for b in np.bincount(f.table, minlength=f.q)]


def distribution_pattern(counts: list[int], t: int, half_n: int) -> int | None:
    """The unique k < 2^(t-1) with b_(h+k) = b_k +- 2^half_n and b_(h+j) = b_j
    for every other j, or None if the counts do not have this shape."""
    h = cyc.half(t)
    if len(counts) != 2 * h:
        raise ValueError(f"expected {2 * h} counts")
    diffs = [counts[h + j] - counts[j] for j in range(h)]
    off = [j for j, d in enumerate(diffs) if d != 0]
    if len(off) == 1 and abs(diffs[off[0]]) == 1 << half_n:
        return off[0]
    return None


def distribution_pattern_holds(f: GBFunc) -> bool:
    if f.n % 2:
        raise OddDimension("the value-distribution pattern needs even n")
    return distribution_pattern(value_distribution(f), f.t, f.n // 2) is not None


# -- table file format -----------------------------------------------------------


def form_header(form: Form) -> str:
    if isinstance(form, TraceForm):
        return f"form=trace modulus={form.ctx.modulus:x}"
    return "form=dot"


def parse_header(line: str) -> dict[str, str]:
    fields = {}
    for tok in line.split():
        if "=" not in tok:
            raise ValueError(f"malformed header token {tok!r}")
        k, v = tok.split("=", 1)
        fields[k] = v
    return fields


def form_from_header(fields: dict[str, str], n: int) -> Form:
    kind = fields.get("form", "dot")
    if kind == "dot":
        return DotForm(n)
    if kind == "trace":
        if n % 2:
            raise OddDimension("the trace form needs n = 2m")
        m = n // 2
        ctx = FieldCtx(m, int(fields["modulus"], 16)) if "modulus" in fields else FieldCtx.default(m)
        return TraceForm(ctx)
    raise ValueError(f"unknown inner-product mode {kind!r}")


def dump_table(f: GBFunc) -> str:
    head = f"n={f.n} t={f.t} {form_header(f.form)}"
    return head + "\n" + "\n".join(str(int(v)) for v in f.table) + "\n"


def parse_table(text: str) -> GBFunc:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty function file")
    fields = parse_header(lines[0])
    n, t = int(fields["n"]), int(fields["t"])
    body = lines[1:]
    if len(body) != 1 << n:
        raise ValueError(f"expected {1 << n} table rows, found {len(body)}")
    return GBFunc(n, t, np.array([int(v) for v in body], dtype=np.int64), form_from_header(fields, n))
