"""Arithmetic in GF(2^m) on bit-packed polynomial-basis integers.

An element is stored as a Python int whose bit ``i`` is the coefficient of
``X^i``.  :class:`FieldCtx` carries the degree and the reduction polynomial and
implements the operations; :class:`FieldElem` is a thin operator-overloading
wrapper for code that prefers ``a * b`` over ``ctx.mul(a, b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

MAX_DEGREE = 16


def _deg(p: int) -> int:
    return p.bit_length() - 1


def _polymod(a: int, m: int) -> int:
    dm = _deg(m)
    while a and _deg(a) >= dm:
        a ^= m << (_deg(a) - dm)
    return a


def clmul(a: int, b: int) -> int:
    """Carryless (GF(2)[X]) product of two bit-packed polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2."""
    d = _deg(p)
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if _polymod(p, q) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(m: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree ``m``."""
    for p in range(1 << m, 1 << (m + 1)):
        if is_irreducible(p):
            return p
    raise AssertionError("unreachable: irreducibles exist in every degree")


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class FieldCtx:
    """GF(2^m) defined by an irreducible ``modulus`` of degree ``m``."""

    m: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.m <= MAX_DEGREE:
            raise FieldError(f"extension degree must be in 1..{MAX_DEGREE}, got {self.m}")
        if _deg(self.modulus) != self.m:
            raise FieldError(f"modulus {self.modulus:#x} does not have degree {self.m}")
        if not is_irreducible(self.modulus):
            raise FieldError(f"modulus {self.modulus:#x} is reducible over F_2")

    @classmethod
    def default(cls, m: int) -> FieldCtx:
        return cls(m, smallest_irreducible(m))

    @property
    def order(self) -> int:
        return 1 << self.m

    def elements(self) -> range:
        return range(self.order)

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise FieldError(f"{a:#x} is not an element of GF(2^{self.m})")
        return a

    def add(self, a: int, b: int) -> int:
        return self.check(a) ^ self.check(b)

    def mul(self, a: int, b: int) -> int:
        return _polymod(clmul(self.check(a), self.check(b)), self.modulus)

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        r, base = 1, self.check(a)
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        """Multiplicative inverse, with ``inv(0) == 0`` by convention."""
        if self.check(a) == 0:
            return 0
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        """``a / b`` with ``1/0 = 0``, so ``a / 0 == 0``."""
        return self.mul(a, self.inv(b))

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(m-1)); always 0 or 1."""
        acc, x = 0, self.check(a)
        for _ in range(self.m):
            acc ^= x
            x = self.mul(x, x)
        if acc not in (0, 1):
            raise AssertionError(f"trace left F_2: {acc:#x}")
        return acc

    @cached_property
    def trace_table(self) -> tuple[int, ...]:
        return tuple(self.trace(a) for a in self.elements())

    @cached_property
    def inv_table(self) -> tuple[int, ...]:
        return tuple(self.inv(a) for a in self.elements())

    def elem(self, a: int) -> FieldElem:
        return FieldElem(self, self.check(a))

    def to_json(self) -> dict:
        return {"m": self.m, "modulus": format(self.modulus, "x")}

    @classmethod
    def from_json(cls, d: dict) -> FieldCtx:
        return cls(int(d["m"]), int(d["modulus"], 16))


@dataclass(frozen=True)
class FieldElem:
    ctx: FieldCtx
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise FieldError("operands belong to different fields")
            return other.value
        return self.ctx.check(other)

    def __add__(self, other) -> FieldElem:
        return FieldElem(self.ctx, self.value ^ self._other(other))

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.div(self.value, self._other(other)))

    def __pow__(self, e: int) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.inv(self.value))

    def trace(self) -> int:
        return self.ctx.trace(self.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElem({self.value:#x}, m={self.ctx.m})"

    def __str__(self) -> str:
        return format(self.value, "x")
