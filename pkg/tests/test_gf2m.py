import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbent.gf2m import FieldCtx, FieldElem, FieldError, is_irreducible, smallest_irreducible


def poly_mul_mod(a, b, modulus):
    """Schoolbook oracle on coefficient lists."""
    pa = [(a >> i) & 1 for i in range(a.bit_length())]
    pb = [(b >> i) & 1 for i in range(b.bit_length())]
    prod = [0] * (len(pa) + len(pb))
    for i, x in enumerate(pa):
        for j, y in enumerate(pb):
            prod[i + j] ^= x & y
    pm = [(modulus >> i) & 1 for i in range(modulus.bit_length())]
    d = len(pm) - 1
    for k in range(len(prod) - 1, d - 1, -1):
        if prod[k]:
            for i, c in enumerate(pm):
                prod[k - d + i] ^= c
    return sum(c << i for i, c in enumerate(prod[:d]))


def test_default_moduli():
    assert smallest_irreducible(1) == 0b10
    assert smallest_irreducible(2) == 0b111
    assert smallest_irreducible(3) == 0b1011
    assert smallest_irreducible(4) == 0b10011
    assert smallest_irreducible(8) == 0x11B


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        FieldCtx(2, 0b101)  # X^2 + 1 = (X + 1)^2
    with pytest.raises(FieldError):
        FieldCtx(17, smallest_irreducible(2))


def test_irreducibility_counts():
    # number of irreducible polynomials of degree m over F_2
    assert [sum(is_irreducible(p) for p in range(1 << m, 1 << (m + 1))) for m in range(1, 7)] == [2, 1, 2, 3, 6, 9]


def test_mul_examples(gf4):
    alpha = 0b10
    assert gf4.mul(alpha, alpha) == poly_mul_mod(alpha, alpha, 0b111) == 0b11
    for a in gf4.elements():
        assert gf4.mul(a, 1) == a
        assert gf4.mul(a, 0) == 0


def test_mul_degree_mismatch(gf4):
    with pytest.raises(FieldError):
        gf4.mul(4, 1)


def test_inverse_examples(gf4):
    assert gf4.inv(0) == 0
    assert gf4.inv(1) == 1
    oracle = next(b for b in gf4.elements() if poly_mul_mod(0b10, b, 0b111) == 1)
    assert gf4.inv(0b10) == oracle == 0b11


def test_trace_examples(gf4):
    assert gf4.trace(0) == 0
    assert gf4.trace(1) == 0
    assert gf4.trace(0b10) == 1


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_field_axioms_exhaustive(m):
    ctx = FieldCtx.default(m)
    els = list(ctx.elements())
    for a, b in itertools.product(els, repeat=2):
        assert ctx.mul(a, b) == poly_mul_mod(a, b, ctx.modulus) == ctx.mul(b, a)
        assert ctx.trace(a ^ b) == ctx.trace(a) ^ ctx.trace(b)
        for c in els:
            assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
            assert ctx.mul(a, b ^ c) == ctx.mul(a, b) ^ ctx.mul(a, c)
    for a in els[1:]:
        inverses = [b for b in els if ctx.mul(a, b) == 1]
        assert inverses == [ctx.inv(a)]
    assert sum(ctx.trace(a) for a in els) == ctx.order // 2
    assert all(ctx.trace(ctx.square(a)) == ctx.trace(a) for a in els)


@settings(max_examples=200, deadline=None)
@given(st.integers(5, 16), st.data())
def test_field_axioms_random(m, data):
    ctx = FieldCtx.default(m)
    a, b, c = (data.draw(st.integers(0, ctx.order - 1)) for _ in range(3))
    assert ctx.mul(a, b) == poly_mul_mod(a, b, ctx.modulus)
    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
    assert ctx.mul(a, b ^ c) == ctx.mul(a, b) ^ ctx.mul(a, c)
    if a:
        assert ctx.mul(a, ctx.inv(a)) == 1
    assert ctx.trace(a ^ b) == ctx.trace(a) ^ ctx.trace(b)
    assert ctx.trace(ctx.square(a)) == ctx.trace(a)


@pytest.mark.parametrize("m", [5, 6, 7, 8])
def test_trace_balanced(m):
    ctx = FieldCtx.default(m)
    assert sum(ctx.trace_table) == ctx.order // 2


def test_field_elem_wrapper(gf4):
    a = gf4.elem(0b10)
    assert int(a * a) == 0b11
    assert int(a / a) == 1
    assert int(a / gf4.elem(0)) == 0
    assert (a + a).value == 0
    assert a.trace() == 1
    with pytest.raises(FieldError):
        a * FieldElem(FieldCtx.default(3), 1)


def test_json_roundtrip(gf8):
    d = gf8.to_json()
    assert d == {"m": 3, "modulus": "b"}
    assert FieldCtx.from_json(d) == gf8
