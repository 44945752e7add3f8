import itertools
import random

import numpy as np
import pytest

from gbent import cyclotomic as cyc
from gbent.constructions import (
    ClassProfile,
    SpreadAssignment,
    classify_profile,
    dillon_full_spread,
    generate_profiles,
    orthogonal_spread_table,
    parse_profile,
    partial_spread_condition,
    partial_spread_dual_table,
    partial_spread_gbent,
    profile_condition_holds,
    psap_dual_table,
    psap_explicit,
    psap_trace_pair,
    realize_profile,
)
from gbent.errors import (
    BadParameters,
    ConditionViolated,
    HypothesisViolated,
    IncompleteSpread,
    InvalidSpread,
    ZeroValueOnSpread,
)
from gbent.gbfunc import dual, is_gbent, walsh_transform
from gbent.gf2m import FieldCtx
from gbent.space import DotForm, PartialSpread, Subspace, TraceForm, desarguesian_spread


def test_dillon_examples(spread_m2):
    f = dillon_full_spread(spread_m2, [0, 1, 2, 3, 0], 0, 2)
    assert is_gbent(f)
    assert f(0) == 0
    with pytest.raises(ConditionViolated):
        dillon_full_spread(spread_m2, [0] * 5, 0, 2)
    g = dillon_full_spread(spread_m2, [1, 1, 0, 0, 0], 0, 1)
    assert is_gbent(g)
    with pytest.raises(IncompleteSpread):
        dillon_full_spread(spread_m2.subset(range(4)), [0, 1, 2, 3], 0, 2)


def test_dillon_dual_lives_on_orthogonal_spread(spread_m3, gf8):
    k = [0, 1, 2, 3, 0, 1, 2, 3, 0]  # sum = 1 + (1 + i - 1 - i) * 2
    for form in (DotForm(6), TraceForm(gf8)):
        f = dillon_full_spread(spread_m3, k, 0, 2, form)
        assert np.array_equal(dual(f).table, orthogonal_spread_table(spread_m3, k, 0, form))


def test_psap_examples(gf4, gf8):
    tr = gf4.trace_table
    G0 = [tr[s] for s in gf4.elements()]
    G1 = [tr[gf4.mul(2, s)] for s in gf4.elements()]
    f = psap_explicit(gf4, [G0, G1])
    assert isinstance(f.form, TraceForm)
    assert is_gbent(f)
    assert f == psap_trace_pair(gf4, 1, 2)
    with pytest.raises(HypothesisViolated):
        psap_explicit(gf4, [G0, G0])
    with pytest.raises(HypothesisViolated):
        psap_explicit(gf4, [[1, 0, 1, 0], G1])
    # callables work too
    h = psap_explicit(gf8, [lambda s: gf8.trace(s), lambda s: gf8.trace(gf8.mul(3, s))])
    assert is_gbent(h)
    assert np.array_equal(dual(h).table, psap_dual_table(gf8, [lambda s: gf8.trace(s), lambda s: gf8.trace(gf8.mul(3, s))]))


def test_trace_pair_parameters(gf4, gf8):
    assert is_gbent(psap_trace_pair(gf8, 5, 6))
    for a, b in ((0, 1), (1, 0), (3, 3)):
        with pytest.raises(BadParameters):
            psap_trace_pair(gf4, a, b)


@pytest.mark.parametrize(
    "values, rho, t",
    [((1, 1), 0, 1), ((2, 2), 0, 2), ((1, 2, 2), 1, 2), ((3, 2, 2), 3, 2), ((2, 2, 2), 2, 2)],
)
def test_partial_spread_examples(spread_m2, values, rho, t):
    assign = SpreadAssignment(spread_m2.subset(range(len(values))), values, rho, t)
    f = partial_spread_gbent(assign)
    assert is_gbent(f)
    assert np.array_equal(dual(f).table, partial_spread_dual_table(assign))
    assert classify_profile(assign.profile(), 2) is not None


def test_partial_spread_errors(spread_m2):
    with pytest.raises(ZeroValueOnSpread):
        partial_spread_gbent(SpreadAssignment(spread_m2.subset([0, 1]), (0, 2), 0, 2))
    with pytest.raises(ConditionViolated):
        partial_spread_gbent(SpreadAssignment(spread_m2.subset([0, 1]), (1, 1), 0, 2))
    overlapping = PartialSpread(4, (Subspace.span(4, [0b0001, 0b0100]), Subspace.span(4, [0b0001, 0b1000])))
    with pytest.raises(InvalidSpread):
        partial_spread_gbent(SpreadAssignment(overlapping, (2, 2), 0, 2))


def test_partial_spread_dual_trace_form(spread_m3, gf8):
    # m = 3, t = 2: A = 4 members with value 2, rho = 0 (condition I)
    assign = SpreadAssignment(spread_m3.subset(range(4)), (2, 2, 2, 2), 0, 2)
    for form in (DotForm(6), TraceForm(gf8)):
        f = partial_spread_gbent(assign, form)
        assert np.array_equal(dual(f).table, partial_spread_dual_table(assign, form))


def test_classify_examples():
    assert classify_profile(ClassProfile(2, 0, (0, 2, 0)), 2) == "I"
    assert classify_profile(ClassProfile(2, 1, (1, 2, 0)), 2) == "II"
    assert classify_profile(ClassProfile(2, 2, (0, 3, 0)), 2) == "III"
    assert classify_profile(ClassProfile(2, 3, (0, 2, 1)), 2) == "IV"
    assert classify_profile(ClassProfile(2, 0, (0, 1, 0)), 2) is None
    assert classify_profile(ClassProfile(2, 3, (0, 1, 1)), 2) is None


def test_generate_profiles_examples():
    at_two = generate_profiles(4, 2, 2, 2)
    assert [(p.rho, p.counts) for p in at_two] == [(0, (0, 2, 0))]
    assert [(p.A, p.rho) for p in generate_profiles(2, 2, 0, 10)] == [(2, 0), (3, 1)]
    assert generate_profiles(4, 2, 1, 1) == []
    with pytest.raises(BadParameters):
        generate_profiles(6, 2, 0, 3)


@pytest.mark.parametrize("q, m", [(2, 2), (2, 3), (4, 2), (4, 3), (8, 2)])
def test_classification_matches_condition(q, m):
    t = q.bit_length() - 1
    generated = set(generate_profiles(q, m, 0, (1 << m) + 1))
    for A in range(0, (1 << m) + 2):
        for counts in itertools.product(range(A + 1), repeat=q - 1):
            if sum(counts) != A:
                continue
            for rho in range(q):
                p = ClassProfile(t, rho, counts)
                by_class = classify_profile(p, m) is not None
                assert by_class == profile_condition_holds(p, m), p
                assert by_class == (p in generated), p


@pytest.mark.parametrize("q, m", [(2, 2), (2, 3), (4, 2), (4, 3)])
def test_generated_profiles_are_gbent(q, m):
    spread = desarguesian_spread(FieldCtx.default(m))
    for p in generate_profiles(q, m, 0, (1 << m) + 1):
        assign = realize_profile(p, spread)
        f = partial_spread_gbent(assign)
        assert is_gbent(f), p


def test_random_assignments_match_condition(spread_m3):
    rng = random.Random(7)
    for _ in range(200):
        size = rng.randint(0, len(spread_m3))
        members = rng.sample(range(len(spread_m3)), size)
        values = tuple(rng.randint(1, 3) for _ in members)
        assign = SpreadAssignment(spread_m3.subset(members), values, rng.randint(0, 3), 2)
        f = assign.function()
        expected = partial_spread_condition(values, assign.rho, 2, 3)
        assert is_gbent(f) == expected
        assert (classify_profile(assign.profile(), 3) is not None) == expected


def test_parse_profile():
    a = parse_profile("rho=0,A=2,c=0,2,0", 2)
    b = parse_profile("0,2,0,2,0", 2)
    assert a == b == ClassProfile(2, 0, (0, 2, 0))
    assert str(a) == "rho=0,A=2,c=0,2,0"
    assert parse_profile(str(ClassProfile(3, 5, (1, 0, 0, 2, 0, 0, 1))), 3).rho == 5
    with pytest.raises(ValueError):
        parse_profile("rho=0,A=3,c=0,2,0", 2)


def test_spectrum_of_dillon_is_regular(spread_m2):
    f = dillon_full_spread(spread_m2, [0, 1, 2, 3, 0], 0, 2)
    spec = walsh_transform(f)
    assert all(cyc.as_regular_value(spec[u], 2) is not None for u in range(16))
