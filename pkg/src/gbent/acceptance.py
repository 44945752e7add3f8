"""Exit criteria for the package, runnable from pytest and from ``gbent selftest``.

Each check returns a :class:`CriterionResult`; a criterion passes only if its
exact check holds and it finishes inside its time budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import cyclotomic as cyc
from .constructions import (
    ClassProfile,
    all_assignments,
    classify_profile,
    generate_profiles,
    partial_spread_condition,
    psap_dual_table,
    psap_trace_pair,
)
from .errors import BoundViolated
from .gbfunc import (
    GBFunc,
    distribution_pattern_holds,
    dual,
    is_gbent,
    naive_walsh_transform,
    walsh_transform,
)
from .gf2m import FieldCtx
from .rds import GraphSet, check_rds_characters, check_rds_counting, rds_character_failures, vectorial_params
from .space import TraceForm, desarguesian_spread
from .vectorial import (
    bijection_character_sum,
    digits_bijection,
    is_vectorial_gbent,
    nonzero_vectors,
    nyberg_bound,
    nyberg_gate,
    random_bijection,
    spread_bijection_vectorial,
)

DEFAULT_SEED = 20150601


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.2f}s / {self.budget:g}s)"


def _timed(number: int, name: str, budget: float, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    start = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - start
    return CriterionResult(number, name, ok and elapsed < budget, detail, elapsed, budget)


def _trace_pairs():
    for m in (2, 3):
        ctx = FieldCtx.default(m)
        for a in range(1, ctx.order):
            for b in range(1, ctx.order):
                if a != b:
                    yield ctx, a, b


def psap_soundness() -> CriterionResult:
    def body():
        total = ok = 0
        for ctx, a, b in _trace_pairs():
            f = psap_trace_pair(ctx, a, b)
            sq = walsh_transform(f).squared_moduli()
            total += 1
            ok += bool(np.all(sq == 1 << f.n)) and is_gbent(f)
        return ok == total, f"{ok}/{total} trace-pair functions with |H|^2 = 2^n everywhere"

    return _timed(1, "PS_ap soundness", 5, body)


def psap_dual() -> CriterionResult:
    def body():
        total = ok = 0
        for ctx, a, b in _trace_pairs():
            f = psap_trace_pair(ctx, a, b)
            tr = ctx.trace_table
            G = [[tr[ctx.mul(a, s)] for s in ctx.elements()], [tr[ctx.mul(b, s)] for s in ctx.elements()]]
            fstar = dual(f)
            total += 1
            ok += np.array_equal(fstar.table, psap_dual_table(ctx, G)) and dual(fstar) == f
        return ok == total, f"{ok}/{total} duals equal the swapped-quotient table and are involutive"

    return _timed(2, "PS_ap dual formula", 5, body)


def _exhaustive_m2_q4():
    spread = desarguesian_spread(FieldCtx.default(2))
    rows = []
    for assign in all_assignments(spread, 2):
        f = assign.function()
        rows.append((assign, f, is_gbent(f)))
    return rows


def partial_spread_characterization() -> CriterionResult:
    def body():
        data = _exhaustive_m2_q4()
        by_spectrum = {i for i, (_, _, g) in enumerate(data) if g}
        by_class = {i for i, (a, _, _) in enumerate(data) if classify_profile(a.profile(), 2) is not None}
        by_condition = {
            i for i, (a, _, _) in enumerate(data) if partial_spread_condition(a.values, a.rho, a.t, a.m)
        }
        same = by_spectrum == by_class == by_condition
        return same, (
            f"{len(data)} assignments; gbent={len(by_spectrum)} classified={len(by_class)} "
            f"condition={len(by_condition)}"
        )

    return _timed(3, "partial-spread characterization (m=2, q=4)", 60, body)


def boolean_specialization() -> CriterionResult:
    def body():
        ok = True
        for m in (2, 3):
            expected = {(1 << (m - 1), 0), ((1 << (m - 1)) + 1, 1)}
            accepted = set()
            for A in range(0, (1 << m) + 2):
                for rho in (0, 1):
                    if classify_profile(ClassProfile(1, rho, (A,)), m) is not None:
                        accepted.add((A, rho))
            generated = {(p.A, p.rho) for p in generate_profiles(2, m, 0, (1 << m) + 1)}
            ok &= accepted == expected == generated
        return ok, "t=1 accepts exactly (A=2^(m-1), rho=0) and (A=2^(m-1)+1, rho=1) for m=2,3"

    return _timed(4, "Boolean specialization (t=1)", 1, body)


def regularity_and_distribution() -> CriterionResult:
    def body():
        data = _exhaustive_m2_q4()
        gbent = [f for _, f, g in data if g]
        ok = 0
        for f in gbent:
            fstar = dual(f)  # raises RegularityViolation on failure
            ok += fstar.n == f.n and distribution_pattern_holds(f)
        return ok == len(gbent), f"{ok}/{len(gbent)} gbent functions regular with the b_j pattern"

    return _timed(5, "regularity and value distribution", 10, body)


def galois_fixed(weights, t: int) -> bool:
    """Rationality via Galois theory: the sum is fixed by zeta -> zeta^a for all odd a."""
    base = cyc.weighted_root_sum(weights, t)
    return all(cyc.weighted_root_sum(weights, t, power=a) == base for a in range(3, 1 << t, 2))


def rationality_symmetry(seed: int = DEFAULT_SEED) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        agree = total = rational = 0
        for t in (2, 3, 4):
            q, h = 1 << t, 1 << (t - 1)
            for i in range(1000):
                w = [rng.randint(-5, 5) for _ in range(q)]
                if i % 2:
                    for j in range(1, h):
                        w[h + j] = w[j]
                verdict = cyc.rational_symmetry_holds(w, t)
                total += 1
                rational += verdict
                agree += verdict == galois_fixed(w, t)
        return agree == total, f"{agree}/{total} agree with Galois invariance ({rational} rational)"

    return _timed(6, "rationality <=> coordinate symmetry", 1, body)


def _vectorial_cases(seed: int):
    rng = random.Random(seed)
    for n, t in ((4, 1), (8, 2)):
        m = nyberg_bound(n, t)
        spread = desarguesian_spread(FieldCtx.default(n // 2))
        for _ in range(20):
            phi = random_bijection(1 << t, m, rng)
            yield n, t, m, spread, phi


def vectorial_at_bound(seed: int = DEFAULT_SEED) -> CriterionResult:
    def body():
        built = ok = 0
        gate = True
        for n, t, m, spread, phi in _vectorial_cases(seed):
            q = 1 << t
            sums_vanish = all(bijection_character_sum(phi, c, t) == 0 for c in nonzero_vectors(q, m))
            F = spread_bijection_vectorial(spread, phi, t)
            built += 1
            ok += sums_vanish and is_vectorial_gbent(F)
        for n, t in ((4, 1), (8, 2)):
            m = nyberg_bound(n, t)
            gate &= nyberg_gate(n, t, m) and not nyberg_gate(n, t, m + 1)
            spread = desarguesian_spread(FieldCtx.default(n // 2))
            try:
                spread_bijection_vectorial(spread, digits_bijection(1 << t, m + 1), t)
                gate = False
            except BoundViolated:
                pass
        return ok == built and gate, f"{ok}/{built} vectorial at m = n/(2t); m+1 rejected: {gate}"

    return _timed(7, "vectorial construction at the bound", 120, body)


def rds_certification(seed: int = DEFAULT_SEED) -> CriterionResult:
    def body():
        graphs = ok = 0
        for n, t, m, spread, phi in _vectorial_cases(seed):
            R = GraphSet.from_vectorial(spread_bijection_vectorial(spread, phi, t))
            p = vectorial_params(n)
            graphs += 1
            ok += check_rds_counting(R, p) and check_rds_characters(R, p)
        rng = random.Random(seed + 1)
        universe = [(x, (a, b)) for x in range(16) for a in range(2) for b in range(2)]
        p = vectorial_params(4)
        agree = false_count = 0
        for _ in range(50):
            pick = rng.sample(universe, 16)
            R = GraphSet(4, 1, 2, [x for x, _ in pick], [z for _, z in pick])
            by_count, by_char = check_rds_counting(R, p), check_rds_characters(R, p)
            agree += by_count == by_char
            false_count += not by_count
        return ok == graphs and agree == 50, (
            f"{ok}/{graphs} graphs certified by both methods; "
            f"random subsets: {agree}/50 agree, {false_count} non-RDS"
        )

    return _timed(8, "relative difference set certification", 60, body)


def degenerate_negative_control() -> CriterionResult:
    def body():
        g = GBFunc.from_callable(4, 1, lambda x: (x & 1) * (x >> 1 & 1) ^ (x >> 2 & 1) * (x >> 3 & 1))
        f = GBFunc(4, 2, 2 * g.table)
        R = GraphSet.from_function(f)
        p = vectorial_params(4)
        failures = rds_character_failures(R, p)
        at_two = [fl for fl in failures if fl.c == (2,)]
        ok = is_gbent(g) and is_gbent(f) and not check_rds_counting(R, p) and bool(at_two)
        first = at_two[0] if at_two else None
        where = f"chi_(u={first.u}, c=2): |chi|^2={first.squared}, required {first.expected}" if first else "none"
        return ok, f"f = 2g gbent but graph not an RDS; failing {where}"

    return _timed(9, "degenerate gbent graph is not an RDS", 1, body)


def transform_engineering(seed: int = DEFAULT_SEED) -> CriterionResult:
    def body():
        rng = np.random.default_rng(seed)
        ok = 0
        for i in range(100):
            n = int(rng.integers(1, 9))
            t = int(rng.integers(1, 4))
            form = None
            if n % 2 == 0 and i % 3 == 0:
                form = TraceForm(FieldCtx.default(n // 2))
            f = GBFunc(n, t, rng.integers(0, 1 << t, size=1 << n), form)
            fast, naive = walsh_transform(f), naive_walsh_transform(f)
            ok += fast == naive and fast.mass() == (1 << (2 * n))
        return ok == 100, f"{ok}/100 random functions: butterfly == double sum, Parseval mass 2^(2n)"

    return _timed(10, "fast transform == naive transform", 10, body)


def run_all(seed: int = DEFAULT_SEED) -> list[CriterionResult]:
    return [
        psap_soundness(),
        psap_dual(),
        partial_spread_characterization(),
        boolean_specialization(),
        regularity_and_distribution(),
        rationality_symmetry(seed),
        vectorial_at_bound(seed),
        rds_certification(seed),
        degenerate_negative_control(),
        transform_engineering(seed),
    ]
