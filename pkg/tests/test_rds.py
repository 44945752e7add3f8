import random

import numpy as np
import pytest

from gbent.errors import RDSParamsError
from gbent.gbfunc import GBFunc
from gbent.rds import (
    GraphSet,
    RDSParams,
    check_rds_characters,
    check_rds_counting,
    difference_counts,
    rds_character_failures,
    rds_report,
    vectorial_params,
)
from gbent.vectorial import VecGBFunc, digits_bijection, spread_bijection_vectorial


def test_vectorial_graph_is_rds(spread_m2):
    F = spread_bijection_vectorial(spread_m2, digits_bijection(2, 2), 1)
    R = GraphSet.from_vectorial(F)
    p = vectorial_params(4)
    assert p.as_tuple() == (16, 4, 16, 4)
    assert R.is_graph()
    assert check_rds_counting(R, p)
    assert check_rds_characters(R, p)
    counts = difference_counts(R)
    assert counts[0] == 16 and counts.sum() == 256


def test_constant_map_is_not_rds():
    F = VecGBFunc((GBFunc.zero(4, 1), GBFunc.zero(4, 1)))
    R = GraphSet.from_vectorial(F)
    p = vectorial_params(4)
    assert not check_rds_counting(R, p)
    assert not check_rds_characters(R, p)
    rep = rds_report(R, p)
    assert rep["characters"] is False and rep["counting"] is False
    assert rep["character_failures"] > 0 and len(rep["failing_characters"]) <= 16


def test_params_mismatch(spread_m2):
    R = GraphSet.from_vectorial(spread_bijection_vectorial(spread_m2, digits_bijection(2, 2), 1))
    for p in (RDSParams(16, 2, 16, 8), RDSParams(8, 8, 16, 4), RDSParams(16, 4, 15, 4)):
        with pytest.raises(RDSParamsError):
            check_rds_counting(R, p)
        with pytest.raises(RDSParamsError):
            check_rds_characters(R, p)


def test_distinct_elements_required():
    with pytest.raises(ValueError):
        GraphSet(2, 1, 1, [0, 0], [[1], [1]])


def test_random_subsets_agree():
    rng = random.Random(11)
    universe = [(x, (a, b)) for x in range(16) for a in range(2) for b in range(2)]
    p = vectorial_params(4)
    for _ in range(40):
        pick = rng.sample(universe, 16)
        R = GraphSet(4, 1, 2, [x for x, _ in pick], [z for _, z in pick])
        assert check_rds_counting(R, p) == check_rds_characters(R, p)


def test_degenerate_gbent_graph():
    g = GBFunc.from_callable(4, 1, lambda x: (x & 1) & (x >> 1 & 1) ^ (x >> 2 & 1) & (x >> 3 & 1))
    f = GBFunc(4, 2, 2 * g.table)
    R = GraphSet.from_function(f)
    p = vectorial_params(4)
    assert not check_rds_counting(R, p)
    fails = rds_character_failures(R, p)
    assert any(fl.c == (2,) and fl.u == 0 and fl.squared == 256 for fl in fails)
    # Boolean g itself gives a (16, 2, 16, 8)-RDS in V_4 x Z_2
    Rg = GraphSet.from_function(g)
    pg = RDSParams(16, 2, 16, 8)
    assert check_rds_counting(Rg, pg) and check_rds_characters(Rg, pg)


def test_group_encoding():
    R = GraphSet(2, 2, 2, np.arange(4), [[0, 1], [1, 0], [3, 3], [2, 0]])
    assert R.group_order == 64 and R.subgroup_order == 16
    assert R.elements()[2] == (2, (3, 3))
