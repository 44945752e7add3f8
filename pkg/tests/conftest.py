import pytest

from gbent.gf2m import FieldCtx
from gbent.space import desarguesian_spread


@pytest.fixture(scope="session")
def gf4():
    return FieldCtx.default(2)


@pytest.fixture(scope="session")
def gf8():
    return FieldCtx.default(3)


@pytest.fixture(scope="session")
def spread_m2(gf4):
    return desarguesian_spread(gf4)


@pytest.fixture(scope="session")
def spread_m3(gf8):
    return desarguesian_spread(gf8)
