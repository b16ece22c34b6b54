from functools import lru_cache

import pytest

from pbwdeg.hwmod import construct_module
from pbwdeg.pbwfilt import pbw_filtration
from pbwdeg.rootsys import LieType, build_root_system


def rs_of(name: str):
    return build_root_system(LieType.parse(name))


@lru_cache(maxsize=None)
def module_of(name: str, weight: tuple, cap: int = 5000):
    return construct_module(rs_of(name), weight, cap=cap)


@lru_cache(maxsize=None)
def filtration_of(name: str, weight: tuple):
    return pbw_filtration(module_of(name, weight))


@pytest.fixture
def rs():
    return rs_of
