from __future__ import annotations

import random

import pytest

from unproj.coeff import FieldSpec
from unproj.polyring import make_ring


@pytest.fixture(autouse=True)
def verify_groebner_bases(monkeypatch):
    """Every basis built during the tests is re-checked against Buchberger's criterion."""
    monkeypatch.setenv("UNPROJ_VERIFY_GB", "1")


@pytest.fixture
def qq():
    return FieldSpec.rationals()


@pytest.fixture
def gf31():
    return FieldSpec.prime_field(31)


@pytest.fixture
def gf103():
    return FieldSpec.prime_field(103)


@pytest.fixture
def xyz_ring(qq):
    return make_ring(["x", "y", "z"], [1, 1, 1], qq)


@pytest.fixture
def rng():
    return random.Random(20240601)
