"""Shared fixtures for the qhecke test suite."""

from fractions import Fraction

import pytest

from qhecke.arithmetic import EXACT, Arithmetic
from qhecke.rmatrix import drinfeld_jimbo, super_symmetry
from qhecke.utils.cache import IdempotentCache


@pytest.fixture
def exact():
    return EXACT


@pytest.fixture
def numeric():
    return Arithmetic.numeric(Fraction(3, 2))


@pytest.fixture(scope="session")
def dj2():
    return drinfeld_jimbo(2)


@pytest.fixture(scope="session")
def dj3():
    return drinfeld_jimbo(3)


@pytest.fixture(scope="session")
def super11():
    return super_symmetry(1, 1)


@pytest.fixture
def cache(tmp_path):
    return IdempotentCache(str(tmp_path / "cache"))
