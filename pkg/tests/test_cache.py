import os
from fractions import Fraction

from qhecke.arithmetic import EXACT, Arithmetic
from qhecke.idempotents import clear_memo, primitive_idempotent
from qhecke.models import IdempotentKey
from qhecke.tableaux import Partition


def test_path_scheme(cache):
    key = IdempotentKey(Partition.of(2, 1), 1)
    assert cache.path(key, EXACT).endswith(os.path.join("H3", "2_1", "1.json"))
    assert cache.path(key, Arithmetic.numeric(Fraction(3, 2))).endswith(os.path.join("H3", "2_1", "1.v0-3_2.json"))


def test_store_and_load(cache):
    key = IdempotentKey(Partition.of(2, 1))
    element = primitive_idempotent(key)
    assert cache.load(key, EXACT) is None
    path = cache.store(key, EXACT, element)
    assert os.path.exists(path)
    assert cache.load(key, EXACT) == element


def test_corrupted_file_is_ignored(cache):
    key = IdempotentKey(Partition.of(2))
    path = cache.path(key, EXACT)
    os.makedirs(os.path.dirname(path))
    with open(path, "w") as f:
        f.write("{not json")
    assert cache.load(key, EXACT) is None


def test_mismatched_file_is_ignored(cache):
    key = IdempotentKey(Partition.of(2))
    path = cache.store(key, EXACT, primitive_idempotent(key))
    other = IdempotentKey(Partition.of(1, 1))
    os.makedirs(os.path.dirname(cache.path(other, EXACT)), exist_ok=True)
    os.replace(path, cache.path(other, EXACT))
    assert cache.load(other, EXACT) is None


def test_builder_writes_through(cache):
    arithmetic = Arithmetic.numeric(Fraction(5, 3))
    key = IdempotentKey(Partition.of(2, 1), 1)
    element = primitive_idempotent(key, arithmetic=arithmetic, cache=cache)
    assert os.path.exists(cache.path(key, arithmetic))
    assert cache.load(key, arithmetic) == element


def test_cold_and_warm_builds_agree(cache):
    key = IdempotentKey(Partition.of(2, 1), 0)
    clear_memo()
    cold = primitive_idempotent(key, cache=cache)
    assert os.path.exists(cache.path(key, EXACT))
    clear_memo()
    warm = primitive_idempotent(key, cache=cache)
    assert warm == cold
    assert warm is not cold
