from math import comb

import pytest

from qhecke.exceptions import CapExceeded, LengthExceedsRank, ParseError, SizeMismatch
from qhecke.tableaux import (
    Partition,
    ZPartition,
    as_zpartition,
    content,
    gl_dimension,
    lr_coefficient,
    partitions_of,
    standard_tableaux,
)


def test_partition_validation():
    assert Partition((2, 1, 0)).parts == (2, 1)
    with pytest.raises(ParseError):
        Partition((1, 2))
    with pytest.raises(ParseError):
        Partition((1, -1))


def test_partitions_in_reverse_lexicographic_order():
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in partitions_of(4, max_length=2)] == [(4,), (3, 1), (2, 2)]
    assert list(partitions_of(0)) == [Partition(())]


@pytest.mark.parametrize("parts, count", [((1,), 1), ((2, 1), 2), ((2, 2), 2), ((3, 1), 3), ((3, 2), 5), ((2, 1, 1), 3)])
def test_tableau_counts_match_hook_lengths(parts, count):
    shape = Partition(parts)
    assert shape.count_standard_tableaux() == count
    assert len(standard_tableaux(shape)) == count


def test_first_tableau_is_row_reading():
    tableaux = standard_tableaux(Partition.of(2, 1))
    assert tableaux[0].rows == ((1, 2), (3,))
    assert tableaux[1].rows == ((1, 3), (2,))
    assert [content(tableaux[0], m) for m in (1, 2, 3)] == [0, 1, -1]
    assert [content(tableaux[1], m) for m in (1, 2, 3)] == [0, -1, 1]


def test_tableau_cap():
    with pytest.raises(CapExceeded):
        standard_tableaux(Partition.of(3, 2), cap=4)


def test_conjugate():
    assert Partition.of(3, 1).conjugate() == Partition.of(2, 1, 1)


@pytest.mark.parametrize(
    "lam, mu, gamma, expected",
    [
        ((1,), (1,), (2,), 1),
        ((1,), (1,), (1, 1), 1),
        ((2, 1), (2, 1), (3, 2, 1), 2),
        ((2, 1), (1,), (2, 2), 1),
        ((2, 1), (1,), (3, 1), 1),
        ((2,), (2,), (2, 2), 1),
        ((2,), (1, 1), (2, 2), 0),
    ],
)
def test_lr_coefficients(lam, mu, gamma, expected):
    assert lr_coefficient(Partition(lam), Partition(mu), Partition(gamma)) == expected


def test_lr_size_mismatch():
    with pytest.raises(SizeMismatch):
        lr_coefficient(Partition.of(1), Partition.of(1), Partition.of(3))


def test_gl_dimension():
    assert gl_dimension(Partition.of(2, 1), 3) == 8
    assert gl_dimension(Partition.of(1, 1), 2) == 1
    assert gl_dimension(Partition.of(2), 2) == 3
    assert gl_dimension(Partition.of(1, 1, 1), 2) == 0


def test_zpartitions():
    shape = ZPartition((2, 0, -1))
    partition, power = shape.normalized()
    assert partition == Partition.of(3, 1)
    assert power == -1
    assert shape.dual() == ZPartition((1, 0, -2))
    assert shape.shifted(1) == ZPartition((3, 1, 0))
    assert as_zpartition(Partition.of(2), 3) == ZPartition((2, 0, 0))
    with pytest.raises(LengthExceedsRank):
        as_zpartition(Partition.of(1, 1, 1), 2)
    with pytest.raises(ParseError):
        ZPartition((0, 1))


def _products(n):
    for a in range(1, n):
        for lam in partitions_of(a):
            for mu in partitions_of(n - a):
                yield lam, mu


@pytest.mark.parametrize("n", [2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_lr_symmetric_and_conjugation_invariant(n):
    shapes = list(partitions_of(n))
    for lam, mu in _products(n):
        for gamma in shapes:
            c = lr_coefficient(lam, mu, gamma)
            assert c == lr_coefficient(mu, lam, gamma)
            assert c == lr_coefficient(lam.conjugate(), mu.conjugate(), gamma.conjugate())


@pytest.mark.parametrize("n", [2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_lr_expands_schur_products(n):
    shapes = list(partitions_of(n))
    for lam, mu in _products(n):
        coefficients = {gamma: lr_coefficient(lam, mu, gamma) for gamma in shapes}
        tableaux = sum(c * gamma.count_standard_tableaux() for gamma, c in coefficients.items())
        assert tableaux == comb(n, lam.size) * lam.count_standard_tableaux() * mu.count_standard_tableaux()
        for m in (2, 3):
            dimension = sum(c * gl_dimension(gamma, m) for gamma, c in coefficients.items())
            assert dimension == gl_dimension(lam, m) * gl_dimension(mu, m)
