import random

import pytest

from qhecke.exceptions import NotClosed, NotEven, NotHecke, NotYangBaxter
from qhecke.hecke import get_algebra
from qhecke.idempotents import primitive_idempotent
from qhecke.models import IdempotentKey, RankContext
from qhecke.rmatrix import (
    HeckeSymmetry,
    categorical_trace_direct,
    categorical_trace_iterated,
    certify,
    coalgebra_degree_dimension,
    comodule_dimension,
    drinfeld_jimbo,
    drinfeld_jimbo_degree_dimension,
    etr_n,
    image_dimension,
    murphy_shift_invertible,
    primitivity_check,
    rank_of,
    rho,
    ribbon_residual,
    verify_closure_identities,
)
from qhecke.scalar import q, v
from qhecke.tableaux import Partition, gl_dimension, partitions_of
from qhecke.tensor import TensorOperator
from qhecke.trace import conditional_trace, edim_closed, quantum_rank


def test_drinfeld_jimbo_entries(dj2):
    R = dj2.R
    assert R.entry((0, 0), (0, 0)) == q
    assert R.entry((0, 1), (0, 1)) == q - 1
    assert R.entry((1, 0), (0, 1)) == v
    assert R.entry((0, 1), (1, 0)) == v
    assert R.entry((1, 0), (1, 0)) == 0


def test_builtins_certify(dj2, dj3, super11):
    for sym in (dj2, dj3, super11):
        assert certify(sym) is sym


def test_diagonal_r_is_not_yang_baxter():
    R = TensorOperator.from_entries(2, 2, {((i, j), (i, j)): 1 + i + 2 * j for i in range(2) for j in range(2)})
    with pytest.raises(NotYangBaxter) as excinfo:
        certify(HeckeSymmetry(name="diagonal", d=2, R=R))
    assert excinfo.value.residual


def test_identity_is_not_hecke():
    sym = HeckeSymmetry(name="identity", d=2, R=TensorOperator.identity(2, 2))
    with pytest.raises(NotHecke):
        certify(sym)


def test_reflection_operators(dj2):
    assert dj2.C == TensorOperator.from_entries(2, 1, {((0,), (0,)): 1 / q**2, ((1,), (1,)): 1 / q})
    assert dj2.B @ dj2.C == TensorOperator.identity(2, 1).scale(1 / q**3)
    assert dj2.C.trace() == quantum_rank(RankContext(2))


def test_rank_detection(dj2, dj3):
    assert rank_of(dj2).rank == 2
    assert rank_of(dj2).exterior_dimensions == {1: 2, 2: 1, 3: 0}
    result = rank_of(dj3)
    assert result.rank == 3
    assert result.exterior_dimensions == {1: 3, 2: 3, 3: 1, 4: 0}


def test_super_symmetry_is_not_even(super11):
    result = rank_of(super11, cutoff=4)
    assert not result.even
    assert result.to_dict()["rank"] == "NotEvenUpTo(4)"
    with pytest.raises(NotEven):
        super11.require_rank(cutoff=4)


def test_closure_report(dj2):
    report = verify_closure_identities(dj2)
    assert report.passed
    assert report.check("curl_BC").holds
    assert report.check("ribbon").holds


def test_closure_report_for_odd_symmetry_skips_rank_checks(super11):
    report = verify_closure_identities(super11, cutoff=4)
    assert report.check("yang_baxter").holds
    assert report.check("curl_BC").skipped


def test_closure_report_records_failures():
    report = verify_closure_identities(HeckeSymmetry(name="identity", d=2, R=TensorOperator.identity(2, 2)))
    assert not report.passed
    assert report.check("yang_baxter").holds
    assert not report.check("hecke").holds


def test_ribbon(dj2):
    assert ribbon_residual(dj2, 2).is_zero()


def test_comodule_dimensions(dj2):
    assert comodule_dimension(dj2, IdempotentKey(Partition.of(2))) == 3
    assert comodule_dimension(dj2, IdempotentKey(Partition.of(2, 1))) == 2
    assert comodule_dimension(dj2, IdempotentKey(Partition.of(1, 1, 1))) == 0


@pytest.mark.parametrize("n", [1, 2])
def test_coalgebra_dimensions(dj2, n):
    assert coalgebra_degree_dimension(dj2, n) == drinfeld_jimbo_degree_dimension(2, n)


def test_coalgebra_dimension_degree_two(dj2):
    assert coalgebra_degree_dimension(dj2, 2) == 10


def test_image_dimensions(dj2):
    assert image_dimension(dj2, 2) == 2
    assert image_dimension(dj2, 3) == 5


@pytest.mark.parametrize("n", [1, 2, 3])
def test_murphy_shift_invertible(dj2, n):
    assert murphy_shift_invertible(dj2, n, 2)


def test_primitivity(dj2):
    result = primitivity_check(dj2, Partition.of(1), 2)
    assert result["holds"]
    assert result["rank"] == 2


def test_rho_is_a_homomorphism(dj2):
    algebra = get_algebra(3)
    a = algebra.generator(1) + algebra.generator(2).scale(q)
    b = algebra.generator(2) * algebra.generator(1)
    assert rho(dj2, a * b) == rho(dj2, a) @ rho(dj2, b)


def test_partial_trace_of_r_is_identity(dj2):
    assert etr_n(dj2, dj2.R) == TensorOperator.identity(2, 1)


@pytest.mark.parametrize("n", [2, 3])
def test_partial_trace_matches_conditional_trace(dj2, n):
    ctx = RankContext(2)
    algebra = get_algebra(n)
    for w in algebra.group.elements:
        basis = algebra.basis(w)
        assert etr_n(dj2, rho(dj2, basis)) == rho(dj2, conditional_trace(basis, ctx))


def test_categorical_trace_routes(dj2):
    f = dj2.R.scale(q) + TensorOperator.identity(2, 2)
    assert categorical_trace_direct(dj2, f) == categorical_trace_iterated(dj2, f)


def test_categorical_trace_of_identity_is_edim(dj2):
    ctx = RankContext(2)
    assert categorical_trace_iterated(dj2, TensorOperator.identity(2, 1)) == edim_closed(Partition.of(1), ctx)


@pytest.mark.parametrize("parts", [(2,), (1, 1)])
def test_categorical_trace_of_idempotent_is_edim(dj2, parts):
    shape = Partition(parts)
    image = rho(dj2, primitive_idempotent(IdempotentKey(shape)))
    assert categorical_trace_iterated(dj2, image) == edim_closed(shape, RankContext(2))


def test_numeric_symmetry_certifies(numeric):
    sym = certify(drinfeld_jimbo(2, numeric))
    assert rank_of(sym).rank == 2
    assert verify_closure_identities(sym).passed


@pytest.mark.parametrize("shape", [shape for n in (1, 2, 3) for shape in partitions_of(n)], ids=str)
def test_comodule_dimensions_of_dj2_match_gl_dimensions(dj2, shape):
    assert comodule_dimension(dj2, IdempotentKey(shape)) == gl_dimension(shape, 2)


@pytest.mark.parametrize("n", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_rho_is_unital_and_multiplicative(dj2, n):
    algebra = get_algebra(n)
    elements = algebra.group.elements
    rng = random.Random(n)
    assert rho(dj2, algebra.one()) == TensorOperator.identity(2, n)
    for _ in range(3):
        a, b = (algebra.element({rng.choice(elements): rng.randint(-2, 2) for _ in range(3)}) for _ in range(2))
        assert rho(dj2, a * b) == rho(dj2, a) @ rho(dj2, b)


def test_scalar_braiding_is_hecke_but_not_closed():
    sym = HeckeSymmetry(name="scalar", d=2, R=TensorOperator.identity(2, 2).scale(q))
    with pytest.raises(NotClosed):
        certify(sym)
