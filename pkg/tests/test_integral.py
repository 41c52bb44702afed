import pytest

from qhecke.arithmetic import Arithmetic
from qhecke.exceptions import CapExceeded, DegreeMismatch, IndexOutOfRange, NotEven
from qhecke.integral import (
    IntegralQuery,
    clear_operator_memo,
    closing_consistency,
    coinvariant_projection_checks,
    contraction_checks,
    hr_integral,
    hr_table,
    phi_averaged,
    phi_central,
    phi_operator,
    phi_rank,
    shr_integral,
    shr_table,
    verify_invariance,
)
from qhecke.rmatrix import drinfeld_jimbo
from qhecke.scalar import format_scalar, q, v
from qhecke.tensor import TensorOperator


def test_query_shapes():
    with pytest.raises(DegreeMismatch):
        IntegralQuery(I=(1,), J=(1, 2))
    with pytest.raises(IndexOutOfRange):
        IntegralQuery(I=(3,), J=(1,)).validate(2)


def test_unbalanced_monomial_vanishes(dj2):
    assert hr_integral(dj2, IntegralQuery(I=(1,), J=(1,))) == 0


def test_empty_monomial_integrates_to_one(dj2):
    assert hr_integral(dj2, IntegralQuery(I=(), J=())) == 1


def test_rank_one_degree_one():
    sym = drinfeld_jimbo(1)
    assert hr_integral(sym, IntegralQuery(I=(1,), J=(1,), K=(1,), L=(1,))) == 1


def test_exact_degree_cap(dj2):
    query = IntegralQuery(I=(1, 1, 2, 2), J=(1, 1, 2, 2), K=(1, 1, 2, 2), L=(1, 1, 2, 2))
    with pytest.raises(CapExceeded):
        hr_integral(dj2, query)


def test_odd_symmetry_has_no_integral(super11):
    with pytest.raises(NotEven):
        hr_integral(super11, IntegralQuery(I=(1,), J=(1,), K=(1,), L=(1,)), cutoff=4)


def test_degree_one_contractions(dj2):
    first, second = contraction_checks(dj2)
    assert first.is_zero()
    assert second.is_zero()


def test_hr_table_degree_one(dj2):
    table = hr_table(dj2, 1)
    for (I, J, K, L), value in table.values.items():
        assert value == hr_integral(dj2, IntegralQuery(I=I, J=J, K=K, L=L))
    assert hr_table(dj2, 0).values == {((), (), (), ()): 1}


def test_phi_one_is_the_determinant_projector(dj2):
    phi = phi_operator(dj2, 1)
    assert phi.rank() == 1
    assert phi @ phi == phi
    assert phi.entry((0, 1), (0, 1)) == 1 / (1 + q)
    assert phi.entry((1, 0), (0, 1)) == -v / (1 + q)
    assert phi.entry((1, 0), (1, 0)) == q / (1 + q)


def test_phi_routes_agree(dj2):
    assert phi_central(dj2, 1, 2) == phi_averaged(dj2, 1, 2)


def test_phi_commutes_with_r(dj2):
    phi = phi_operator(dj2, 1, "central")
    assert phi @ dj2.R == dj2.R @ phi


def test_phi_zero_is_the_unit(dj2):
    assert phi_operator(dj2, 0) == TensorOperator.identity(2, 0)


def test_phi_rank_report(dj2):
    assert phi_rank(dj2, 1) == {"rank": 1, "expected": 1, "comodule_dimension": 1}


def test_unknown_route(dj2):
    with pytest.raises(ValueError):
        phi_operator(dj2, 1, "sideways")


def test_shr_values(dj2):
    assert shr_integral(dj2, (1, 2), (1, 2)) == 1 / (1 + q)
    assert shr_integral(dj2, (1, 2), (2, 1)) == -v / (1 + q)
    assert shr_integral(dj2, (1, 1), (1, 1)) == 0
    assert format_scalar(shr_integral(dj2, (1, 2), (1, 2))) == "(1)/(1 + q)"


def test_shr_vanishes_off_multiples_of_rank(dj2):
    assert shr_integral(dj2, (1,), (1,)) == 0
    assert shr_integral(dj2, (), ()) == 1
    assert shr_table(dj2, 3).values == {}


def test_shr_table(dj2):
    table = shr_table(dj2, 2)
    assert len(table.values) == 4
    assert table.values[((1, 2), (2, 1))] == -v / (1 + q)
    payload = table.to_dict()
    assert payload["group"] == "shr"
    assert payload["entries"][0]["I"] == [1, 2]


def test_closing_consistency(dj2):
    assert closing_consistency(dj2, 1).is_zero()


def test_numeric_phi(numeric):
    sym = drinfeld_jimbo(2, numeric)
    phi = phi_operator(sym, 1)
    assert phi.rank() == 1
    assert phi @ phi == phi


def test_degree_cap_applies_to_phi():
    sym = drinfeld_jimbo(2, Arithmetic(max_degree=1))
    with pytest.raises(CapExceeded):
        phi_operator(sym, 1, "central")


@pytest.mark.slow
def test_invariance_report(dj2):
    report = verify_invariance(dj2, n=2)
    assert report.passed
    assert report.complete
    assert report.check("invariance_first_trace").holds
    assert report.check("phi1_from_hr").holds


def test_coinvariant_projection_degree_one(dj2):
    checks = coinvariant_projection_checks(dj2, 1)
    assert [check.name for check in checks] == [
        "phi1_idempotent",
        "phi1_commutes",
        "phi1_isotypic",
        "phi1_averaged",
        "phi1_rank",
        "phi1_from_hr",
    ]
    assert all(check.holds for check in checks), [check.to_dict() for check in checks]


@pytest.mark.slow
def test_coinvariant_projection_degree_two(dj2):
    checks = coinvariant_projection_checks(dj2, 2)
    assert "phi2_from_hr" not in [check.name for check in checks]
    assert all(check.holds for check in checks), [check.to_dict() for check in checks]


def test_coinvariant_projection_rejects_a_scalar_operator(dj2, monkeypatch):
    fake = TensorOperator.identity(2, 2).scale(q + 7)
    monkeypatch.setattr("qhecke.integral.phi_operator", lambda *args, **kwargs: fake)
    checks = {check.name: check for check in coinvariant_projection_checks(dj2, 1)}
    assert not checks["phi1_idempotent"].holds
    assert not checks["phi1_isotypic"].holds
    assert not checks["phi1_averaged"].holds
    assert not checks["phi1_rank"].holds
    assert not checks["phi1_from_hr"].holds
    assert checks["phi1_commutes"].holds


def test_invariance_records_raised_errors_as_failures(dj2, monkeypatch):
    def capped(sym, n, r):
        raise CapExceeded("max_tensor_entries", 1, n)

    monkeypatch.setattr("qhecke.integral._tensor_sum_first_trace", capped)
    monkeypatch.setattr("qhecke.integral._tensor_sum_second_trace", capped)
    report = verify_invariance(dj2, n=2)
    assert not report.passed
    assert report.complete
    first = report.check("invariance_first_trace")
    assert not first.holds
    assert first.residual[0][1].startswith("CapExceeded")
    assert report.check("contraction_zt").holds
    assert report.check("phi1_idempotent").holds


def test_invariance_degree_cap(dj2):
    with pytest.raises(CapExceeded):
        verify_invariance(dj2, n=3)
    with pytest.raises(IndexOutOfRange):
        verify_invariance(dj2, n=0)


@pytest.mark.slow
@pytest.mark.parametrize("k, d", [(2, 2), (1, 3)])
def test_phi_routes_agree_higher(k, d):
    sym = drinfeld_jimbo(d)
    phi = phi_operator(sym, k, "both")
    report = phi_rank(sym, k)
    assert phi.rank() == report["expected"]
    assert report["comodule_dimension"] == 1


def test_operator_memo_can_be_cleared(dj2):
    first = phi_operator(dj2, 1, "central")
    assert phi_operator(dj2, 1, "central") is first
    clear_operator_memo()
    rebuilt = phi_operator(dj2, 1, "central")
    assert rebuilt is not first
    assert rebuilt == first


@pytest.mark.slow
def test_invariance_report_covers_both_projection_degrees(dj2):
    report = verify_invariance(dj2, n=2, projection_degrees=(1, 2))
    assert report.passed
    assert report.complete
    assert report.check("phi1_rank").holds
    assert report.check("phi2_idempotent").holds
    assert report.check("phi2_rank").holds
