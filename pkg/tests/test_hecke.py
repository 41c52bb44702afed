import random

import pytest

from qhecke.arithmetic import EXACT
from qhecke.exceptions import DegreeMismatch, IndexOutOfRange
from qhecke.hecke import embed, get_algebra, hecke_trace, inner_product, shift, star, symmetrizers, tensor
from qhecke.scalar import SCALAR_FIELD, q, q_integer
from qhecke.symmetric import Permutation, longest_element


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_quadratic_and_braid_relations(n):
    algebra = get_algebra(n)
    one = algebra.one()
    for i in range(1, n):
        t = algebra.generator(i)
        assert ((t + one) * (t - one.scale(q))).is_zero()
    for i in range(1, n - 1):
        a, b = algebra.generator(i), algebra.generator(i + 1)
        assert a * b * a == b * a * b
    for i in range(1, n):
        for j in range(i + 2, n):
            a, b = algebra.generator(i), algebra.generator(j)
            assert a * b == b * a


def _random_element(algebra, rng):
    elements = algebra.group.elements
    return algebra.element({rng.choice(elements): rng.randint(-3, 3) for _ in range(3)})


@pytest.mark.parametrize("n", [3, 4])
def test_associativity(n):
    algebra = get_algebra(n)
    rng = random.Random(n)
    for _ in range(20):
        a, b, c = (_random_element(algebra, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


@pytest.mark.slow
def test_associativity_many_triples():
    for n in (3, 4, 5):
        algebra = get_algebra(n)
        rng = random.Random(100 + n)
        for _ in range(100):
            a, b, c = (_random_element(algebra, rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)


def test_basis_products_follow_reduced_words():
    algebra = get_algebra(3)
    w0 = longest_element(3)
    assert algebra.generator(1) * algebra.generator(2) * algebra.generator(1) == algebra.basis(w0)


@pytest.mark.parametrize("n", [2, 3])
def test_t_inverse(n):
    algebra = get_algebra(n)
    for w in algebra.group.elements:
        assert algebra.basis(w) * algebra.t_inverse(w) == algebra.one()


def test_murphy_operators_commute_and_sum_to_central():
    algebra = get_algebra(4)
    murphies = [algebra.murphy(m) for m in range(1, 5)]
    assert murphies[0].is_zero()
    for a in murphies:
        for b in murphies:
            assert a * b == b * a
    total = murphies[1] + murphies[2] + murphies[3]
    for i in range(1, 4):
        t = algebra.generator(i)
        assert t * total == total * t


def test_murphy_out_of_range():
    with pytest.raises(IndexOutOfRange):
        get_algebra(3).murphy(4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_symmetrizers(n):
    algebra = get_algebra(n)
    x, y = symmetrizers(n)
    assert x * x == x
    assert y * y == y
    assert (x * y).is_zero()
    for i in range(1, n):
        t = algebra.generator(i)
        assert t * x == x.scale(q)
        assert t * y == -y


def test_symmetric_form_and_star():
    algebra = get_algebra(3)
    a = algebra.generator(1) + algebra.generator(2) * algebra.generator(1)
    b = algebra.generator(2) * algebra.generator(1)
    assert star(star(a)) == a
    assert star(a * b) == star(b) * star(a)
    assert inner_product(a, b) == hecke_trace(a * star(b))
    assert hecke_trace(a * b) == hecke_trace(b * a)
    assert inner_product(b, b) == q**2


def test_average_is_central():
    algebra = get_algebra(3)
    averaged = algebra.average(algebra.generator(1))
    for i in (1, 2):
        t = algebra.generator(i)
        assert t * averaged == averaged * t


def test_longest_twist_is_central():
    algebra = get_algebra(3)
    twist = algebra.longest_twist_inverse_square()
    for i in (1, 2):
        t = algebra.generator(i)
        assert t * twist == twist * t


def test_embed_shift_and_tensor():
    h2 = get_algebra(2)
    t = h2.generator(1)
    assert embed(t, 4) == get_algebra(4).generator(1)
    assert shift(t, 4, 2) == get_algebra(4).generator(3)
    assert tensor(t, t) == get_algebra(4).generator(1) * get_algebra(4).generator(3)


def test_mixing_degrees_is_rejected():
    with pytest.raises(DegreeMismatch):
        get_algebra(2).one() + get_algebra(3).one()


def test_scalar_coefficients():
    algebra = get_algebra(2, EXACT)
    element = algebra.scalar(q_integer(2))
    assert element.coefficient(Permutation.identity(2)) == 1 + q
    assert algebra.one().coefficient(Permutation((2, 1))) == SCALAR_FIELD.zero


@pytest.mark.parametrize("n", [2, 3, 4])
def test_longest_twist_square_recursion(n):
    algebra = get_algebra(n)
    top = algebra.basis(longest_element(n))
    below = get_algebra(n - 1).basis(longest_element(n - 1))
    factor = (algebra.one() + algebra.murphy(n).scale(q - 1)).scale(q ** (n - 1))
    assert top * top == factor * embed(below * below, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_star_is_adjoint_for_the_form(n):
    algebra = get_algebra(n)
    rng = random.Random(100 + n)
    for _ in range(3):
        h, k, g = (_random_element(algebra, rng) for _ in range(3))
        assert inner_product(h * k, g) == inner_product(k, star(h) * g)
