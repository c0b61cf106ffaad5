import random

from monograd.gradient import gradient, gradient_via_colon, iterated_gradient
from monograd.monomials import MonomialIdeal
from monograd.verify import random_ideal


def I(n, *strs):
    return MonomialIdeal.from_strings(n, list(strs))


def test_gradient_examples():
    assert gradient(I(3, "x1*x2*x3")) == I(3, "x1*x2", "x1*x3", "x2*x3")
    assert gradient(I(2, "x1^3")) == I(2, "x1^2")
    assert gradient(I(4, "x1*x2", "x1*x3^3", "x2*x4^3")) == \
        I(4, "x1", "x2", "x3^3", "x4^3")


def test_gradient_fixed_points():
    assert gradient(MonomialIdeal.zero(3)).is_zero
    assert gradient(MonomialIdeal.unit(3)).is_unit
    # gradient of the maximal ideal is the unit ideal
    assert gradient(MonomialIdeal.maximal(3)).is_unit


def test_gradient_of_powers_of_maximal():
    m = MonomialIdeal.maximal(4)
    for k in range(1, 5):
        assert gradient(m ** k) == m ** (k - 1)


def test_iterated():
    J = I(3, "x1*x2*x3")
    assert iterated_gradient(J, 0) == J
    assert iterated_gradient(J, 2) == MonomialIdeal.maximal(3)
    assert iterated_gradient(J, 3).is_unit
    assert iterated_gradient(J, 7).is_unit


def test_colon_oracle_agrees_on_random_ideals():
    rng = random.Random(20240901)
    for _ in range(300):
        n = rng.randint(2, 5)
        count = rng.randint(1, 4)
        J = random_ideal(n, 1, 4, count, rng=rng)
        assert gradient(J) == gradient_via_colon(J)


def test_leibniz_rule_on_products():
    # grad(I*J) == grad(I)*J + I*grad(J) for monomial ideals
    rng = random.Random(7)
    for _ in range(120):
        n = rng.randint(2, 4)
        A = random_ideal(n, 1, 3, rng.randint(1, 3), rng=rng)
        B = random_ideal(n, 1, 3, rng.randint(1, 3), rng=rng)
        assert gradient(A * B) == gradient(A) * B + A * gradient(B)


def test_power_shift_identity():
    # grad(m^k * I) == m^k * grad(I)
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(2, 4)
        J = random_ideal(n, 2, 3, rng.randint(1, 3), rng=rng)
        m = MonomialIdeal.maximal(n)
        for k in (1, 2, 3):
            assert gradient((m ** k) * J) == (m ** k) * gradient(J)


def test_component_identity():
    # grad(I)_<j> == grad(I_<j+1>)
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(2, 4)
        J = random_ideal(n, 1, 4, rng.randint(1, 4), rng=rng)
        gJ = gradient(J)
        for j in range(J.omega + 3):
            assert gJ.degree_component(j) == gradient(J.degree_component(j + 1))
