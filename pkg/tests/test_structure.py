import random

import pytest

from monograd.errors import DomainError
from monograd.gradient import gradient
from monograd.monomials import MonomialIdeal, veronese_type
from monograd.structure import (UNDECIDED, has_linear_quotients,
                                is_componentwise_polymatroidal,
                                is_polymatroidal, is_stable,
                                is_strongly_stable, is_vertex_splittable,
                                linear_quotients_order, stable_closure,
                                strongly_stable_closure, vertex_split_tree)
from monograd.verify import random_ideal


def I(n, *strs):
    return MonomialIdeal.from_strings(n, list(strs))


def _is_variable_colon(prev, u, n):
    """Check that (prev) : u is generated by variables."""
    colon = MonomialIdeal(n, [tuple(max(p - e, 0) for p, e in zip(v, u))
                              for v in prev])
    return all(sum(g) == 1 for g in colon.gens)


def test_linear_quotients_witness_is_valid():
    J = I(4, "x1*x2", "x1*x3^3", "x2*x4^3")
    order = linear_quotients_order(J)
    assert order is not None
    gens = list(order.order)
    assert sorted(gens) == sorted(J.gens)
    for k in range(1, len(gens)):
        assert _is_variable_colon(gens[:k], gens[k], 4)


def test_no_linear_quotients():
    assert linear_quotients_order(I(4, "x1*x2", "x3*x4")) is None
    assert not has_linear_quotients(I(4, "x1*x2", "x3*x4"))


def test_linear_quotients_budget_undecided():
    J = veronese_type(5, (1, 1, 1, 1, 1), 3)
    assert linear_quotients_order(J, node_budget=1) is UNDECIDED
    with pytest.raises(TypeError):
        bool(UNDECIDED)


def test_vertex_splittable():
    assert is_vertex_splittable(MonomialIdeal.maximal(4))
    assert is_vertex_splittable(I(3, "x1*x2", "x1*x3", "x2*x3"))
    assert not is_vertex_splittable(I(4, "x1*x2", "x3*x4"))
    # base cases
    assert is_vertex_splittable(MonomialIdeal.zero(2))
    assert is_vertex_splittable(MonomialIdeal.unit(2))
    assert is_vertex_splittable(I(3, "x1^2*x3"))


def test_vertex_split_tree_witness():
    tree = vertex_split_tree(I(2, "x1^2", "x1*x2"))
    assert tree is not None and "split_variable" in tree


def test_polymatroidal():
    assert is_polymatroidal(MonomialIdeal.maximal(3) ** 2)
    assert is_polymatroidal(veronese_type(4, (2, 1, 1, 2), 3))
    assert not is_polymatroidal(I(4, "x1*x2", "x3*x4"))
    # not equigenerated
    assert not is_polymatroidal(I(2, "x1", "x2^2"))


def test_componentwise_polymatroidal():
    assert is_componentwise_polymatroidal(I(2, "x1^2", "x1*x2", "x2^3"))
    assert not is_componentwise_polymatroidal(I(4, "x1*x2", "x3*x4"))


def test_stable_checks():
    assert is_strongly_stable(I(2, "x1^2", "x1*x2"))
    assert not is_stable(I(2, "x2"))
    # stable but not strongly stable: x1*(x2*x3/x2) = x1*x3 is missing
    J = I(3, "x1^2", "x1*x2", "x2^2", "x2*x3")
    assert is_stable(J) and not is_strongly_stable(J)
    with pytest.raises(DomainError):
        is_stable(MonomialIdeal.zero(2))


def test_closures():
    assert strongly_stable_closure(3, [(0, 0, 1)]) == \
        I(3, "x1", "x2", "x3")
    assert stable_closure(2, [(0, 2)]) == I(2, "x1^2", "x1*x2", "x2^2")
    S = strongly_stable_closure(3, [(1, 0, 1)])
    assert is_strongly_stable(S)
    assert S == I(3, "x1^2", "x1*x2", "x1*x3")


def test_gradient_preserves_structure_classes():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(2, 4)
        seeds = [tuple(rng.randint(0, 2) for _ in range(n))]
        if sum(seeds[0]) < 2:
            continue
        S = strongly_stable_closure(n, seeds)
        gS = gradient(S)
        if not gS.is_unit:
            assert is_strongly_stable(gS)


def test_splittable_implies_linear_quotients():
    rng = random.Random(77)
    checked = 0
    for _ in range(80):
        n = rng.randint(2, 4)
        J = random_ideal(n, 1, 3, rng.randint(1, 4), rng=rng)
        if is_vertex_splittable(J) and J.is_proper and not J.is_zero:
            checked += 1
            assert linear_quotients_order(J) is not None, J
    assert checked > 10
