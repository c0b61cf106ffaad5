"""Decision procedures for structural classes of monomial ideals:
linear quotients, vertex splittability, (componentwise) polymatroidality,
and (strong) stability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from .caps import Caps, default_caps
from .errors import DomainError, ResourceCapError
from .monomials import (
    MonomialIdeal,
    deg,
    mono_div,
    mono_gcd,
    mono_mul,
    supp,
    variable,
)


class _Undecided:
    """Sentinel: a budgeted search ran out of nodes without an answer."""

    def __repr__(self):
        return "UNDECIDED"

    def __bool__(self):
        raise TypeError("undecided search result has no truth value")


UNDECIDED = _Undecided()


# ---------------------------------------------------------------------------
# linear quotients

@dataclass(frozen=True)
class QuotientOrder:
    order: Tuple[tuple, ...]  # permutation of the generators


def _colon_data(gens):
    """Precompute u_j : u_i = u_j / gcd(u_j, u_i) for all ordered pairs.

    Returns (is_variable_index, support_masks): for pair (j, i),
    is_variable_index[j][i] is the 0-based variable when the colon monomial
    is a single variable (else -1), and support_masks[j][i] is the bitmask
    of its support.
    """
    m = len(gens)
    is_var = [[-1] * m for _ in range(m)]
    smask = [[0] * m for _ in range(m)]
    for j in range(m):
        for i in range(m):
            if i == j:
                continue
            c = mono_div(gens[j], mono_gcd(gens[j], gens[i]))
            mask = 0
            for k, e in enumerate(c):
                if e:
                    mask |= 1 << k
            smask[j][i] = mask
            if sum(c) == 1:
                is_var[j][i] = c.index(1)
    return is_var, smask


def linear_quotients_order(
        I: MonomialIdeal, caps: Optional[Caps] = None,
        node_budget: Optional[int] = None,
) -> Union[QuotientOrder, None, _Undecided]:
    """Search for an order of G(I) with variable-generated colon ideals.

    Backtracking over prefixes; admissibility of the next generator depends
    only on the prefix as a set, so dead prefixes are memoized.  Returns a
    witness order, None when the search space is exhausted, or UNDECIDED
    when a node budget is given and runs out.
    """
    if I.is_zero or I.is_unit:
        raise DomainError("linear-quotients search needs a proper nonzero ideal")
    caps = caps or default_caps()
    m = I.mu
    if m > caps.lq_generators:
        raise ResourceCapError("lq-generators", caps.lq_generators, m)
    if m == 1:
        return QuotientOrder((I.gens[0],))

    gens = I.gens
    is_var, smask = _colon_data(gens)
    full = (1 << m) - 1
    dead = set()
    nodes = 0
    budget_hit = False

    def admissible(prefix_mask: int, i: int) -> bool:
        varmask = 0
        js = []
        pm = prefix_mask
        j = 0
        while pm:
            if pm & 1:
                v = is_var[j][i]
                if v >= 0:
                    varmask |= 1 << v
                js.append(j)
            pm >>= 1
            j += 1
        return all(smask[j][i] & varmask for j in js)

    def dfs(prefix_mask: int, order: List[int]) -> Optional[List[int]]:
        nonlocal nodes, budget_hit
        if prefix_mask == full:
            return order
        if prefix_mask in dead:
            return None
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            budget_hit = True
            return None
        for i in range(m):
            if prefix_mask >> i & 1:
                continue
            if not admissible(prefix_mask, i):
                continue
            res = dfs(prefix_mask | (1 << i), order + [i])
            if res is not None:
                return res
            if budget_hit:
                return None
        dead.add(prefix_mask)
        return None

    result = dfs(0, [])
    if result is not None:
        return QuotientOrder(tuple(gens[i] for i in result))
    if budget_hit:
        return UNDECIDED
    return None


def has_linear_quotients(I: MonomialIdeal, caps: Optional[Caps] = None) -> bool:
    return linear_quotients_order(I, caps=caps) is not None


# ---------------------------------------------------------------------------
# vertex splittability

def _canonical_compressed_key(I: MonomialIdeal):
    J, _ = I.compress()
    return (J.n, J.gens)


def is_vertex_splittable(I: MonomialIdeal,
                         _memo: Optional[Dict] = None) -> bool:
    return vertex_split_tree(I, _memo) is not None


def vertex_split_tree(I: MonomialIdeal, _memo: Optional[Dict] = None):
    """Recursion witness for vertex splittability, or None.

    Leaves are the base cases (zero, unit, principal); internal nodes record
    the splitting variable and the two parts.
    """
    memo = _memo if _memo is not None else {}
    key = _canonical_compressed_key(I)
    if key in memo:
        return memo[key]
    memo[key] = None  # guards against re-entry; overwritten below

    if I.is_zero:
        tree = {"base": "zero"}
    elif I.is_unit:
        tree = {"base": "unit"}
    elif I.mu == 1:
        tree = {"base": "principal"}
    else:
        tree = None
        for i in sorted(I.support):
            xi = variable(I.n, i)
            div = [u for u in I.gens if u[i - 1] > 0]
            rest = [u for u in I.gens if u[i - 1] == 0]
            if not div:
                continue
            I1 = MonomialIdeal(I.n, [mono_div(u, xi) for u in div])
            I2 = MonomialIdeal(I.n, rest)  # the zero ideal when empty
            # dividing preserves minimality here, so the generator sets of
            # x_i*I1 and I2 partition G(I) by construction
            if not I1.contains_ideal(I2):
                continue
            t1 = vertex_split_tree(I1, memo)
            if t1 is None:
                continue
            t2 = vertex_split_tree(I2, memo)
            if t2 is None:
                continue
            tree = {"split_variable": i, "divisible_part": t1, "rest": t2}
            break
    memo[key] = tree
    return tree


# ---------------------------------------------------------------------------
# polymatroidal / componentwise polymatroidal

def is_polymatroidal(I: MonomialIdeal) -> bool:
    """Bases exchange property on the exponent vectors of G(I)."""
    if I.is_zero or I.is_unit:
        raise DomainError("polymatroidal test needs a proper nonzero ideal")
    if I.alpha != I.omega:
        return False
    bases = set(I.gens)
    for u in bases:
        for v in bases:
            for i in range(I.n):
                if u[i] <= v[i]:
                    continue
                found = False
                for j in range(I.n):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in bases:
                            found = True
                            break
                if not found:
                    return False
    return True


def is_componentwise_polymatroidal(I: MonomialIdeal,
                                   caps: Optional[Caps] = None) -> bool:
    """Checks polymatroidality of every degree component.

    Components above omega are covered by a stabilization certificate:
    I_<j+1> = m * I_<j> at j = omega, plus closure of polymatroidal ideals
    under multiplication by the maximal ideal.
    """
    if I.is_zero or I.is_unit:
        raise DomainError("componentwise test needs a proper nonzero ideal")
    caps = caps or default_caps()
    for j in range(I.alpha, I.omega + 1):
        comp = I.degree_component(j, caps)
        if comp.is_zero:
            continue
        if not is_polymatroidal(comp):
            return False
    top = I.degree_component(I.omega, caps)
    stabilized = I.degree_component(I.omega + 1, caps)
    if stabilized != MonomialIdeal.maximal(I.n) * top:
        return False
    return True


# ---------------------------------------------------------------------------
# stability

def _max_var(u) -> int:
    return max(supp(u))


def is_stable(I: MonomialIdeal) -> bool:
    if I.is_zero or I.is_unit:
        raise DomainError("stability test needs a proper nonzero ideal")
    for u in I.gens:
        mv = _max_var(u)
        shifted = mono_div(u, variable(I.n, mv))
        for i in range(1, mv):
            if not I.contains(mono_mul(shifted, variable(I.n, i))):
                return False
    return True


def is_strongly_stable(I: MonomialIdeal) -> bool:
    if I.is_zero or I.is_unit:
        raise DomainError("stability test needs a proper nonzero ideal")
    for u in I.gens:
        for j in supp(u):
            shifted = mono_div(u, variable(I.n, j))
            for i in range(1, j):
                if not I.contains(mono_mul(shifted, variable(I.n, i))):
                    return False
    return True


# ---------------------------------------------------------------------------
# closures, used by the verification harness to generate test ideals

def stable_closure(n: int, seeds) -> MonomialIdeal:
    """Smallest stable ideal containing the given monomials."""
    return _closure(n, seeds, strongly=False)


def strongly_stable_closure(n: int, seeds) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the given monomials."""
    return _closure(n, seeds, strongly=True)


def _closure(n: int, seeds, strongly: bool) -> MonomialIdeal:
    pool = {tuple(u) for u in seeds}
    frontier = list(pool)
    while frontier:
        u = frontier.pop()
        if deg(u) == 0:
            continue
        targets = supp(u) if strongly else {_max_var(u)}
        for j in targets:
            shifted = mono_div(u, variable(n, j))
            for i in range(1, j):
                w = mono_mul(shifted, variable(n, i))
                if w not in pool:
                    pool.add(w)
                    frontier.append(w)
    return MonomialIdeal(n, pool)
