"""The gradient operator on monomial ideals.

Characteristic is fixed to zero, so the operator is purely combinatorial:
divide each minimal generator by each variable in its support.  A second
implementation via colon ideals serves as a cross-check oracle.
"""

from .errors import DomainError
from .monomials import MonomialIdeal, mono_div, supp, variable


def gradient(I: MonomialIdeal) -> MonomialIdeal:
    """Ideal generated by u/x_i for u in G(I), i in supp(u)."""
    if I.is_zero or I.is_unit:
        return I
    derived = []
    for u in I.gens:
        for i in supp(u):
            derived.append(mono_div(u, variable(I.n, i)))
    return MonomialIdeal(I.n, derived)


def gradient_via_colon(I: MonomialIdeal) -> MonomialIdeal:
    """Sum of (I : x_i) over all variables; agrees with gradient()."""
    if I.is_zero or I.is_unit:
        return I
    out = MonomialIdeal.zero(I.n)
    for i in range(1, I.n + 1):
        out = out + I.colon_variable(i)
    return out


def iterated_gradient(I: MonomialIdeal, ell: int) -> MonomialIdeal:
    if ell < 0:
        raise DomainError("iteration count must be >= 0")
    out = I
    for _ in range(ell):
        if out.is_zero or out.is_unit:
            break
        out = gradient(out)
    return out
