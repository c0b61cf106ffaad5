"""Seeded verification suites producing structured, reproducible reports.

Each suite exercises one named claim about the gradient operator against
independently computed values.  Reports are deterministic functions of
(theorem_id, parameters, seed) and serialize to stable JSON.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

from .errors import DomainError
from .gradient import gradient, iterated_gradient
from .graphs import (SimpleGraph, complementary_edge_ideal, edge_ideal,
                     family_overlap_run, family_reg_gap,
                     gradient_power_closed_form, is_connected,
                     quadratic_decomposition)
from .ioformats import ideal_to_json
from .kruskal import (closed_form_count, closed_form_shadow,
                      colex_shadow_oracle, macaulay_rep,
                      many_generators_threshold, shadow_bound)
from .monomials import (MonomialIdeal, is_complete_intersection,
                        monomials_of_degree, squarefree_monomials_of_degree,
                        veronese_type)
from .resolution import (cycle_certificate, has_differential_linear_resolution,
                         hochster_betti, regularity)
from .structure import (UNDECIDED, is_polymatroidal, is_stable,
                        is_strongly_stable, is_vertex_splittable,
                        linear_quotients_order, stable_closure,
                        strongly_stable_closure)

DEFAULT_SAMPLES = 200


@dataclass(frozen=True)
class Check:
    description: str
    expected: object
    computed: object
    passed: bool


@dataclass
class Report:
    theorem_id: str
    parameters: Dict[str, object]
    checks: List[Check] = field(default_factory=list)
    engine_notes: List[str] = field(default_factory=list)
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, description: str, expected, computed,
            ideal: Optional[MonomialIdeal] = None) -> bool:
        ok = expected == computed
        self.checks.append(Check(description, _plain(expected),
                                 _plain(computed), ok))
        if not ok and ideal is not None:
            self.engine_notes.append("replay ideal: " + ideal_to_json(ideal))
        return ok

    def note(self, text: str) -> None:
        self.engine_notes.append(text)

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "parameters": {k: _plain(v) for k, v in sorted(self.parameters.items())},
            "checks": [{"description": c.description, "expected": c.expected,
                        "computed": c.computed, "pass": c.passed}
                       for c in self.checks],
            "engine_notes": list(self.engine_notes),
            "seed": self.seed,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _plain(v):
    if isinstance(v, tuple):
        return [_plain(x) for x in v]
    if isinstance(v, list):
        return [_plain(x) for x in v]
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    return str(v)


# ---------------------------------------------------------------------------
# seeded generators

def random_ideal(n: int, d_min: int, d_max: int, count: int,
                 squarefree: bool = False, seed: Optional[int] = None,
                 rng: Optional[random.Random] = None) -> MonomialIdeal:
    """Seeded sample of `count` distinct monomials, minimalized.

    Same (parameters, seed) always yields the same ideal; minimalization
    may shrink the generating set when sampled monomials divide each other.
    """
    if rng is None:
        rng = random.Random(seed)
    pool = []
    for d in range(d_min, d_max + 1):
        if squarefree:
            if d <= n:
                pool.extend(squarefree_monomials_of_degree(n, d))
        else:
            pool.extend(monomials_of_degree(n, d))
    if count > len(pool):
        raise DomainError(f"requested {count} monomials but only "
                          f"{len(pool)} available")
    return MonomialIdeal(n, rng.sample(pool, count))


def random_veronese_type(rng: random.Random, n_max: int = 5,
                         d_max: int = 4) -> MonomialIdeal:
    while True:
        n = rng.randint(2, n_max)
        d = rng.randint(2, d_max)
        bounds = tuple(rng.randint(1, d) for _ in range(n))
        if sum(bounds) >= d:
            return veronese_type(n, bounds, d)


def random_complete_intersection(rng: random.Random, n: int = 6,
                                 max_gens: int = 3,
                                 max_deg: int = 3) -> MonomialIdeal:
    m = rng.randint(1, max_gens)
    vars_left = list(range(n))
    rng.shuffle(vars_left)
    gens = []
    for _ in range(m):
        size = rng.randint(1, 2)
        if size > len(vars_left):
            size = len(vars_left)
        picked = [vars_left.pop() for _ in range(size)]
        deg = rng.randint(max(2, size), max_deg)
        exps = [0] * n
        for i in picked:
            exps[i] = 1
        for _ in range(deg - size):
            exps[rng.choice(picked)] += 1
        gens.append(tuple(exps))
    return MonomialIdeal(n, gens)


def random_stable_ideal(rng: random.Random, strongly: bool,
                        n_max: int = 4, d_max: int = 4) -> MonomialIdeal:
    n = rng.randint(2, n_max)
    seeds = []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(1, d_max)
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        seeds.append(tuple(exps))
    closure = strongly_stable_closure if strongly else stable_closure
    return closure(n, seeds)


def connected_graphs(n: int):
    """All connected labeled graphs on vertices 1..n."""
    slots = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        G = SimpleGraph(n, edges)
        if is_connected(G):
            yield G


def two_linear_edge_ideals(n_max: int = 5):
    """Distinct compressed edge ideals on <= n_max vertices whose
    regularity is exactly 2, together with their decompositions."""
    seen = set()
    slots = list(combinations(range(1, n_max + 1), 2))
    for mask in range(1, 1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        I = edge_ideal(SimpleGraph(n_max, edges))
        J, _ = I.compress()
        key = (J.n, J.gens)
        if key in seen:
            continue
        seen.add(key)
        if regularity(J) == 2:
            yield J


# ---------------------------------------------------------------------------
# suites

def _suite_thm22(rep: Report, params: dict, rng: random.Random) -> None:
    a_values = [int(params["a"])] if "a" in params else list(range(-4, 5))
    for a in a_values:
        fam = family_reg_gap(a)
        r = regularity(fam.ideal)
        rg = regularity(gradient(fam.ideal))
        rep.add(f"a={a}: reg(I)", fam.expected_reg, r, fam.ideal)
        rep.add(f"a={a}: reg(grad(I))", fam.expected_reg_gradient, rg, fam.ideal)
        rep.add(f"a={a}: reg(I) - reg(grad(I))", a, r - rg, fam.ideal)


def _suite_thm23(rep: Report, params: dict, rng: random.Random) -> None:
    d_values = [int(params["d"])] if "d" in params else [3, 4, 5]
    for d in d_values:
        I = family_overlap_run(d)
        gI = gradient(I)
        rep.add(f"d={d}: reg(I)", d, regularity(I), I)
        rep.add(f"d={d}: reg(grad(I))", 2 * d - 3, regularity(gI), gI)
        b = hochster_betti(gI, 2, 2 * d - 2)
        rep.add(f"d={d}: betti(grad(I), 2, {2*d-2}) >= 1", True, b >= 1, gI)
        cert = cycle_certificate(d)
        rep.add(f"d={d}: witness cycle certificate", True, cert.passed)
        if not cert.passed:
            rep.note(f"certificate failures: {cert.failures}")


def _suite_prop21(rep: Report, params: dict, rng: random.Random) -> None:
    samples = int(params.get("samples", 50))
    bad_ci = 0
    for _ in range(samples):
        I = random_complete_intersection(rng)
        assert is_complete_intersection(I)
        total = sum(sum(u) for u in I.gens)
        expected = total - 2 * I.mu + 1
        if regularity(gradient(I)) != expected:
            bad_ci += 1
            rep.note("replay ideal: " + ideal_to_json(I))
    rep.add(f"{samples} complete intersections: reg(grad(I)) == "
            "sum(deg) - 2*mu + 1", 0, bad_ci)
    bad = 0
    for _ in range(samples):
        n = rng.randint(3, 5)
        count = rng.randint(2, 4)
        I = random_ideal(n, 2, 3, count, rng=rng)
        r = regularity(gradient(I))
        total = sum(sum(u) for u in I.gens)
        if not (I.alpha - 1 <= r <= total - 2 * I.mu + 1):
            bad += 1
            rep.note("replay ideal: " + ideal_to_json(I))
    rep.add(f"{samples} random ideals: alpha - 1 <= reg(grad(I)) <= "
            "sum(deg) - 2*mu + 1", 0, bad)


def _suite_cor24(rep: Report, params: dict, rng: random.Random) -> None:
    samples = int(params.get("samples", 50))
    bad = 0
    first_lq: Dict[int, int] = {}
    for idx in range(samples):
        n = rng.randint(2, 4)
        I = random_ideal(n, 2, 3, rng.randint(1, 3), rng=rng)
        m = MonomialIdeal.maximal(n)
        gI = gradient(I)
        for k in (1, 2, 3):
            mk = m ** k
            if gradient(mk * I) != mk * gI:
                bad += 1
                rep.note("replay ideal: " + ideal_to_json(I))
                break
        else:
            for k in range(1, 6):
                if linear_quotients_order((m ** k) * gI) is not None:
                    first_lq[k] = first_lq.get(k, 0) + 1
                    break
            else:
                first_lq[-1] = first_lq.get(-1, 0) + 1
    rep.add(f"{samples} ideals: grad(m^k * I) == m^k * grad(I) for k=1..3",
            0, bad)
    for k in sorted(first_lq):
        label = "none within k<=5" if k == -1 else f"k={k}"
        rep.note(f"first power with linear quotients of m^k*grad(I): "
                 f"{label} for {first_lq[k]} samples (report only)")


def _suite_thm31(rep: Report, params: dict, rng: random.Random) -> None:
    samples = int(params.get("samples", DEFAULT_SAMPLES))
    bad = 0
    for _ in range(samples):
        I = random_veronese_type(rng)
        assert is_polymatroidal(I)
        if not is_polymatroidal(gradient(I)):
            bad += 1
            rep.note("replay ideal: " + ideal_to_json(I))
    rep.add(f"{samples} polymatroidal ideals: grad(I) is polymatroidal",
            0, bad)


def _suite_lem32(rep: Report, params: dict, rng: random.Random) -> None:
    samples = int(params.get("samples", DEFAULT_SAMPLES))
    bad = 0
    for _ in range(samples):
        n = rng.randint(2, 4)
        I = random_ideal(n, 1, 4, rng.randint(1, 4), rng=rng)
        gI = gradient(I)
        for j in range(0, I.omega + 3):
            if gI.degree_component(j) != gradient(I.degree_component(j + 1)):
                bad += 1
                rep.note("replay ideal: " + ideal_to_json(I))
                break
    rep.add(f"{samples} ideals: grad(I)_<j> == grad(I_<j+1>) for all "
            "j <= omega + 2", 0, bad)


def _suite_prop33(rep: Report, params: dict, rng: random.Random) -> None:
    samples = int(params.get("samples", DEFAULT_SAMPLES))
    for strongly, label in ((True, "strongly stable"), (False, "stable")):
        check = is_strongly_stable if strongly else is_stable
        bad = 0
        for _ in range(samples):
            I = random_stable_ideal(rng, strongly)
            assert check(I)
            gI = gradient(I)
            # a degree-1 generator sends the gradient to the unit ideal,
            # which is vacuously (strongly) stable
            if not (gI.is_unit or check(gI)) or regularity(gI) > regularity(I):
                bad += 1
                rep.note("replay ideal: " + ideal_to_json(I))
        rep.add(f"{samples} {label} ideals: grad(I) is {label} and "
                "reg does not grow", 0, bad)


def _suite_thm43(rep: Report, params: dict, rng: random.Random) -> None:
    n_values = [int(params["n"])] if "n" in params else [4]
    for n in n_values:
        count = 0
        bad = 0
        for G in connected_graphs(n):
            count += 1
            J = complementary_edge_ideal(G)
            for ell in range(0, n - 1):
                H = iterated_gradient(J, ell)
                if not (is_vertex_splittable(H)
                        and regularity(H) == n - 2 - ell):
                    bad += 1
                    rep.note("replay ideal: " + ideal_to_json(H))
        rep.add(f"n={n}: all {count} connected graphs, all levels: "
                "grad^l of the complementary edge ideal is vertex "
                "splittable with reg n-2-l", 0, bad)


def _suite_thm51(rep: Report, params: dict, rng: random.Random) -> None:
    samples = int(params.get("samples", 50))
    if "n" in params and "d" in params:
        pairs = [(int(params["n"]), int(params["d"]))]
    else:
        pairs = [(6, 3), (8, 3), (8, 4)]
    for n, d in pairs:
        mu = many_generators_threshold(n, d)
        bad = 0
        for _ in range(samples):
            I = random_ideal(n, d, d, mu, squarefree=True, rng=rng)
            result = has_differential_linear_resolution(I)
            splittable = all(is_vertex_splittable(iterated_gradient(I, ell))
                             for ell in range(I.alpha + 1))
            if not (result and splittable):
                bad += 1
                rep.note("replay ideal: " + ideal_to_json(I))
        rep.add(f"(n,d)=({n},{d}): {samples} ideals with mu={mu}: "
                "differential linear resolution and per-level vertex "
                "splittability", 0, bad)
    mismatches = 0
    for d in range(3, 9):
        for n in range(2 * d, 21):
            a = many_generators_threshold(n, d)
            if closed_form_count(n, d) != macaulay_rep(a, d):
                mismatches += 1
            if closed_form_shadow(n, d) != shadow_bound(a, d):
                mismatches += 1
    rep.add("closed forms match greedy expansion and shadow for "
            "2d <= n <= 20, 3 <= d <= 8", 0, mismatches)


def _suite_kk_remark(rep: Report, params: dict, rng: random.Random) -> None:
    a, d = 1107, 17
    greedy = shadow_bound(a, d)
    oracle = colex_shadow_oracle(a, d)
    rep.add("greedy shadow and colex enumeration agree on a=1107, d=17",
            greedy, oracle)
    rep.note(f"macaulay expansion: {macaulay_rep(a, d)}")
    threshold = many_generators_threshold(20, d - 1)
    reported = 4813
    if greedy == reported:
        rep.note(f"computed 1107^(16) = {greedy}; matches previously "
                 "reported value")
    else:
        rep.note(f"computed 1107^(16) = {greedy}; previously reported "
                 f"value {reported} differs by {greedy - reported} "
                 "(flagged, does not fail the build)")
    rep.add("comparison against reported value 4813 recorded",
            True, len(rep.engine_notes) >= 2)
    rep.note(f"threshold C(20,16) - 2*16 + 1 = {threshold}; computed value "
             + ("meets" if greedy >= threshold else "misses")
             + " the threshold (reported as computed)")


def _suite_thm61(rep: Report, params: dict, rng: random.Random) -> None:
    n_max = int(params.get("n_max", 5))
    ks = (int(params["k"]),) if "k" in params else (1, 2)
    screened = 0
    bad = 0
    for I in two_linear_edge_ideals(n_max):
        screened += 1
        dec = quadratic_decomposition(I)
        if dec is None:
            bad += 1
            rep.note("no decomposition: " + ideal_to_json(I))
            continue
        n = I.n
        ok = True
        for k in ks:
            Ik = I ** k
            for ell in range(0, 2 * k + 1):
                direct = iterated_gradient(Ik, ell)
                closed = gradient_power_closed_form(dec, n, k, ell)
                if direct != closed:
                    ok = False
                if not direct.is_unit and linear_quotients_order(direct) is None:
                    ok = False
                if ell >= k and direct != MonomialIdeal.maximal(n) ** (2 * k - ell):
                    ok = False
        gJ = gradient(dec.J)
        if dec.P * dec.P + dec.J + dec.P * gJ != dec.P * (dec.P + gJ):
            ok = False
        if not ok:
            bad += 1
            rep.note("replay ideal: " + ideal_to_json(I))
    rep.add(f"{screened} screened 2-linear edge ideals (n <= {n_max}): "
            "closed form, linear quotients at every level, pure-power "
            "tail, and the product identity all hold", 0, bad)


_DISPATCH = {
    "thm2.2": _suite_thm22,
    "thm2.3": _suite_thm23,
    "prop2.1": _suite_prop21,
    "cor2.4": _suite_cor24,
    "thm3.1": _suite_thm31,
    "lem3.2": _suite_lem32,
    "prop3.3": _suite_prop33,
    "thm4.3": _suite_thm43,
    "thm5.1": _suite_thm51,
    "kk-remark": _suite_kk_remark,
    "thm6.1": _suite_thm61,
}

VERIFY_IDS = tuple(sorted(_DISPATCH))


def verify_theorem(theorem_id: str, parameters: Optional[dict] = None,
                   seed: int = 0) -> Report:
    if theorem_id not in _DISPATCH:
        raise DomainError(f"unknown verification id: {theorem_id!r}; "
                          f"known ids: {', '.join(VERIFY_IDS)}")
    parameters = dict(parameters or {})
    rep = Report(theorem_id=theorem_id, parameters=parameters, seed=seed)
    rng = random.Random(seed)
    _DISPATCH[theorem_id](rep, parameters, rng)
    return rep
