"""Seeded randomized theorem checks and the self-test suite.

Every check here verifies a statement that is a theorem, so a failure
always means an implementation bug.  The same generators and checks back
the acceptance test suite; the `selftest` CLI subcommand runs them all.
"""

from __future__ import annotations

import random
from itertools import product as iproduct
from typing import Callable

from .construction import (
    cross_section_count,
    cross_section_monomials,
    q_box_membership,
    skeleton,
    verify_absorption,
)
from .monomial import (
    DEFAULT_ORACLE_CAP,
    Monomial,
    MonomialIdeal,
    contains_ideal,
    contains_monomial,
    divides,
    equals,
    minimalize,
    power,
    power_naive,
    product,
)
from .tiny_squares import (
    SortedBivariateIdeal,
    check_improved,
    interval_divisibility_holds,
    redundancy_check,
    swap_reverse,
)


def random_ideal(rng: random.Random, max_arity=3, max_gens=6, max_exp=8) -> MonomialIdeal:
    n = rng.randint(1, max_arity)
    k = rng.randint(1, max_gens)
    gens = [Monomial(tuple(rng.randint(0, max_exp) for _ in range(n))) for _ in range(k)]
    return MonomialIdeal(n, tuple(gens))


def random_sorted_bivariate(rng: random.Random, m_lo=5, m_hi=9, max_exp=40) -> SortedBivariateIdeal:
    m = rng.randint(m_lo, m_hi)
    a = sorted(rng.sample(range(max_exp + 1), m), reverse=True)
    b = sorted(rng.sample(range(max_exp + 1), m))
    return SortedBivariateIdeal(tuple(Monomial((ai, bi)) for ai, bi in zip(a, b)))


def check_basic_absorption(ns=(2, 3, 4), ts=(1, 2, 3)) -> bool:
    """J*Q and Q^2 both land inside J^2 for Q = <mu^2>."""
    for n, t in iproduct(ns, ts):
        J = skeleton(n, t)
        Q = MonomialIdeal(n, (Monomial(tuple([2 * t] * n)),))
        J2 = power(J, 2)
        if not (contains_ideal(J2, product(J, Q)) and contains_ideal(J2, product(Q, Q))):
            return False
    return True


def check_absorption_random_subsets(seed=0, subsets=50, nts=((2, 2), (2, 3), (3, 2), (3, 3)), powers=(2, 3)) -> bool:
    """Adding any subset of the cross-section leaves J^i unchanged."""
    rng = random.Random(seed)
    for n, t in nts:
        cs = cross_section_monomials(n, t)
        for _ in range(subsets):
            subset = [q for q in cs if rng.random() < 0.5]
            for i in powers:
                if not verify_absorption(n, t, subset, i):
                    return False
    return True


def check_qbox_sweep(ns=(2, 3), ts=(1, 2, 3)) -> bool:
    """The closed-form box test agrees with 'in Q but not in J' on all of
    [0, 4t]^n (outside that region a Q-member with an exponent >= 3t is
    already in J)."""
    for n, t in iproduct(ns, ts):
        J = skeleton(n, t)
        mu2 = Monomial(tuple([2 * t] * n))
        for exps in iproduct(range(4 * t + 1), repeat=n):
            m = Monomial(exps)
            direct = divides(mu2, m) and not contains_monomial(J, m)
            if q_box_membership(n, t, m) != direct:
                return False
    return True


def check_t_independence(ns=(2, 3), ts=(1, 2, 3), max_power=4) -> bool:
    """|G(J^i)| does not depend on t."""
    for n in ns:
        for i in range(1, max_power + 1):
            sizes = {len(power(skeleton(n, t), i)) for t in ts}
            if len(sizes) != 1:
                return False
    return True


def check_oracle_equivalence(seed=0, count=200, max_power=3, cap=DEFAULT_ORACLE_CAP) -> bool:
    """Iterated-product powers equal the brute-force enumeration."""
    rng = random.Random(seed)
    for _ in range(count):
        I = random_ideal(rng)
        i = rng.randint(1, max_power)
        if not equals(power(I, i), power_naive(I, i, cap=cap)):
            return False
    return True


def check_redundancy_random(seed=0, count=500) -> bool:
    rng = random.Random(seed)
    return all(redundancy_check(random_sorted_bivariate(rng)) for _ in range(count))


def check_interval_random(seed=0, count=200) -> bool:
    """Interval lemma on randomly chosen precondition-satisfying triples."""
    rng = random.Random(seed)
    done = 0
    while done < count:
        I = random_sorted_bivariate(rng)
        m = I.m
        V = [(i, j) for i in range(1, m + 1) for j in range(i, m + 1)]
        fs = {v: I.u(v[0]) * I.u(v[1]) for v in V}
        v = rng.choice(V)
        dominated = [w for w in V if divides(fs[v], fs[w])]
        pairs = [
            (w1, w2)
            for w1 in dominated
            for w2 in dominated
            if w1[0] <= w2[0] and w1[1] <= w2[1]
        ]
        v1, v2 = rng.choice(pairs)
        if not interval_divisibility_holds(I, v, v1, v2):
            return False
        done += 1
    return True


def check_duality_random(seed=0, count=200) -> bool:
    """Swapping coordinates and reversing order exchanges B with B* and
    C with C*, and fixes A."""
    rng = random.Random(seed)
    for _ in range(count):
        I = random_sorted_bivariate(rng)
        f = check_improved(I).flags
        g = check_improved(swap_reverse(I)).flags
        if not (g["B"] == f["Bstar"] and g["C"] == f["Cstar"] and g["A"] == f["A"]
                and g["Bstar"] == f["B"] and g["Cstar"] == f["C"]):
            return False
    return True


def check_minimalize_properties(seed=0, count=200) -> bool:
    """Idempotence, antichain output, generating-set independence."""
    rng = random.Random(seed)
    for _ in range(count):
        I = random_ideal(rng)
        M = minimalize(I.gens)
        if minimalize(M.gens).gens != M.gens:
            return False
        for g in M.gens:
            for h in M.gens:
                if g != h and divides(g, h):
                    return False
        # appending redundant generators must not change products
        if len(M.gens) >= 2:
            extra = M.gens[0] * M.gens[1]
            padded = MonomialIdeal(I.arity, M.gens + (extra,))
            if not equals(product(I, I), product(padded, I)):
                return False
    return True


def check_cross_section_cardinality(ns=(2, 3), ts=(1, 2, 3, 7)) -> bool:
    return all(
        len(cross_section_monomials(n, t)) == cross_section_count(n, t)
        for n, t in iproduct(ns, ts)
    )


SUITE: list[tuple[str, Callable[..., bool]]] = [
    ("basic-absorption", check_basic_absorption),
    ("absorption-random-subsets", check_absorption_random_subsets),
    ("q-minus-j-box-sweep", check_qbox_sweep),
    ("t-independence", check_t_independence),
    ("oracle-equivalence", check_oracle_equivalence),
    ("redundancy-implications", check_redundancy_random),
    ("interval-divisibility", check_interval_random),
    ("condition-duality", check_duality_random),
    ("minimalize-properties", check_minimalize_properties),
    ("cross-section-cardinality", check_cross_section_cardinality),
]


def run_suite(seed: int = 0, cap: int = DEFAULT_ORACLE_CAP) -> list[tuple[str, bool]]:
    results = []
    for name, fn in SUITE:
        kwargs = {}
        if "seed" in fn.__code__.co_varnames[: fn.__code__.co_argcount]:
            kwargs["seed"] = seed
        if "cap" in fn.__code__.co_varnames[: fn.__code__.co_argcount]:
            kwargs["cap"] = cap
        results.append((name, fn(**kwargs)))
    return results
