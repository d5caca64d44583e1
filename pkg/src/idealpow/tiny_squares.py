"""Divisibility conditions guaranteeing a nine-generator square.

For a bivariate ideal in staircase form u_1..u_m (x-exponents strictly
decreasing, y-exponents strictly increasing), a short list of divisibility
conditions among the corner generators forces G(I^2) to collapse onto at
most nine products.  This module houses the original nine-condition test,
the improved five-condition test (A, B, B*, C, C*), the index duality on
V = {(i,j) : 1 <= i <= j <= m}, and a three-parameter family of ideals
passing the improved test.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError, PreconditionError, TheoremViolationError
from .monomial import Monomial, MonomialIdeal, divides, minimalize, multiply, power

VERIFIED_NINE = "verified-nine"
AT_MOST_NINE = "at-most-nine-with-collisions"
CONDITIONS_FAIL = "conditions-fail"

IMPROVED_KEYS = ("A", "B", "Bstar", "C", "Cstar")
ORIGINAL_KEYS = ("2", "3.1", "3.2", "4.1", "4.2", "5.1", "5.2", "6.1", "6.2")


@dataclass(frozen=True)
class SortedBivariateIdeal:
    """Bivariate ideal in staircase form: a strictly decreasing,
    b strictly increasing.  Such a list is automatically a minimal
    antichain."""

    gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        if len(gens) < 2:
            raise ParameterError("need at least two generators")
        for g in gens:
            if g.arity != 2:
                raise ParameterError("staircase form requires arity 2")
        a = [g.exps[0] for g in gens]
        b = [g.exps[1] for g in gens]
        if any(a[i] <= a[i + 1] for i in range(len(a) - 1)):
            raise ParameterError("x-exponents must strictly decrease")
        if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
            raise ParameterError("y-exponents must strictly increase")

    @property
    def m(self) -> int:
        return len(self.gens)

    def u(self, i: int) -> Monomial:
        """1-based generator access, matching the u_1..u_m labelling."""
        if not 1 <= i <= self.m:
            raise ParameterError(f"index {i} out of range 1..{self.m}")
        return self.gens[i - 1]

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(2, self.gens, minimal=True)


@dataclass(frozen=True)
class ConditionReport:
    scheme: str  # "original" or "improved"
    flags: dict[str, bool]
    all_hold: bool


@dataclass(frozen=True)
class TinySquareReport:
    conditions: ConditionReport
    predicted: tuple[Monomial, ...]
    actual: MonomialIdeal
    verdict: str

    def to_json_dict(self) -> dict:
        return {
            "scheme": self.conditions.scheme,
            "flags": dict(self.conditions.flags),
            "predicted": [list(g.exps) for g in self.predicted],
            "actual": [list(g.exps) for g in self.actual.gens],
            "verdict": self.verdict,
        }


def normalize(I: MonomialIdeal) -> SortedBivariateIdeal:
    """Minimalize and sort a bivariate ideal into staircase form."""
    if I.arity != 2:
        raise ParameterError("staircase form requires arity 2")
    M = I if I.minimal else minimalize(I.gens)
    gens = sorted(M.gens, key=lambda g: -g.exps[0])
    return SortedBivariateIdeal(tuple(gens))


def _require_m5(I: SortedBivariateIdeal):
    if I.m < 5:
        raise ParameterError("theorem requires m >= 5")


def _pair_divides(I, p, q, r, s):
    # u_p u_q | u_r u_s
    return divides(multiply(I.u(p), I.u(q)), multiply(I.u(r), I.u(s)))


def check_improved(I: SortedBivariateIdeal) -> ConditionReport:
    """Conditions A, B, B*, C, C* of the improved tiny-square test."""
    _require_m5(I)
    m = I.m
    flags = {
        "A": _pair_divides(I, 1, m, 2, m - 1),
        "B": _pair_divides(I, 2, 2, 1, 3),
        "Bstar": _pair_divides(I, m - 1, m - 1, m - 2, m),
        "C": _pair_divides(I, 2, 2, 1, m - 2),
        "Cstar": _pair_divides(I, m - 1, m - 1, 3, m),
    }
    return ConditionReport("improved", flags, all(flags.values()))


def check_original(I: SortedBivariateIdeal) -> ConditionReport:
    """The original nine divisibility conditions."""
    _require_m5(I)
    m = I.m
    flags = {
        "2": _pair_divides(I, 1, m, 2, m - 1),
        "3.1": _pair_divides(I, 1, m - 1, 2, 3),
        "3.2": _pair_divides(I, 1, m - 1, m - 2, m - 2),
        "4.1": _pair_divides(I, 2, 2, 1, 3),
        "4.2": _pair_divides(I, 2, 2, 1, m - 2),
        "5.1": _pair_divides(I, 2, m, 3, m - 1),
        "5.2": _pair_divides(I, 2, m, m - 2, m - 1),
        "6.1": _pair_divides(I, m - 1, m - 1, 3, m),
        "6.2": _pair_divides(I, m - 1, m - 1, m - 2, m),
    }
    return ConditionReport("original", flags, all(flags.values()))


def predicted_nine(I: SortedBivariateIdeal) -> set[Monomial]:
    """The nine corner products that generate I^2 when the conditions
    hold.  Returned as a set; coinciding products collapse."""
    _require_m5(I)
    m = I.m
    pairs = [
        (1, 1), (1, 2), (2, 2),
        (1, m - 1), (1, m), (2, m),
        (m - 1, m - 1), (m - 1, m), (m, m),
    ]
    return {multiply(I.u(i), I.u(j)) for i, j in pairs}


def verify_tiny_square(I: SortedBivariateIdeal, scheme: str = "improved") -> TinySquareReport:
    """Run the condition check and compare G(I^2) against the predicted
    nine products.  ``actual`` is computed even when conditions fail, so
    near-miss ideals can be inspected."""
    _require_m5(I)
    if scheme == "improved":
        conditions = check_improved(I)
    elif scheme == "original":
        conditions = check_original(I)
    else:
        raise ParameterError(f"unknown scheme {scheme!r}")
    predicted = predicted_nine(I)
    actual = power(I.as_ideal(), 2)
    if not conditions.all_hold:
        verdict = CONDITIONS_FAIL
    else:
        if not set(actual.gens) <= predicted or len(actual) > 9:
            raise TheoremViolationError(
                "conditions hold but G(I^2) is not contained in the nine products"
            )
        verdict = VERIFIED_NINE if len(actual) == 9 else AT_MOST_NINE
    return TinySquareReport(
        conditions=conditions,
        predicted=tuple(sorted(predicted)),
        actual=actual,
        verdict=verdict,
    )


def family_ideal(l: int, k: int, t: int) -> SortedBivariateIdeal:
    """The three-parameter family with m = t*l + 4 generators.

    x-exponents: kl, (k-t)l, then the run (k-t)l - 1 down to (k-2t)l,
    then tl, then 0; y-exponents are the same sequence reversed.
    Requires k >= 4t; strict monotonicity is asserted by construction.
    """
    if l < 1 or t < 1:
        raise ParameterError("need l >= 1 and t >= 1")
    if k < 4 * t:
        raise ParameterError("need k >= 4t")
    a = [k * l, (k - t) * l]
    a.extend(range((k - t) * l - 1, (k - 2 * t) * l - 1, -1))
    a.extend([t * l, 0])
    b = list(reversed(a))
    assert len(a) == t * l + 4
    return SortedBivariateIdeal(tuple(Monomial((ai, bi)) for ai, bi in zip(a, b)))


def dual_index(i: int, j: int, m: int) -> tuple[int, int]:
    """Reflect (i, j) in V about the line i + j = m + 1.  An involution."""
    if not 1 <= i <= j <= m:
        raise ParameterError(f"({i},{j}) not in V for m={m}")
    return (m + 1 - j, m + 1 - i)


def redundancy_check(I: SortedBivariateIdeal) -> bool:
    """Check the three derivations that make conditions 5.1, 5.2 and 3.1
    redundant: (2 and 4.2 => 5.2), (2 and 4.1 => 5.1), (2 and 6.1 => 3.1).
    These are theorems; a False return signals a bug."""
    f = check_original(I).flags

    def implies(p, q):
        return (not p) or q

    return (
        implies(f["2"] and f["4.2"], f["5.2"])
        and implies(f["2"] and f["4.1"], f["5.1"])
        and implies(f["2"] and f["6.1"], f["3.1"])
    )


def _f(I: SortedBivariateIdeal, v: tuple[int, int]) -> Monomial:
    i, j = v
    return multiply(I.u(i), I.u(j))


def _check_in_V(v, m):
    i, j = v
    if not 1 <= i <= j <= m:
        raise PreconditionError(f"({i},{j}) not in V for m={m}")


def interval_divisibility_holds(
    I: SortedBivariateIdeal,
    v: tuple[int, int],
    v1: tuple[int, int],
    v2: tuple[int, int],
) -> bool:
    """Exhaustive check of the interval lemma: if f(v) divides both f(v1)
    and f(v2) with v1 <= v2, then f(v) divides f(v') for every v' in V
    between them.  A theorem; False signals a bug."""
    m = I.m
    for w in (v, v1, v2):
        _check_in_V(w, m)
    if not (v1[0] <= v2[0] and v1[1] <= v2[1]):
        raise PreconditionError("need v1 <= v2 componentwise")
    fv = _f(I, v)
    if not (divides(fv, _f(I, v1)) and divides(fv, _f(I, v2))):
        raise PreconditionError("f(v) must divide both f(v1) and f(v2)")
    for i in range(v1[0], v2[0] + 1):
        for j in range(max(i, v1[1]), v2[1] + 1):
            if not divides(fv, _f(I, (i, j))):
                return False
    return True


def swap_reverse(I: SortedBivariateIdeal) -> SortedBivariateIdeal:
    """The symmetry sigma: swap the two exponent coordinates and reverse
    the generator order.  Pairs B with B* and C with C*."""
    gens = tuple(Monomial((g.exps[1], g.exps[0])) for g in reversed(I.gens))
    return SortedBivariateIdeal(gens)
