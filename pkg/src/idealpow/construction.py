"""The tiny-powers construction.

Builds, for given n and d, an ideal I in n variables whose powers I^2..I^d
all have fewer minimal generators than I itself.  The recipe: start from a
2n-generator "skeleton", work out how many generators the target must beat
(the capacity), then pad the skeleton with monomials from a central
cross-section of the box [2t, 3t-1]^n.  Those extra monomials are absorbed
by the skeleton in every power >= 2, so only |G(I)| grows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArityMismatchError, ParameterError, PreconditionError
from .monomial import Monomial, MonomialIdeal, divides, equals, minimalize, power


def skeleton(n: int, t: int) -> MonomialIdeal:
    """The 2n-generator skeleton: x_i^{4t} and x_i^{2t} * mu, where
    mu = (x_1...x_n)^t."""
    _check_params(n, t)
    gens = []
    for i in range(n):
        pure = [0] * n
        pure[i] = 4 * t
        gens.append(Monomial(tuple(pure)))
        mixed = [t] * n
        mixed[i] = 3 * t
        gens.append(Monomial(tuple(mixed)))
    ideal = minimalize(gens)
    assert len(ideal) == 2 * n, "skeleton generators must be an antichain"
    return ideal


def _check_params(n, t):
    if n < 2:
        raise ParameterError("need n >= 2")
    if t < 1:
        raise ParameterError("need t >= 1")


def capacity(n: int, d: int) -> int:
    """Largest |G(J^i)| over i = 1..d for the skeleton J.  Independent of
    t, so computed at t = 1."""
    if n < 2 or d < 2:
        raise ParameterError("need n >= 2 and d >= 2")
    J = skeleton(n, 1)
    return max(len(power(J, i)) for i in range(1, d + 1))


def cross_section_count(n: int, t: int) -> int:
    """Number of lattice points on a central cross-section of [2t,3t-1]^n:
    the central coefficient of (1 + x + ... + x^{t-1})^n."""
    if n < 1 or t < 1:
        raise ParameterError("need n >= 1 and t >= 1")
    coeffs = [1]
    block = [1] * t
    for _ in range(n):
        out = [0] * (len(coeffs) + t - 1)
        for i, c in enumerate(coeffs):
            for j, b in enumerate(block):
                out[i + j] += c * b
        coeffs = out
    return coeffs[n * (t - 1) // 2]


def choose_t(n: int, required: int) -> int:
    """Smallest t with cross_section_count(n, t) >= required."""
    if n < 2 or required < 1:
        raise ParameterError("need n >= 2 and required >= 1")
    t = 1
    prev = 0
    while True:
        c = cross_section_count(n, t)
        # monotonicity in t is checked, not assumed
        assert c >= prev, "cross-section count decreased in t"
        if c >= required:
            return t
        prev = c
        t += 1


def cross_section_monomials(n: int, t: int) -> list[Monomial]:
    """All exponent vectors in [2t, 3t-1]^n with coordinate sum exactly
    floor(n(5t-1)/2), lexicographically sorted."""
    _check_params(n, t)
    target = n * (5 * t - 1) // 2
    lo, hi = 2 * t, 3 * t - 1
    out: list[Monomial] = []
    vec = [0] * n

    def rec(pos: int, remaining: int):
        if pos == n - 1:
            if lo <= remaining <= hi:
                vec[pos] = remaining
                out.append(Monomial(tuple(vec)))
            return
        left = n - 1 - pos
        emin = max(lo, remaining - hi * left)
        emax = min(hi, remaining - lo * left)
        for e in range(emin, emax + 1):
            vec[pos] = e
            rec(pos + 1, remaining - e)

    rec(0, target)
    out.sort()
    return out


def q_box_membership(n: int, t: int, m: Monomial) -> bool:
    """Closed-form test for membership in Q \\ J: every exponent lies in
    [2t, 3t-1]."""
    if m.arity != n:
        raise ArityMismatchError()
    _check_params(n, t)
    return all(2 * t <= e <= 3 * t - 1 for e in m.exps)


def verify_absorption(n: int, t: int, subset: list[Monomial], i: int) -> bool:
    """Check (J + <subset>)^i = J^i for the skeleton J.  Every subset
    member must be a multiple of mu^2 = (x_1...x_n)^{2t}."""
    _check_params(n, t)
    if i < 2:
        raise ParameterError("absorption is only claimed for i >= 2")
    mu2 = Monomial(tuple([2 * t] * n))
    for q in subset:
        if q.arity != n:
            raise ArityMismatchError()
        if not divides(mu2, q):
            raise PreconditionError(f"{q} is not a multiple of mu^2")
    J = skeleton(n, t)
    if not subset:
        return True
    augmented = minimalize(list(J.gens) + list(subset))
    return equals(power(augmented, i), power(J, i))


@dataclass(frozen=True)
class ConstructionReport:
    """Outcome of one construct(n, d) run."""

    n: int
    d: int
    t: int
    capacity: int
    skeleton: MonomialIdeal
    added: tuple[Monomial, ...]
    ideal: MonomialIdeal
    sizes: tuple[int, ...]  # sizes[i-1] = |G(I^i)|
    verified: bool

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.n,
            "depth": self.d,
            "t": self.t,
            "capacity": self.capacity,
            "skeleton": [list(g.exps) for g in self.skeleton.gens],
            "added": [list(g.exps) for g in self.added],
            "sizes": list(self.sizes),
            "verified": self.verified,
        }


def construct(n: int, d: int, t_override: int | None = None) -> ConstructionReport:
    """Run the full three-step construction and verify the result.

    Verification is belt and suspenders: |G(I)| must exceed |G(I^i)| for
    all 2 <= i <= d, and I^i must literally equal J^i (the absorption
    guarantee) for those i.
    """
    A = capacity(n, d)
    required = A - 2 * n + 1
    if t_override is not None:
        if t_override < 1:
            raise ParameterError("need t >= 1")
        have = cross_section_count(n, t_override)
        if have < required:
            raise ParameterError(
                f"t={t_override} gives only {have} cross-section monomials; "
                f"need at least {required}"
            )
        t = t_override
    else:
        t = choose_t(n, required)

    J = skeleton(n, t)
    added = cross_section_monomials(n, t)
    union = list(J.gens) + list(added)
    I = minimalize(union)
    assert len(I) == len(union), "skeleton plus cross-section must be an antichain"

    sizes = [len(I)]
    verified = True
    for i in range(2, d + 1):
        Ii = power(I, i)
        sizes.append(len(Ii))
        if not (sizes[0] > len(Ii) and equals(Ii, power(J, i))):
            verified = False

    return ConstructionReport(
        n=n,
        d=d,
        t=t,
        capacity=A,
        skeleton=J,
        added=tuple(added),
        ideal=I,
        sizes=tuple(sizes),
        verified=verified,
    )
