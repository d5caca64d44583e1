"""Exact arithmetic on monomials and monomial ideals.

Monomials are exponent vectors of a fixed arity; ideals are finite
generator sets with a canonical minimal form (lexicographically sorted
divisibility antichain).  Everything here is pure and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .backend import minimal_indices
from .errors import (
    ArityMismatchError,
    EmptyGeneratingSetError,
    ExponentOverflowError,
    OracleCapError,
    ParameterError,
)

INT64_MAX = 2**63 - 1

#: Default cap on the number of products power_naive may enumerate.
DEFAULT_ORACLE_CAP = 10**7


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial x1^e1 ... xn^en, stored as its exponent vector."""

    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        object.__setattr__(self, "exps", exps)
        if len(exps) == 0:
            raise ParameterError("monomial needs arity >= 1")
        for e in exps:
            if e < 0:
                raise ParameterError(f"negative exponent {e}")
            if e > INT64_MAX:
                raise ExponentOverflowError(f"exponent {e} exceeds 64-bit range")

    @property
    def arity(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_monomial(self)


def variable_names(n: int) -> list[str]:
    """Display names x, y, z, w, then x5, x6, ..."""
    base = ["x", "y", "z", "w"]
    return [base[i] if i < 4 else f"x{i + 1}" for i in range(n)]


def format_monomial(m: Monomial) -> str:
    names = variable_names(m.arity)
    parts = []
    for name, e in zip(names, m.exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts) if parts else "1"


def _check_arity(a, b):
    if a.arity != b.arity:
        raise ArityMismatchError()


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b, i.e. componentwise a.exps <= b.exps."""
    _check_arity(a, b)
    return all(x <= y for x, y in zip(a.exps, b.exps))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    """Product a*b; exponent sums are overflow-checked."""
    _check_arity(a, b)
    sums = tuple(x + y for x, y in zip(a.exps, b.exps))
    if max(sums) > INT64_MAX:
        raise ExponentOverflowError("product exponent exceeds 64-bit range")
    return Monomial(sums)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by a finite generator set.

    Generators are deduplicated and stored lexicographically sorted, so
    two ideals in minimal form are equal iff their gens tuples are equal.
    ``minimal`` is only set by ``minimalize`` and friends.
    """

    arity: int
    gens: tuple[Monomial, ...]
    minimal: bool = field(default=False, compare=False)

    def __post_init__(self):
        gens = tuple(sorted(set(self.gens)))
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise EmptyGeneratingSetError()
        for g in gens:
            if g.arity != self.arity:
                raise ArityMismatchError()

    @classmethod
    def from_exponents(cls, vectors: Iterable[Sequence[int]], minimal: bool = False) -> "MonomialIdeal":
        gens = tuple(Monomial(tuple(v)) for v in vectors)
        if not gens:
            raise EmptyGeneratingSetError()
        return cls(gens[0].arity, gens, minimal)

    def __len__(self) -> int:
        return len(self.gens)

    def exponents(self) -> list[tuple[int, ...]]:
        return [g.exps for g in self.gens]

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.gens) + ">"


def minimalize(gens: Iterable[Monomial]) -> MonomialIdeal:
    """Canonical minimal generating set: drop every monomial strictly
    divisible by another, after deduplication.  Idempotent."""
    gens = list(gens)
    if not gens:
        raise EmptyGeneratingSetError()
    arity = gens[0].arity
    for g in gens:
        if g.arity != arity:
            raise ArityMismatchError()
    vecs = sorted({g.exps for g in gens})
    keep = minimal_indices(vecs)
    return MonomialIdeal(arity, tuple(Monomial(vecs[i]) for i in keep), minimal=True)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Minimal generating set of I*J.  Inputs need not be minimal; the
    result is independent of the presenting generator sets."""
    if I.arity != J.arity:
        raise ArityMismatchError()
    seen = set()
    for g in I.gens:
        ge = g.exps
        for h in J.gens:
            s = tuple(x + y for x, y in zip(ge, h.exps))
            seen.add(s)
    vecs = sorted(seen)
    if max(max(v) for v in vecs) > INT64_MAX:
        raise ExponentOverflowError("product exponent exceeds 64-bit range")
    keep = minimal_indices(vecs)
    return MonomialIdeal(I.arity, tuple(Monomial(vecs[i]) for i in keep), minimal=True)


def power(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """Minimal generating set of I^i, by iterated product with
    minimalization after every step (keeps intermediates small)."""
    if i < 1:
        raise ParameterError("power requires i >= 1")
    base = minimalize(I.gens)
    result = base
    for _ in range(i - 1):
        result = product(result, base)
    return result


def power_naive(I: MonomialIdeal, i: int, cap: int = DEFAULT_ORACLE_CAP) -> MonomialIdeal:
    """Brute-force oracle for ``power``: enumerate all i-fold products of
    the given generators (with repetition), then minimalize once."""
    if i < 1:
        raise ParameterError("power requires i >= 1")
    g = len(I.gens)
    if comb(g + i - 1, i) > cap:
        raise OracleCapError()
    seen = set()
    for combo in combinations_with_replacement(I.gens, i):
        s = tuple(sum(col) for col in zip(*(m.exps for m in combo)))
        seen.add(s)
    if max(max(v) for v in seen) > INT64_MAX:
        raise ExponentOverflowError("product exponent exceeds 64-bit range")
    return minimalize(Monomial(v) for v in seen)


def contains_monomial(I: MonomialIdeal, m: Monomial) -> bool:
    """Membership m in I: some generator divides m."""
    if I.arity != m.arity:
        raise ArityMismatchError()
    return any(divides(g, m) for g in I.gens)


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """J subseteq I, tested generator by generator."""
    if I.arity != J.arity:
        raise ArityMismatchError()
    return all(contains_monomial(I, g) for g in J.gens)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Equality of ideals via canonical minimal forms."""
    if I.arity != J.arity:
        raise ArityMismatchError()
    A = I if I.minimal else minimalize(I.gens)
    B = J if J.minimal else minimalize(J.gens)
    return A.gens == B.gens
