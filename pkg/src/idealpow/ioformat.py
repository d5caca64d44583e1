"""Flat-file ideal format.

Text, UTF-8, LF.  '#' starts a comment line, a header line ``nvars: <n>``
comes first, then one generator per line as n space-separated nonnegative
decimal integers.  parse(emit(I)) == I for canonical ideals.
"""

from __future__ import annotations

from .errors import ParseError
from .monomial import Monomial, MonomialIdeal, format_monomial


def parse(text: str) -> MonomialIdeal:
    nvars = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if nvars is None:
            if not line.startswith("nvars:"):
                raise ParseError(lineno, 1, "expected 'nvars: <n>' header")
            value = line[len("nvars:"):].strip()
            try:
                nvars = int(value)
            except ValueError:
                raise ParseError(lineno, line.index(value) + 1, f"bad variable count {value!r}") from None
            if nvars < 1:
                raise ParseError(lineno, 1, "nvars must be >= 1")
            continue
        fields = line.split()
        if len(fields) != nvars:
            raise ParseError(lineno, 1, f"expected {nvars} exponents, got {len(fields)}")
        exps = []
        for field in fields:
            col = raw.index(field) + 1
            try:
                e = int(field)
            except ValueError:
                raise ParseError(lineno, col, f"bad exponent {field!r}") from None
            if e < 0:
                raise ParseError(lineno, col, "exponents must be nonnegative")
            exps.append(e)
        gens.append(Monomial(tuple(exps)))
    if nvars is None:
        raise ParseError(1, 1, "missing 'nvars:' header")
    if not gens:
        raise ParseError(1, 1, "no generators")
    return MonomialIdeal(nvars, tuple(gens))


def parse_file(path) -> MonomialIdeal:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def emit(I: MonomialIdeal) -> str:
    lines = [f"# {I}", f"nvars: {I.arity}"]
    for g in I.gens:
        lines.append(" ".join(str(e) for e in g.exps) + f"  # {format_monomial(g)}")
    return "\n".join(lines) + "\n"


def emit_file(I: MonomialIdeal, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit(I))
