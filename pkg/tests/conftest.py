import pytest

from idealpow import Monomial, MonomialIdeal


def ideal(*vectors) -> MonomialIdeal:
    return MonomialIdeal.from_exponents(vectors)


def mono(*exps) -> Monomial:
    return Monomial(tuple(exps))


@pytest.fixture
def section_example():
    """The worked bivariate example <x^4, x^3y^2, y^3>."""
    return ideal((4, 0), (3, 2), (0, 3))
