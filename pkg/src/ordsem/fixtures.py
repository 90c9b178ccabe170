"""Small named structures used throughout the test suite and docs."""

from .core import validate

_DISCRETE2 = ((True, False), (False, True))
_DISCRETE3 = ((True, False, False), (False, True, False), (False, False, True))


def c2():
    """Two-element chain with meet as the product (0 < 1)."""
    return validate(((0, 0), (0, 1)), ((True, True), (False, True)))


def l2():
    """Left-zero semigroup on two elements, discrete order."""
    return validate(((0, 0), (1, 1)), _DISCRETE2)


def r2():
    """Right-zero semigroup on two elements, discrete order."""
    return validate(((0, 1), (0, 1)), _DISCRETE2)


def n2():
    """Null semigroup (every product is 0), ordered 0 < 1."""
    return validate(((0, 0), (0, 0)), ((True, True), (False, True)))


def z2():
    """Two-element group (0 is the identity), discrete order."""
    return validate(((0, 1), (1, 0)), _DISCRETE2)


def m3():
    """Monogenic semigroup a, a^2, a^3 with a^4 = a^3, discrete order."""
    return validate(((1, 2, 2), (2, 2, 2), (2, 2, 2)), _DISCRETE3)


def all_fixtures():
    return {"C2": c2(), "L2": l2(), "R2": r2(), "N2": n2(), "Z2": z2(), "M3": m3()}
