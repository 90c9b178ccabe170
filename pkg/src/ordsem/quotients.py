"""Zero elements, nil structures, Rees factor structures, nil extensions."""

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    OrderedSemigroup,
    are_isomorphic,
    power_orbit,
    validate,
    zero_element,
)
from .ideals import TWO_SIDED, is_ideal
from .regularity import NILPOTENT, element_class

__all__ = [
    "NotAnIdeal",
    "ReesQuotient",
    "zero_element",
    "is_nil",
    "rees_quotient",
    "is_nil_extension",
    "is_nil_extension_powers",
    "is_ideal_extension",
]


class NotAnIdeal(Exception):
    def __init__(self, members):
        self.members = frozenset(members)
        super().__init__(f"{sorted(members)} is not a two-sided ideal")


def is_nil(S):
    """A zero exists and every element has a power below it."""
    if zero_element(S) is None:
        return False
    return element_class(S, NILPOTENT) == frozenset(range(S.n))


@dataclass(frozen=True)
class ReesQuotient:
    """Collapse of an ideal to a fresh bottom zero.

    project maps original elements onto quotient elements; it sends the
    whole ideal to the zero index and is injective elsewhere.
    """

    quotient: OrderedSemigroup
    zero: int
    project: tuple


@lru_cache(maxsize=1 << 14)
def rees_quotient(S, ideal_members):
    """Factor structure on (S minus I) plus a fresh zero.

    Products falling into the ideal become the zero; the order keeps the
    surviving pairs and puts the zero below everything.  The result is
    re-validated on every call, so a construction that broke an axiom
    would raise instead of propagating.
    """
    I = frozenset(ideal_members)
    if not I or not is_ideal(S, I, TWO_SIDED):
        raise NotAnIdeal(I)
    rest = [e for e in range(S.n) if e not in I]
    pos = {e: i for i, e in enumerate(rest)}
    z = len(rest)
    m = z + 1
    mul = [[z] * m for _ in range(m)]
    for a in rest:
        for b in rest:
            ab = S.mul[a][b]
            mul[pos[a]][pos[b]] = pos[ab] if ab in pos else z
    leq = [[False] * m for _ in range(m)]
    for a in rest:
        for b in rest:
            leq[pos[a]][pos[b]] = S.leq[a][b]
    for x in range(m):
        leq[z][x] = True
    leq[z][z] = True
    quotient = validate(mul, leq)
    project = tuple(pos.get(e, z) for e in range(S.n))
    return ReesQuotient(quotient, z, project)


def is_nil_extension(S, ideal_members):
    """The factor structure modulo the ideal is nil."""
    return is_nil(rees_quotient(S, frozenset(ideal_members)).quotient)


@lru_cache(maxsize=1 << 15)
def is_nil_extension_powers(S, ideal_members):
    """Every element has some power inside the ideal (orbit-bounded)."""
    I = frozenset(ideal_members)
    if not I or not is_ideal(S, I, TWO_SIDED):
        raise NotAnIdeal(I)
    for a in range(S.n):
        o = power_orbit(S, a)
        x = a
        ok = False
        for _ in range(o.index + o.period):
            if x in I:
                ok = True
                break
            x = S.mul[x][a]
        if not ok:
            return False
    return True


def is_ideal_extension(V, inner_members, Q):
    """V extends the given ideal by Q: factoring V by it reproduces Q."""
    inner = frozenset(inner_members)
    if not inner or not is_ideal(V, inner, TWO_SIDED):
        return False
    return are_isomorphic(rees_quotient(V, inner).quotient, Q)[0]
