"""Element regularity classes and their pi (some-power) variants."""

from dataclasses import dataclass
from functools import lru_cache

from .core import power_orbit, zero_element
from .ideals import closure_product

REGULAR = "regular"
LEFT_REGULAR = "left-regular"
RIGHT_REGULAR = "right-regular"
INTRA_REGULAR = "intra-regular"
COMPLETELY_REGULAR = "completely-regular"
ORDERED_IDEMPOTENT = "ordered-idempotent"
NILPOTENT = "nilpotent"
KINDS = (
    REGULAR,
    LEFT_REGULAR,
    RIGHT_REGULAR,
    INTRA_REGULAR,
    COMPLETELY_REGULAR,
    ORDERED_IDEMPOTENT,
    NILPOTENT,
)

PI_KINDS = (REGULAR, INTRA_REGULAR, COMPLETELY_REGULAR)


class NoZero(Exception):
    """Nilpotence asked of a structure with no zero element."""


class UnsupportedKind(Exception):
    pass


def _member(S, a, kind, full):
    sq = S.mul[a][a]
    if kind == REGULAR:
        return a in closure_product(S, [a, full, a])
    if kind == LEFT_REGULAR:
        return a in closure_product(S, [full, sq])
    if kind == RIGHT_REGULAR:
        return a in closure_product(S, [sq, full])
    if kind == INTRA_REGULAR:
        return a in closure_product(S, [full, sq, full])
    if kind == COMPLETELY_REGULAR:
        return a in closure_product(S, [sq, full, sq])
    if kind == ORDERED_IDEMPOTENT:
        return S.leq[a][sq]
    raise UnsupportedKind(kind)


@lru_cache(maxsize=1 << 15)
def element_class(S, kind):
    """All elements of the given regularity kind.

    Membership: regular a in (aSa], left regular a in (Sa^2], right
    regular a in (a^2S], intra-regular a in (Sa^2S], completely regular
    a in (a^2Sa^2], ordered idempotent a <= a^2, nilpotent some power
    below the zero.
    """
    n = S.n
    full = frozenset(range(n))
    if kind == NILPOTENT:
        z = zero_element(S)
        if z is None:
            raise NoZero("structure has no zero element")
        out = set()
        for a in range(n):
            o = power_orbit(S, a)
            x = a
            for _ in range(o.index + o.period):
                if S.leq[x][z]:
                    out.add(a)
                    break
                x = S.mul[x][a]
        return frozenset(out)
    return frozenset(a for a in range(n) if _member(S, a, kind, full))


@lru_cache(maxsize=1 << 15)
def pi_property(S, kind):
    """Some power of every element lands in the kind's class.

    For completely regular the equivalent shifted form
    a^m in (a^(m+1) S a^(m+1)] is evaluated too; the two must agree.
    """
    if kind not in PI_KINDS:
        raise UnsupportedKind(kind)
    cls = element_class(S, kind)
    full = frozenset(range(S.n))
    for a in range(S.n):
        o = power_orbit(S, a)
        bound = o.index + o.period
        ok = False
        x = a
        for _ in range(bound):
            if x in cls:
                ok = True
                break
            x = S.mul[x][a]
        if kind == COMPLETELY_REGULAR:
            alt = False
            x = a
            for _ in range(bound):
                nxt = S.mul[x][a]
                if x in closure_product(S, [nxt, full, nxt]):
                    alt = True
                    break
                x = nxt
            assert alt == ok, f"completely-pi-regular forms disagree at {a}"
        if not ok:
            return False
    return True


@dataclass(frozen=True)
class RegularityLawsReport:
    """Outcome of the two regularity consequences, with first violation."""

    ok: bool
    failure: tuple | None


def check_regularity_laws(S):
    """Two consequences of the class definitions, checked elementwise.

    (1) every regular a has a regular witness x with a <= axa;
    (2) every right regular a has a^k in (a^(k+n)S] for all k, n up to
        the orbit bound.
    A violation would falsify either the definitions or this implementation,
    so it is reported rather than raised.
    """
    full = frozenset(range(S.n))
    reg = element_class(S, REGULAR)
    for a in reg:
        if not any(S.leq[a][S.mul[S.mul[a][x]][a]] for x in reg):
            return RegularityLawsReport(False, ("regular-witness", a))
    for a in element_class(S, RIGHT_REGULAR):
        o = power_orbit(S, a)
        bound = o.index + o.period
        ak = a
        for k in range(1, bound + 1):
            high = ak
            for n in range(1, bound + 1):
                high = S.mul[high][a]
                if ak not in closure_product(S, [high, full]):
                    return RegularityLawsReport(
                        False, ("right-regular-powers", a, k, n)
                    )
            ak = S.mul[ak][a]
    return RegularityLawsReport(True, None)
