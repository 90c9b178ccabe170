"""Green's relations, divisibility relations, Archimedean predicates."""

from functools import lru_cache

from .core import power_orbit
from .ideals import (
    LEFT,
    RIGHT,
    TWO_SIDED,
    closure_product,
    principal_ideal,
)

GREEN_KINDS = ("L", "R", "J", "H")

S1 = "s1"
S_ONLY = "s"
DIVISOR_UNIVERSES = (S1, S_ONLY)


class Partition:
    """Equivalence classes over 0..n-1, listed by least member."""

    __slots__ = ("n", "classes", "class_of")

    def __init__(self, n, classes):
        ordered = sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[:1])
        if any(not c for c in ordered):
            raise ValueError("classes must be nonempty")
        class_of = [None] * n
        for i, c in enumerate(ordered):
            for x in c:
                if not 0 <= x < n:
                    raise ValueError(f"element {x} out of range")
                if class_of[x] is not None:
                    raise ValueError(f"element {x} in two classes")
                class_of[x] = i
        if None in class_of:
            raise ValueError("classes must cover 0..n-1")
        self.n = n
        self.classes = tuple(frozenset(c) for c in ordered)
        self.class_of = tuple(class_of)

    @classmethod
    def from_class_map(cls, labels):
        groups = {}
        for x, label in enumerate(labels):
            groups.setdefault(label, []).append(x)
        return cls(len(labels), groups.values())

    def relates(self, a, b):
        return self.class_of[a] == self.class_of[b]

    def class_containing(self, a):
        return self.classes[self.class_of[a]]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.classes == other.classes

    def __hash__(self):
        return hash(self.classes)

    def __repr__(self):
        body = " ".join("{" + ",".join(map(str, sorted(c))) + "}" for c in self.classes)
        return f"Partition({body})"


@lru_cache(maxsize=1 << 15)
def green_partition(S, kind):
    """Partition by equality of principal ideals; H refines L and R."""
    if kind not in GREEN_KINDS:
        raise ValueError(f"unknown Green relation {kind!r}")
    if kind == "H":
        L = green_partition(S, "L")
        R = green_partition(S, "R")
        labels = [(L.class_of[a], R.class_of[a]) for a in range(S.n)]
    else:
        side = {"L": LEFT, "R": RIGHT, "J": TWO_SIDED}[kind]
        labels = [principal_ideal(S, a, side) for a in range(S.n)]
    return Partition.from_class_map(labels)


def divides(S, a, b, universe=S1):
    """b <= xay for some x, y in the chosen universe.

    With universe "s1" either factor may be absent; with "s" both factors
    range over the structure itself.
    """
    if universe == S1:
        parts = [None, a, None]
    elif universe == S_ONLY:
        full = frozenset(range(S.n))
        parts = [full, a, full]
    else:
        raise ValueError(f"unknown divisor universe {universe!r}")
    return b in closure_product(S, parts)


def divides_sided(S, a, b, side, universe=S1):
    """Left: b in (S1 a]; right: b in (a S1] (universe "s" drops the unit)."""
    if universe == S1:
        factor = None
    elif universe == S_ONLY:
        factor = frozenset(range(S.n))
    else:
        raise ValueError(f"unknown divisor universe {universe!r}")
    if side == LEFT:
        parts = [factor, a]
    elif side == RIGHT:
        parts = [a, factor]
    else:
        raise ValueError(f"unknown side {side!r}")
    return b in closure_product(S, parts)


@lru_cache(maxsize=1 << 15)
def is_archimedean(S, side):
    """Some power of every element falls under every other element.

    Two-sided: b^m in (SaS]; left: b^m in (Sa]; right: b^m in (aS].
    The witness exponent is bounded by b's orbit span inside S.
    """
    full = frozenset(range(S.n))
    for a in range(S.n):
        if side == LEFT:
            target = closure_product(S, [full, a])
        elif side == RIGHT:
            target = closure_product(S, [a, full])
        elif side == TWO_SIDED:
            target = closure_product(S, [full, a, full])
        else:
            raise ValueError(f"unknown side {side!r}")
        for b in range(S.n):
            o = power_orbit(S, b)
            x = b
            ok = False
            for _ in range(o.index + o.period):
                if x in target:
                    ok = True
                    break
                x = S.mul[x][b]
            if not ok:
                return False
    return True
