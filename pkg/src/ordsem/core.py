"""Multiplication tables with a compatible partial order.

Elements are dense indices 0..n-1.  Structures are built through
validate() and never mutated afterwards, so instances are safe to share
across parallel workers; every operation in this package is a pure
function of its inputs.
"""

from collections import namedtuple
from itertools import permutations

MAX_ORDER = 8


class StructureError(Exception):
    """A table/order pair violates one of the structure axioms."""


class NotAssociative(StructureError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"({a}*{b})*{c} != {a}*({b}*{c})")


class NotPartialOrder(StructureError):
    def __init__(self, reason, witness):
        self.reason = reason
        self.witness = witness
        super().__init__(f"{reason} fails at {witness}")


class NotCompatible(StructureError):
    def __init__(self, a, b, x, side):
        self.witness = (a, b, x)
        self.side = side
        if side == "left":
            detail = f"{a} <= {b} but not {x}*{a} <= {x}*{b}"
        else:
            detail = f"{a} <= {b} but not {a}*{x} <= {b}*{x}"
        super().__init__(detail)


class NotClosed(StructureError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"product of {a} and {b} escapes the subset")


class OrderedSemigroup:
    """Immutable multiplication table plus partial order.

    Use validate() to build one from raw tables; the constructor assumes
    the axioms already hold.
    """

    __slots__ = ("n", "mul", "leq", "down", "_orbits", "_hash")

    def __init__(self, mul, leq):
        self.mul = tuple(tuple(row) for row in mul)
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self.n = len(self.mul)
        n = self.n
        # down[h] = everything below h; all downward closures reduce to unions of these
        self.down = tuple(
            frozenset(t for t in range(n) if self.leq[t][h]) for h in range(n)
        )
        self._orbits = {}
        self._hash = hash((self.mul, self.leq))

    def elements(self):
        return range(self.n)

    def __eq__(self, other):
        return (
            isinstance(other, OrderedSemigroup)
            and self.mul == other.mul
            and self.leq == other.leq
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"OrderedSemigroup(n={self.n}, mul={self.mul!r}, leq={self.leq!r})"


def validate(mul, leq):
    """Check all structure axioms and return the validated structure.

    Raises NotPartialOrder / NotAssociative / NotCompatible with the first
    violating witness; raises ValueError on malformed tables.
    """
    n = len(mul)
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be between 1 and {MAX_ORDER}, got {n}")
    if any(len(row) != n for row in mul):
        raise ValueError("multiplication table must be square")
    if any(not (0 <= v < n) for row in mul for v in row):
        raise ValueError("multiplication table entry out of range")
    if len(leq) != n or any(len(row) != n for row in leq):
        raise ValueError("order relation must be an n-by-n table")

    for a in range(n):
        if not leq[a][a]:
            raise NotPartialOrder("reflexivity", (a,))
    for a in range(n):
        for b in range(n):
            if a != b and leq[a][b] and leq[b][a]:
                raise NotPartialOrder("antisymmetry", (a, b))
    for a in range(n):
        for b in range(n):
            if not leq[a][b]:
                continue
            for c in range(n):
                if leq[b][c] and not leq[a][c]:
                    raise NotPartialOrder("transitivity", (a, b, c))

    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    raise NotAssociative(a, b, c)

    for a in range(n):
        for b in range(n):
            if a == b or not leq[a][b]:
                continue
            for x in range(n):
                if not leq[mul[x][a]][mul[x][b]]:
                    raise NotCompatible(a, b, x, "left")
                if not leq[mul[a][x]][mul[b][x]]:
                    raise NotCompatible(a, b, x, "right")

    return OrderedSemigroup(mul, leq)


def power(S, a, k):
    """a raised to the k-th power, k >= 1."""
    if k < 1:
        raise ValueError("exponent must be at least 1")
    x = a
    for _ in range(k - 1):
        x = S.mul[x][a]
    return x


PowerOrbit = namedtuple("PowerOrbit", "element index period")


def power_orbit(S, a):
    """Minimal (index, period) with a^(index+period) = a^index.

    The power sequence of a finite element is eventually periodic; index
    is the first exponent inside the cycle.  Every existential exponent
    search in the package is bounded by index + period, since the powers
    repeat beyond that.
    """
    cached = S._orbits.get(a)
    if cached is not None:
        return cached
    seen = {}
    x = a
    k = 1
    while x not in seen:
        seen[x] = k
        x = S.mul[x][a]
        k += 1
    orbit = PowerOrbit(a, seen[x], k - seen[x])
    S._orbits[a] = orbit
    return orbit


def orbit_span(S, a):
    """Exponent bound index + period for element a."""
    o = power_orbit(S, a)
    return o.index + o.period


def zero_element(S):
    """The unique two-sided multiplicative zero, or None."""
    for z in range(S.n):
        if all(S.mul[z][x] == z and S.mul[x][z] == z for x in range(S.n)):
            return z
    return None


def induced_subsemigroup(S, members):
    """Restrict mul and leq to a mul-closed subset.

    Returns (substructure, elems) where elems[i] is the original index of
    the i-th element.  Raises NotClosed on the first escaping product.
    """
    elems = sorted(members)
    if not elems:
        raise ValueError("subset must be nonempty")
    pos = {e: i for i, e in enumerate(elems)}
    for a in elems:
        for b in elems:
            if S.mul[a][b] not in pos:
                raise NotClosed(a, b)
    mul = [[pos[S.mul[a][b]] for b in elems] for a in elems]
    leq = [[S.leq[a][b] for b in elems] for a in elems]
    return OrderedSemigroup(mul, leq), tuple(elems)


def are_isomorphic(S, T):
    """Search all bijections preserving mul and leq both ways.

    Returns (True, perm) with perm[s_index] = t_index, or (False, None).
    """
    if S.n != T.n:
        return False, None
    n = S.n
    for perm in permutations(range(n)):
        ok = True
        for a in range(n):
            for b in range(n):
                if perm[S.mul[a][b]] != T.mul[perm[a]][perm[b]]:
                    ok = False
                    break
                if S.leq[a][b] != T.leq[perm[a]][perm[b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True, perm
    return False, None
