"""Downward closures, ideals, kernel, simplicity, group-like solvability."""

from functools import lru_cache
from itertools import product

LEFT = "left"
RIGHT = "right"
TWO_SIDED = "two-sided"
SIDES = (LEFT, RIGHT, TWO_SIDED)


def _check_side(side):
    if side not in SIDES:
        raise ValueError(f"unknown sidedness {side!r}")


def downward_closure(S, members):
    """Everything below some member: {t : t <= h for some h in members}."""
    out = set()
    for h in members:
        out |= S.down[h]
    return frozenset(out)


def closure_product(S, parts):
    """Downward-closed set of products, one factor chosen per part.

    Each part is an element index, an iterable of indices, or None for an
    optional whole-universe factor (absent or any element); None parts are
    how x, y ranging over the unit extension are expressed.
    """
    if not parts:
        raise ValueError("parts must be nonempty")
    choice_lists = []
    for p in parts:
        if p is None:
            choice_lists.append([None] + list(range(S.n)))
        elif isinstance(p, int):
            choice_lists.append([p])
        else:
            choice_lists.append(sorted(p))
    products = set()
    for combo in product(*choice_lists):
        word = [c for c in combo if c is not None]
        if not word:
            continue
        x = word[0]
        for y in word[1:]:
            x = S.mul[x][y]
        products.add(x)
    return downward_closure(S, products)


def principal_ideal(S, a, side):
    """Smallest sided ideal containing a.

    Left: (a u Sa], right: (a u aS], two-sided: (a u Sa u aS u SaS].
    """
    _check_side(side)
    n = S.n
    base = {a}
    if side in (LEFT, TWO_SIDED):
        base.update(S.mul[x][a] for x in range(n))
    if side in (RIGHT, TWO_SIDED):
        base.update(S.mul[a][x] for x in range(n))
    if side == TWO_SIDED:
        base.update(S.mul[x][S.mul[a][y]] for x in range(n) for y in range(n))
    return downward_closure(S, base)


def is_ideal(S, members, side):
    """Sided absorption plus downward closure."""
    _check_side(side)
    A = frozenset(members)
    if not A:
        raise ValueError("ideal candidate must be nonempty")
    if downward_closure(S, A) != A:
        return False
    if side in (LEFT, TWO_SIDED):
        if any(S.mul[x][a] not in A for x in range(S.n) for a in A):
            return False
    if side in (RIGHT, TWO_SIDED):
        if any(S.mul[a][x] not in A for a in A for x in range(S.n)):
            return False
    return True


@lru_cache(maxsize=1 << 15)
def all_ideals(S, side):
    """Every nonempty sided ideal, ascending by membership bitmask."""
    _check_side(side)
    n = S.n
    found = []
    for mask in range(1, 1 << n):
        members = frozenset(i for i in range(n) if mask >> i & 1)
        if is_ideal(S, members, side):
            found.append(members)
    return tuple(found)


def kernel(S):
    """Intersection of all two-sided ideals, or None when empty."""
    inter = None
    for ideal in all_ideals(S, TWO_SIDED):
        inter = ideal if inter is None else inter & ideal
    return inter if inter else None


def is_simple(S, side):
    """No proper sided ideals (the full set is always one)."""
    return len(all_ideals(S, side)) == 1


def is_group_like(S, side):
    """Solvability of a <= xb (left), a <= by (right), or both (two-sided)."""
    _check_side(side)
    n = S.n
    for a in range(n):
        for b in range(n):
            if side in (LEFT, TWO_SIDED):
                if not any(S.leq[a][S.mul[x][b]] for x in range(n)):
                    return False
            if side in (RIGHT, TWO_SIDED):
                if not any(S.leq[a][S.mul[b][y]] for y in range(n)):
                    return False
    return True
