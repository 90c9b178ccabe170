"""Congruence enumeration, semilattice decompositions, class predicates."""

from dataclasses import dataclass
from functools import lru_cache

from .core import induced_subsemigroup
from .green import Partition, green_partition, is_archimedean
from .ideals import (
    LEFT,
    TWO_SIDED,
    all_ideals,
    closure_product,
    downward_closure,
    is_group_like,
    is_simple,
)
from .quotients import is_nil_extension_powers
from .regularity import COMPLETELY_REGULAR, REGULAR, RIGHT_REGULAR, element_class


class NotACongruence(Exception):
    pass


class NotSemilattice(Exception):
    pass


class NotCompleteSemilattice(Exception):
    pass


@dataclass(frozen=True)
class Congruence:
    partition: Partition
    is_congruence: bool
    is_semilattice: bool
    is_complete: bool


def _set_partitions(n):
    """All partitions of 0..n-1 via restricted growth strings, lexicographic."""
    rgs = [0] * n

    def rec(i, used):
        if i == n:
            groups = {}
            for x, label in enumerate(rgs):
                groups.setdefault(label, []).append(x)
            yield Partition(n, groups.values())
            return
        for v in range(used + 1):
            rgs[i] = v
            yield from rec(i + 1, used + (v == used))

    yield from rec(1, 1)


def _is_congruence(S, partition):
    for cls in partition.classes:
        members = sorted(cls)
        rep = members[0]
        for b in members[1:]:
            for c in range(S.n):
                if not partition.relates(S.mul[c][rep], S.mul[c][b]):
                    return False
                if not partition.relates(S.mul[rep][c], S.mul[b][c]):
                    return False
    return True


def _semilattice_conditions(S, partition):
    n = S.n
    for a in range(n):
        if not partition.relates(a, S.mul[a][a]):
            return False
    for a in range(n):
        for b in range(a + 1, n):
            if not partition.relates(S.mul[a][b], S.mul[b][a]):
                return False
    return True


def _complete_condition(S, partition):
    for a in range(S.n):
        for b in range(S.n):
            if S.leq[a][b] and not partition.relates(a, S.mul[a][b]):
                return False
    return True


def is_semilattice_congruence(S, partition):
    """a rho a^2 and ab rho ba for all a, b."""
    if not _is_congruence(S, partition):
        raise NotACongruence(repr(partition))
    return _semilattice_conditions(S, partition)


def is_complete_congruence(S, partition):
    """a <= b forces a rho ab."""
    if not (_is_congruence(S, partition) and _semilattice_conditions(S, partition)):
        raise NotSemilattice(repr(partition))
    return _complete_condition(S, partition)


def enumerate_congruences(S):
    """All congruence partitions, restricted-growth order, with cached flags."""
    for partition in _set_partitions(S.n):
        if not _is_congruence(S, partition):
            continue
        sl = _semilattice_conditions(S, partition)
        complete = sl and _complete_condition(S, partition)
        yield Congruence(partition, True, sl, complete)


@lru_cache(maxsize=1 << 14)
def _complete_semilattice_congruences(S):
    return tuple(c for c in enumerate_congruences(S) if c.is_complete)


def finest_complete_semilattice_congruence(S):
    """Intersection of all complete semilattice congruences.

    The intersection is again one (the set is closed under intersection),
    and the universal partition always qualifies, so this is total.
    """
    css = _complete_semilattice_congruences(S)
    labels = [tuple(c.partition.class_of[a] for c in css) for a in range(S.n)]
    partition = Partition.from_class_map(labels)
    assert _is_congruence(S, partition)
    assert _semilattice_conditions(S, partition)
    assert _complete_condition(S, partition)
    return Congruence(partition, True, True, True)


@lru_cache(maxsize=1 << 14)
def _search_order(S):
    """Complete semilattice congruences, finest first, then enumeration order."""
    finest = finest_complete_semilattice_congruence(S)
    rest = [c for c in _complete_semilattice_congruences(S) if c.partition != finest.partition]
    return (finest, *rest)


def check_family_conditions(S, partition):
    """The quotient-family reading of a complete semilattice congruence.

    Builds the class semilattice and verifies: products of classes land in
    a single class, the class product is idempotent and commutative, and a
    class meeting the downset of another sits below it.  Equivalent to the
    congruence formulation, which is why this always returns True on valid
    input; it exists so that claim can be checked constructively.
    """
    if not (
        _is_congruence(S, partition)
        and _semilattice_conditions(S, partition)
        and _complete_condition(S, partition)
    ):
        raise NotCompleteSemilattice(repr(partition))
    k = len(partition.classes)
    prod = [[None] * k for _ in range(k)]
    for alpha in range(k):
        for beta in range(k):
            images = {
                partition.class_of[S.mul[a][b]]
                for a in partition.classes[alpha]
                for b in partition.classes[beta]
            }
            if len(images) != 1:
                return False
            prod[alpha][beta] = images.pop()
    for alpha in range(k):
        if prod[alpha][alpha] != alpha:
            return False
        for beta in range(k):
            if prod[alpha][beta] != prod[beta][alpha]:
                return False
    for alpha in range(k):
        downset = downward_closure(S, partition.classes[alpha])
        for beta in range(k):
            if partition.classes[beta] & downset and prod[beta][alpha] != beta:
                return False
    return True


# --- class predicates -----------------------------------------------------
#
# Each predicate sees one congruence class materialized as its own
# structure (induced multiplication and order), so closures are taken
# inside the class.


@lru_cache(maxsize=1 << 15)
def _induced(S, members):
    return induced_subsemigroup(S, members)


def _all_of_kind(T, kind):
    return element_class(T, kind) == frozenset(range(T.n))


def cls_simple(T):
    return is_simple(T, TWO_SIDED)


def cls_left_simple(T):
    return is_simple(T, LEFT)


def cls_regular(T):
    return _all_of_kind(T, REGULAR)


def cls_right_regular(T):
    return _all_of_kind(T, RIGHT_REGULAR)


def cls_completely_regular(T):
    return _all_of_kind(T, COMPLETELY_REGULAR)


def cls_archimedean(T):
    return is_archimedean(T, TWO_SIDED)


def cls_left_archimedean(T):
    return is_archimedean(T, LEFT)


def cls_left_group_like(T):
    return is_group_like(T, LEFT)


def cls_left_clifford(T):
    """Regular with ab below (Ta] for all a, b."""
    if not cls_regular(T):
        return False
    return _left_clifford_products(T)


def cls_left_clifford_plain(T):
    """The product condition alone, regularity not required."""
    return _left_clifford_products(T)


def _left_clifford_products(T):
    full = frozenset(range(T.n))
    for a in range(T.n):
        target = closure_product(T, [full, a])
        if any(T.mul[a][b] not in target for b in range(T.n)):
            return False
    return True


@lru_cache(maxsize=1 << 15)
def _pred_holds(T, pred):
    return pred(T)


@lru_cache(maxsize=1 << 15)
def find_nil_extension_kernel(T, preds):
    """Smallest two-sided ideal satisfying preds with the power criterion.

    Returns the ideal as a frozenset of T's elements, or None.  Inner
    predicates are evaluated on the ideal materialized as a structure of
    its own.
    """
    for K in all_ideals(T, TWO_SIDED):
        sub, _ = _induced(T, K)
        if all(_pred_holds(sub, p) for p in preds) and is_nil_extension_powers(T, K):
            return K
    return None


def nil_extension_of(*preds):
    """Predicate: some ideal satisfies all of preds and absorbs all powers."""

    def check(T):
        return find_nil_extension_kernel(T, preds) is not None

    check.__name__ = "nil_extension_of_" + "_".join(p.__name__ for p in preds)
    return check


def decomposition_check(S, class_pred):
    """Some complete semilattice congruence whose classes all satisfy the predicate.

    Searches the finest congruence first, then the rest; classes are
    materialized with their induced order.  Returns the congruence or None.
    """
    for cong in _search_order(S):
        ok = True
        for cls in cong.partition.classes:
            sub, _ = _induced(S, cls)
            if not _pred_holds(sub, class_pred):
                ok = False
                break
        if ok:
            return cong
    return None


def matched_decomposition_check(S, inner_preds, kind_elements):
    """Decomposition into nil extensions whose kernels match marked L-classes.

    Looks for a complete semilattice congruence such that each class has a
    two-sided ideal K satisfying inner_preds with the power criterion, and
    every ambient L-class through a kind element of the class equals K.
    Within one class every kind element must therefore share a single
    L-class contained in the class; classes without kind elements only
    need some qualifying K.  Returns the congruence or None.
    """
    kind_elements = frozenset(kind_elements)
    Lpart = green_partition(S, "L")
    for cong in _search_order(S):
        ok = True
        for cls in cong.partition.classes:
            marked = kind_elements & cls
            required = None
            if marked:
                lclasses = {Lpart.class_containing(x) for x in marked}
                if len(lclasses) != 1:
                    ok = False
                    break
                required = next(iter(lclasses))
                if not required <= cls:
                    ok = False
                    break
            sub, elems = _induced(S, cls)
            found = None
            for K in all_ideals(sub, TWO_SIDED):
                original = frozenset(elems[i] for i in K)
                if required is not None and original != required:
                    continue
                ksub, _ = _induced(sub, K)
                if all(_pred_holds(ksub, p) for p in inner_preds) and (
                    is_nil_extension_powers(sub, K)
                ):
                    found = original
                    break
            if found is None:
                ok = False
                break
        if ok:
            return cong
    return None
