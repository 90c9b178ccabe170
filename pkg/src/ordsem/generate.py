"""Exhaustive generation of small structures and canonical forms."""

from functools import lru_cache
from itertools import permutations

from .core import OrderedSemigroup, validate

ENUM_MAX_ORDER = 4


def enumerate_mul_tables(n):
    """Every associative n-by-n table, backtracking cell by cell.

    Cells are filled row-major with values tried in ascending order, so
    the stream is the lexicographic subsequence of all tables that are
    associative.  A partial table is rejected as soon as any triple with
    all four lookups determined fails.
    """
    if not 1 <= n <= ENUM_MAX_ORDER:
        raise ValueError(f"order must be between 1 and {ENUM_MAX_ORDER}, got {n}")
    mul = [[-1] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]

    def consistent(i, j):
        v = mul[i][j]
        # triples (i, j, c)
        for c in range(n):
            jc = mul[j][c]
            vc = mul[v][c]
            if jc >= 0 and vc >= 0 and mul[i][jc] >= 0 and mul[i][jc] != vc:
                return False
        # triples (a, i, j)
        for a in range(n):
            ai = mul[a][i]
            av = mul[a][v]
            if ai >= 0 and av >= 0 and mul[ai][j] >= 0 and mul[ai][j] != av:
                return False
        # triples (a, b, j) whose left product is i
        for a in range(n):
            row = mul[a]
            for b in range(n):
                if row[b] == i:
                    bj = mul[b][j]
                    if bj >= 0 and row[bj] >= 0 and row[bj] != v:
                        return False
        # triples (i, b, c) whose right product is j
        for b in range(n):
            ib = mul[i][b]
            if ib < 0:
                continue
            rowb = mul[b]
            for c in range(n):
                if rowb[c] == j and mul[ib][c] >= 0 and mul[ib][c] != v:
                    return False
        return True

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in mul)
            return
        i, j = cells[k]
        for v in range(n):
            mul[i][j] = v
            if consistent(i, j):
                yield from fill(k + 1)
        mul[i][j] = -1

    yield from fill(0)


@lru_cache(maxsize=None)
def all_partial_orders(n):
    """Every partial order on 0..n-1, discrete order first.

    Sorted by number of strict pairs, then by the flattened relation, so
    the stream is deterministic and starts with the discrete order.
    """
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    found = []
    for bits in range(1 << len(pairs)):
        leq = [[a == b for b in range(n)] for a in range(n)]
        for k, (a, b) in enumerate(pairs):
            if bits >> k & 1:
                leq[a][b] = True
        ok = True
        for a in range(n):
            for b in range(n):
                if a != b and leq[a][b] and leq[b][a]:
                    ok = False
                    break
                if not leq[a][b]:
                    continue
                for c in range(n):
                    if leq[b][c] and not leq[a][c]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(tuple(row) for row in leq))
    found.sort(key=lambda leq: (sum(sum(row) for row in leq), leq))
    return tuple(found)


def enumerate_compatible_orders(table):
    """Every partial order compatible with the table, discrete first."""
    n = len(table)
    for leq in all_partial_orders(n):
        ok = True
        for a in range(n):
            for b in range(n):
                if a == b or not leq[a][b]:
                    continue
                for x in range(n):
                    if not leq[table[x][a]][table[x][b]]:
                        ok = False
                        break
                    if not leq[table[a][x]][table[b][x]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            yield leq


def canonical_form(S):
    """Lexicographically minimal relabeling, flattened to a digit string.

    Two structures have equal canonical forms exactly when they are
    isomorphic; mirror-image duals stay distinct.
    """
    n = S.n
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        mul_digits = []
        leq_digits = []
        for a in range(n):
            for b in range(n):
                mul_digits.append(str(perm[S.mul[inv[a]][inv[b]]]))
                leq_digits.append("1" if S.leq[inv[a]][inv[b]] else "0")
        form = "".join(mul_digits) + "|" + "".join(leq_digits)
        if best is None or form < best:
            best = form
    return best


def enumerate_ordered_semigroups(n, dedup=False):
    """All validated structures of order n, optionally one per isomorphism class.

    Deduplication first keeps one representative table per table
    isomorphism class (orders on a table transport along any table
    isomorphism, so no ordered class is lost), then deduplicates the
    ordered structures over each representative table by canonical form.
    """
    if dedup:
        table_seen = set()
        for table in enumerate_mul_tables(n):
            tform = _canonical_table(table)
            if tform in table_seen:
                continue
            table_seen.add(tform)
            seen = set()
            for leq in enumerate_compatible_orders(table):
                S = validate(table, leq)
                form = canonical_form(S)
                if form in seen:
                    continue
                seen.add(form)
                yield S
    else:
        for table in enumerate_mul_tables(n):
            for leq in enumerate_compatible_orders(table):
                yield validate(table, leq)


def _canonical_table(table):
    n = len(table)
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        digits = "".join(
            str(perm[table[inv[a]][inv[b]]]) for a in range(n) for b in range(n)
        )
        if best is None or digits < best:
            best = digits
    return best
