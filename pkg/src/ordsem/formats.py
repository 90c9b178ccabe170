"""Structure file parsing/serialization and plain-text reports.

The file format:

    # comments and blank lines are skipped
    order 3
    mul
    1 2 2
    2 2 2
    2 2 2
    leq
    0 1

with one "a b" pair per leq line meaning a <= b.  Reflexive pairs are
optional; the listed pairs are closed reflexively and transitively before
validation, so an antisymmetry breach after closure is a validation
error, not a parse error.
"""

from .congruences import finest_complete_semilattice_congruence
from .core import validate, zero_element
from .generate import canonical_form
from .green import GREEN_KINDS, green_partition
from .ideals import SIDES, all_ideals, kernel
from .quotients import is_nil
from .regularity import KINDS, NILPOTENT, element_class


class ParseError(Exception):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def _content_lines(text):
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def parse_structure(text):
    """Parse and validate a structure file; validation errors propagate."""
    lines = _content_lines(text)
    pos = 0

    def take(expect=None):
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 1
            raise ParseError(last, f"unexpected end of file, expected {expect}")
        lineno, line = lines[pos]
        pos += 1
        return lineno, line

    lineno, line = take("'order n'")
    fields = line.split()
    if len(fields) != 2 or fields[0] != "order":
        raise ParseError(lineno, f"expected 'order n', got {line!r}")
    try:
        n = int(fields[1])
    except ValueError:
        raise ParseError(lineno, f"bad order {fields[1]!r}") from None
    if n < 1:
        raise ParseError(lineno, "order must be positive")

    lineno, line = take("'mul'")
    if line != "mul":
        raise ParseError(lineno, f"expected 'mul', got {line!r}")
    mul = []
    for _ in range(n):
        lineno, line = take("a mul row")
        fields = line.split()
        if len(fields) != n:
            raise ParseError(lineno, f"expected {n} entries, got {len(fields)}")
        try:
            row = [int(f) for f in fields]
        except ValueError:
            raise ParseError(lineno, f"bad table entry in {line!r}") from None
        if any(not 0 <= v < n for v in row):
            raise ParseError(lineno, "table entry out of range")
        mul.append(row)

    lineno, line = take("'leq'")
    if line != "leq":
        raise ParseError(lineno, f"expected 'leq', got {line!r}")
    leq = [[a == b for b in range(n)] for a in range(n)]
    while pos < len(lines):
        lineno, line = take("an order pair")
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(lineno, f"expected 'a b', got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(lineno, f"bad order pair {line!r}") from None
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(lineno, "order pair out of range")
        leq[a][b] = True

    # reflexive-transitive closure; antisymmetry is validate's job
    for k in range(n):
        for a in range(n):
            if leq[a][k]:
                for b in range(n):
                    if leq[k][b]:
                        leq[a][b] = True

    return validate(mul, leq)


def serialize_structure(S):
    """Canonical text for a structure: all strict pairs listed, sorted."""
    out = [f"order {S.n}", "mul"]
    for row in S.mul:
        out.append(" ".join(map(str, row)))
    out.append("leq")
    for a in range(S.n):
        for b in range(S.n):
            if a != b and S.leq[a][b]:
                out.append(f"{a} {b}")
    return "\n".join(out) + "\n"


def fmt_set(members):
    return "{" + ",".join(map(str, sorted(members))) + "}"


def fmt_partition(partition):
    return " ".join(fmt_set(c) for c in partition.classes)


def fmt_sets(sets):
    return " ".join(fmt_set(s) for s in sets)


def render_analyze(S):
    """Key/value analysis report with a stable key order."""
    lines = [
        f"canonical: {canonical_form(S)}",
        f"order: {S.n}",
    ]
    z = zero_element(S)
    lines.append(f"zero: {z if z is not None else 'none'}")
    lines.append(f"nil: {str(is_nil(S)).lower()}")
    k = kernel(S)
    lines.append(f"kernel: {fmt_set(k) if k is not None else 'none'}")
    for side in SIDES:
        lines.append(f"ideals[{side}]: {fmt_sets(all_ideals(S, side))}")
    for kind in GREEN_KINDS:
        lines.append(f"green[{kind}]: {fmt_partition(green_partition(S, kind))}")
    for kind in KINDS:
        if kind == NILPOTENT and z is None:
            lines.append(f"class[{kind}]: n/a")
        else:
            lines.append(f"class[{kind}]: {fmt_set(element_class(S, kind))}")
    finest = finest_complete_semilattice_congruence(S)
    lines.append(
        "finest-complete-semilattice-congruence: "
        + fmt_partition(finest.partition)
    )
    return "\n".join(lines) + "\n"


def render_check(S, report):
    """Condition vector report for one theorem on one structure."""
    lines = [
        f"canonical: {canonical_form(S)}",
        f"order: {S.n}",
        f"theorem: {report.theorem}",
    ]
    for label, value in report.conditions:
        lines.append(f"condition[{label}]: {str(value).lower()}")
    lines.append(f"equivalent: {str(report.equivalent).lower()}")
    for key in sorted(report.details):
        lines.append(f"detail[{key}]: {str(report.details[key]).lower()}")
    for key in sorted(report.variants):
        lines.append(f"variant[{key}]: {str(report.variants[key]).lower()}")
    for key in sorted(report.witnesses):
        lines.append(f"witness[{key}]: {report.witnesses[key]}")
    return "\n".join(lines) + "\n"


def render_discrepancy_file(disc):
    """Structure file for a sweep discrepancy, condition vector in comments."""
    conds = ",".join(f"{k}:{str(v).lower()}" for k, v in disc.report.conditions)
    head = [
        f"# theorem {disc.theorem}",
        f"# conditions {conds}",
    ]
    if disc.restoring:
        head.append("# equivalent-under " + " ".join(disc.restoring))
    return "\n".join(head) + "\n" + serialize_structure(disc.structure)
