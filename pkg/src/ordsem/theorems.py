"""Per-condition evaluators for the five equivalence results and the sweep.

Each evaluator computes every side of one stated equivalence as an
independent predicate over a single structure and reports whether all
verdicts agree.  Conditions with disputed readings are computed under
every reading; the report's variants record the alternates so a sweep
can say which reading restores agreement.
"""

import math
import multiprocessing
from dataclasses import dataclass, field
from functools import partial

from .congruences import (
    cls_archimedean,
    cls_completely_regular,
    cls_left_archimedean,
    cls_left_clifford,
    cls_left_clifford_plain,
    cls_left_group_like,
    cls_left_simple,
    cls_regular,
    cls_right_regular,
    cls_simple,
    decomposition_check,
    find_nil_extension_kernel,
    matched_decomposition_check,
    nil_extension_of,
    _induced,
    _pred_holds,
)
from .core import orbit_span, power_orbit
from .green import S1, divides, divides_sided, green_partition
from .ideals import LEFT, closure_product
from .regularity import (
    COMPLETELY_REGULAR,
    INTRA_REGULAR,
    ORDERED_IDEMPOTENT,
    REGULAR,
    RIGHT_REGULAR,
    LEFT_REGULAR,
    element_class,
    pi_property,
)

THEOREMS = ("3.1", "3.2", "3.3", "4.1", "4.2")

DEFAULT_VARIANTS = {
    "thm33-reading": "conjunctive",
    "divisor-universe": "s1",
    "regular-class": "intrinsic",
    "left-clifford": "regular",
}

_LEFT_SIMPLE_RIGHT_REGULAR = (cls_left_simple, cls_right_regular)
_SIMPLE_REGULAR = (cls_simple, cls_regular)
_COMPLETELY_REGULAR = (cls_completely_regular,)
_SIMPLE = (cls_simple,)
_LEFT_SIMPLE = (cls_left_simple,)
_LEFT_CLIFFORD = (cls_left_clifford,)
_LEFT_CLIFFORD_PLAIN = (cls_left_clifford_plain,)

NILEXT_SIMPLE_REGULAR = nil_extension_of(*_SIMPLE_REGULAR)
NILEXT_SIMPLE = nil_extension_of(*_SIMPLE)
NILEXT_LEFT_SIMPLE = nil_extension_of(*_LEFT_SIMPLE)
NILEXT_LEFT_SIMPLE_RIGHT_REGULAR = nil_extension_of(*_LEFT_SIMPLE_RIGHT_REGULAR)
NILEXT_LEFT_GROUP_LIKE = nil_extension_of(cls_left_group_like)


@dataclass
class ConditionReport:
    """Truth vector for one result on one structure.

    conditions holds the scored verdicts in statement order; details keeps
    sub-verdicts of compound conditions, variants the alternate-reading
    verdicts (including equivalent@<flag>=<value> entries), witnesses a
    short description per condition (first violation, or the found
    congruence/ideal for structural conditions).
    """

    theorem: str
    conditions: tuple
    details: dict = field(default_factory=dict)
    variants: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def equivalent(self):
        return len({v for _, v in self.conditions}) == 1

    def restoring_variants(self):
        return tuple(
            sorted(
                key.split("@", 1)[1]
                for key, val in self.variants.items()
                if key.startswith("equivalent@") and val
            )
        )


def _fmt_set(members):
    return "{" + ",".join(map(str, sorted(members))) + "}"


def _fmt_partition(partition):
    return " ".join(_fmt_set(c) for c in partition.classes)


def _full(S):
    return frozenset(range(S.n))


def _joint_span(S, x, y):
    ox = power_orbit(S, x)
    oy = power_orbit(S, y)
    return max(ox.index, oy.index) + math.lcm(ox.period, oy.period)


def _all_equal(values):
    return len(set(values)) == 1


# --- nil extension of left simple and right regular ------------------------


def thm_3_1(S):
    full = _full(S)
    witnesses = {}

    kernel_found = find_nil_extension_kernel(S, _LEFT_SIMPLE_RIGHT_REGULAR)
    structure = kernel_found is not None
    if structure:
        witnesses["structure"] = "kernel " + _fmt_set(kernel_found)

    power_ok = True
    for a in range(S.n):
        bound = orbit_span(S, a)
        for b in range(S.n):
            am = a
            a2m = S.mul[a][a]
            ok = False
            for _ in range(bound):
                if am in closure_product(S, [a2m, full, b]):
                    ok = True
                    break
                am = S.mul[am][a]
                a2m = S.mul[S.mul[a2m][a]][a]
            if not ok:
                power_ok = False
                witnesses.setdefault("conditions", f"power-membership a={a} b={b}")
                break
        if not power_ok:
            break

    implication_ok = True
    rreg = element_class(S, RIGHT_REGULAR)
    for a in range(S.n):
        for b in sorted(rreg):
            if S.leq[a][S.mul[b][a]] and a not in closure_product(
                S, [S.mul[a][a], full]
            ):
                implication_ok = False
                witnesses.setdefault(
                    "conditions", f"right-regular-implication a={a} b={b}"
                )
                break
        if not implication_ok:
            break

    return ConditionReport(
        "3.1",
        (("structure", structure), ("conditions", power_ok and implication_ok)),
        details={
            "power-membership": power_ok,
            "right-regular-implication": implication_ok,
        },
        witnesses=witnesses,
    )


# --- nil extension of simple and regular ------------------------------------


def thm_3_2(S):
    full = _full(S)
    witnesses = {}

    kernel_found = find_nil_extension_kernel(S, _SIMPLE_REGULAR)
    structure = kernel_found is not None
    if structure:
        witnesses["structure"] = "kernel " + _fmt_set(kernel_found)

    cond_i = True
    for a in range(S.n):
        bound = orbit_span(S, a)
        for b in range(S.n):
            am = a
            ok = False
            for _ in range(bound):
                if am in closure_product(S, [am, full, b, full, am]):
                    ok = True
                    break
                am = S.mul[am][a]
            if not ok:
                cond_i = False
                witnesses.setdefault("conditions", f"i a={a} b={b}")
                break
        if not cond_i:
            break

    reg = sorted(element_class(S, REGULAR))
    cond_ii = cond_iii = cond_iv = True
    for a in range(S.n):
        for b in reg:
            sandwich = None
            if S.leq[a][S.mul[b][a]]:
                sandwich = closure_product(S, [a, full, b, full, a])
                if a not in sandwich:
                    cond_ii = False
                    witnesses.setdefault("conditions", f"ii a={a} b={b}")
            if S.leq[a][S.mul[a][b]]:
                if sandwich is None:
                    sandwich = closure_product(S, [a, full, b, full, a])
                if a not in sandwich:
                    cond_iii = False
                    witnesses.setdefault("conditions", f"iii a={a} b={b}")
            if S.leq[a][b] and a not in reg:
                cond_iv = False
                witnesses.setdefault("conditions", f"iv a={a} b={b}")

    conditions_side = cond_i and cond_ii and cond_iii and cond_iv
    return ConditionReport(
        "3.2",
        (("structure", structure), ("conditions", conditions_side)),
        details={"i": cond_i, "ii": cond_ii, "iii": cond_iii, "iv": cond_iv},
        witnesses=witnesses,
    )


# --- nil extension of completely regular ------------------------------------


THM33_READINGS = ("conjunctive", "separate", "separate-below")


def thm_3_3(S, reading="conjunctive"):
    """Readings of the hypothesis of the garbled implication condition.

    conjunctive: a <= ba and a <= ab jointly imply a in (a^2 S b S a^2];
    separate: each of the two alone implies it; separate-below: each of
    a <= ba, a <= ab, a <= b alone implies it (the converse proof invokes
    the condition for a plain a <= b, so the statement likely dropped
    that hypothesis).
    """
    if reading not in THM33_READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    full = _full(S)
    witnesses = {}

    kernel_found = find_nil_extension_kernel(S, _COMPLETELY_REGULAR)
    structure = kernel_found is not None
    if structure:
        witnesses["structure"] = "kernel " + _fmt_set(kernel_found)

    cpr = pi_property(S, COMPLETELY_REGULAR)

    impl_conj = True
    impl_sep = True
    impl_sep_below = True
    violations = {}
    reg = sorted(element_class(S, REGULAR))
    for a in range(S.n):
        sq = S.mul[a][a]
        for b in reg:
            below_ba = S.leq[a][S.mul[b][a]]
            below_ab = S.leq[a][S.mul[a][b]]
            below_b = S.leq[a][b]
            if not (below_ba or below_ab or below_b):
                continue
            if a in closure_product(S, [sq, full, b, full, sq]):
                continue
            if below_ba and below_ab:
                impl_conj = False
                violations.setdefault("conjunctive", f"implication a={a} b={b}")
            if below_ba or below_ab:
                impl_sep = False
                violations.setdefault("separate", f"implication a={a} b={b}")
            impl_sep_below = False
            violations.setdefault("separate-below", f"implication a={a} b={b}")

    readings = {
        "conjunctive": cpr and impl_conj,
        "separate": cpr and impl_sep,
        "separate-below": cpr and impl_sep_below,
    }
    if reading in violations:
        witnesses["conditions"] = violations[reading]
    variants = {}
    for other in THM33_READINGS:
        if other == reading:
            continue
        variants[f"conditions@thm33-reading={other}"] = readings[other]
        variants[f"equivalent@thm33-reading={other}"] = structure == readings[other]
    return ConditionReport(
        "3.3",
        (("structure", structure), ("conditions", readings[reading])),
        details={
            "completely-pi-regular": cpr,
            "implication-conjunctive": impl_conj,
            "implication-separate": impl_sep,
            "implication-separate-below": impl_sep_below,
        },
        variants=variants,
        witnesses=witnesses,
    )


# --- complete semilattice of nil extensions of simple regular ---------------


def _mul_closed(S, members):
    return all(S.mul[a][b] in members for a in members for b in members)


def thm_4_1(S, divisor_universe=S1, regular_class="intrinsic"):
    if regular_class not in ("intrinsic", "ambient"):
        raise ValueError(f"unknown regular-class reading {regular_class!r}")
    full = _full(S)
    n = S.n
    witnesses = {}

    pi_reg = pi_property(S, REGULAR)
    pi_intra = pi_property(S, INTRA_REGULAR)
    idem = element_class(S, ORDERED_IDEMPOTENT)
    intra = element_class(S, INTRA_REGULAR)
    reg = element_class(S, REGULAR)
    J = green_partition(S, "J")

    dec_i = decomposition_check(S, NILEXT_SIMPLE_REGULAR)
    c_i = dec_i is not None
    if c_i:
        witnesses["i"] = "congruence " + _fmt_partition(dec_i.partition)

    c_ii = True
    for a in range(n):
        sq = S.mul[a][a]
        for b in range(n):
            ab = S.mul[a][b]
            w = ab
            ok = False
            for _ in range(orbit_span(S, ab)):
                if w in closure_product(S, [w, full, sq, full, w]):
                    ok = True
                    break
                w = S.mul[w][ab]
            if not ok:
                c_ii = False
                witnesses.setdefault("ii", f"a={a} b={b}")
                break
        if not c_ii:
            break

    dec_iii = decomposition_check(S, cls_archimedean) if pi_reg else None
    c_iii = pi_reg and dec_iii is not None
    if dec_iii is not None:
        witnesses["iii"] = "congruence " + _fmt_partition(dec_iii.partition)

    idem_sorted = sorted(idem)

    def cond_iv(universe):
        if not pi_reg:
            return False, "not pi-regular"
        for a in range(n):
            sq = S.mul[a][a]
            for e in idem_sorted:
                if divides(S, a, e, universe) and not divides(S, sq, e, universe):
                    return False, f"a={a} e={e}"
        return True, None

    def cond_v(universe):
        if not pi_reg:
            return False, "not pi-regular"
        for a in range(n):
            for b in range(n):
                ab = S.mul[a][b]
                for e in idem_sorted:
                    if (
                        divides(S, a, e, universe)
                        and divides(S, b, e, universe)
                        and not divides(S, ab, e, universe)
                    ):
                        return False, f"a={a} b={b} e={e}"
        return True, None

    iv_by_universe = {u: cond_iv(u) for u in ("s1", "s")}
    v_by_universe = {u: cond_v(u) for u in ("s1", "s")}
    c_iv, w_iv = iv_by_universe[divisor_universe]
    c_v, w_v = v_by_universe[divisor_universe]
    if w_iv:
        witnesses["iv"] = w_iv
    if w_v:
        witnesses["v"] = w_v

    c_vi = pi_reg
    if c_vi:
        for cls in J.classes:
            if cls & idem and not _mul_closed(S, cls):
                c_vi = False
                witnesses["vi"] = "J-class " + _fmt_set(cls)
                break

    def cond_vii(mode):
        if not pi_intra:
            return False, "not intra-pi-regular"
        for cls in J.classes:
            if not cls & intra:
                continue
            if not _mul_closed(S, cls):
                return False, "J-class " + _fmt_set(cls) + " not closed"
            if mode == "intrinsic":
                sub, _ = _induced(S, cls)
                if not _pred_holds(sub, cls_regular):
                    return False, "J-class " + _fmt_set(cls) + " not regular"
            else:
                if not cls <= reg:
                    return False, "J-class " + _fmt_set(cls) + " not regular"
        return True, None

    vii_by_mode = {m: cond_vii(m) for m in ("intrinsic", "ambient")}
    c_vii, w_vii = vii_by_mode[regular_class]
    if w_vii:
        witnesses["vii"] = w_vii

    dec_viii = decomposition_check(S, NILEXT_SIMPLE)
    c_viii = dec_viii is not None and intra == reg
    if dec_viii is not None:
        witnesses["viii"] = "congruence " + _fmt_partition(dec_viii.partition)
    if intra != reg:
        witnesses["viii"] = (
            f"intra-regular {_fmt_set(intra)} != regular {_fmt_set(reg)}"
        )

    conditions = (
        ("i", c_i),
        ("ii", c_ii),
        ("iii", c_iii),
        ("iv", c_iv),
        ("v", c_v),
        ("vi", c_vi),
        ("vii", c_vii),
        ("viii", c_viii),
    )

    other_u = "s" if divisor_universe == "s1" else "s1"
    other_m = "ambient" if regular_class == "intrinsic" else "intrinsic"
    base = dict(conditions)
    alt_u = dict(base, iv=iv_by_universe[other_u][0], v=v_by_universe[other_u][0])
    alt_m = dict(base, vii=vii_by_mode[other_m][0])
    variants = {
        f"iv@divisor-universe={other_u}": iv_by_universe[other_u][0],
        f"v@divisor-universe={other_u}": v_by_universe[other_u][0],
        f"equivalent@divisor-universe={other_u}": _all_equal(alt_u.values()),
        f"vii@regular-class={other_m}": vii_by_mode[other_m][0],
        f"equivalent@regular-class={other_m}": _all_equal(alt_m.values()),
    }

    return ConditionReport(
        "4.1", conditions, variants=variants, witnesses=witnesses
    )


# --- complete semilattice of nil extensions of left group like --------------


def thm_4_2(S, left_clifford="regular"):
    if left_clifford not in ("regular", "plain"):
        raise ValueError(f"unknown left-clifford reading {left_clifford!r}")
    full = _full(S)
    n = S.n
    witnesses = {}

    idem = element_class(S, ORDERED_IDEMPOTENT)
    reg = element_class(S, REGULAR)
    lreg = element_class(S, LEFT_REGULAR)
    creg = element_class(S, COMPLETELY_REGULAR)
    pi_reg = pi_property(S, REGULAR)
    pi_creg = pi_property(S, COMPLETELY_REGULAR)

    dec_i = decomposition_check(S, NILEXT_LEFT_GROUP_LIKE)
    c_i = dec_i is not None
    if c_i:
        witnesses["i"] = "congruence " + _fmt_partition(dec_i.partition)

    dec_ii = decomposition_check(S, NILEXT_LEFT_SIMPLE_RIGHT_REGULAR)
    c_ii = dec_ii is not None
    if c_ii:
        witnesses["ii"] = "congruence " + _fmt_partition(dec_ii.partition)

    dec_iii = matched_decomposition_check(S, _COMPLETELY_REGULAR, creg)
    c_iii = dec_iii is not None
    if c_iii:
        witnesses["iii"] = "congruence " + _fmt_partition(dec_iii.partition)

    dec_iv = decomposition_check(S, cls_left_archimedean) if pi_creg else None
    c_iv = pi_creg and dec_iv is not None
    if dec_iv is not None:
        witnesses["iv"] = "congruence " + _fmt_partition(dec_iv.partition)

    c_v = True
    for a in range(n):
        for b in range(n):
            ab = S.mul[a][b]
            ba = S.mul[b][a]
            w = ab
            v = ba
            ok = False
            for _ in range(_joint_span(S, ab, ba)):
                if w in closure_product(S, [w, a, full, b, v]):
                    ok = True
                    break
                w = S.mul[w][ab]
                v = S.mul[v][ba]
            if not ok:
                c_v = False
                witnesses.setdefault("v", f"a={a} b={b}")
                break
        if not c_v:
            break

    c_vi = pi_reg
    if c_vi:
        for a in range(n):
            for e in sorted(idem):
                if divides(S, a, e) and not divides_sided(S, a, e, LEFT):
                    c_vi = False
                    witnesses["vi"] = f"a={a} e={e}"
                    break
            if not c_vi:
                break

    dec_vii = matched_decomposition_check(S, _COMPLETELY_REGULAR, idem)
    c_vii = dec_vii is not None
    if c_vii:
        witnesses["vii"] = "congruence " + _fmt_partition(dec_vii.partition)

    dec_viii = matched_decomposition_check(S, _COMPLETELY_REGULAR, reg)
    c_viii = dec_viii is not None
    if c_viii:
        witnesses["viii"] = "congruence " + _fmt_partition(dec_viii.partition)

    dec_ix = decomposition_check(S, NILEXT_LEFT_SIMPLE)
    c_ix = dec_ix is not None and lreg == reg
    if dec_ix is not None:
        witnesses["ix"] = "congruence " + _fmt_partition(dec_ix.partition)
    if lreg != reg:
        witnesses["ix"] = (
            f"left-regular {_fmt_set(lreg)} != regular {_fmt_set(reg)}"
        )

    by_clifford = {
        "regular": matched_decomposition_check(S, _LEFT_CLIFFORD, reg),
        "plain": matched_decomposition_check(S, _LEFT_CLIFFORD_PLAIN, reg),
    }
    dec_x = by_clifford[left_clifford]
    c_x = dec_x is not None
    if c_x:
        witnesses["x"] = "congruence " + _fmt_partition(dec_x.partition)

    conditions = (
        ("i", c_i),
        ("ii", c_ii),
        ("iii", c_iii),
        ("iv", c_iv),
        ("v", c_v),
        ("vi", c_vi),
        ("vii", c_vii),
        ("viii", c_viii),
        ("ix", c_ix),
        ("x", c_x),
    )

    other = "plain" if left_clifford == "regular" else "regular"
    alt = dict(conditions)
    alt["x"] = by_clifford[other] is not None
    variants = {
        f"x@left-clifford={other}": by_clifford[other] is not None,
        f"equivalent@left-clifford={other}": _all_equal(alt.values()),
    }

    return ConditionReport(
        "4.2", conditions, variants=variants, witnesses=witnesses
    )


# --- sweep ------------------------------------------------------------------


def evaluate(S, theorem, variants=None):
    """Run one theorem evaluator under the given variant settings."""
    chosen = dict(DEFAULT_VARIANTS)
    if variants:
        unknown = set(variants) - set(DEFAULT_VARIANTS)
        if unknown:
            raise ValueError(f"unknown variant keys {sorted(unknown)}")
        chosen.update(variants)
    if theorem == "3.1":
        return thm_3_1(S)
    if theorem == "3.2":
        return thm_3_2(S)
    if theorem == "3.3":
        return thm_3_3(S, reading=chosen["thm33-reading"])
    if theorem == "4.1":
        return thm_4_1(
            S,
            divisor_universe=chosen["divisor-universe"],
            regular_class=chosen["regular-class"],
        )
    if theorem == "4.2":
        return thm_4_2(S, left_clifford=chosen["left-clifford"])
    raise ValueError(f"unknown theorem {theorem!r}")


@dataclass
class Discrepancy:
    """A structure whose condition vector is not internally equivalent."""

    structure: object
    theorem: str
    report: ConditionReport
    restoring: tuple


@dataclass
class SweepReport:
    theorems: tuple
    total: int
    discrepancies: tuple

    @property
    def equivalent_everywhere(self):
        return not self.discrepancies


def _sweep_one(S, theorems, variant_items):
    variants = dict(variant_items) if variant_items else None
    bad = []
    for theorem in theorems:
        report = evaluate(S, theorem, variants)
        if not report.equivalent:
            bad.append(report)
    return bad


def equivalence_sweep(structures, theorems=THEOREMS, variants=None, jobs=1):
    """Evaluate the chosen theorems over every structure.

    Non-equivalent reports are collected with the offending structure and
    the variant settings (if any) that restore agreement.  Input order is
    preserved, also under parallel execution.
    """
    structures = list(structures)
    theorems = tuple(theorems)
    variant_items = tuple(sorted(variants.items())) if variants else ()
    worker = partial(_sweep_one, theorems=theorems, variant_items=variant_items)
    if jobs > 1 and len(structures) > 1:
        chunk = max(1, len(structures) // (jobs * 8))
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(worker, structures, chunksize=chunk)
    else:
        results = [worker(S) for S in structures]
    discrepancies = []
    for S, reports in zip(structures, results):
        for report in reports:
            discrepancies.append(
                Discrepancy(S, report.theorem, report, report.restoring_variants())
            )
    return SweepReport(theorems, len(structures), tuple(discrepancies))
