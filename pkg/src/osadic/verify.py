"""Cross-validation batteries.

Every combinatorial verdict this package produces (chords, closures,
chordality levels) has an algebraic shadow (ideal membership of boundaries)
and the two must agree wherever the theory says so.  The checks below run
both routes and compare; they back the `verify` command and the acceptance
test suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .bitsets import elements, format_word, size, word_of
from .chordality import chordality_report, find_chord, is_l_chordal
from .closure import circuits_covered, delta_closure, delta_prime_closure
from .exterior import ExteriorElement, boundary, circuit_boundary, wedge
from .ideal import IdealSpan, in_ideal, is_l_adic, is_quadratic
from .instances import complete_graph, cycle_graph, fig1
from .graphs import connected_graph_representatives, random_connected_graph, seeded_rng
from .matroid import (DEFAULT_MAX_ELEMENTS, GroundSet, circuits_of_binary_matrix,
                      circuits_of_graph, is_binary, is_binary_disjoint_union)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name, passed, detail):
    return CheckResult(name, bool(passed), detail)


def adicity_index(family, slow=False, max_n=DEFAULT_MAX_ELEMENTS):
    """Least l >= 1 whose truncated ideal generates the full one.

    Adicity is monotone in l and always holds at max circuit size minus one,
    so the scan terminates there.
    """
    top = family.max_circuit_size()
    for l in range(1, max(top, 2)):
        if is_l_adic(family, l, slow=slow, max_n=max_n).is_l_adic:
            return l
    return max(top - 1, 1)


def three_way_circuit_check(family, circuit, max_n=DEFAULT_MAX_ELEMENTS):
    """(chord found, boundary in truncated ideal, monomial in truncated ideal)
    for the ideal of circuits shorter than this one."""
    ground = family.ground
    cut = family.circuits_up_to(size(circuit) - 1)
    span = IdealSpan(cut, ground, max_n=max_n)
    has_chord = find_chord(family, circuit) is not None
    b_member = span.contains(circuit_boundary(ground, circuit))
    m_member = span.contains(ExteriorElement.monomial(ground, circuit))
    return has_chord, b_member, m_member


# ---------------------------------------------------------------------------
# randomized data, all drawn from a caller-provided seeded Random


def random_subset(rng, n, min_size, max_size=None):
    hi = n if max_size is None else min(max_size, n)
    k = rng.randint(min_size, hi)
    return word_of(rng.sample(range(1, n + 1), k))


def random_family(rng, n, count, min_size=2):
    fam = set()
    for _ in range(count):
        fam.add(random_subset(rng, n, min_size))
    return sorted(fam)


def random_fraction(rng):
    num = rng.randint(-9, 9)
    return Fraction(num if num else 1, rng.randint(1, 9))


def random_element(rng, ground, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = random_subset(rng, ground.n, 0)
        terms[w] = random_fraction(rng)
    return ExteriorElement(ground, terms)


def random_homogeneous(rng, ground, degree, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = random_subset(rng, ground.n, degree, degree)
        terms[w] = random_fraction(rng)
    return ExteriorElement(ground, terms)


# ---------------------------------------------------------------------------
# the seven standing checks


def check_fig1(max_n=DEFAULT_MAX_ELEMENTS):
    """fig1 facts: the 2356 closure separation, quadraticity, non-chordality."""
    start = time.perf_counter()
    fam = fig1(max_n)
    w2356 = word_of((2, 3, 5, 6))
    lines = fam.circuits_up_to(3)
    in_delta = w2356 in delta_closure(lines, fam.ground, max_n)
    in_prime = w2356 in delta_prime_closure(lines, fam.ground, max_n)
    quad = is_quadratic(fam, max_n=max_n)
    report = chordality_report(fam)
    chordless = [i.circuit for i in report.per_circuit if not i.has_chord
                 and size(i.circuit) >= 4]
    elapsed = time.perf_counter() - start
    results = [
        _result("fig1-closure-separation",
                (not in_delta) and in_prime,
                f"{format_word(w2356)} in delta closure of the lines: {in_delta}, "
                f"in delta-prime closure: {in_prime}"),
        _result("fig1-quadratic-oracle", quad.is_l_adic,
                f"boundary of every 4-circuit lies in the ideal of the lines: "
                f"{quad.is_l_adic}"),
        _result("fig1-not-chordal",
                (not report.is_chordal) and w2356 in chordless,
                f"chordality index {report.chordality_index}, chordless "
                f"4-circuits {[format_word(c) for c in chordless]}"),
        _result("fig1-runtime", elapsed < 1.0, f"{elapsed:.3f}s (budget 1s)"),
    ]
    return results


def _sweep_graphs(seed, random_count=100, random_max_edges=9, census_edges=6):
    graphs = connected_graph_representatives(census_edges)
    rng = seeded_rng(seed)
    graphs += [random_connected_graph(rng, random_max_edges)
               for _ in range(random_count)]
    return graphs


def check_graph_sweep(seed=0, max_n=DEFAULT_MAX_ELEMENTS):
    """Graphic matroids: l-chordal iff (l-2)-adic for l in 4..6, the
    per-circuit three-way agreement, and the two circuit enumeration routes."""
    start = time.perf_counter()
    graphs = _sweep_graphs(seed)
    routes_ok = 0
    equiv_checked = equiv_ok = 0
    three_checked = three_ok = 0
    bad = []
    for gi, g in enumerate(graphs):
        if not g.edges:
            continue
        fam = circuits_of_graph(g, max_n)
        if fam == circuits_of_binary_matrix(g.incidence_matrix(), max_n):
            routes_ok += 1
        else:
            bad.append(f"graph {gi}: enumeration routes differ")
            continue
        for l in (4, 5, 6):
            chordal, _ = is_l_chordal(fam, l)
            adic = is_l_adic(fam, l - 2, max_n=max_n).is_l_adic
            equiv_checked += 1
            if chordal == adic:
                equiv_ok += 1
            else:
                bad.append(f"graph {gi}: {l}-chordal={chordal} but "
                           f"{l - 2}-adic={adic}")
        for c in fam.circuits:
            if size(c) < 4:
                continue
            hc, bm, mm = three_way_circuit_check(fam, c, max_n)
            three_checked += 1
            if hc == bm == mm:
                three_ok += 1
            else:
                bad.append(f"graph {gi} circuit {format_word(c)}: "
                           f"chord={hc} boundary={bm} monomial={mm}")
    elapsed = time.perf_counter() - start
    note = f"; first failures: {bad[:3]}" if bad else ""
    return [
        _result("graph-sweep-route-agreement", routes_ok == len(graphs),
                f"{routes_ok}/{len(graphs)} graphs: cycle walk matches GF(2) "
                f"column scan"),
        _result("graph-sweep-chordal-iff-adic", equiv_ok == equiv_checked,
                f"{equiv_ok}/{equiv_checked} (graph, l) pairs agree{note}"),
        _result("graph-sweep-three-way", three_ok == three_checked,
                f"{three_ok}/{three_checked} circuits: chord, boundary and "
                f"monomial verdicts coincide{note}"),
        _result("graph-sweep-runtime", elapsed < 60.0,
                f"{elapsed:.1f}s over {len(graphs)} graphs (budget 60s)"),
    ]


def check_boundary_membership(seed=0, cases=200, max_ground=6):
    """Randomized ideal facts behind the closure rules.

    Part one: a monomial lies in an ideal exactly when its boundary does.
    Part two: when all facets of X through some a are members, deleting a
    keeps membership.  Part three: circuits meeting in one point put their
    symmetric difference in the two-generator ideal.
    """
    rng = seeded_rng(seed)
    ok1 = ok2 = ok3 = 0
    bad = []
    for case in range(cases):
        n = rng.randint(3, max_ground)
        ground = GroundSet(n)
        gens = random_family(rng, n, rng.randint(1, 4))
        x = random_subset(rng, n, 2)
        if rng.random() < 0.3:
            x = rng.choice(gens)
        span = IdealSpan(gens, ground)
        via_boundary = span.contains(circuit_boundary(ground, x))
        via_monomial = span.contains(ExteriorElement.monomial(ground, x))
        if via_boundary == via_monomial:
            ok1 += 1
        else:
            bad.append(f"case {case}: boundary {via_boundary} != monomial "
                       f"{via_monomial} for {format_word(x)} in {len(gens)} gens")

        x2 = random_subset(rng, n, 2)
        a = rng.choice(elements(x2))
        facets = [x2 ^ (1 << (i - 1)) for i in elements(x2) if i != a]
        gens2 = sorted(set(gens) | set(facets))
        span2 = IdealSpan(gens2, ground)
        hypothesis = all(
            span2.contains(ExteriorElement.monomial(ground, f)) for f in facets)
        conclusion = span2.contains(
            ExteriorElement.monomial(ground, x2 ^ (1 << (a - 1))))
        if hypothesis and conclusion:
            ok2 += 1
        else:
            bad.append(f"case {case}: facet rule failed for {format_word(x2)} "
                       f"through {a} (hypothesis {hypothesis})")

        a3 = rng.randint(1, n)
        others = [i for i in range(1, n + 1) if i != a3]
        rng.shuffle(others)
        cut = rng.randint(1, len(others) - 1)
        xa = word_of(others[:cut]) | (1 << (a3 - 1))
        xb = word_of(others[cut:]) | (1 << (a3 - 1))
        if in_ideal(ExteriorElement.monomial(ground, xa ^ xb), [xa, xb]):
            ok3 += 1
        else:
            bad.append(f"case {case}: {format_word(xa)} and {format_word(xb)} "
                       f"meet in {a3} but the symmetric difference escaped")
    note = f"; first failures: {bad[:3]}" if bad else ""
    return [
        _result("ideal-boundary-iff-monomial", ok1 == cases,
                f"{ok1}/{cases} random (family, X) cases{note}"),
        _result("ideal-facet-deletion", ok2 == cases,
                f"{ok2}/{cases} random facet-rule cases{note}"),
        _result("ideal-one-point-overlap", ok3 == cases,
                f"{ok3}/{cases} random one-point-overlap cases{note}"),
    ]


def check_kernel(seed=0, cases=500, max_ground=8):
    """Exterior algebra identities on random elements: boundary of boundary,
    the graded Leibniz rule, graded commutativity."""
    rng = seeded_rng(seed)
    ok_dd = ok_leib = ok_comm = 0
    bad = []
    for case in range(cases):
        n = rng.randint(1, max_ground)
        ground = GroundSet(n)
        a = random_element(rng, ground)
        if boundary(boundary(a)).is_zero():
            ok_dd += 1
        else:
            bad.append(f"case {case}: boundary twice nonzero on {a}")
        da = rng.randint(0, n)
        db = rng.randint(0, n)
        p = random_homogeneous(rng, ground, da)
        q = random_homogeneous(rng, ground, db)
        left = boundary(wedge(p, q))
        sign = -1 if da & 1 else 1
        right = wedge(boundary(p), q) + sign * wedge(p, boundary(q))
        if left == right:
            ok_leib += 1
        else:
            bad.append(f"case {case}: Leibniz failed at degrees {da},{db}")
        flip = -1 if (da * db) & 1 else 1
        if wedge(p, q) == flip * wedge(q, p):
            ok_comm += 1
        else:
            bad.append(f"case {case}: commutation failed at degrees {da},{db}")
    note = f"; first failures: {bad[:3]}" if bad else ""
    return [
        _result("kernel-boundary-squares-to-zero", ok_dd == cases,
                f"{ok_dd}/{cases} random elements{note}"),
        _result("kernel-leibniz", ok_leib == cases,
                f"{ok_leib}/{cases} random homogeneous pairs{note}"),
        _result("kernel-graded-commutativity", ok_comm == cases,
                f"{ok_comm}/{cases} random homogeneous pairs{note}"),
    ]


def check_span_equalities(seed=0, families=50, max_ground=6):
    """Both closures preserve the boundary ideal degree by degree, and the
    delta closure sits inside the delta-prime closure."""
    rng = seeded_rng(seed)
    ok_rank = ok_subset = 0
    bad = []
    for case in range(families):
        n = rng.randint(3, max_ground)
        ground = GroundSet(n)
        gens = random_family(rng, n, rng.randint(1, 4))
        cl_d = delta_closure(gens, ground)
        cl_p = delta_prime_closure(gens, ground)
        if cl_d.is_subsystem_of(cl_p):
            ok_subset += 1
        else:
            bad.append(f"case {case}: delta closure escaped delta-prime")
        span_g = IdealSpan(gens, ground)
        span_d = IdealSpan(cl_d.members(), ground)
        span_p = IdealSpan(cl_p.members(), ground)
        if all(span_g.degree_rank(d) == span_d.degree_rank(d) == span_p.degree_rank(d)
               for d in range(n + 1)):
            ok_rank += 1
        else:
            bad.append(f"case {case}: closure changed some degree rank "
                       f"({len(gens)} gens over n={n})")
    note = f"; first failures: {bad[:3]}" if bad else ""
    return [
        _result("closure-rank-preservation", ok_rank == families,
                f"{ok_rank}/{families} random families, all degrees{note}"),
        _result("closure-delta-inside-delta-prime", ok_subset == families,
                f"{ok_subset}/{families} random families{note}"),
    ]


def check_reference_families(max_n=DEFAULT_MAX_ELEMENTS):
    """Known answers: cycles are extremal, the complete graph on four
    vertices is chordal and quadratic, and indices agree across routes."""
    results = []
    ok = True
    details = []
    for n in range(4, 8):
        fam = circuits_of_graph(cycle_graph(n), max_n)
        low = is_l_adic(fam, n - 2, max_n=max_n).is_l_adic
        high = is_l_adic(fam, n - 1, max_n=max_n).is_l_adic
        ok = ok and (not low) and high
        details.append(f"C{n}: {n - 2}-adic={low}, {n - 1}-adic={high}")
    results.append(_result("cycles-extremal-adicity", ok, "; ".join(details)))

    k4 = circuits_of_graph(complete_graph(4), max_n)
    rep = chordality_report(k4)
    quad = is_quadratic(k4, max_n=max_n)
    results.append(_result(
        "complete-graph-chordal-quadratic",
        rep.is_chordal and quad.is_l_adic,
        f"K4: chordality index {rep.chordality_index}, quadratic {quad.is_l_adic}"))

    agree = True
    agree_details = []
    for label, fam in (("K4", k4),
                       ("C5", circuits_of_graph(cycle_graph(5), max_n)),
                       ("fig1", fig1(max_n))):
        m = chordality_report(fam).chordality_index
        a = adicity_index(fam, max_n=max_n)
        binary, _ = is_binary(fam)
        if binary:
            agree = agree and (m == a + 2)
            agree_details.append(f"{label}: index {m} = adicity {a} + 2")
        else:
            agree = agree and (a <= m - 2)
            agree_details.append(f"{label}: adicity {a} <= index {m} - 2 (non-binary)")
    results.append(_result("route-index-agreement", agree, "; ".join(agree_details)))
    return results


def full_battery(seed=0, max_n=DEFAULT_MAX_ELEMENTS):
    """All standing checks, in reporting order."""
    out = []
    out += check_fig1(max_n)
    out += check_graph_sweep(seed, max_n)
    out += check_boundary_membership(seed)
    out += check_kernel(seed)
    out += check_span_equalities(seed)
    out += check_reference_families(max_n)
    return out


def instance_battery(label, family, seed=0, slow=False,
                     max_n=DEFAULT_MAX_ELEMENTS):
    """Every cross-check that makes sense for one instance."""
    ground = family.ground
    out = []
    binary, witness = is_binary(family)
    strong, strong_witness = is_binary_disjoint_union(family)
    wtext = "" if binary else (" (witness " + ", ".join(
        format_word(c) for c in witness) + ")")
    out.append(_result(f"{label}-binary-pair-test", True,
                       f"symmetric differences contain circuits: {binary}{wtext}; "
                       f"disjoint-union diagnostic: {strong}"))
    report = chordality_report(family)
    m = report.chordality_index
    chordless = sum(1 for i in report.per_circuit if not i.has_chord
                    and size(i.circuit) >= 4)
    shape = "chordal" if report.is_chordal else \
        f"{chordless} chordless circuits of 4+ elements"
    out.append(_result(f"{label}-chordality", True,
                       f"chordality index {m} ({shape})"))
    a = adicity_index(family, slow=slow, max_n=max_n)
    out.append(_result(f"{label}-adicity-oracle", True,
                       f"adicity index {a} ({a}-adic, "
                       f"{'quadratic' if a <= 2 else 'not quadratic'})"))

    out.append(_result(f"{label}-chordal-implies-adic", a <= m - 2,
                       f"adicity index {a} <= chordality index {m} - 2"))
    if binary:
        out.append(_result(f"{label}-binary-index-equality", m == a + 2,
                           f"chordality index {m} equals adicity index {a} + 2"))
        three_ok = True
        for c in family.circuits:
            if size(c) >= 4:
                hc, bm, mm = three_way_circuit_check(family, c, max_n)
                three_ok = three_ok and (hc == bm == mm)
        out.append(_result(f"{label}-three-way-per-circuit", three_ok,
                           "chord, boundary and monomial verdicts coincide on "
                           "every circuit of 4+ elements"))

    if ground.n <= 12:
        lines = family.circuits_up_to(3)
        cl_d = delta_closure(lines, ground, max_n)
        cl_p = delta_prime_closure(lines, ground, max_n)
        cov_d, miss_d = circuits_covered(family, cl_d)
        cov_p, miss_p = circuits_covered(family, cl_p)
        out.append(_result(f"{label}-delta-inside-delta-prime",
                           cl_d.is_subsystem_of(cl_p),
                           f"delta closure of the 3-circuits ({len(cl_d)} members) "
                           f"inside delta-prime ({len(cl_p)} members)"))
        out.append(_result(
            f"{label}-covered-implies-quadratic",
            (not cov_p) or a <= 2,
            f"delta-prime covers all circuits: {cov_p}"
            + ("" if cov_p else f" (missing {len(miss_p)})")
            + f"; quadratic: {a <= 2}"))
        chordal4, _ = is_l_chordal(family, 4)
        out.append(_result(
            f"{label}-chordal-implies-delta-covered",
            (not chordal4) or cov_d,
            f"4-chordal: {chordal4}; delta closure covers circuits: {cov_d}"))
        span_g = IdealSpan(lines, ground, max_n=max_n)
        span_d = IdealSpan(cl_d.members(), ground, max_n=max_n)
        span_p = IdealSpan(cl_p.members(), ground, max_n=max_n)
        ranks_equal = all(
            span_g.degree_rank(d) == span_d.degree_rank(d) == span_p.degree_rank(d)
            for d in range(ground.n + 1))
        out.append(_result(f"{label}-closure-rank-preservation", ranks_equal,
                           "ideal of the 3-circuits keeps its degree ranks "
                           "under both closures"))
    return out
