"""Slow reference implementations used only by the tests.

Everything here is deliberately written in a different style from the
package under test: sets are frozensets of labels instead of bit words,
signs come from explicit inversion counting, linear algebra is plain
Gaussian elimination over Fraction, and enumerations are brute force over
all subsets.  Agreement between these and the fast code is the point of
the cross-checks.
"""

from fractions import Fraction
from itertools import combinations


# ---------------------------------------------------------------------------
# exterior algebra on sorted label tuples


def sort_sign(seq):
    """Sign of the permutation sorting seq, by counting inversions."""
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def wedge_words(a, b):
    """(sign, merged tuple) for e_a ^ e_b, or None when they share a label."""
    if set(a) & set(b):
        return None
    return sort_sign(a + b), tuple(sorted(a + b))


def boundary_word(x):
    """d(e_X) as a dict tuple -> Fraction, signs alternating from +1."""
    out = {}
    for j, el in enumerate(x):
        sub = tuple(v for v in x if v != el)
        out[sub] = out.get(sub, Fraction(0)) + Fraction(-1) ** j
    return out


def wedge_dicts(a, b):
    out = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wedge_words(wa, wb)
            if w is None:
                continue
            s, merged = w
            out[merged] = out.get(merged, Fraction(0)) + ca * cb * s
    return {w: c for w, c in out.items() if c != 0}


def boundary_dict(a):
    out = {}
    for w, c in a.items():
        for sub, s in boundary_word(w).items():
            out[sub] = out.get(sub, Fraction(0)) + c * s
    return {w: c for w, c in out.items() if c != 0}


# ---------------------------------------------------------------------------
# rational row reduction and ideal membership


def frac_rank(rows):
    """Rank of a list of Fraction rows by textbook Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / lead[c]
                rows[i] = [a - f * b for a, b in zip(rows[i], lead)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def degree_basis(n, d):
    return [tuple(c) for c in combinations(range(1, n + 1), d)]


def vector_of(terms, basis):
    index = {b: i for i, b in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for w, c in terms.items():
        vec[index[w]] += c
    return vec


def ideal_rows(gens, d, n):
    """All rows e_Y ^ d(e_X) of degree d for generators given as label sets."""
    basis = degree_basis(n, d)
    rows = []
    for x in gens:
        x = tuple(sorted(x))
        k = d + 1 - len(x)
        if k < 0:
            continue
        for y in combinations(range(1, n + 1), k):
            vec = wedge_dicts({y: Fraction(1)}, boundary_word(x))
            if vec:
                rows.append(vector_of(vec, basis))
    return rows


def ideal_rank(gens, d, n):
    return frac_rank(ideal_rows(gens, d, n))


def in_ideal_terms(terms, gens, n):
    """Is a homogeneous dict tuple -> Fraction in the boundary ideal?"""
    if not terms:
        return True
    (d,) = {len(w) for w in terms}
    rows = ideal_rows(gens, d, n)
    vec = vector_of(terms, degree_basis(n, d))
    return frac_rank(rows) == frac_rank(rows + [vec])


def in_ideal_word(x, gens, n):
    """Membership of the single monomial e_X."""
    return in_ideal_terms({tuple(sorted(x)): Fraction(1)}, gens, n)


# ---------------------------------------------------------------------------
# closure operators on frozensets


def delta_close(gens, n):
    """Fixpoint of up-closure plus the one-point-overlap rule, no cleverness."""
    mem = {frozenset(g) for g in gens}
    universe = range(1, n + 1)
    changed = True
    while changed:
        changed = False
        for x in list(mem):
            for e in universe:
                y = x | {e}
                if y not in mem:
                    mem.add(y)
                    changed = True
        for x in list(mem):
            for y in list(mem):
                if len(x) >= 2 and len(y) >= 2 and len(x & y) == 1:
                    z = x ^ y
                    if z not in mem:
                        mem.add(z)
                        changed = True
    return mem


def delta_prime_close(gens, n):
    """Fixpoint of up-closure plus the facet rule, scanning all subsets."""
    mem = {frozenset(g) for g in gens}
    universe = range(1, n + 1)
    changed = True
    while changed:
        changed = False
        for x in list(mem):
            for e in universe:
                y = x | {e}
                if y not in mem:
                    mem.add(y)
                    changed = True
        for size in range(2, n + 1):
            for combo in combinations(universe, size):
                x = frozenset(combo)
                for a in x:
                    if all(x - {l} in mem for l in x - {a}):
                        y = x - {a}
                        if y not in mem:
                            mem.add(y)
                            changed = True
    return mem


# ---------------------------------------------------------------------------
# chords by full pair scan


def all_chord_witnesses(circuits, c):
    """Every (a, c1, c2) with c1 n c2 = {a} and c1 ^ c2 = c, unrestricted."""
    c = frozenset(c)
    fam = [frozenset(x) for x in circuits]
    out = []
    for c1 in fam:
        for c2 in fam:
            if len(c1 & c2) == 1 and (c1 ^ c2) == c:
                (a,) = c1 & c2
                out.append((a, tuple(sorted(c1)), tuple(sorted(c2))))
    return sorted(set(out))


# ---------------------------------------------------------------------------
# circuits by exhaustion


def gf2_rank(cols):
    basis = []
    for v in cols:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def brute_circuits_gf2(columns):
    """Minimal dependent column sets of a GF(2) matrix, by trying everything."""
    n = len(columns)
    dependent = set()
    for size in range(1, n + 1):
        for combo in combinations(range(1, n + 1), size):
            chosen = [columns[j - 1] for j in combo]
            if gf2_rank(chosen) < size:
                dependent.add(frozenset(combo))
    circuits = []
    for d in dependent:
        if not any(o < d for o in dependent):
            circuits.append(tuple(sorted(d)))
    return sorted(circuits, key=lambda t: (len(t), t))


def brute_cycles(n_vertices, edges):
    """Edge sets of simple cycles: connected subgraphs, all degrees two."""
    m = len(edges)
    out = []
    for size in range(3, m + 1):
        for combo in combinations(range(1, m + 1), size):
            chosen = [edges[j - 1] for j in combo]
            deg = {}
            for u, v in chosen:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            verts = sorted(deg)
            reach = {verts[0]}
            grew = True
            while grew:
                grew = False
                for u, v in chosen:
                    if (u in reach) != (v in reach):
                        reach.update((u, v))
                        grew = True
            if len(reach) == len(verts):
                out.append(combo)
    return sorted(out, key=lambda t: (len(t), t))
