"""Ideal membership in the exterior algebra, degree by degree.

For a family of generator subsets, the two-sided ideal generated by their
boundaries is graded; its degree-d piece is spanned by the rows

    e_Y ^ boundary(e_X),   X a generator, |Y| = d + 1 - |X|.

Membership of a homogeneous element is an exact rank question over the
rationals, decided by fraction-free integer elimination.  Rows split into two
kinds: Y meeting X in one element leaves the single monomial e_Z with Z
containing X, and Y disjoint from X leaves a sparse alternating row.  Every
degree-d monomial containing a generator is therefore a ready-made pivot, and
only the sparse disjoint rows need elimination on the remaining columns.
Rows with |Y and X| >= 2 vanish and are skipped throughout.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm

from .bitsets import elements, is_subset, size, word_of
from .errors import GroundMismatchError, GroundTooLargeError, NotHomogeneousError
from .exterior import ExteriorElement, boundary_terms, circuit_boundary, merge_sign
from .matroid import DEFAULT_MAX_ELEMENTS


@lru_cache(maxsize=None)
def monomial_words(n, d):
    """Degree-d monomial words over {1..n}, lexicographic by element tuple."""
    return tuple(word_of(c) for c in combinations(range(1, n + 1), d))


@lru_cache(maxsize=None)
def monomial_index(n, d):
    return {w: i for i, w in enumerate(monomial_words(n, d))}


class IntRowBasis:
    """Echelon basis of integer rows spanning a rational row space.

    Rows stay primitive integer vectors; reduction is fraction-free
    (cross-multiply and divide by the gcd), so membership and rank are exact.
    """

    __slots__ = ("width", "pivots", "rows")

    def __init__(self, width):
        self.width = width
        self.pivots = []
        self.rows = []

    def _reduce(self, vec):
        for pc, prow in zip(self.pivots, self.rows):
            a = vec[pc]
            if a == 0:
                continue
            p = prow[pc]
            vec = [p * x - a * y for x, y in zip(vec, prow)]
            g = 0
            for x in vec:
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                vec = [x // g for x in vec]
        return vec

    def contains(self, vec):
        return not any(self._reduce(list(vec)))

    def add(self, vec):
        """Insert a row; returns True when the rank grew."""
        vec = self._reduce(list(vec))
        lead = next((i for i, x in enumerate(vec) if x), None)
        if lead is None:
            return False
        g = 0
        for x in vec:
            g = gcd(g, x)
        if vec[lead] < 0:
            g = -g
        vec = [x // g for x in vec]
        at = 0
        while at < len(self.pivots) and self.pivots[at] < lead:
            at += 1
        self.pivots.insert(at, lead)
        self.rows.insert(at, vec)
        return True

    @property
    def rank(self):
        return len(self.rows)


class FieldRowBasis:
    """Row basis over GF(p); same interface as IntRowBasis."""

    __slots__ = ("width", "p", "pivots", "rows")

    def __init__(self, width, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"modulus {p} is not prime")
        self.width = width
        self.p = p
        self.pivots = []
        self.rows = []

    def _reduce(self, vec):
        p = self.p
        vec = [x % p for x in vec]
        for pc, prow in zip(self.pivots, self.rows):
            a = vec[pc]
            if a:
                vec = [(x - a * y) % p for x, y in zip(vec, prow)]
        return vec

    def contains(self, vec):
        return not any(self._reduce(vec))

    def add(self, vec):
        vec = self._reduce(vec)
        lead = next((i for i, x in enumerate(vec) if x), None)
        if lead is None:
            return False
        inv = pow(vec[lead], -1, self.p)
        vec = [x * inv % self.p for x in vec]
        at = 0
        while at < len(self.pivots) and self.pivots[at] < lead:
            at += 1
        self.pivots.insert(at, lead)
        self.rows.insert(at, vec)
        return True

    @property
    def rank(self):
        return len(self.rows)


def _disjoint_row(y_word, x_word, cols, index, skip):
    """Row of e_Y ^ boundary(e_X) over the degree-d monomials, with the
    columns in skip (ready-made pivots) zeroed out."""
    vec = [0] * cols
    hit = False
    for sub, sign in boundary_terms(x_word):
        w = y_word | sub
        if w in skip:
            continue
        vec[index[w]] += sign * merge_sign(y_word, sub)
        hit = True
    return vec if hit else None


class _DegreeBasis:
    __slots__ = ("pivot_words", "reduced")

    def __init__(self, pivot_words, reduced):
        self.pivot_words = pivot_words
        self.reduced = reduced

    @property
    def rank(self):
        return len(self.pivot_words) + self.reduced.rank


class IdealSpan:
    """Graded span of the boundary ideal of a generator family.

    Degree components are built lazily and cached; instances are safe to read
    concurrently once a degree has been built under the internal lock.  With
    modulus=p the same spans are taken over GF(p) instead of the rationals.
    """

    def __init__(self, generators, ground, modulus=None,
                 max_n=DEFAULT_MAX_ELEMENTS):
        if ground.n > max_n:
            raise GroundTooLargeError(ground.n, max_n)
        # the empty word generates boundary(1) = 0 and is dropped
        gens = sorted({g for g in generators if g}, key=lambda w: (size(w), w))
        self.generators = tuple(gens)
        self.ground = ground
        self.modulus = modulus
        self._levels = {}
        self._lock = threading.Lock()

    def _build(self, d):
        n = self.ground.n
        words = monomial_words(n, d)
        index = monomial_index(n, d)
        pivot_words = frozenset(
            w for w in words
            if any(is_subset(g, w) for g in self.generators))
        if self.modulus is None:
            reduced = IntRowBasis(len(words))
        else:
            reduced = FieldRowBasis(len(words), self.modulus)
        for g in self.generators:
            k = d + 1 - size(g)
            if k < 0:
                continue
            rest = [i for i in range(1, n + 1) if not (g >> (i - 1)) & 1]
            for combo in combinations(rest, k):
                row = _disjoint_row(word_of(combo), g, len(words), index,
                                    pivot_words)
                if row is not None:
                    reduced.add(row)
        return _DegreeBasis(pivot_words, reduced)

    def _basis(self, d):
        with self._lock:
            if d not in self._levels:
                self._levels[d] = self._build(d)
            return self._levels[d]

    def degree_rank(self, d):
        """Dimension of the degree-d component of the ideal."""
        if d < 0 or d > self.ground.n:
            return 0
        return self._basis(d).rank

    def contains(self, element):
        """Exact membership for a homogeneous element (zero counts as member)."""
        if element.ground != self.ground:
            raise GroundMismatchError("element and span live on different grounds")
        if element.is_zero():
            return True
        d = element.degree()
        basis = self._basis(d)
        index = monomial_index(self.ground.n, d)
        scale = lcm(*(c.denominator for c in element.terms.values()))
        vec = [0] * len(index)
        outside = False
        for w, c in element.terms.items():
            if w in basis.pivot_words:
                continue
            vec[index[w]] = int(c * scale)
            outside = True
        if not outside:
            return True
        if self.modulus is not None:
            vec = [x % self.modulus for x in vec]
        return basis.reduced.contains(vec)

    def contains_all_components(self, element):
        """Convenience for non-homogeneous elements: every component must lie
        in the span of its own degree."""
        return all(self.contains(part) for part in element.homogeneous_components())


def ideal_degree_span(generators, d, ground, max_n=DEFAULT_MAX_ELEMENTS):
    """All nonzero rows e_Y ^ boundary(e_X) of degree d, as integer vectors
    over the degree-d monomials in lexicographic order.

    This is the unstructured row list; IdealSpan holds the same row space in
    eliminated form.  Rows where Y meets X in two or more elements are zero
    and are omitted.
    """
    if ground.n > max_n:
        raise GroundTooLargeError(ground.n, max_n)
    n = ground.n
    index = monomial_index(n, d)
    rows = []
    for g in sorted({g for g in generators if g}, key=lambda w: (size(w), w)):
        k = d + 1 - size(g)
        if k < 0:
            continue
        for combo in combinations(range(1, n + 1), k):
            y = word_of(combo)
            if size(y & g) >= 2:
                continue
            vec = [0] * len(index)
            for sub, sign in boundary_terms(g):
                if y & sub:
                    continue
                vec[index[y | sub]] += sign * merge_sign(y, sub)
            if any(vec):
                rows.append(vec)
    return rows


def in_ideal(element, generators, modulus=None, max_n=DEFAULT_MAX_ELEMENTS):
    """Is a homogeneous element in the boundary ideal of the generators?"""
    span = IdealSpan(generators, element.ground, modulus=modulus, max_n=max_n)
    return span.contains(element)


def in_ideal_components(element, generators, modulus=None,
                        max_n=DEFAULT_MAX_ELEMENTS):
    """Membership for arbitrary elements, tested component by component."""
    span = IdealSpan(generators, element.ground, modulus=modulus, max_n=max_n)
    return span.contains_all_components(element)


@dataclass(frozen=True)
class CircuitVerdict:
    circuit: int
    circuit_size: int
    member: bool


@dataclass(frozen=True)
class AdicityReport:
    level: int
    verdicts: tuple
    is_l_adic: bool
    method: str

    def verdict_for(self, circuit):
        for v in self.verdicts:
            if v.circuit == circuit:
                return v
        raise KeyError(elements(circuit))


def is_l_adic(family, l, slow=False, modulus=None, max_n=DEFAULT_MAX_ELEMENTS):
    """Does the boundary ideal of all circuits equal that of the circuits with
    at most l+1 elements?

    The fast route checks each larger circuit's boundary for membership in
    the truncated ideal (the truncated generators lie in the full ideal by
    construction, so this decides equality).  With slow=True the two ideals
    are instead compared degree by degree through their ranks; the routes
    must agree and a mismatch raises RuntimeError.
    """
    if l < 1:
        raise ValueError(f"adicity level must be at least 1, got {l}")
    ground = family.ground
    cut = family.circuits_up_to(l + 1)
    span = IdealSpan(cut, ground, modulus=modulus, max_n=max_n)
    verdicts = []
    for c in family.circuits:
        member = span.contains(circuit_boundary(ground, c))
        if size(c) <= l + 1 and not member:
            raise RuntimeError("a generator fell outside its own span")
        verdicts.append(CircuitVerdict(c, size(c), member))
    overall = all(v.member for v in verdicts if v.circuit_size > l + 1)
    method = "membership"
    if slow:
        full = IdealSpan(family.circuits, ground, modulus=modulus, max_n=max_n)
        by_rank = all(full.degree_rank(d) == span.degree_rank(d)
                      for d in range(ground.n + 1))
        if by_rank != overall:
            raise RuntimeError(
                f"rank comparison ({by_rank}) disagrees with generator "
                f"membership ({overall}) at level {l}")
        method = "degree-rank"
    return AdicityReport(l, tuple(verdicts), overall, method)


def is_quadratic(family, slow=False, modulus=None, max_n=DEFAULT_MAX_ELEMENTS):
    """Quadraticity is adicity at level 2: the ideal of the 3-element circuits
    already generates everything."""
    return is_l_adic(family, 2, slow=slow, modulus=modulus, max_n=max_n)
