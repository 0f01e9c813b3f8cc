"""Simple matroids presented by their circuits.

A matroid on ground set {1..n} is stored as the tuple of its circuit words
(inclusion-minimal dependent sets).  Families can be entered directly, read
off a GF(2) matrix (column dependencies), or read off a graph (edge sets of
simple cycles).  Only simple matroids are accepted: every circuit must have
at least three elements.
"""

from __future__ import annotations

from .bitsets import (elements, format_word, full_word, is_subset, size,
                      word_key, word_of)
from .errors import (CircuitAxiomError, ComparablePairError, EliminationFailureError,
                     EmptyCircuitError, GroundMismatchError, GroundTooLargeError,
                     InputError, NotSimpleError)

DEFAULT_MAX_ELEMENTS = 24


class GroundSet:
    """Ground set {1..n}; refuses n above the cap (powersets get materialized)."""

    __slots__ = ("n",)

    def __init__(self, n, max_n=DEFAULT_MAX_ELEMENTS):
        if n < 1:
            raise InputError(f"ground set needs at least one element, got n={n}")
        if n > max_n:
            raise GroundTooLargeError(n, max_n)
        self.n = n

    @property
    def full(self):
        return full_word(self.n)

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.n == other.n

    def __hash__(self):
        return hash(("GroundSet", self.n))

    def __repr__(self):
        return f"GroundSet({self.n})"


class CircuitFamily:
    """Validated circuit family of a simple matroid, canonically ordered."""

    __slots__ = ("ground", "circuits")

    def __init__(self, ground, circuits):
        self.ground = ground
        self.circuits = circuits

    def __eq__(self, other):
        return (isinstance(other, CircuitFamily)
                and self.ground == other.ground
                and self.circuits == other.circuits)

    def __hash__(self):
        return hash((self.ground, self.circuits))

    def __repr__(self):
        return f"CircuitFamily(n={self.ground.n}, circuits={len(self.circuits)})"

    def is_circuit(self, word):
        return word in self._circuit_set()

    def _circuit_set(self):
        # tuples are small; a linear scan is fine and keeps the type hashable
        return self.circuits

    def circuits_up_to(self, l):
        """Sub-collection of circuits with at most l elements (a plain tuple)."""
        return tuple(c for c in self.circuits if size(c) <= l)

    def max_circuit_size(self):
        return max((size(c) for c in self.circuits), default=0)

    def contains_circuit(self, word):
        """Does word contain some circuit, i.e. is it dependent?"""
        return any(is_subset(c, word) for c in self.circuits)

    def rank(self, word=None):
        """Rank of a subset (default: whole ground set) via greedy extension."""
        if word is None:
            word = self.ground.full
        indep = 0
        for i in elements(word):
            cand = indep | (1 << (i - 1))
            if not self.contains_circuit(cand):
                indep = cand
        return size(indep)


def validate_circuit_family(raw_circuits, ground):
    """Check the circuit axioms and return the canonical CircuitFamily.

    Raises EmptyCircuitError, NotSimpleError, ComparablePairError or
    EliminationFailureError with witnessing circuits on the first violation
    found.  Duplicates in raw_circuits are dropped.
    """
    seen = set()
    circs = []
    for c in raw_circuits:
        if c & ~ground.full:
            raise InputError(
                f"circuit {format_word(c)} leaves the ground set {{1..{ground.n}}}")
        if c == 0:
            raise EmptyCircuitError()
        if size(c) < 3:
            raise NotSimpleError(c)
        if c not in seen:
            seen.add(c)
            circs.append(c)
    circs.sort(key=word_key)
    for i, c1 in enumerate(circs):
        for c2 in circs[i + 1:]:
            if is_subset(c1, c2):
                raise ComparablePairError(c1, c2)
            if is_subset(c2, c1):
                raise ComparablePairError(c2, c1)
    for i, c1 in enumerate(circs):
        for c2 in circs[i + 1:]:
            common = c1 & c2
            if not common:
                continue
            union = c1 | c2
            for e in elements(common):
                rest = union & ~(1 << (e - 1))
                if not any(is_subset(c3, rest) for c3 in circs):
                    raise EliminationFailureError(c1, c2, e)
    return CircuitFamily(ground, tuple(circs))


class BinaryMatrix:
    """GF(2) matrix; column j represents element j, stored as a word over rows."""

    __slots__ = ("rows", "cols", "columns")

    def __init__(self, rows, cols, columns):
        if cols < 1:
            raise InputError("matrix needs at least one column")
        for j, col in enumerate(columns, start=1):
            if col == 0:
                raise InputError(f"column {j} is zero: the matroid would have a loop")
            if col >> rows:
                raise InputError(f"column {j} has bits outside the {rows} rows")
        for j, col in enumerate(columns, start=1):
            if col in columns[:j - 1]:
                raise InputError(
                    f"column {j} repeats an earlier column: parallel elements")
        self.rows = rows
        self.cols = cols
        self.columns = tuple(columns)

    @classmethod
    def from_rows(cls, row_strings):
        """Build from equal-length strings of 0/1 characters."""
        r = len(row_strings)
        if r == 0:
            raise InputError("matrix needs at least one row")
        n = len(row_strings[0])
        cols = [0] * n
        for i, line in enumerate(row_strings):
            if len(line) != n:
                raise InputError(f"row {i + 1} has length {len(line)}, expected {n}")
            for j, ch in enumerate(line):
                if ch == "1":
                    cols[j] |= 1 << i
                elif ch != "0":
                    raise InputError(f"row {i + 1} has character {ch!r}, expected 0/1")
        return cls(r, n, cols)


def _gf2_reduce(col, basis):
    """Reduce col against an echelon basis of column words; 0 means dependent."""
    v = col
    for b in basis:
        if (v ^ b) < v:
            v ^= b
    return v


def circuits_of_binary_matrix(matrix, max_n=DEFAULT_MAX_ELEMENTS):
    """Circuits of the column matroid of a GF(2) matrix.

    Subsets are grown by their largest element, so a dependent set whose
    proper subsets were all seen independent is exactly a new circuit; any
    candidate containing a known circuit is pruned unexplored.
    """
    n = matrix.cols
    ground = GroundSet(n, max_n)
    circuits = []
    # frontier holds (subset word, echelon basis of its columns)
    frontier = [(0, ())]
    for _ in range(n):
        grown = []
        for word, basis in frontier:
            top = word.bit_length()  # largest used label, 0 if empty
            for j in range(top + 1, n + 1):
                cand = word | (1 << (j - 1))
                if any(is_subset(c, cand) for c in circuits):
                    continue
                v = _gf2_reduce(matrix.columns[j - 1], basis)
                if v == 0:
                    circuits.append(cand)
                else:
                    nb = tuple(sorted(basis + (v,), reverse=True))
                    grown.append((cand, nb))
        frontier = grown
    return validate_circuit_family(circuits, ground)


class GraphInput:
    """Finite simple graph; edge j joins edges[j-1] = (u, v), vertices 1-based."""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices, edges):
        if vertices < 1:
            raise InputError("graph needs at least one vertex")
        seen = set()
        norm = []
        for k, (u, v) in enumerate(edges, start=1):
            if not (1 <= u <= vertices and 1 <= v <= vertices):
                raise InputError(f"edge {k} endpoint outside 1..{vertices}")
            if u == v:
                raise InputError(f"edge {k} is a loop at vertex {u}")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise InputError(f"edge {k} repeats edge {pair}: parallel edges")
            seen.add(pair)
            norm.append(pair)
        self.vertices = vertices
        self.edges = tuple(norm)

    def incidence_matrix(self):
        cols = []
        for u, v in self.edges:
            cols.append((1 << (u - 1)) | (1 << (v - 1)))
        return BinaryMatrix(self.vertices, len(self.edges), cols)


def circuits_of_graph(graph, max_n=DEFAULT_MAX_ELEMENTS):
    """Edge sets of the simple cycles of a graph, as a circuit family.

    Cycles are collected by anchored depth-first search: each cycle is found
    from its smallest vertex, walking only larger vertices, and recorded once
    by fixing the orientation (second vertex smaller than last).
    """
    n = len(graph.edges)
    if n == 0:
        raise InputError("graph has no edges: the ground set would be empty")
    ground = GroundSet(n, max_n)
    adj = {v: [] for v in range(1, graph.vertices + 1)}
    for label, (u, v) in enumerate(graph.edges, start=1):
        adj[u].append((v, label))
        adj[v].append((u, label))
    cycles = []

    def walk(start, here, used_vertices, edge_word, path_len, second):
        for (nxt, label) in adj[here]:
            bit = 1 << (label - 1)
            if nxt == start:
                if path_len >= 3 and second < here:
                    cycles.append(edge_word | bit)
                continue
            if nxt < start or (used_vertices >> nxt) & 1:
                continue
            walk(start, nxt, used_vertices | (1 << nxt), edge_word | bit,
                 path_len + 1, second if path_len > 1 else nxt)

    for s in range(1, graph.vertices + 1):
        walk(s, s, 1 << s, 0, 1, graph.vertices + 1)
    return validate_circuit_family(cycles, ground)


def is_binary(family):
    """Pair test for binary representability.

    Checks that the symmetric difference of any two distinct circuits contains
    a circuit.  Returns (True, None) or (False, (c1, c2)) with the first
    failing pair in canonical order.
    """
    circs = family.circuits
    for i, c1 in enumerate(circs):
        for c2 in circs[i + 1:]:
            diff = c1 ^ c2
            if not any(is_subset(c3, diff) for c3 in circs):
                return False, (c1, c2)
    return True, None


def is_binary_disjoint_union(family):
    """Stronger diagnostic: every symmetric difference of two distinct circuits
    must partition into disjoint circuits.  Returns (ok, witness pair or None).
    """
    circs = family.circuits
    memo = {0: True}

    def decomposable(word):
        if word in memo:
            return memo[word]
        ok = any(is_subset(c, word) and decomposable(word & ~c) for c in circs)
        memo[word] = ok
        return ok

    for i, c1 in enumerate(circs):
        for c2 in circs[i + 1:]:
            if not decomposable(c1 ^ c2):
                return False, (c1, c2)
    return True, None
