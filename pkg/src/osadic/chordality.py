"""Chords of circuits and chordality of circuit families.

An element a outside a circuit c is a chord of c when two circuits c1, c2
meet exactly in {a} and have symmetric difference c.  A family is l-chordal
(l >= 4) when every circuit with at least l elements has a chord; chordal
means 4-chordal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bitsets import elements, size
from .errors import NotACircuitError


@dataclass(frozen=True)
class ChordWitness:
    chord: int
    c1: int
    c2: int


@dataclass(frozen=True)
class CircuitChordInfo:
    circuit: int
    has_chord: bool
    witness: Optional[ChordWitness]


@dataclass(frozen=True)
class ChordalityReport:
    per_circuit: tuple
    chordality_index: int

    @property
    def is_chordal(self):
        return self.chordality_index == 4


def find_chord(family, circuit):
    """Smallest chord witness of a circuit, or None.

    Any witness pair satisfies c1 = (part of c) + {a} and c2 = c - c1 + {a},
    so only circuits with exactly one element outside c are candidates for c1.
    Ties break on the lexicographically least (a, elements of c1).
    """
    if not family.is_circuit(circuit):
        raise NotACircuitError(
            f"{elements(circuit)} is not a circuit of this family")
    best = None
    for c1 in family.circuits:
        outside = c1 & ~circuit
        if size(outside) != 1 or c1 == circuit:
            continue
        a = outside.bit_length()
        c2 = circuit ^ c1
        if not family.is_circuit(c2):
            continue
        assert c1 & c2 == outside and (c1 ^ c2) == circuit
        key = (a, elements(c1))
        if best is None or key < best[0]:
            best = (key, ChordWitness(a, c1, c2))
    return best[1] if best else None


def is_l_chordal(family, l):
    """(True, None) if every circuit of >= l elements has a chord, else
    (False, first chordless circuit in canonical order).  Requires l >= 4."""
    if l < 4:
        raise ValueError(f"l-chordality needs l >= 4, got {l}")
    for c in family.circuits:
        if size(c) >= l and find_chord(family, c) is None:
            return False, c
    return True, None


def chordality_report(family):
    """Chord witnesses for every circuit plus the chordality index.

    The index is the least l >= 4 making the family l-chordal; circuits of
    three elements never need chords, so the index always exists.
    """
    infos = []
    worst = 0
    for c in family.circuits:
        w = find_chord(family, c)
        infos.append(CircuitChordInfo(c, w is not None, w))
        if w is None and size(c) >= 4:
            worst = max(worst, size(c))
    return ChordalityReport(tuple(infos), max(4, worst + 1))
