"""Exterior algebra over the rationals on generators e_1, ..., e_n.

Elements are finite sums c_X * e_X with X a subset word and c_X an exact
Fraction; e_X means the wedge of the e_i for i in X in increasing order.
The boundary map sends e_i to 1, satisfies the graded Leibniz rule, and on a
monomial alternates signs starting positive on the smallest element:

    boundary(e_X) = sum_j (-1)^(j-1) e_(X minus its j-th smallest element)

so boundary(e_12) = e_2 - e_1 and boundary applied twice is zero.
"""

from __future__ import annotations

from fractions import Fraction

from .bitsets import elements, format_word, size, word_key
from .errors import GroundMismatchError, InputError, NotHomogeneousError


def merge_sign(a, b):
    """Sign sorting the concatenation (elements of a, elements of b).

    a and b must be disjoint words; the sign counts pairs i in a, j in b
    with i > j.
    """
    inv = 0
    for j in elements(b):
        inv += (a >> j).bit_count()
    return -1 if inv & 1 else 1


def boundary_terms(word):
    """The (subword, sign) terms of boundary(e_word), smallest element first."""
    out = []
    sign = 1
    for i in elements(word):
        out.append((word ^ (1 << (i - 1)), sign))
        sign = -sign
    return out


class ExteriorElement:
    """Immutable rational linear combination of wedge monomials."""

    __slots__ = ("ground", "terms")

    def __init__(self, ground, terms):
        self.ground = ground
        self.terms = {w: c for w, c in terms.items() if c != 0}

    @classmethod
    def zero(cls, ground):
        return cls(ground, {})

    @classmethod
    def monomial(cls, ground, word, coeff=Fraction(1)):
        if word & ~ground.full:
            raise InputError(f"monomial {format_word(word)} leaves the ground set")
        return cls(ground, {word: Fraction(coeff)})

    def _match(self, other):
        if self.ground != other.ground:
            raise GroundMismatchError("elements live on different ground sets")

    def __eq__(self, other):
        return (isinstance(other, ExteriorElement)
                and self.ground == other.ground and self.terms == other.terms)

    def __add__(self, other):
        self._match(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return ExteriorElement(self.ground, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ExteriorElement(self.ground, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ExteriorElement):
            return wedge(self, other)
        scale = Fraction(other)
        return ExteriorElement(self.ground,
                               {w: c * scale for w, c in self.terms.items()})

    def __rmul__(self, scale):
        return self * scale

    def is_zero(self):
        return not self.terms

    def coefficient(self, word):
        return self.terms.get(word, Fraction(0))

    def degrees(self):
        return sorted({size(w) for w in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        """Degree of a homogeneous element; zero element has degree None."""
        ds = self.degrees()
        if len(ds) > 1:
            raise NotHomogeneousError(f"element mixes degrees {ds}")
        return ds[0] if ds else None

    def homogeneous_components(self):
        """Nonzero components by increasing degree."""
        parts = {}
        for w, c in self.terms.items():
            parts.setdefault(size(w), {})[w] = c
        return [ExteriorElement(self.ground, parts[d]) for d in sorted(parts)]

    def sorted_terms(self):
        return [(w, self.terms[w]) for w in sorted(self.terms, key=word_key)]

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for w, c in self.sorted_terms():
            mag = -c if c < 0 else c
            body = "1" if w == 0 else "e" + format_word(w)
            if mag != 1 or w == 0:
                body = f"{mag}*{body}" if w else f"{mag}"
            bits.append(("-" if c < 0 else "+") + body)
        lead = bits[0][1:] if bits[0][0] == "+" else bits[0]
        return lead + "".join(" " + b[0] + " " + b[1:] for b in bits[1:])

    def __repr__(self):
        return f"ExteriorElement({self})"


def wedge(a, b):
    """Exterior product; monomials sharing an element multiply to zero."""
    a._match(b)
    terms = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            if wa & wb:
                continue
            w = wa | wb
            c = ca * cb * merge_sign(wa, wb)
            terms[w] = terms.get(w, Fraction(0)) + c
    return ExteriorElement(a.ground, terms)


def boundary(a):
    """Linear extension of the alternating-sign boundary of monomials."""
    terms = {}
    for w, c in a.terms.items():
        for sub, sign in boundary_terms(w):
            terms[sub] = terms.get(sub, Fraction(0)) + c * sign
    return ExteriorElement(a.ground, terms)


def circuit_boundary(ground, word):
    """Shorthand for boundary(e_word), the ideal generator attached to word."""
    return boundary(ExteriorElement.monomial(ground, word))
