"""Exterior algebra arithmetic and the boundary operator."""

import random
from fractions import Fraction

import pytest

import naive
from osadic import ExteriorElement, GroundSet, boundary, circuit_boundary, wedge
from osadic.errors import (GroundMismatchError, InputError,
                           NotHomogeneousError)
from osadic.exterior import boundary_terms, merge_sign
from osadic.bitsets import elements, word_of
from osadic.verify import random_element, random_homogeneous

G4 = GroundSet(4)


def mono(labels, coeff=1, ground=G4):
    return ExteriorElement.monomial(ground, word_of(labels), Fraction(coeff))


class TestWedge:
    def test_ordered_product(self):
        assert wedge(mono((1,)), mono((2,))) == mono((1, 2))

    def test_transposition_flips_sign(self):
        assert wedge(mono((2,)), mono((1,))) == mono((1, 2), -1)

    def test_repeated_generator_vanishes(self):
        assert wedge(mono((1,)), mono((1, 3))).is_zero()

    def test_one_is_the_unit(self):
        one = ExteriorElement.monomial(G4, 0)
        a = mono((1, 3)) + mono((2, 4), -3)
        assert wedge(one, a) == a == wedge(a, one)

    def test_associative(self):
        rng = random.Random(41)
        for _ in range(50):
            n = rng.randint(1, 6)
            g = GroundSet(n)
            a, b, c = (random_element(rng, g) for _ in range(3))
            assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))

    def test_graded_commutative(self):
        rng = random.Random(43)
        for _ in range(50):
            n = rng.randint(1, 6)
            g = GroundSet(n)
            da, db = rng.randint(0, n), rng.randint(0, n)
            a = random_homogeneous(rng, g, da)
            b = random_homogeneous(rng, g, db)
            sign = -1 if (da * db) % 2 else 1
            assert wedge(a, b) == sign * wedge(b, a)

    def test_signs_match_inversion_count(self):
        rng = random.Random(47)
        for _ in range(100):
            n = rng.randint(2, 8)
            a = word_of(rng.sample(range(1, n + 1), rng.randint(0, n)))
            rest = [i for i in range(1, n + 1) if not (a >> (i - 1)) & 1]
            b = word_of(rng.sample(rest, rng.randint(0, len(rest))))
            got = naive.wedge_words(elements(a), elements(b))
            assert got is not None
            assert merge_sign(a, b) == got[0]


class TestBoundary:
    def test_edge(self):
        assert boundary(mono((1, 2))) == mono((2,)) - mono((1,))

    def test_triangle(self):
        expect = mono((2, 3)) - mono((1, 3)) + mono((1, 2))
        assert boundary(mono((1, 2, 3))) == expect
        assert circuit_boundary(G4, word_of((1, 2, 3))) == expect

    def test_generators_map_to_one(self):
        one = ExteriorElement.monomial(G4, 0)
        for i in range(1, 5):
            assert boundary(mono((i,))) == one

    def test_squares_to_zero(self):
        assert boundary(boundary(mono((1, 2, 3, 4)))).is_zero()
        rng = random.Random(53)
        for _ in range(100):
            a = random_element(rng, GroundSet(rng.randint(1, 7)))
            assert boundary(boundary(a)).is_zero()

    def test_leibniz(self):
        rng = random.Random(59)
        for _ in range(100):
            n = rng.randint(1, 6)
            g = GroundSet(n)
            da = rng.randint(0, n)
            a = random_homogeneous(rng, g, da)
            b = random_homogeneous(rng, g, rng.randint(0, n))
            sign = -1 if da % 2 else 1
            assert boundary(wedge(a, b)) == \
                wedge(boundary(a), b) + sign * wedge(a, boundary(b))

    def test_terms_alternate_from_plus(self):
        assert boundary_terms(word_of((2, 5, 7))) == [
            (word_of((5, 7)), 1), (word_of((2, 7)), -1), (word_of((2, 5)), 1)]

    def test_matches_naive_boundary(self):
        rng = random.Random(61)
        for _ in range(50):
            n = rng.randint(1, 7)
            a = random_element(rng, GroundSet(n))
            fast = {elements(w): c for w, c in boundary(a).terms.items()}
            slow = naive.boundary_dict(
                {elements(w): c for w, c in a.terms.items()})
            assert fast == slow


class TestElement:
    def test_zero_and_cancellation(self):
        z = mono((1, 2)) - mono((1, 2))
        assert z.is_zero() and z == ExteriorElement.zero(G4)
        assert z.degree() is None

    def test_scalar_arithmetic(self):
        a = 2 * mono((1,)) + mono((2,)) * Fraction(1, 3)
        assert a.coefficient(word_of((1,))) == 2
        assert a.coefficient(word_of((2,))) == Fraction(1, 3)
        assert (-a + a).is_zero()
        assert (a * 0).is_zero()

    def test_degrees_and_components(self):
        a = mono((1,)) + mono((2, 3), -1) + mono((1, 4), 2)
        assert a.degrees() == [1, 2]
        assert not a.is_homogeneous()
        with pytest.raises(NotHomogeneousError):
            a.degree()
        parts = a.homogeneous_components()
        assert [p.degree() for p in parts] == [1, 2]
        assert parts[0] + parts[1] == a

    def test_ground_mismatch(self):
        with pytest.raises(GroundMismatchError):
            mono((1,)) + mono((1,), ground=GroundSet(5))
        with pytest.raises(GroundMismatchError):
            wedge(mono((1,)), mono((2,), ground=GroundSet(5)))

    def test_monomial_outside_ground(self):
        with pytest.raises(InputError):
            ExteriorElement.monomial(G4, word_of((5,)))

    def test_rendering(self):
        a = mono((1, 2)) - mono((3,), Fraction(2, 3)) + mono((), 5)
        assert str(a) == "5 - 2/3*e{3} + e{1,2}"
        assert str(mono((1, 2))) == "e{1,2}"
        assert str(mono((1, 2), -1)) == "-e{1,2}"
        assert str(ExteriorElement.zero(G4)) == "0"
        assert str(mono((3,), Fraction(2, 3))) == "2/3*e{3}"
        b = mono((2,)) - mono((1,))
        assert str(b) == "-e{1} + e{2}"
