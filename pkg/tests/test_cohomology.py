"""Tests for finite-group cohomology: differentials, witnesses, class data."""

import random
from fractions import Fraction

import pytest

from sutwist.cohomology import (
    Cochain,
    DegreeMismatch,
    FiniteAbelianGroup,
    NotCocycle,
    NotCyclic,
    aut_pullback,
    aut_witness_cochain,
    coboundary,
    cohomologous,
    cyclic_class_invariant,
    is_cocycle,
    klein_cocycles,
    standard_cyclic_3cocycle,
)
from sutwist.scalars import HALF_ANGLE, UnitAngle, ZERO_ANGLE


def random_cochain(group, degree, rng, denom=12):
    return Cochain.from_function(
        group, degree, lambda *args: UnitAngle(Fraction(rng.randrange(denom), denom))
    )


class TestDifferential:
    @pytest.mark.parametrize("factors", [(2,), (3,), (4,), (2, 2)])
    def test_d_squared_is_zero(self, factors):
        rng = random.Random(sum(factors))
        group = FiniteAbelianGroup(factors)
        for degree in (1, 2):
            c = random_cochain(group, degree, rng)
            assert coboundary(coboundary(c)).is_zero

    def test_coboundaries_are_cocycles(self):
        rng = random.Random(5)
        group = FiniteAbelianGroup([3])
        c = random_cochain(group, 2, rng)
        assert is_cocycle(coboundary(c))


class TestStandardCocycle:
    def test_trivial_index(self):
        assert standard_cyclic_3cocycle(4, 0).is_zero

    def test_point_values(self):
        phi = standard_cyclic_3cocycle(3, 1)
        assert phi((1,), (2,), (1,)) == UnitAngle(Fraction(1, 3))
        assert phi((1,), (1,), (1,)) == ZERO_ANGLE

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_all_indices_are_cocycles(self, k):
        for j in range(k):
            assert is_cocycle(standard_cyclic_3cocycle(k, j))

    def test_index_range_validation(self):
        with pytest.raises(ValueError):
            standard_cyclic_3cocycle(3, 3)


class TestCohomologous:
    def test_reflexive(self):
        phi = standard_cyclic_3cocycle(3, 2)
        assert cohomologous(phi, phi) is not None

    def test_distinct_classes(self):
        assert cohomologous(standard_cyclic_3cocycle(3, 1), standard_cyclic_3cocycle(3, 2)) is None

    def test_witness_is_exact(self):
        group = FiniteAbelianGroup([4])
        rng = random.Random(9)
        b = random_cochain(group, 2, rng)
        phi = standard_cyclic_3cocycle(4, 3)
        shifted = phi + coboundary(b)
        witness = cohomologous(shifted, phi)
        assert witness is not None
        assert (coboundary(witness) - (shifted - phi)).is_zero

    def test_symmetry_and_transitivity_on_samples(self):
        group = FiniteAbelianGroup([3])
        rng = random.Random(13)
        base = standard_cyclic_3cocycle(3, 1)
        a = base + coboundary(random_cochain(group, 2, rng))
        b = base + coboundary(random_cochain(group, 2, rng))
        c = base + coboundary(random_cochain(group, 2, rng))
        assert cohomologous(a, b) is not None
        assert cohomologous(b, a) is not None
        assert cohomologous(b, c) is not None
        assert cohomologous(a, c) is not None

    def test_rejects_non_cocycles(self):
        group = FiniteAbelianGroup([3])
        rng = random.Random(1)
        c = random_cochain(group, 3, rng)
        if is_cocycle(c):  # astronomically unlikely, but keep the test honest
            c = c + Cochain.from_function(
                group, 3, lambda a, b, d: UnitAngle(Fraction(1, 7)) if a == (1,) else ZERO_ANGLE
            )
        with pytest.raises(NotCocycle):
            cohomologous(c, Cochain.zero(group, 3))


class TestAutAction:
    def test_trivial_fixed(self):
        zero = Cochain.zero(FiniteAbelianGroup([3]), 3)
        assert aut_pullback(zero) == zero

    def test_point_evaluation(self):
        phi = standard_cyclic_3cocycle(3, 1)
        assert aut_pullback(phi)((1,), (2,), (1,)) == phi((2,), (1,), (2,))
        assert aut_pullback(phi)((1,), (2,), (1,)) == UnitAngle(Fraction(2, 3))

    def test_involution(self):
        phi = standard_cyclic_3cocycle(4, 3)
        assert aut_pullback(aut_pullback(phi)) == phi

    def test_degree_validation(self):
        with pytest.raises(DegreeMismatch):
            aut_pullback(Cochain.zero(FiniteAbelianGroup([3]), 2))

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_explicit_witness(self, k):
        for j in range(k):
            phi = standard_cyclic_3cocycle(k, j)
            psi = aut_pullback(phi)
            beta = aut_witness_cochain(k, j)
            assert (coboundary(beta) - (phi - psi)).is_zero


class TestCyclicClassInvariant:
    def test_trivial(self):
        assert cyclic_class_invariant(Cochain.zero(FiniteAbelianGroup([5]), 3)) == 0

    def test_standard_representatives(self):
        assert cyclic_class_invariant(standard_cyclic_3cocycle(3, 1)) == 1
        assert cyclic_class_invariant(standard_cyclic_3cocycle(4, 2)) == 2

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_agrees_with_cohomologous_classification(self, k):
        rng = random.Random(k)
        group = FiniteAbelianGroup([k])
        for j in range(k):
            phi = standard_cyclic_3cocycle(k, j)
            perturbed = phi + coboundary(random_cochain(group, 2, rng))
            assert cyclic_class_invariant(perturbed) == j
            for j2 in range(k):
                expected = j == j2
                got = cohomologous(perturbed, standard_cyclic_3cocycle(k, j2)) is not None
                assert got == expected

    def test_rejects_non_cyclic(self):
        with pytest.raises(NotCyclic):
            cyclic_class_invariant(Cochain.zero(FiniteAbelianGroup([2, 2]), 3))


class TestKlein:
    def test_all_are_cocycles(self):
        for phi in klein_cocycles():
            assert is_cocycle(phi)

    def test_mixed_cocycle_point_value(self):
        _, _, phi3 = klein_cocycles()
        assert phi3((1, 0), (1, 0), (0, 1)) == HALF_ANGLE

    def test_central_character_signs(self):
        phi1, phi2, phi3 = klein_cocycles()
        plus, minus, vector = (1, 0), (0, 1), (1, 1)
        assert phi1(plus, plus, plus) == HALF_ANGLE
        assert phi1(vector, vector, vector) == HALF_ANGLE
        assert phi1(minus, minus, minus) == ZERO_ANGLE
        assert phi2(minus, minus, minus) == HALF_ANGLE
        assert phi2(vector, vector, vector) == HALF_ANGLE
        assert phi2(plus, plus, plus) == ZERO_ANGLE
        assert phi3(plus, plus, plus) == ZERO_ANGLE
        assert phi3(minus, minus, minus) == ZERO_ANGLE
        assert phi3(vector, vector, vector) == HALF_ANGLE
