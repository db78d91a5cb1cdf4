import numpy as np
import pytest

from cerings.core import (FiniteAlgebra, exterior_algebra, field_algebra,
                          ideal_closure, product_algebra, product_grading,
                          quotient_algebra, quotient_grading)
from cerings.errors import DimensionError, HypothesisError
from cerings.fplinalg import PrimeField, member, subspace_sum, intersect
from cerings.graded import (Grading, check_generalized_anticommutative,
                            check_grading, check_homogeneously_faithful,
                            component, even_part, graded_ce_criterion,
                            graded_center_predicted)
from cerings.structure import center


def degree_one_square_zero_counterexample():
    """Four-dimensional algebra on 1, x, y, z with deg x = deg y = 1,
    deg z = 2, and every product of positive-degree elements zero: the
    degree pair (1, 1) then sees a nonzero component of degree 2 killed by
    every degree-1 element, so the ring is not homogeneously faithful."""
    d = 4
    table = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        table[0, i, i] = 1
        table[i, 0, i] = 1
    unit = np.array([1, 0, 0, 0], dtype=np.int64)
    algebra = FiniteAlgebra(PrimeField(3), table, unit, name="faithless")
    return algebra, Grading((0, 1, 1, 2))


class TestCheckGrading:
    def test_all_zero_grading_is_valid(self, m2f2):
        assert check_grading(m2f2, Grading((0,) * 4))

    def test_exterior_grading_is_valid(self, lam33):
        a, g = lam33
        assert check_grading(a, g)

    def test_degree_one_idempotent_breaks_compatibility(self, f3xf3):
        # the second component is idempotent, so degree 1 would need 1+1=1
        assert not check_grading(f3xf3, Grading((0, 1)))

    def test_unit_must_be_degree_zero(self, f3xf3):
        assert not check_grading(f3xf3, Grading((1, 1)))

    def test_length_mismatch(self, lam33):
        with pytest.raises(DimensionError):
            check_grading(lam33[0], Grading((0, 1)))

    def test_components(self, lam33):
        a, g = lam33
        assert component(a, g, 0).dim == 1
        assert component(a, g, 1).dim == 3
        assert component(a, g, 2).dim == 3
        assert component(a, g, 3).dim == 1
        assert component(a, g, 9).dim == 0
        assert even_part(a, g).dim == 4


class TestGeneralizedAnticommutative:
    def test_commutative_with_zero_grading(self, f3xf3):
        assert check_generalized_anticommutative(f3xf3, Grading((0, 0)))

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_exterior_algebras(self, p, n):
        a, g = exterior_algebra(p, n)
        assert check_generalized_anticommutative(a, g)

    def test_triangular_counterexample(self, t2f3):
        # diagonal degree 0, strict upper degree 1 in basis order
        # (e00, e01, e11): e00*e01 = e01 but e01*e00 = 0 != -e01
        g = Grading((0, 1, 0))
        assert check_grading(t2f3, g)
        assert not check_generalized_anticommutative(t2f3, g)

    def test_invalid_grading_raises(self, f3xf3):
        with pytest.raises(HypothesisError):
            check_generalized_anticommutative(f3xf3, Grading((0, 1)))


class TestHomogeneouslyFaithful:
    def test_trivial_grading(self, f3xf3):
        assert check_homogeneously_faithful(f3xf3, Grading((0, 0)))

    @pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (3, 3), (5, 3), (2, 3)])
    def test_exterior_algebras(self, p, n):
        a, g = exterior_algebra(p, n)
        assert check_homogeneously_faithful(a, g)

    def test_quotient_by_top_component_stays_faithful(self, lam33):
        a, g = lam33
        ideal = ideal_closure(a, [a.basis_element(7)])
        q = quotient_algebra(a, ideal)
        qg = quotient_grading(a, ideal, g)
        assert qg is not None and qg.degrees == (0, 1, 1, 1, 2, 2, 2)
        assert check_homogeneously_faithful(q, qg)

    def test_quotient_by_middle_component_is_vacuously_faithful(self, lam33):
        # killing the degree-2 part also kills degree 3, so no nonzero
        # component is reachable as a sum of two positive degrees
        a, g = lam33
        ideal = ideal_closure(a, [a.basis_element(i) for i in (4, 5, 6)])
        assert ideal.dim == 4
        q = quotient_algebra(a, ideal)
        qg = quotient_grading(a, ideal, g)
        assert qg.degrees == (0, 1, 1, 1)
        assert check_homogeneously_faithful(q, qg)

    def test_killed_degree_pair_detected(self):
        a, g = degree_one_square_zero_counterexample()
        assert check_grading(a, g)
        assert check_generalized_anticommutative(a, g)
        assert not check_homogeneously_faithful(a, g)

    def test_product_with_field_loses_faithfulness(self, lam33):
        # (0, 1) in the field component annihilates the whole positive part
        a, ga = lam33
        f = field_algebra(3)
        prod = product_algebra(a, f)
        pg = product_grading(a, ga, f, Grading((0,)))
        assert pg is not None and check_grading(prod, pg)
        assert not check_homogeneously_faithful(prod, pg)


class TestCenterFormula:
    def test_three_generators(self, lam33):
        # predicted center: degree 0, the even part, and the odd top
        a, g = lam33
        predicted = graded_center_predicted(a, g)
        assert predicted.dim == 5
        assert predicted == center(a)
        for i in (0, 4, 5, 6, 7):
            assert member(a.basis_element(i), predicted)

    def test_single_generator_everything_is_central(self):
        a, g = exterior_algebra(3, 1)
        assert graded_center_predicted(a, g).dim == 2

    def test_even_top_keeps_only_even_part(self, lam32):
        a, g = lam32
        predicted = graded_center_predicted(a, g)
        assert predicted.dim == 2
        assert predicted == center(a)

    def test_rejects_characteristic_two(self):
        a, g = exterior_algebra(2, 3)
        with pytest.raises(HypothesisError, match="2-torsion"):
            graded_center_predicted(a, g)

    def test_rejects_unfaithful_ring(self):
        a, g = degree_one_square_zero_counterexample()
        with pytest.raises(HypothesisError, match="faithful"):
            graded_center_predicted(a, g)

    def test_rejects_non_anticommutative(self, t2f3):
        with pytest.raises(HypothesisError, match="anticommutative"):
            graded_center_predicted(t2f3, Grading((0, 1, 0)))

    @pytest.mark.parametrize("p", [3, 5])
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_formula_matches_computed_center(self, p, n):
        a, g = exterior_algebra(p, n)
        assert graded_center_predicted(a, g) == center(a)


class TestParityCriterion:
    @pytest.mark.parametrize("p", [3, 5])
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_exterior_parity_law(self, p, n):
        a, g = exterior_algebra(p, n)
        assert graded_ce_criterion(a, g) == (n % 2 == 1)

    def test_degree_zero_ring_passes(self):
        a = field_algebra(3)
        assert graded_ce_criterion(a, Grading((0,)))


class TestCenterDecomposition:
    @pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (5, 3), (2, 3)])
    def test_center_decomposes_along_components(self, p, n):
        # the center of any graded ring is the sum of its intersections
        # with the homogeneous components
        a, g = exterior_algebra(p, n)
        c = center(a)
        total = None
        for degree in sorted(set(g.degrees)):
            piece = intersect(c, component(a, g, degree))
            total = piece if total is None else subspace_sum(total, piece)
        assert total == c
