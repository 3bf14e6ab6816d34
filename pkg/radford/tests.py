from fractions import Fraction

from django.test import SimpleTestCase

from hopfcore.algebra import apply_coproduct_leg, apply_counit_leg, tensor_mul, tensor_product
from hopfcore.axioms import verify_hopf
from hopfcore.exceptions import StructureError
from hopfcore.tensors import Tensor
from quasitri.checks import double_braiding, double_braiding_inverse, is_pseudotriangular_direct, \
    is_pseudotriangular_F, is_triangular

from .builders import (
    RParams, _r_double_sum, build_R, build_radford, double_braiding_element, group_like_relations,
    idempotent_report, idempotents,
)

NUS = (1, 3, 5)


class BuildRadfordTest(SimpleTestCase):
    def test_sweedler(self):
        A = build_radford(1)
        self.assertEqual(A.hopf.dim, 4)
        self.assertEqual(A.hopf.labels, ('1', 'x', 'g', 'gx'))

    def test_dimensions_and_axioms(self):
        for nu in NUS:
            A = build_radford(nu)
            self.assertEqual(A.hopf.dim, 4 * nu)
            report = verify_hopf(A.hopf)
            self.assertTrue(report.passed, report.failures())

    def test_rejects_even_nu(self):
        for nu in (0, 2, -1):
            with self.assertRaises(StructureError):
                build_radford(nu)

    def test_relations(self):
        for nu in NUS:
            A = build_radford(nu)
            self.assertEqual(A.power(A.g(), 2 * nu), A.hopf.unit)
            self.assertEqual(A.mul(A.x, A.g()), A.mul(A.g(), A.x).scale(-1))
            self.assertFalse(A.mul(A.x, A.x))

    def test_sweedler_products(self):
        A = build_radford(1)
        self.assertEqual(tensor_mul(A.hopf, A.x, A.g(), 1), A.gx().scale(-1))
        self.assertFalse(tensor_mul(A.hopf, A.x, A.x, 1))

    def test_coproducts(self):
        A = build_radford(3)
        H = A.hopf
        self.assertEqual(apply_coproduct_leg(H, A.g(), 1), tensor_product(A.g(), A.g()))
        expected = tensor_product(A.x, A.g(3)) + tensor_product(H.unit, A.x)
        self.assertEqual(apply_coproduct_leg(H, A.x, 1), expected)

    def test_antipode(self):
        for nu in NUS:
            A = build_radford(nu)
            column = A.hopf.antipode.column(A.index(0, 1))
            self.assertEqual(column, {A.index(nu, 1): 1})
            self.assertEqual(A.hopf.antipode.column(A.index(1)), {A.index(-1): 1})

    def test_antipode_inverse(self):
        A = build_radford(1)
        S = A.hopf.antipode
        inverse = A.hopf.antipode_inverse()
        self.assertTrue((S @ inverse).is_identity())
        self.assertTrue((inverse @ S).is_identity())
        self.assertEqual(inverse.column(A.index(1)), {A.index(1): 1})
        self.assertEqual(inverse.column(A.index(0, 1)), (S @ S @ S).column(A.index(0, 1)))
        self.assertEqual(inverse.column(A.index(0, 1)), {A.index(1, 1): -1})


class IdempotentTest(SimpleTestCase):
    def test_identities(self):
        for nu in NUS:
            A = build_radford(nu)
            report = idempotent_report(A)
            self.assertTrue(report.passed, report.failures())
            self.assertEqual(len(idempotents(A)), 2 * nu)

    def test_report_names(self):
        report = idempotent_report(build_radford(1))
        self.assertEqual(report.names(), ['orthogonal', 'sum_is_unit', 'alternating_sum', 'x_shift',
                                          'eigenvalues', 'odd_power'])

    def test_group_like_relations(self):
        self.assertTrue(group_like_relations(build_radford(3)).passed)


class QuasitriangularStructureTest(SimpleTestCase):
    def test_every_structure_is_pseudotriangular(self):
        for nu in NUS:
            A = build_radford(nu)
            for s in range(1, 2 * nu, 2):
                with self.subTest(nu=nu, s=s):
                    qt = build_R(A, RParams(s))
                    self.assertTrue(qt.report.passed)
                    self.assertEqual(qt.triangular, s == nu)
                    self.assertTrue(is_pseudotriangular_direct(A.hopf, qt.R))
                    self.assertTrue(is_pseudotriangular_F(A.hopf, qt.R))

    def test_two_forms_agree(self):
        A = build_radford(3)
        qt = build_R(A, RParams(1))
        self.assertEqual(qt.R, _r_double_sum(A, 1, RParams(1).beta_for(A)))

    def test_beta_zero_is_group_like(self):
        A = build_radford(3)
        for s in (1, 3, 5):
            R = build_R(A, RParams(s, Fraction(0))).R
            self.assertTrue(all(a % 2 == 0 and b % 2 == 0 for a, b in R.entries))

    def test_counit_leg(self):
        A = build_radford(3)
        R = build_R(A, RParams(5)).R
        self.assertEqual(apply_counit_leg(A.hopf, R, 1), A.hopf.unit)

    def test_not_triangular_off_nu(self):
        A = build_radford(3)
        self.assertFalse(is_triangular(A.hopf, build_R(A, RParams(1)).R))

    def test_concrete_beta(self):
        A = build_radford(3)
        qt = build_R(A, RParams(1, Fraction(2, 3)))
        self.assertTrue(qt.pseudotriangular)
        self.assertTrue(is_pseudotriangular_F(A.hopf, build_R(A, RParams(1, 1)).R))

    def test_invalid_s(self):
        A = build_radford(3)
        for s in (0, 2, 6, 7):
            with self.assertRaises(StructureError):
                build_R(A, RParams(s))


class DoubleBraidingTest(SimpleTestCase):
    def test_closed_form(self):
        for nu in (1, 3):
            A = build_radford(nu)
            for s in range(1, 2 * nu, 2):
                with self.subTest(nu=nu, s=s):
                    R = build_R(A, RParams(s)).R
                    self.assertEqual(double_braiding_element(A, RParams(s)), double_braiding(A.hopf, R))

    def test_trivial_when_triangular(self):
        for nu in (1, 3):
            A = build_radford(nu)
            self.assertEqual(double_braiding_element(A, RParams(nu)), A.hopf.one(2))

    def test_invertible(self):
        A = build_radford(3)
        R = build_R(A, RParams(1)).R
        F = double_braiding(A.hopf, R)
        self.assertEqual(tensor_mul(A.hopf, F, double_braiding_inverse(A.hopf, R), 2), A.hopf.one(2))
        self.assertNotEqual(F, Tensor.zero(A.hopf.dims(2), A.conductor))
