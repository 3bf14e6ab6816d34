from fractions import Fraction
from unittest import mock

from django.test import SimpleTestCase

from hopfcore.algebra import tensor_mul
from hopfcore.exceptions import AxiomFailure, CrossCheckError
from hopfcore.tensors import Tensor
from posbasis.catalog import catalog
from posbasis.hopf import group_algebra
from radford.builders import RParams, build_R, build_radford

from . import checks
from .checks import (
    QT_ORIENTATION, QtStructure, double_braiding, is_pseudotriangular_direct, is_pseudotriangular_F,
    is_triangular, pseudotriangularity, r_inverse, verify_qt,
)

C2 = group_algebra(catalog.get('c2'))
half = Fraction(1, 2)
# ½(1⊗1 + 1⊗g + g⊗1 - g⊗g), structure triangulaire non triviale de k[C2]
SIGN_R = Tensor(C2.dims(2), {(0, 0): half, (0, 1): half, (1, 0): half, (1, 1): -half})


class VerifyQtTest(SimpleTestCase):
    def test_trivial_structure(self):
        report = verify_qt(C2, C2.one(2))
        self.assertTrue(report.passed)
        self.assertEqual(report.names(), ['intertwines_coproduct', 'coproduct_left', 'coproduct_right',
                                          'counit', 'invertible'])

    def test_group_like_square_fails_counit(self):
        report = verify_qt(C2, Tensor(C2.dims(2), {(1, 1): 1}))
        self.assertFalse(report['counit'].passed)
        self.assertEqual(report['counit'].witness[0], 'leg 1')

    def test_sign_structure(self):
        self.assertTrue(verify_qt(C2, SIGN_R).passed)
        self.assertTrue(is_triangular(C2, SIGN_R))

    def test_radford_formal_beta(self):
        A = build_radford(1)
        qt = build_R(A, RParams(1))
        self.assertTrue(verify_qt(A.hopf, qt.R).passed)

    def test_orientation_constant(self):
        self.assertEqual(QT_ORIENTATION['coproduct_left'], (1, (1, 3), (2, 3)))
        self.assertEqual(QT_ORIENTATION['coproduct_right'], (2, (1, 3), (1, 2)))

    def test_inverse_from_antipode(self):
        A = build_radford(3)
        R = build_R(A, RParams(1)).R
        inverse = r_inverse(A.hopf, R)
        self.assertEqual(tensor_mul(A.hopf, inverse, R, 2), A.hopf.one(2))
        self.assertEqual(tensor_mul(A.hopf, R, inverse, 2), A.hopf.one(2))


class PseudotriangularTest(SimpleTestCase):
    def test_trivial(self):
        one = C2.one(2)
        self.assertTrue(is_triangular(C2, one))
        self.assertTrue(is_pseudotriangular_direct(C2, one))
        self.assertTrue(is_pseudotriangular_F(C2, one))
        self.assertEqual(double_braiding(C2, one), one)

    def test_triangular_implies_pseudotriangular(self):
        self.assertTrue(is_pseudotriangular_direct(C2, SIGN_R))
        self.assertTrue(is_pseudotriangular_F(C2, SIGN_R))

    def test_criteria_agree_on_radford(self):
        for nu in (1, 3):
            A = build_radford(nu)
            for s in range(1, 2 * nu, 2):
                R = build_R(A, RParams(s)).R
                self.assertEqual(is_pseudotriangular_direct(A.hopf, R), is_pseudotriangular_F(A.hopf, R))

    def test_disagreement_is_an_error(self):
        with mock.patch.object(checks, 'pseudotriangular_F', return_value=(False, ('x',))):
            with self.assertRaises(CrossCheckError):
                pseudotriangularity(C2, C2.one(2))


class QtStructureTest(SimpleTestCase):
    def test_cached_verdicts(self):
        qt = QtStructure(C2, SIGN_R)
        self.assertTrue(qt.triangular)
        self.assertTrue(qt.pseudotriangular)
        self.assertIsNone(qt.pseudotriangular_witness)
        report = qt.verdicts()
        self.assertTrue(report['triangular'].passed)

    def test_invalid_structure_refuses_verdicts(self):
        qt = QtStructure(C2, Tensor(C2.dims(2), {(1, 1): 1}))
        self.assertFalse(qt.is_quasitriangular)
        with self.assertRaises(AxiomFailure):
            qt.pseudotriangular
