from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from hopfcore.exceptions import ConductorMismatch, NotInvertible, SchemaError

from .cyclotomic import cyclotomic_field, cyclotomic_polynomial, phi_degree
from .numbers import CycScalar, ParamScalar, field_inverse, scalar_arith
from .serializers import cyc_from_json, param_from_json, param_to_json, rational_from_json


CONDUCTOR = 6

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
cyclotomics = st.lists(rationals, min_size=0, max_size=phi_degree(CONDUCTOR)).map(
    lambda coeffs: CycScalar.from_coeffs(CONDUCTOR, coeffs))
params = st.lists(cyclotomics, min_size=0, max_size=3).map(
    lambda coefficients: ParamScalar.from_coefficients(CONDUCTOR, coefficients))


class CyclotomicPolynomialTest(SimpleTestCase):
    def test_small_conductors(self):
        self.assertEqual(cyclotomic_polynomial(1), (-1, 1))
        self.assertEqual(cyclotomic_polynomial(2), (1, 1))
        self.assertEqual(cyclotomic_polynomial(6), (1, -1, 1))

    def test_degree_is_euler_phi(self):
        for m, phi in [(1, 1), (2, 1), (4, 2), (10, 4), (12, 4), (7, 6)]:
            self.assertEqual(phi_degree(m), phi)

    def test_rejects_nonpositive(self):
        with self.assertRaises(ValueError):
            cyclotomic_polynomial(0)
        with self.assertRaises(ValueError):
            cyclotomic_field(-3)

    def test_twelfth_roots(self):
        self.assertEqual(cyclotomic_polynomial(12), (1, 0, -1, 0, 1))
        self.assertEqual(cyclotomic_field(12).ext.minpoly.degree(), 4)

    def test_long_representatives_are_reduced(self):
        # ω² = ω - 1 quand Φ_6 = x² - x + 1
        value = CycScalar.from_coeffs(6, [0, 0, 1])
        self.assertEqual(value.coeffs, (-1, 1))
        self.assertEqual(value, CycScalar.root(6, 2))


class ScalarArithmeticTest(SimpleTestCase):
    def test_root_times_conjugate_power(self):
        for m in (2, 6, 10):
            omega = ParamScalar.root(m)
            self.assertEqual(scalar_arith('mul', omega, ParamScalar.root(m, m - 1)), 1)

    def test_half_power_is_minus_one(self):
        for nu in (1, 3, 5):
            omega = ParamScalar.root(2 * nu)
            self.assertEqual(omega ** nu, -1)
            self.assertEqual(omega ** (2 * nu), 1)

    def test_beta_polynomial(self):
        beta = ParamScalar.beta(CONDUCTOR)
        product = scalar_arith('mul', beta + 1, beta - 1)
        self.assertEqual(product, beta * beta - 1)
        self.assertEqual(product.degree, 2)

    def test_conductor_mismatch(self):
        with self.assertRaises(ConductorMismatch):
            scalar_arith('add', ParamScalar.root(6), ParamScalar.root(10))

    def test_constant_value(self):
        self.assertEqual(ParamScalar.constant(6, Fraction(1, 3)).constant_value(),
                         CycScalar.rational(6, Fraction(1, 3)))
        with self.assertRaises(NotInvertible):
            ParamScalar.beta(6).constant_value()

    def test_evaluate(self):
        beta = ParamScalar.beta(CONDUCTOR)
        poly = beta * beta + beta * 3 + 1
        self.assertEqual(poly.evaluate(2), 11)

    def test_unit_sign(self):
        self.assertEqual(ParamScalar.constant(6, 1).unit_sign(), 1)
        self.assertEqual(ParamScalar.constant(6, -1).unit_sign(), -1)
        self.assertEqual(ParamScalar.root(6).unit_sign(), 0)

    def test_cyc_and_param_hash_agree(self):
        value = CycScalar.root(6, 2)
        self.assertEqual(hash(value), hash(ParamScalar.constant(6, value)))
        self.assertEqual(ParamScalar.constant(6, value), value)


class FieldInverseTest(SimpleTestCase):
    def test_integer(self):
        for nu in (1, 3, 5):
            two_nu = CycScalar.rational(2 * nu, 2 * nu)
            self.assertEqual(field_inverse(two_nu), CycScalar.rational(2 * nu, Fraction(1, 2 * nu)))

    def test_root(self):
        self.assertEqual(field_inverse(CycScalar.root(10)), CycScalar.root(10, 9))

    def test_one_plus_omega(self):
        value = CycScalar.root(6) + 1
        self.assertEqual(value * field_inverse(value), 1)

    def test_zero_and_parameter(self):
        with self.assertRaises(NotInvertible):
            field_inverse(CycScalar(6, [0]))
        with self.assertRaises(NotInvertible):
            ParamScalar.beta(6).inverse()


class RingLawsTest(SimpleTestCase):
    @settings(max_examples=60, deadline=None)
    @given(params, params, params)
    def test_ring_laws(self, a, b, c):
        self.assertEqual(a + (-a), 0)
        self.assertEqual(a * 1, a)
        self.assertEqual(a * b, b * a)
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)

    @settings(max_examples=60, deadline=None)
    @given(params, params)
    def test_equality_is_structural(self, a, b):
        self.assertEqual(scalar_arith('eq', a, b), (a - b).is_zero())

    @settings(max_examples=60, deadline=None)
    @given(cyclotomics)
    def test_inverse(self, a):
        if a.is_zero():
            return
        self.assertEqual(a * field_inverse(a), 1)


class SerializerTest(SimpleTestCase):
    def test_rational_strings(self):
        self.assertEqual(rational_from_json('3/4'), Fraction(3, 4))
        self.assertEqual(rational_from_json('-2'), -2)
        with self.assertRaises(SchemaError):
            rational_from_json(0.5)
        with self.assertRaises(SchemaError):
            rational_from_json('1/0')

    def test_param_document(self):
        beta = ParamScalar.beta(6)
        value = beta * ParamScalar.root(6) + Fraction(1, 2)
        self.assertEqual(param_to_json(value), [['1/2', '0'], ['0', '1']])
        self.assertEqual(param_from_json(6, param_to_json(value)), value)

    def test_too_many_coefficients(self):
        with self.assertRaises(SchemaError):
            cyc_from_json(6, ['1', '2', '3'])
