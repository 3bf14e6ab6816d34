from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from posbasis.catalog import catalog
from posbasis.hopf import group_algebra
from scalar.numbers import ParamScalar

from .algebra import (
    HopfData, apply_coproduct_leg, apply_counit_leg, embed_legs, multiply_at_legs, permute_legs, tensor_mul,
)
from .axioms import verify_hopf
from .exceptions import NotInvertible, StructureError
from .linalg import SparseMatrix
from .reports import CheckReport
from .signals import check_completed
from .tensors import Tensor


def table_algebra(labels, table, name):
    """Δ(g) = g⊗g et S = id sur une table quelconque, sans contrôle de groupe"""
    n = len(labels)
    mul = {(g, h): Tensor((n,), {(table[g][h],): 1}) for g in range(n) for h in range(n)}
    comul = {g: Tensor((n, n), {(g, g): 1}) for g in range(n)}
    return HopfData(n, labels, 1, mul, Tensor((n,), {(0,): 1}), comul, [1] * n, SparseMatrix.identity(n),
                    name=name)


C2 = group_algebra(catalog.get('c2'))
C3 = group_algebra(catalog.get('c3'))
S3 = group_algebra(catalog.get('s3'))


def tensors(H, arity):
    keys = st.tuples(*[st.integers(0, H.dim - 1)] * arity)
    return st.dictionaries(keys, st.integers(-3, 3), max_size=4).map(
        lambda entries: Tensor(H.dims(arity), entries, H.conductor))


class TensorTest(SimpleTestCase):
    def test_zero_coefficients_are_dropped(self):
        t = Tensor((2, 2), {(0, 1): 0, (1, 1): 3})
        self.assertEqual(list(t.entries), [(1, 1)])

    def test_rejects_bad_keys(self):
        with self.assertRaises(StructureError):
            Tensor((2,), {(2,): 1})
        with self.assertRaises(StructureError):
            Tensor((2, 2), {(1,): 1})

    def test_addition_cancels(self):
        t = Tensor((2,), {(0,): 1, (1,): 2})
        self.assertFalse(t - t)
        self.assertEqual((t + t).entries[(1,)], 4)


class LegOperationsTest(SimpleTestCase):
    def setUp(self):
        self.r = Tensor(C3.dims(2), {(1, 2): 1})

    def test_embed_examples(self):
        self.assertEqual(embed_legs(C3, self.r, 3, (1, 2)), Tensor(C3.dims(3), {(1, 2, 0): 1}))
        self.assertEqual(embed_legs(C3, self.r, 2, (2, 1)), Tensor(C3.dims(2), {(2, 1): 1}))
        self.assertEqual(embed_legs(C3, self.r, 3, (3, 1)), Tensor(C3.dims(3), {(2, 0, 1): 1}))
        self.assertEqual(permute_legs(self.r, (2, 1)), embed_legs(C3, self.r, 2, (2, 1)))

    def test_embed_rejects_bad_legs(self):
        with self.assertRaises(StructureError):
            embed_legs(C3, self.r, 3, (1, 4))
        with self.assertRaises(StructureError):
            embed_legs(C3, self.r, 3, (2, 2))

    def test_coproduct_of_unit(self):
        self.assertEqual(apply_coproduct_leg(C3, C3.one(2), 1), C3.one(3))

    def test_group_like_coproduct(self):
        self.assertEqual(apply_coproduct_leg(C3, C3.basis(1), 1), Tensor(C3.dims(2), {(1, 1): 1}))

    def test_unit_is_neutral(self):
        t = Tensor(S3.dims(2), {(1, 3): 2, (5, 4): -1})
        self.assertEqual(tensor_mul(S3, S3.one(2), t, 2), t)
        self.assertEqual(tensor_mul(S3, t, S3.one(2), 2), t)

    def test_arity_mismatch(self):
        with self.assertRaises(StructureError):
            tensor_mul(C3, C3.one(2), C3.one(3))

    def test_multiply_at_legs_matches_embedding(self):
        s = Tensor(S3.dims(3), {(1, 3, 4): 1, (2, 2, 0): 3})
        t = Tensor(S3.dims(2), {(3, 1): 1, (4, 5): -2})
        for legs in [(1, 2), (3, 1), (2, 3)]:
            full = embed_legs(S3, t, 3, legs)
            self.assertEqual(multiply_at_legs(S3, s, t, legs), tensor_mul(S3, s, full, 3))
            self.assertEqual(multiply_at_legs(S3, s, t, legs, side='left'), tensor_mul(S3, full, s, 3))

    @settings(max_examples=40, deadline=None)
    @given(tensors(S3, 2), tensors(S3, 2))
    def test_embedding_is_multiplicative(self, s, t):
        lhs = embed_legs(S3, tensor_mul(S3, s, t, 2), 3, (3, 1))
        rhs = tensor_mul(S3, embed_legs(S3, s, 3, (3, 1)), embed_legs(S3, t, 3, (3, 1)), 3)
        self.assertEqual(lhs, rhs)

    @settings(max_examples=40, deadline=None)
    @given(tensors(S3, 2), st.integers(1, 2))
    def test_counit_undoes_coproduct(self, t, leg):
        self.assertEqual(apply_counit_leg(S3, apply_coproduct_leg(S3, t, leg), leg), t)

    @settings(max_examples=40, deadline=None)
    @given(tensors(S3, 2), tensors(S3, 2))
    def test_no_zero_is_stored(self, s, t):
        for value in (s + t, s - t, tensor_mul(S3, s, t, 2), embed_legs(S3, s, 3, (2, 1))):
            self.assertTrue(all(value.entries.values()))


class VerifyHopfTest(SimpleTestCase):
    def test_group_algebras_pass(self):
        for H in (C2, C3, S3):
            report = verify_hopf(H)
            self.assertTrue(report.passed, report.failures())
            self.assertEqual(len(report), 8)

    def test_corrupted_multiplication(self):
        broken = table_algebra(['e', 'g'], [[0, 0], [1, 0]], name='broken')
        report = verify_hopf(broken)
        self.assertFalse(report['associativity'].passed)
        self.assertEqual(report['associativity'].witness, ('g', 'e', 'g'))

    def test_signal_is_sent(self):
        received = []

        def listener(sender, subject, verdict, **kwargs):
            received.append((subject, verdict.name))

        check_completed.connect(listener)
        try:
            verify_hopf(C2)
        finally:
            check_completed.disconnect(listener)
        self.assertIn(('k[C2]', 'associativity'), received)


class AntipodeInverseTest(SimpleTestCase):
    def test_group_algebra_antipode_is_involutive(self):
        for H in (C3, S3):
            self.assertEqual(H.antipode_inverse(), H.antipode)
            self.assertTrue((H.antipode @ H.antipode_inverse()).is_identity())

    def test_singular(self):
        with self.assertRaises(NotInvertible):
            SparseMatrix(2, 2, {0: {0: 1, 1: 1}, 1: {0: 2, 1: 2}}).inverse()

    def test_cyclotomic_inverse(self):
        omega = ParamScalar.root(6)
        matrix = SparseMatrix(2, 2, {0: {0: omega}, 1: {0: 1, 1: 1}}, conductor=6)
        inverse = matrix.inverse()
        self.assertTrue((matrix @ inverse).is_identity())
        self.assertEqual(inverse.get(0, 0), ParamScalar.root(6, 5))
        self.assertEqual(inverse.get(0, 1), -ParamScalar.root(6, 5))
        self.assertEqual(inverse.get(1, 0), 0)

    def test_beta_entries_are_not_inverted(self):
        with self.assertRaises(NotInvertible):
            SparseMatrix(1, 1, {0: {0: ParamScalar.beta(6)}}, conductor=6).inverse()

    def test_kron_shape(self):
        a = SparseMatrix.identity(2)
        b = SparseMatrix(3, 3, {0: {1: 1}, 1: {2: 1}, 2: {0: 1}})
        product = a.kron(b)
        self.assertEqual(product.shape, (6, 6))
        self.assertEqual(product.get(4, 3), 1)


class CheckReportTest(SimpleTestCase):
    def test_witness_only_on_failure(self):
        report = CheckReport('demo')
        report.record('ok', True, witness=('a',))
        report.record('ko', False, witness=('b', 'c'))
        self.assertIsNone(report['ok'].witness)
        self.assertEqual(report['ko'].witness, ('b', 'c'))
        self.assertFalse(report.passed)
        self.assertEqual(report.as_dict()['checks'][1], {'name': 'ko', 'passed': False, 'witness': ['b', 'c']})
