from unittest import skipUnless

from django.conf import settings as django_settings
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from hopfcore.exceptions import AxiomFailure, NotInvertible, StructureError
from hopfcore.linalg import SparseMatrix
from posbasis.catalog import catalog
from posbasis.hopf import group_algebra
from quasitri.checks import QtStructure
from radford.builders import RParams, build_R, build_radford
from ydmod.braiding import pseudosymmetry_check
from ydmod.catalog import conjugation

from .operators import (
    YbOperator, diagonal_operator, factorization_check, inverse_operator, is_symmetric, radford_operator,
    regular_action, represent, swap_operator, transfer_operator, yb_check, yb_from_module, yb_from_qt,
)
from .words import (
    BraidWord, canonical_braiding_word, defining_relations, ps_equal, ps_invariant, pure_commutator_pairs,
    pure_coordinates, pure_generator, word,
)


@st.composite
def braid_words(draw, n=None, max_size=10):
    n = n or draw(st.integers(2, 5))
    letters = draw(st.lists(st.tuples(st.integers(1, n - 1), st.sampled_from((1, -1))), max_size=max_size))
    return BraidWord(n, tuple(letters))


def unipotent_operator():
    """id + (e₀⊗e₀ ↦ e₀⊗e₁) : inversible, ne vérifie pas la relation de tresse"""
    columns = {0: {0: 1, 1: 1}, 1: {1: 1}, 2: {2: 1}, 3: {3: 1}}
    return YbOperator(2, SparseMatrix(4, 4, columns), name='unipotent')


DIAGONAL = [[1, 2], [3, 1]]


class BraidWordTest(SimpleTestCase):
    def test_parse_and_print(self):
        w = word('s1 s2^-1 s1^1', 3)
        self.assertEqual(w.letters, ((1, 1), (2, -1), (1, 1)))
        self.assertEqual(str(w), 's1 s2^-1 s1')
        self.assertEqual(len(word('', 4)), 0)

    def test_bad_words(self):
        for text in ('x1', 's1^2', 's0', 's3'):
            with self.assertRaises(StructureError):
                word(text, 3)
        with self.assertRaises(StructureError):
            word('s1', 2) * word('s1', 3)

    def test_inverse_and_powers(self):
        w = word('s1 s2^-1', 3)
        self.assertEqual(str(w.inverse()), 's2 s1^-1')
        self.assertEqual(len(w ** 3), 6)
        self.assertEqual(w ** -1, w.inverse())
        self.assertEqual(w.exponent_sum, 0)


class PsInvariantTest(SimpleTestCase):
    def test_empty_word(self):
        invariant = ps_invariant(BraidWord(4))
        self.assertEqual(invariant.perm, (1, 2, 3, 4))
        self.assertEqual(invariant.crossings, ())
        self.assertTrue(invariant.is_pure)

    def test_full_twist_on_two_strands(self):
        invariant = ps_invariant(word('s1 s1', 2))
        self.assertEqual(invariant.perm, (1, 2))
        self.assertEqual(invariant.crossings, (((1, 2), 2),))

    def test_pseudosymmetric_relation(self):
        left, right = word('s1 s2^-1 s1', 3), word('s2 s1^-1 s2', 3)
        invariant = ps_invariant(left)
        self.assertEqual(invariant.perm, (3, 2, 1))
        self.assertEqual(invariant.crossing(1, 2), 1)
        self.assertEqual(invariant.crossing(3, 1), -1)
        self.assertEqual(invariant.crossing(2, 3), 1)
        self.assertEqual(invariant, ps_invariant(right))
        self.assertTrue(ps_equal(left, right))

    def test_not_equal(self):
        self.assertFalse(ps_equal(word('s1', 2), word('s1^-1', 2)))
        self.assertFalse(ps_equal(word('s1 s2', 3), word('s2 s1', 3)))
        with self.assertRaises(StructureError):
            ps_equal(word('s1', 2), word('s1', 3))

    def test_defining_relations(self):
        for n in range(2, 6):
            for name, lhs, rhs in defining_relations(n):
                self.assertTrue(ps_equal(lhs, rhs), (n, name))
        names = [name for name, _, _ in defining_relations(4)]
        self.assertIn('far_1_3', names)
        self.assertIn('pseudosymmetric_2', names)

    def test_pure_commutators_vanish(self):
        for n in (3, 4):
            for name, w1, w2 in pure_commutator_pairs(n):
                self.assertTrue(ps_equal(w1, w2), name)
                self.assertNotEqual(len(w1), len(w2))

    def test_pure_generators(self):
        a13 = pure_generator(3, 1, 3)
        self.assertEqual(str(a13), 's2 s1 s1 s2^-1')
        self.assertEqual(ps_invariant(a13).crossings, (((1, 3), 2),))
        self.assertEqual(pure_coordinates(a13 * a13), {(1, 3): 2})
        with self.assertRaises(StructureError):
            pure_coordinates(word('s1', 2))
        with self.assertRaises(StructureError):
            pure_generator(3, 2, 2)

    def test_canonical_braiding_words(self):
        self.assertEqual(len(canonical_braiding_word(0, 3)), 0)
        self.assertEqual(len(canonical_braiding_word(2, 0)), 0)
        self.assertEqual(str(canonical_braiding_word(1, 1)), 's1')
        self.assertEqual(str(canonical_braiding_word(2, 1)), 's1 s2')
        self.assertEqual(str(canonical_braiding_word(1, 2)), 's2 s1')
        block = canonical_braiding_word(2, 2)
        self.assertEqual(str(block), 's2 s1 s3 s2')
        invariant = ps_invariant(block)
        self.assertEqual(invariant.perm, (3, 4, 1, 2))
        self.assertEqual(invariant.crossings, (((1, 3), 1), ((1, 4), 1), ((2, 3), 1), ((2, 4), 1)))

    @settings(max_examples=60, deadline=None)
    @given(braid_words())
    def test_word_times_inverse_is_trivial(self, w):
        self.assertEqual(ps_invariant(w * w.inverse()), ps_invariant(BraidWord(w.n)))

    @settings(max_examples=60, deadline=None)
    @given(braid_words())
    def test_total_crossings_is_exponent_sum(self, w):
        self.assertEqual(ps_invariant(w).total, w.exponent_sum)

    @settings(max_examples=60, deadline=None)
    @given(braid_words(), braid_words(n=4))
    def test_permutations_compose(self, w1, w2):
        w1 = BraidWord(4, tuple((k, s) for k, s in w1.letters if k < 4))
        p1, p2 = ps_invariant(w1).perm, ps_invariant(w2).perm
        self.assertEqual(ps_invariant(w1 * w2).perm, tuple(p2[p1[i] - 1] for i in range(4)))

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_relations_hold_inside_words(self, data):
        n = data.draw(st.integers(3, 5))
        prefix, suffix = data.draw(braid_words(n=n)), data.draw(braid_words(n=n))
        _, lhs, rhs = data.draw(st.sampled_from(defining_relations(n)))
        self.assertTrue(ps_equal(prefix * lhs * suffix, prefix * rhs * suffix))


class YbOperatorTest(SimpleTestCase):
    def test_swap_is_symmetric(self):
        sigma = swap_operator(3)
        verdict = yb_check(sigma)
        self.assertTrue(verdict.is_yb)
        self.assertTrue(verdict.is_pseudosymmetric)
        self.assertTrue(is_symmetric(sigma))

    def test_diagonal_braiding_is_pseudosymmetric(self):
        sigma = diagonal_operator(DIAGONAL)
        self.assertTrue(sigma.verdict.is_yb)
        self.assertTrue(sigma.verdict.is_pseudosymmetric)
        self.assertFalse(is_symmetric(sigma))

    def test_non_yang_baxter(self):
        verdict = yb_check(unipotent_operator())
        self.assertFalse(verdict.is_yb)
        self.assertEqual(verdict.report['yang_baxter'].witness, ('v0', 'v0', 'v0'))
        self.assertEqual(verdict.as_dict()['is_yb'], False)

    def test_singular_operator(self):
        with self.assertRaises(NotInvertible):
            diagonal_operator([[1, 0], [1, 1]])
        with self.assertRaises(StructureError):
            YbOperator(2, SparseMatrix.identity(3))

    def test_inverse_has_same_verdicts(self):
        sigma = yb_from_module(*self._conj_s3())
        for operator in (swap_operator(2), diagonal_operator(DIAGONAL), unipotent_operator(), sigma):
            mirror = inverse_operator(operator)
            self.assertEqual(mirror.matrix, operator.inverse)
            self.assertEqual(yb_check(mirror).is_pseudosymmetric, yb_check(operator).is_pseudosymmetric)

    def test_transfer_keeps_verdicts(self):
        Q = SparseMatrix(2, 2, {0: {0: 1}, 1: {0: 1, 1: 1}})
        sigma = diagonal_operator(DIAGONAL)
        moved = transfer_operator(sigma, Q)
        self.assertNotEqual(moved.matrix, sigma.matrix)
        self.assertTrue(moved.verdict.is_yb)
        self.assertTrue(moved.verdict.is_pseudosymmetric)
        self.assertFalse(is_symmetric(moved))
        with self.assertRaises(StructureError):
            transfer_operator(sigma, SparseMatrix.identity(3))

    def _conj_s3(self):
        S3 = catalog.get('s3')
        H = group_algebra(S3)
        return H, conjugation(S3, host=H)

    def test_conjugation_braiding_is_not_pseudosymmetric(self):
        H, M = self._conj_s3()
        sigma = yb_from_module(H, M)
        self.assertTrue(sigma.verdict.is_yb)
        self.assertFalse(sigma.verdict.is_pseudosymmetric)
        self.assertFalse(pseudosymmetry_check(H, M, M, M).passed)


class QtOperatorTest(SimpleTestCase):
    def test_trivial_r_gives_swap(self):
        H = group_algebra(catalog.get('c2'))
        sigma = yb_from_qt(H, QtStructure(H, H.one(2)), regular_action(H))
        self.assertEqual(sigma.matrix, swap_operator(2, H.conductor).matrix)

    def test_sweedler_operator(self):
        sigma = radford_operator(1, 1)
        self.assertEqual(sigma.dim, 4)
        self.assertTrue(sigma.verdict.is_yb)
        self.assertTrue(sigma.verdict.is_pseudosymmetric)
        self.assertTrue(is_symmetric(sigma))

    def test_action_must_be_a_module(self):
        A = build_radford(1)
        structure = build_R(A, RParams(1))
        identity = SparseMatrix.identity(4, A.hopf.conductor)
        with self.assertRaises(AxiomFailure):
            yb_from_qt(A.hopf, structure, [identity] * 4)

    @skipUnless(django_settings.QHOPF['SLOW_TESTS'], 'QHOPF_SLOW_TESTS is off')
    def test_radford_nu_3(self):
        sigma = radford_operator(3, 1)
        self.assertTrue(sigma.verdict.is_pseudosymmetric)
        self.assertFalse(is_symmetric(sigma))
        self.assertTrue(is_symmetric(radford_operator(3, 3)))


class RepresentTest(SimpleTestCase):
    def test_empty_word_and_single_letter(self):
        sigma = diagonal_operator(DIAGONAL)
        self.assertTrue(represent(BraidWord(3), sigma).is_identity())
        self.assertEqual(represent(canonical_braiding_word(1, 1), sigma), sigma.matrix)
        self.assertEqual(represent(word('s1^-1', 2), sigma), sigma.inverse)

    def test_pseudosymmetric_operators_factor_through_ps(self):
        pairs = defining_relations(3) + pure_commutator_pairs(3)
        for sigma in (diagonal_operator(DIAGONAL), radford_operator(1, 1)):
            report = factorization_check(sigma, pairs)
            self.assertTrue(report.passed, report.failures())

    def test_four_strands(self):
        pairs = defining_relations(4) + pure_commutator_pairs(4)
        report = factorization_check(diagonal_operator(DIAGONAL), pairs)
        self.assertTrue(report.passed, report.failures())

    def test_conjugation_braiding_does_not_factor(self):
        S3 = catalog.get('s3')
        H = group_algebra(S3)
        sigma = yb_from_module(H, conjugation(S3, host=H))
        report = factorization_check(sigma, defining_relations(3))
        self.assertTrue(report['braid_1'].passed)
        self.assertFalse(report['pseudosymmetric_1'].passed)
        self.assertEqual(len(report['pseudosymmetric_1'].witness), 3)

    @settings(max_examples=25, deadline=None)
    @given(braid_words(n=3, max_size=6), braid_words(n=3, max_size=6))
    def test_represent_is_multiplicative(self, w1, w2):
        sigma = diagonal_operator(DIAGONAL)
        self.assertEqual(represent(w1 * w2, sigma), represent(w1, sigma) @ represent(w2, sigma))

    @settings(max_examples=25, deadline=None)
    @given(braid_words(n=3, max_size=5), braid_words(n=3, max_size=5))
    def test_ps_equal_words_share_matrices(self, w1, w2):
        sigma = diagonal_operator(DIAGONAL)
        left = w1 * word('s1 s2^-1 s1', 3) * w2
        right = w1 * word('s2 s1^-1 s2', 3) * w2
        self.assertEqual(represent(left, sigma), represent(right, sigma))
