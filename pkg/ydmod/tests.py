from django.test import SimpleTestCase

from hopfcore.exceptions import AxiomFailure, StructureError
from posbasis.catalog import catalog
from posbasis.hopf import group_algebra
from radford.builders import build_radford

from .braiding import braiding_matrix, hexagon_check, pseudosymmetry_check, tensor_object, witness_search
from .catalog import adjoint_yd_module, conjugation, lr_from_llyd, regular, trivial, witness_catalog
from .modules import (
    YdModuleLL, check_lr_object, check_yd_ll, check_yd_lr, is_cocommutative, is_commutative, long_conditions,
)

S3 = catalog.get('s3')
KS3 = group_algebra(S3)
CONJ_S3 = conjugation(S3, host=KS3)


def conj(name, kind='ll'):
    G = catalog.get(name)
    return conjugation(G, kind=kind, host=group_algebra(G))


class YdModuleTest(SimpleTestCase):
    def test_conjugation_is_left_left_yd(self):
        report = check_yd_ll(KS3, CONJ_S3)
        self.assertTrue(report.passed)
        self.assertEqual(report.names()[-1], 'yd_compatibility')

    def test_conjugation_is_left_right_yd(self):
        M = conj('s3', kind='lr')
        self.assertTrue(check_yd_lr(M.host, M).passed)

    def test_trivial_module(self):
        for kind in ('ll', 'lr', 'lrobj'):
            M = trivial(KS3, kind)
            self.assertEqual(M.dim, 1)
            self.assertTrue(M.check().passed, kind)

    def test_regular_module_is_not_yd(self):
        report = check_yd_ll(KS3, regular(KS3))
        self.assertTrue(report['left_module_associative'].passed)
        self.assertTrue(report['left_comodule_coassociative'].passed)
        self.assertFalse(report['yd_compatibility'].passed)
        self.assertEqual(report['yd_compatibility'].witness, ('r', 'e'))

    def test_adjoint_of_group_algebra_is_conjugation(self):
        M = adjoint_yd_module(KS3)
        self.assertEqual(M.dim, KS3.dim)
        self.assertEqual(M.left_action, CONJ_S3.left_action)
        self.assertEqual(M.left_coaction, CONJ_S3.left_coaction)

    def test_adjoint_of_sweedler(self):
        H = build_radford(1).hopf
        M = adjoint_yd_module(H)
        self.assertEqual(M.dim, 4)
        self.assertTrue(check_yd_ll(H, M).passed)

    def test_missing_structure(self):
        with self.assertRaises(StructureError):
            YdModuleLL(KS3, 6, left_action=CONJ_S3.left_action)

    def test_wrong_host(self):
        with self.assertRaises(StructureError):
            check_yd_ll(group_algebra(catalog.get('c2')), CONJ_S3)

    def test_commutativity_flags(self):
        self.assertFalse(is_commutative(KS3))
        self.assertTrue(is_cocommutative(KS3))
        sweedler = build_radford(1).hopf
        self.assertFalse(is_commutative(sweedler))
        self.assertFalse(is_cocommutative(sweedler))


class LrObjectTest(SimpleTestCase):
    def test_embedded_module_passes(self):
        M = lr_from_llyd(conj('c2'))
        report = check_lr_object(M.host, M)
        self.assertTrue(report.passed, report.failures())
        self.assertIn('long_left_coaction', report)
        self.assertIn('right_left_long', report)

    def test_non_commutative_host_skips_long_forms(self):
        report = lr_from_llyd(CONJ_S3).check()
        self.assertTrue(report.passed)
        self.assertNotIn('long_left_coaction', report)

    def test_regular_object_fails_left_right_long(self):
        H = group_algebra(catalog.get('c2'))
        report = check_lr_object(H, regular(H, 'lrobj'))
        self.assertTrue(report['bimodule'].passed)
        self.assertTrue(report['bicomodule'].passed)
        self.assertFalse(report['left_right_long'].passed)

    def test_long_conditions(self):
        M = lr_from_llyd(conj('c3'))
        self.assertEqual(long_conditions(M.host, M).names(), ['long_left_coaction', 'long_right_coaction'])

    def test_only_yd_modules_embed(self):
        with self.assertRaises(StructureError):
            lr_from_llyd(conj('c2', kind='lr'))
        with self.assertRaises(AxiomFailure):
            lr_from_llyd(regular(KS3))

    def test_embedding_keeps_braiding(self):
        M = lr_from_llyd(CONJ_S3)
        self.assertEqual(braiding_matrix(KS3, M, M), braiding_matrix(KS3, CONJ_S3, CONJ_S3))


class TensorObjectTest(SimpleTestCase):
    def test_dimension_and_axioms(self):
        M = conj('c2')
        MM = tensor_object(M.host, M, M)
        self.assertEqual(MM.dim, 4)
        self.assertEqual(MM.labels[1], 'e⊗g')
        self.assertTrue(MM.check().passed)

    def test_unit_object(self):
        M = CONJ_S3
        KM = tensor_object(KS3, trivial(KS3), M)
        self.assertEqual(KM.left_action, M.left_action)
        self.assertEqual(KM.left_coaction, M.left_coaction)

    def test_lr_tensor(self):
        M = conj('c3', kind='lr')
        self.assertTrue(tensor_object(M.host, M, M).check().passed)

    def test_kinds_must_match(self):
        with self.assertRaises(StructureError):
            tensor_object(KS3, CONJ_S3, trivial(KS3, 'lr'))


class BraidingTest(SimpleTestCase):
    def test_conjugation_braiding(self):
        c, c_inv = braiding_matrix(KS3, CONJ_S3, CONJ_S3)
        for g in S3.elements:
            for h in S3.elements:
                target = S3.mul(g, h, S3.inverse(g)) * 6 + g
                self.assertEqual(set(c.column(g * 6 + h)), {target})
        self.assertTrue((c_inv @ c).is_identity())

    def test_left_right_braiding_on_abelian_group_is_swap(self):
        M = conj('c3', kind='lr')
        c, _ = braiding_matrix(M.host, M, M)
        for m in range(3):
            for n in range(3):
                self.assertEqual(set(c.column(m * 3 + n)), {n * 3 + m})

    def test_hexagons(self):
        self.assertTrue(hexagon_check(KS3, CONJ_S3, CONJ_S3, CONJ_S3).passed)
        M = conj('c3', kind='lr')
        self.assertTrue(hexagon_check(M.host, M, M, M).passed)
        L = lr_from_llyd(conj('c2'))
        self.assertTrue(hexagon_check(L.host, L, L, L).passed)


class PseudosymmetryTest(SimpleTestCase):
    def test_abelian_conjugation_triples(self):
        for name in ('c2', 'c3', 'c2xc2'):
            M = conj(name)
            result = pseudosymmetry_check(M.host, M, M, M)
            self.assertTrue(result.passed, name)
            self.assertIsNone(result.witness)

    def test_unit_in_the_middle(self):
        unit = trivial(KS3)
        self.assertTrue(pseudosymmetry_check(KS3, CONJ_S3, unit, CONJ_S3).passed)

    def test_s3_conjugation_fails(self):
        result = pseudosymmetry_check(KS3, CONJ_S3, CONJ_S3, CONJ_S3)
        self.assertFalse(result.passed)
        self.assertIsNotNone(result.witness)
        self.assertIn(('s', 'r', 's'), result.t_failures)
        self.assertEqual(result.as_dict()['passed'], False)

    def test_embedded_objects_keep_verdicts(self):
        for M in (conj('c2'), CONJ_S3):
            L = lr_from_llyd(M)
            self.assertEqual(pseudosymmetry_check(L.host, L, L, L).passed,
                             pseudosymmetry_check(M.host, M, M, M).passed)

    def test_witness_search(self):
        found = witness_search(KS3, [trivial(KS3), CONJ_S3])
        self.assertTrue(found.found)
        self.assertEqual(found.triple[0], 'conj S3')
        self.assertFalse(witness_search(conj('c2').host, [conj('c2')]).found)

    def test_witness_catalog_order(self):
        G = catalog.get('c2')
        H = group_algebra(G)
        objects = witness_catalog(H, G)
        self.assertEqual([M.name for M in objects], ['ad k[C2]', 'ad k[C2]⊗ad k[C2]', 'conj C2'])
        self.assertEqual([M.dim for M in objects], [2, 4, 2])
        self.assertEqual(witness_search(H, objects).status, 'inconclusive')

    def test_sweedler_catalog_search(self):
        # sur g⊗g⊗x, T₁₂T₂₃ a un terme gx⊗g⊗1 absent de T₂₃T₁₂
        H = build_radford(1).hopf
        objects = witness_catalog(H)
        self.assertEqual([M.dim for M in objects], [4, 16])
        result = witness_search(H, objects)
        self.assertEqual(result.status, 'witness')
        self.assertEqual(result.triple, ('ad H_1',) * 3)
        ad = objects[0]
        self.assertFalse(pseudosymmetry_check(H, ad, ad, ad).passed)
