from django.test import SimpleTestCase

from hopfcore.axioms import verify_hopf
from hopfcore.exceptions import GroupError, StructureError
from hopfcore.tensors import Tensor
from quasitri.checks import double_braiding, is_pseudotriangular_direct, is_pseudotriangular_F

from .catalog import catalog
from .factorization import derived_actions, verify_unique_factorization
from .groups import FiniteGroup, cyclic, direct_product, s3
from .hopf import build_positive_hopf, dual_group_algebra, group_algebra
from .structures import (
    HomPair, build_double, build_R_xi_eta, check_pseudo_conditions, closed_form_F, enumerate_hom_pairs,
    homomorphisms, normal_pseudo_criterion, normal_pseudo_witness, normal_relations, relation_report,
    scan_pairs,
)

S3 = s3()


def s3_factorization():
    return verify_unique_factorization(S3, ['e', 'r', 'r2'], ['e', 's'])


def klein_factorization():
    return verify_unique_factorization(catalog.get('c2xc2'), ['(e,e)', '(a,e)'], ['(e,e)', '(e,b)'])


class FiniteGroupTest(SimpleTestCase):
    def test_s3_relations(self):
        r, s = S3.index('r'), S3.index('s')
        self.assertEqual(S3.label(S3.mul(s, r)), 'sr')
        self.assertEqual(S3.mul(s, r), S3.mul(r, r, s))
        self.assertEqual(S3.label(S3.inverse(r)), 'r2')
        self.assertEqual(S3.commutation_witness(), ('r', 's'))
        self.assertFalse(S3.is_abelian())

    def test_missing_inverse_has_witness(self):
        with self.assertRaises(GroupError) as ctx:
            FiniteGroup(['e', 'a'], [[0, 1], [1, 1]])
        self.assertEqual(ctx.exception.witness, ('a',))

    def test_product_out_of_range(self):
        with self.assertRaises(GroupError):
            FiniteGroup(['e', 'a'], [[0, 1], [1, 2]])

    def test_group_error_is_a_structure_error(self):
        with self.assertRaises(StructureError):
            S3.index('t')

    def test_direct_product(self):
        V = direct_product(cyclic(2, 'a'), cyclic(2, 'b'))
        self.assertEqual(V.order, 4)
        self.assertEqual(V.labels, ('(e,e)', '(e,b)', '(a,e)', '(a,b)'))
        self.assertTrue(V.is_abelian())

    def test_subgroups_and_generators(self):
        A3 = S3.indices(['e', 'r', 'r2'])
        self.assertTrue(S3.is_subgroup(A3))
        self.assertFalse(S3.is_subgroup(S3.indices(['e', 'r'])))
        self.assertEqual(S3.generating_set(A3), [S3.index('r')])
        self.assertEqual(S3.closure([S3.index('s')]), S3.indices(['e', 's']))


class CatalogTest(SimpleTestCase):
    def test_names(self):
        self.assertEqual(catalog.names(), ['c2', 'c3', 'c4', 'c2xc2', 's3'])

    def test_get_is_cached(self):
        self.assertIs(catalog.get('S3'), catalog.get('s3'))
        self.assertEqual(catalog.get('C2×C2').name, 'C2xC2')

    def test_unknown_group(self):
        with self.assertRaises(GroupError):
            catalog.get('a5')

    def test_abelian_split(self):
        self.assertEqual([G.name for G in catalog.non_abelian()], ['S3'])
        self.assertEqual(len(catalog.abelian()), 4)

    def test_factorizations_are_valid(self):
        for G, plus, minus in catalog.factorizations():
            UF = verify_unique_factorization(G, plus, minus)
            self.assertEqual(len(UF.plus) * len(UF.minus), G.order)


class FactorizationTest(SimpleTestCase):
    def test_s3_actions(self):
        UF = s3_factorization()
        r, s = S3.index('r'), S3.index('s')
        self.assertEqual(S3.label(UF.left_on_plus(s, r)), 'r2')
        self.assertEqual(S3.label(UF.right_on_minus(s, r)), 's')
        self.assertFalse(UF.is_trivial)

    def test_trivial_factorization(self):
        G = catalog.get('c3')
        UF = verify_unique_factorization(G, list(G.labels), ['e'])
        self.assertTrue(UF.is_trivial)
        for u in UF.plus:
            self.assertEqual(UF.left_on_plus(G.identity, u), u)
            self.assertEqual(UF.right_on_plus(u, G.identity), u)

    def test_non_covering_factorization(self):
        C4 = catalog.get('c4')
        with self.assertRaises(GroupError):
            verify_unique_factorization(C4, ['e', 'c2'], ['e', 'c2'])

    def test_not_a_subgroup(self):
        with self.assertRaises(GroupError) as ctx:
            verify_unique_factorization(S3, ['e', 'r'], ['e', 's'])
        self.assertEqual(ctx.exception.witness, ('e', 'r'))

    def test_derived_actions(self):
        for G, plus, minus in catalog.factorizations():
            tables, report = derived_actions(verify_unique_factorization(G, plus, minus))
            self.assertTrue(report.passed, report.failures())
            self.assertEqual(len(report), 6)
            self.assertEqual(tables['labels'], G.labels)


class PositiveHopfTest(SimpleTestCase):
    def test_group_algebra_structure(self):
        H = group_algebra(S3)
        for g in S3.elements:
            self.assertEqual(H.comul[g], Tensor(H.dims(2), {(g, g): 1}))
            self.assertEqual(H.antipode.get(S3.inverse(g), g), 1)
            self.assertEqual(H.counit[g], 1)
            for h in S3.elements:
                self.assertEqual(H.mul_basis(g, h), H.basis(S3.table[g][h]))

    def test_dual_group_algebra(self):
        G = catalog.get('c3')
        H = dual_group_algebra(G)
        for g in G.elements:
            for h in G.elements:
                expected = H.basis(g) if g == h else Tensor.zero(H.dims(1))
                self.assertEqual(H.mul_basis(g, h), expected)
        self.assertEqual(H.unit, H.element({'e': 1, 'c': 1, 'c2': 1}))
        self.assertEqual([int(c == 1) for c in H.counit], [1, 0, 0])

    def test_unit_and_counit(self):
        UF = s3_factorization()
        H = build_positive_hopf(UF)
        self.assertEqual(H.unit, H.element({'e': 1, 'r': 1, 'r2': 1}))
        in_minus = [bool(c) for c in H.counit]
        self.assertEqual(in_minus, [g in UF.minus for g in S3.elements])

    def test_axioms_over_catalog(self):
        for G, plus, minus in catalog.factorizations():
            H = build_positive_hopf(verify_unique_factorization(G, plus, minus), verify=False)
            self.assertTrue(verify_hopf(H).passed, H.name)


class HomPairTest(SimpleTestCase):
    def test_homomorphisms_c3_to_c2(self):
        UF = s3_factorization()
        self.assertEqual(len(homomorphisms(S3, UF.plus, UF.minus)), 1)

    def test_s3_has_only_trivial_pair(self):
        UF = s3_factorization()
        pairs = enumerate_hom_pairs(UF)
        self.assertEqual(len(pairs), 1)
        self.assertTrue(pairs[0].is_normal)
        self.assertTrue(pairs[0].is_symmetric)

    def test_klein_pairs(self):
        pairs = enumerate_hom_pairs(klein_factorization())
        self.assertEqual(len(pairs), 4)
        self.assertEqual(sum(pair.is_symmetric for pair in pairs), 2)

    def test_relation_report_names(self):
        UF = s3_factorization()
        report = relation_report(UF, enumerate_hom_pairs(UF)[0])
        self.assertEqual(report.names(), [f'rel{n}' for n in range(6, 16)])
        self.assertTrue(report.passed)

    def test_relation_failure_has_witness(self):
        UF = klein_factorization()
        G = UF.group
        a, b, e = G.index('(a,e)'), G.index('(e,b)'), G.identity
        # η(a) hors de G₋
        pair = HomPair({e: e, a: b}, {e: e, a: a}, e)
        report = relation_report(UF, pair)
        self.assertFalse(report.passed)
        self.assertIsNotNone(report.first_failure().witness)

    def test_double_contains_canonical_pair(self):
        UF, pair, _ = build_double(catalog.get('c2'))
        self.assertIn(pair, enumerate_hom_pairs(UF))

    def test_describe(self):
        UF, pair, _ = build_double(catalog.get('c2'))
        self.assertEqual(pair.describe(UF.group), {
            'xi': {'(e,e)': '(e,e)', '(g,e)': '(e,e)'},
            'eta': {'(e,e)': '(e,e)', '(g,e)': '(g,g)'},
        })


class PositiveStructureTest(SimpleTestCase):
    def test_trivial_factorization_gives_unit(self):
        G = catalog.get('c3')
        UF = verify_unique_factorization(G, list(G.labels), ['e'])
        qt = build_R_xi_eta(UF, enumerate_hom_pairs(UF)[0])
        self.assertEqual(qt.R, qt.host.one(2))
        self.assertTrue(qt.triangular)

    def test_coefficients_are_zero_or_one(self):
        UF = klein_factorization()
        for pair in enumerate_hom_pairs(UF):
            qt = build_R_xi_eta(UF, pair)
            self.assertTrue(all(c == 1 for c in qt.R.entries.values()))
            self.assertEqual(len(qt.R), len(UF.plus) ** 2)

    def test_triangular_iff_xi_equals_eta(self):
        UF = klein_factorization()
        for pair in enumerate_hom_pairs(UF):
            self.assertEqual(build_R_xi_eta(UF, pair).triangular, pair.is_symmetric)

    def test_closed_form_F(self):
        for UF in (klein_factorization(), s3_factorization(), build_double(catalog.get('c3'))[0]):
            for pair in enumerate_hom_pairs(UF):
                qt = build_R_xi_eta(UF, pair)
                self.assertEqual(closed_form_F(UF, pair), double_braiding(qt.host, qt.R))

    def test_conditions_agree_with_generic_criteria(self):
        for UF in (klein_factorization(), build_double(catalog.get('c2'))[0]):
            for pair in enumerate_hom_pairs(UF):
                qt = build_R_xi_eta(UF, pair)
                verdict, witness = check_pseudo_conditions(UF, pair)
                self.assertEqual(verdict, is_pseudotriangular_direct(qt.host, qt.R))
                self.assertEqual(verdict, is_pseudotriangular_F(qt.host, qt.R))
                self.assertEqual(witness is None, verdict)

    def test_scan_over_catalog(self):
        for G, plus, minus in catalog.factorizations():
            pairs, reports = scan_pairs(verify_unique_factorization(G, plus, minus))
            self.assertEqual(len(pairs), len(reports))
            for report in reports:
                self.assertTrue(report['triangular_iff_xi_equals_eta'].passed)
                self.assertTrue(report['invertible'].passed)
                self.assertTrue(all(report[f'rel{n}'].passed for n in range(6, 16)))


class NormalCriterionTest(SimpleTestCase):
    def test_trivial_eta(self):
        UF = s3_factorization()
        pair = enumerate_hom_pairs(UF)[0]
        self.assertTrue(normal_pseudo_criterion(UF, pair))
        self.assertTrue(normal_relations(UF, pair).passed)

    def test_non_normal_pair_is_rejected(self):
        UF = klein_factorization()
        pair = next(p for p in enumerate_hom_pairs(UF) if not p.is_normal)
        with self.assertRaises(StructureError):
            normal_pseudo_criterion(UF, pair)
        with self.assertRaises(StructureError):
            normal_relations(UF, pair)

    def test_abelian_double(self):
        UF, pair, qt = build_double(catalog.get('c3'))
        self.assertTrue(pair.is_normal)
        self.assertTrue(normal_pseudo_criterion(UF, pair, qt.host))
        self.assertTrue(normal_relations(UF, pair).passed)

    def test_s3_double_witness(self):
        UF, pair, qt = build_double(S3)
        self.assertEqual(normal_pseudo_witness(UF, pair), ('(r,e)', '(s,e)'))
        self.assertFalse(normal_pseudo_criterion(UF, pair, qt.host))


class DoubleTest(SimpleTestCase):
    def test_c2_double(self):
        UF, pair, qt = build_double(catalog.get('c2'))
        self.assertEqual(qt.host.dim, 4)
        self.assertEqual(qt.host.name, 'D(k[C2]*)')
        self.assertTrue(qt.pseudotriangular)
        self.assertFalse(qt.triangular)

    def test_s3_double(self):
        UF, pair, qt = build_double(S3)
        self.assertEqual(qt.host.dim, 36)
        self.assertFalse(qt.pseudotriangular)
        verdict, witness = check_pseudo_conditions(UF, pair)
        self.assertFalse(verdict)
        self.assertEqual(len(witness), 3)

    def test_pseudotriangular_iff_abelian(self):
        for G in catalog.all():
            UF, pair, qt = build_double(G)
            self.assertEqual(qt.host.dim, G.order ** 2)
            self.assertEqual(qt.pseudotriangular, G.is_abelian(), G.name)
            self.assertEqual(check_pseudo_conditions(UF, pair)[0], G.is_abelian(), G.name)
