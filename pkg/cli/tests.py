import json
import os
import tempfile
from fractions import Fraction
from io import StringIO

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase, override_settings

from hopfcore.exceptions import AxiomFailure, GroupError, SchemaError
from hopfcore.reports import CheckReport
from posbasis.catalog import catalog
from radford.builders import build_radford
from scalar.numbers import CycScalar

from .loaders import (
    beta_to_json, dump_group, dump_hopf, dump_module, dump_yb, group_from_json, hopf_from_json, load_group,
    load_hopf, load_module, load_yb, module_from_json, parse_beta, yb_from_json,
)
from .reports import Report

NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def run(*args):
    """(document JSON, stderr) d'une commande"""
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err)
    return json.loads(out.getvalue()), err.getvalue()


def entry(document, name):
    return next(e for e in document['entries'] if e['name'] == name)


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name, data):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(data if isinstance(data, str) else json.dumps(data))
        return path

    def assertExitCode(self, code, *args):
        with self.assertRaises(CommandError) as context:
            run(*args)
        self.assertEqual(context.exception.returncode, code)
        return context.exception


class RadfordCommandTest(CommandTestCase):
    def test_scan(self):
        document, summary = run('radford', 'scan', '--nu', '3')
        self.assertTrue(document['ok'])
        self.assertEqual(document['s'], [1, 3, 5])
        self.assertEqual(document['beta'], 'formal')
        self.assertEqual(entry(document, 's=3.triangular')['verdict'], 'pass')
        self.assertEqual(entry(document, 's=1.triangular')['verdict'], 'fail')
        self.assertEqual(entry(document, 's=1.triangular')['expected'], 'fail')
        for s in (1, 3, 5):
            self.assertEqual(entry(document, f's={s}.pseudotriangular')['verdict'], 'pass')
        self.assertIn('unexpected', summary)

    def test_check_with_rational_beta(self):
        document, _ = run('radford', 'check', '--nu', '1', '--s', '1', '--beta', '1/2')
        self.assertTrue(document['ok'])
        self.assertEqual(document['beta'], '1/2')
        self.assertEqual(document['command']['arguments']['beta'], '1/2')

    def test_usage_errors(self):
        self.assertExitCode(2, 'radford', 'check', '--nu', '3', '--s', '2')
        self.assertExitCode(2, 'radford', 'scan', '--nu', '2')

    def test_dump_round_trips(self):
        document, _ = run('radford', 'dump', '--nu', '1')
        self.assertEqual(hopf_from_json(document), build_radford(1).hopf)

    def test_output_is_deterministic(self):
        first, _ = run('radford', 'scan', '--nu', '1')
        second, _ = run('radford', 'scan', '--nu', '1')
        self.assertEqual(json.dumps(first), json.dumps(second))
        self.assertNotIn('runtime_ms', first['entries'][0])

    @override_settings(QHOPF={'THREADS': 1, 'SLOW_TESTS': False, 'REPORT_TIMINGS': True})
    def test_timings_when_enabled(self):
        document, _ = run('radford', 'check', '--nu', '1', '--s', '1')
        self.assertIn('runtime_ms', document['entries'][0])


class HopfCommandTest(CommandTestCase):
    def test_verify_dump_file(self):
        path = self.write('h1.json', dump_hopf(build_radford(1).hopf))
        document, _ = run('hopf', 'verify', path)
        self.assertTrue(document['ok'])
        self.assertEqual(document['dim'], 4)

    def test_verify_builtin(self):
        document, _ = run('hopf', 'verify', 'builtin:group:s3')
        self.assertEqual(len(document['entries']), 8)

    def test_broken_antipode(self):
        data = dump_hopf(build_radford(1).hopf)
        data['antipode'] = [[i, i, [['1']]] for i in range(4)]
        path = self.write('broken.json', data)
        error = self.assertExitCode(1, 'hopf', 'verify', path)
        self.assertIn('unexpected verdicts', str(error))
        with self.assertRaises(AxiomFailure):
            load_hopf(path)

    def test_file_errors(self):
        self.assertExitCode(3, 'hopf', 'verify', os.path.join(self.tmp.name, 'missing.json'))
        self.assertExitCode(3, 'hopf', 'verify', self.write('bad.json', '{"dim": '))
        self.assertExitCode(3, 'hopf', 'verify', self.write('partial.json', {'dim': 2}))
        data = dump_hopf(build_radford(1).hopf)
        data['unit'] = [[[9], [['1']]]]
        self.assertExitCode(3, 'hopf', 'verify', self.write('range.json', data))

    def test_malformed_structure_is_a_schema_error(self):
        data = dump_hopf(build_radford(1).hopf)
        data['comul'] = [item for item in data['comul'] if item[0] != 3]
        self.assertExitCode(3, 'hopf', 'verify', self.write('comul.json', data))
        for field, value in [('conductor', 0), ('dim', 0), ('labels', 'abcd'), ('labels', [0, 1, 2, 3])]:
            data = dump_hopf(build_radford(1).hopf)
            data[field] = value
            self.assertExitCode(3, 'hopf', 'verify', self.write(f'{field}.json', data))
            with self.assertRaises(SchemaError):
                hopf_from_json(data)


class GroupLoaderTest(CommandTestCase):
    def test_builtin_and_file(self):
        S3 = load_group('builtin:s3')
        self.assertEqual(S3.order, 6)
        path = self.write('s3.json', dump_group(S3))
        self.assertEqual(load_group(path), S3)

    def test_non_associative_table(self):
        data = {'order': 5, 'labels': ['e', 'a', 'b', 'c', 'd'], 'table': NON_ASSOCIATIVE_LOOP, 'identity': 0}
        with self.assertRaises(GroupError) as context:
            group_from_json(data)
        self.assertEqual(context.exception.witness, ('a', 'a', 'b'))

    def test_schema_errors(self):
        with self.assertRaises(SchemaError):
            group_from_json({'order': 3, 'labels': ['e', 'a'], 'table': [[0, 1], [1, 0]], 'identity': 0})
        with self.assertRaises(SchemaError):
            group_from_json({'order': 2, 'labels': ['e', 'a'], 'table': [[0, 'a'], [1, 0]], 'identity': 0})

    def test_labels_must_be_strings(self):
        for labels in ('ea', ['e', 1], None):
            with self.assertRaises(SchemaError):
                group_from_json({'order': 2, 'labels': labels, 'table': [[0, 1], [1, 0]], 'identity': 0})


class DoubleCommandTest(CommandTestCase):
    def test_abelian_group(self):
        document, _ = run('double', '--group', 'builtin:c2')
        self.assertTrue(document['ok'])
        self.assertEqual(document['dim'], 4)
        self.assertEqual(entry(document, 'pseudotriangular')['verdict'], 'pass')

    def test_s3(self):
        path = self.write('s3.json', dump_group(catalog.get('s3')))
        document, _ = run('double', '--group', path)
        self.assertTrue(document['ok'])
        verdict = entry(document, 'pseudotriangular')
        self.assertEqual(verdict['verdict'], 'fail')
        self.assertEqual(verdict['expected'], 'fail')
        self.assertTrue(verdict['witness'])
        self.assertEqual(entry(document, 'intertwines_coproduct')['verdict'], 'pass')

    def test_unknown_group(self):
        self.assertExitCode(3, 'double', '--group', 'builtin:q8')


class PosbasisCommandTest(CommandTestCase):
    def test_scan_s3(self):
        document, _ = run('posbasis', 'scan-qt', '--group', 'builtin:s3', '--plus', 'e,r,r2', '--minus', 'e,s')
        self.assertTrue(document['ok'])
        self.assertEqual(len(document['pairs']), 1)
        self.assertIn('pair1.rel6', [e['name'] for e in document['entries']])
        self.assertNotIn('expected', entry(document, 'pair1.pseudotriangular'))

    def test_not_a_factorization(self):
        self.assertExitCode(3, 'posbasis', 'scan-qt', '--group', 'builtin:s3', '--plus', 'e,r', '--minus', 'e,s')


class YdCommandTest(CommandTestCase):
    def test_check_builtin(self):
        document, _ = run('yd', 'check', '--module', 'builtin:conj:s3')
        self.assertTrue(document['ok'])
        self.assertEqual(document['kind'], 'll')

    def test_check_left_right(self):
        document, _ = run('yd', 'check', '--module', 'builtin:conj:c3:lr')
        self.assertEqual(document['kind'], 'lr')

    def test_pseudo(self):
        triple = ['builtin:conj:s3'] * 3
        document, _ = run('yd', 'pseudo', '--triple', *triple, '--expect', 'fail')
        self.assertTrue(document['ok'])
        self.assertEqual(len(entry(document, 'pseudosymmetry')['witness']), 3)
        self.assertExitCode(1, 'yd', 'pseudo', '--triple', *triple, '--expect', 'pass')
        document, _ = run('yd', 'pseudo', '--triple', *(['builtin:conj:c3'] * 3))
        self.assertEqual(entry(document, 'pseudosymmetry')['verdict'], 'pass')

    def test_hosts_must_agree(self):
        self.assertExitCode(2, 'yd', 'pseudo', '--triple', 'builtin:conj:s3', 'builtin:conj:c2', 'builtin:conj:s3')

    def test_search(self):
        document, _ = run('yd', 'search', '--modules', 'builtin:trivial:s3', 'builtin:conj:s3')
        self.assertEqual(document['search']['status'], 'witness')
        self.assertEqual(entry(document, 'pseudosymmetry')['verdict'], 'fail')

    def test_search_defaults_to_witness_catalog(self):
        document, _ = run('yd', 'search', '--hopf', 'builtin:group:c2')
        self.assertEqual(document['catalog'], ['ad k[C2]', 'ad k[C2]⊗ad k[C2]', 'conj C2'])
        self.assertEqual(document['search']['status'], 'inconclusive')
        self.assertEqual(entry(document, 'pseudosymmetry')['verdict'], 'pass')
        document, _ = run('yd', 'search', '--hopf', 'builtin:radford:1', '--expect', 'fail')
        self.assertTrue(document['ok'])
        self.assertEqual(document['search']['triple'], ['ad H_1'] * 3)

    def test_module_file_round_trip(self):
        document, _ = run('yd', 'dump', '--module', 'builtin:conj:c3', '--hopf-ref', 'builtin:group:c3')
        path = self.write('conj.json', document)
        M = load_module(path)
        original = load_module('builtin:conj:c3')
        self.assertEqual(M.left_action, original.left_action)
        self.assertEqual(M.left_coaction, original.left_coaction)
        checked, _ = run('yd', 'check', '--module', path)
        self.assertTrue(checked['ok'])

    def test_module_schema(self):
        data = dump_module(load_module('builtin:conj:c2'), 'builtin:group:c2')
        with self.assertRaises(SchemaError):
            module_from_json({**data, 'kind': 'rl'})
        with self.assertRaises(SchemaError):
            module_from_json({**data, 'right_coaction': data['left_coaction']})
        zero = {**data, 'left_coaction': [[m, []] for m in range(2)]}
        with self.assertRaises(AxiomFailure):
            module_from_json(zero)
        for bad in ({'labels': 'ab'}, {'labels': ['x']}, {'dim': 0}):
            with self.assertRaises(SchemaError):
                module_from_json({**data, **bad})


class PsbraidCommandTest(CommandTestCase):
    def test_equal(self):
        document, _ = run('psbraid', 'equal', '--n', '3', 's1 s2^-1 s1', 's2 s1^-1 s2')
        self.assertTrue(document['equal'])
        self.assertEqual(entry(document, 'ps_equal')['verdict'], 'pass')

    def test_not_equal(self):
        document, _ = run('psbraid', 'equal', '--n', '2', 's1', 's1^-1')
        self.assertFalse(document['equal'])
        self.assertEqual(entry(document, 'ps_equal')['witness'], ['crossings 1,2', '1', '-1'])
        self.assertExitCode(1, 'psbraid', 'equal', '--n', '2', 's1', 's1^-1', '--expect', 'equal')

    def test_invariant(self):
        document, _ = run('psbraid', 'invariant', '--n', '3', '--word', 's1 s2^-1 s1')
        self.assertEqual(document['invariant']['perm'], [3, 2, 1])
        self.assertEqual(document['invariant']['crossings'], [[1, 2, 1], [1, 3, -1], [2, 3, 1]])
        self.assertEqual(document['entries'], [])

    def test_bad_word(self):
        self.assertExitCode(2, 'psbraid', 'invariant', '--n', '3', '--word', 's1 t2')

    def test_representation(self):
        document, _ = run('psbraid', 'rep', '--yb', 'builtin:radford:1:1', '--word', 's1')
        self.assertEqual(document['size'], 16)
        self.assertEqual(document['n'], 2)
        self.assertEqual(entry(document, 'yang_baxter')['verdict'], 'pass')

    def test_conjugation_operator(self):
        document, _ = run('psbraid', 'rep', '--yb', 'builtin:conj:s3', '--word', 's1 s2^-1 s1')
        self.assertTrue(document['ok'])
        self.assertEqual(document['size'], 216)
        self.assertEqual(entry(document, 'pseudosymmetric')['verdict'], 'fail')

    def test_operator_file_round_trip(self):
        document, _ = run('psbraid', 'dump', '--yb', 'builtin:radford:1:1', '--beta', '2')
        sigma = yb_from_json(document)
        original = load_yb('builtin:radford:1:1', '2')
        self.assertEqual(sigma.matrix, original.matrix)
        self.assertEqual(dump_yb(sigma)['inverse'], document['inverse'])
        path = self.write('sigma.json', document)
        rep, _ = run('psbraid', 'rep', '--yb', path, '--word', 's1 s1^-1')
        self.assertEqual(rep['size'], 16)

    def test_operator_file_errors(self):
        swap = [[i, j, [['1']]] for i, j in ((0, 0), (1, 2), (2, 1), (3, 3))]
        for data in ({'dim': 2, 'conductor': 1, 'matrix': []},
                     {'dim': 2, 'conductor': 1, 'matrix': swap, 'inverse': []},
                     {'dim': 2, 'conductor': 0, 'matrix': swap},
                     {'dim': 2, 'conductor': 1, 'matrix': swap, 'labels': 'ab'}):
            with self.assertRaises(SchemaError):
                yb_from_json(data)
        path = self.write('singular.json', {'dim': 2, 'conductor': 1, 'matrix': []})
        self.assertExitCode(3, 'psbraid', 'rep', '--yb', path, '--word', 's1')


class BetaTest(SimpleTestCase):
    def test_parse(self):
        self.assertIsNone(parse_beta('formal', 6))
        self.assertEqual(parse_beta('3/4', 6), Fraction(3, 4))
        value = parse_beta('[0, 1]', 6)
        self.assertEqual(value, CycScalar.root(6))
        self.assertEqual(beta_to_json(value), ['0', '1'])
        self.assertEqual(beta_to_json(None), 'formal')
        with self.assertRaises(SchemaError):
            parse_beta('[0,', 6)
        with self.assertRaises(SchemaError):
            parse_beta('x', 6)


class ReportTest(SimpleTestCase):
    def test_witness_only_on_failure(self):
        report = Report({'name': 'test'})
        report.add('a', 'hopf', True, ('ignored',))
        report.add('b', 'hopf', False, ('w',), expected=False)
        data = report.as_dict()
        self.assertNotIn('witness', data['entries'][0])
        self.assertEqual(data['entries'][1]['witness'], ['w'])
        self.assertTrue(report.ok)
        report.add('c', 'hopf', False)
        self.assertFalse(report.ok)
        self.assertEqual([e.name for e in report.mismatches()], ['c'])

    def test_entry_keys(self):
        document, _ = run('hopf', 'verify', 'builtin:group:c2')
        first = document['entries'][0]
        self.assertEqual(set(first), {'name', 'paper_anchor', 'verdict', 'expected'})
        self.assertEqual(first['paper_anchor'], 'structure constants define a Hopf algebra')

    def test_failed_checks_are_logged(self):
        with self.assertLogs('cli.signals', level='INFO') as logs:
            CheckReport(subject='demo').record('axiom', False, ('g', 'h'))
        self.assertIn('demo: axiom failed, witness g, h', logs.output[0])
