from ydmod.braiding import pseudosymmetry_check, witness_search
from ydmod.catalog import witness_catalog

from cli.base import ReportCommand
from cli.loaders import dump_module, host_group, load_hopf, load_module

EXPECT = {'pass': True, 'fail': False, None: None}


class Command(ReportCommand):
    help = 'Yetter-Drinfeld modules, LR(H) objects and the pseudosymmetry of their braiding'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        check = actions.add_parser('check', help='axioms of a module (ll, lr or lrobj)')
        check.add_argument('--module', required=True, help='JSON file or builtin:conj:NAME[:KIND]')
        pseudo = actions.add_parser('pseudo', help='pseudosymmetry equation on X⊗Y⊗Z')
        pseudo.add_argument('--triple', nargs=3, required=True, metavar=('X', 'Y', 'Z'))
        pseudo.add_argument('--expect', choices=('pass', 'fail'))
        search = actions.add_parser('search', help='first failing triple among the given objects')
        objects = search.add_mutually_exclusive_group(required=True)
        objects.add_argument('--modules', nargs='+')
        objects.add_argument('--hopf', help='search the witness catalog of this Hopf algebra: ad H, '
                                            'ad H ⊗ ad H, then conj G when H = k[G]')
        search.add_argument('--expect', choices=('pass', 'fail'))
        dump = actions.add_parser('dump', help='write a built-in module as JSON')
        dump.add_argument('--module', required=True)
        dump.add_argument('--hopf-ref', required=True, help='reference stored in the document')

    def run(self, report, action, **options):
        if action == 'dump':
            return dump_module(load_module(options['module']), options['hopf_ref'])
        if action == 'check':
            M = load_module(options['module'])
            report.data.update({'module': M.name, 'kind': M.kind, 'dim': M.dim})
            report.extend(M.check(), 'yetter_drinfeld')
            return None
        expected = EXPECT[options.get('expect')]
        if action == 'pseudo':
            X, Y, Z = (load_module(ref) for ref in options['triple'])
            result, runtime = report.timed(pseudosymmetry_check, X.host, X, Y, Z)
            report.data['triple'] = [X.name, Y.name, Z.name]
            report.add('pseudosymmetry', 'pseudosymmetry', result.passed, result.witness, expected, runtime)
            return None
        if options.get('modules'):
            objects = [load_module(ref) for ref in options['modules']]
            host = objects[0].host
        else:
            host = load_hopf(options['hopf'])
            objects = witness_catalog(host, host_group(options['hopf']))
        report.data['catalog'] = [M.name for M in objects]
        result, runtime = report.timed(witness_search, host, objects)
        report.data['search'] = result.as_dict()
        witness = (*result.triple, *result.witness) if result.found else None
        report.add('pseudosymmetry', 'pseudosymmetry', not result.found, witness, expected, runtime)
        return None
