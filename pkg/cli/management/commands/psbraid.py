from hopfcore.exceptions import StructureError
from psbraid.operators import represent
from psbraid.words import BraidWord, ps_equal, ps_invariant

from cli.base import ReportCommand
from cli.loaders import dump_yb, load_yb, matrix_to_json

EXPECT = {'equal': True, 'different': False, None: None}


def strands_for(text, n=None):
    """Nombre de brins : --n, sinon le plus grand générateur du mot plus un"""
    if n is not None:
        return n
    letters = BraidWord.parse(text, 10 ** 6).letters
    return max([k + 1 for k, _ in letters] + [2])


def invariant_difference(first, second):
    if first.perm != second.perm:
        return ('perm', str(first.perm), str(second.perm))
    pairs = sorted(set(dict(first.crossings)) | set(dict(second.crossings)))
    i, j = next(pair for pair in pairs if first.crossing(*pair) != second.crossing(*pair))
    return (f'crossings {i},{j}', first.crossing(i, j), second.crossing(i, j))


class Command(ReportCommand):
    help = 'Braid words modulo [P_n, P_n] and their Yang-Baxter representations'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        invariant = actions.add_parser('invariant', help='permutation and pairwise crossing counts')
        invariant.add_argument('--n', type=int, required=True)
        invariant.add_argument('--word', required=True, help='e.g. "s1 s2^-1 s1"')
        equal = actions.add_parser('equal', help='equality in B_n/[P_n,P_n]')
        equal.add_argument('--n', type=int, required=True)
        equal.add_argument('first')
        equal.add_argument('second')
        equal.add_argument('--expect', choices=('equal', 'different'))
        rep = actions.add_parser('rep', help='matrix of a word on V^n')
        rep.add_argument('--yb', required=True, help='JSON file, builtin:radford:NU:S or builtin:conj:NAME')
        rep.add_argument('--word', required=True)
        rep.add_argument('--n', type=int)
        rep.add_argument('--beta', default='formal')
        dump = actions.add_parser('dump', help='write an operator and its inverse as JSON')
        dump.add_argument('--yb', required=True)
        dump.add_argument('--beta', default='formal')

    def run(self, report, action, **options):
        n = options.get('n')
        if action == 'invariant':
            report.data['invariant'] = ps_invariant(BraidWord.parse(options['word'], n)).as_dict()
            return None
        if action == 'equal':
            first, second = BraidWord.parse(options['first'], n), BraidWord.parse(options['second'], n)
            equal = ps_equal(first, second)
            witness = None if equal else invariant_difference(ps_invariant(first), ps_invariant(second))
            report.data['equal'] = equal
            report.add('ps_equal', 'ps_word_problem', equal, witness, EXPECT[options.get('expect')])
            return None
        sigma = load_yb(options['yb'], options['beta'])
        if action == 'dump':
            return dump_yb(sigma)
        w = BraidWord.parse(options['word'], strands_for(options['word'], n))
        report.extend(sigma.verdict.report, 'yang_baxter', expected={'yang_baxter': True,
                                                                      'pseudosymmetric': None,
                                                                      'pseudosymmetric_inverse': None})
        if not sigma.verdict.is_yb:
            raise StructureError(f'{sigma.name} does not satisfy the braid relation')
        matrix = represent(w, sigma)
        report.data.update({'operator': sigma.name, 'n': w.n, 'word': str(w),
                            'size': matrix.nrows, 'matrix': matrix_to_json(matrix)})
        return None
