from posbasis.factorization import verify_unique_factorization
from posbasis.structures import scan_pairs

from cli.base import ReportCommand
from cli.loaders import load_group

ANCHORS = {'pseudotriangular': 'positive_pseudotriangular', 'triangular_iff_xi_equals_eta': 'quasitriangular',
           '*': 'positive_pair'}


def labels(text):
    return [label.strip() for label in text.split(',') if label.strip()]


class Command(ReportCommand):
    help = 'Quasitriangular structures R(xi, eta) on H(G; G+, G-) in the positive basis'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        scan = actions.add_parser('scan-qt', help='enumerate every admissible pair (xi, eta)')
        scan.add_argument('--group', required=True, help='JSON file or builtin:NAME')
        scan.add_argument('--plus', required=True, help='comma-separated labels of G+')
        scan.add_argument('--minus', required=True, help='comma-separated labels of G-')

    def run(self, report, group, plus, minus, **options):
        G = load_group(group)
        UF = verify_unique_factorization(G, labels(plus), labels(minus))
        pairs, reports = scan_pairs(UF)
        report.data.update({'group': G.name, 'pairs': [pair.describe(G) for pair in pairs]})
        for number, (pair, verdicts) in enumerate(zip(pairs, reports), start=1):
            # la pseudotriangularité dépend de la paire : verdict informatif
            report.extend(verdicts, ANCHORS, prefix=f'pair{number}.', expected={'pseudotriangular': None})
        return None
