from posbasis.structures import build_double

from cli.base import ReportCommand
from cli.loaders import load_group

ANCHORS = {'pseudotriangular': 'double_pseudotriangular', '*': 'quasitriangular'}


class Command(ReportCommand):
    help = 'Canonical quasitriangular structure of the Drinfeld double of k[G]*'

    def add_arguments(self, parser):
        parser.add_argument('--group', required=True, help='JSON file or builtin:NAME')

    def run(self, report, group, **options):
        G = load_group(group)
        _, pair, structure = build_double(G)
        report.data.update({'group': G.name, 'dim': structure.host.dim, 'abelian': G.is_abelian()})
        expected = {'triangular': G.order == 1, 'pseudotriangular': G.is_abelian()}
        report.extend(structure.verdicts(), ANCHORS, expected=expected)
        return None
