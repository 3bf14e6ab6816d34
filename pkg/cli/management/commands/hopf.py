from hopfcore.axioms import verify_hopf

from cli.base import ReportCommand
from cli.loaders import load_hopf


class Command(ReportCommand):
    help = 'Hopf algebra axioms of a structure-constant document'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        verify = actions.add_parser('verify', help='run every Hopf axiom')
        verify.add_argument('source', help='JSON file or builtin:radford:NU, builtin:group:NAME, builtin:dual:NAME')

    def run(self, report, source, **options):
        H = load_hopf(source, verify=False)
        report.data.update({'hopf': H.name, 'dim': H.dim})
        report.extend(verify_hopf(H), 'hopf')
        return None
