from hopfcore.exceptions import AxiomFailure, CrossCheckError
from hopfcore.workers import run_jobs
from radford.builders import RParams, build_R, build_radford, double_braiding_element

from cli.base import ReportCommand
from cli.loaders import beta_to_json, dump_hopf, parse_beta
from cli.reports import Report

ANCHORS = {'triangular': 'radford_triangular', 'pseudotriangular': 'radford_pseudotriangular',
           '*': 'quasitriangular'}


def check_structure(A, s, beta):
    """Verdicts de R_{s,β}, F = R₂₁R confronté à sa forme close"""
    params = RParams(s, beta)
    try:
        structure = build_R(A, params)
    except AxiomFailure as exc:
        return exc.report
    if double_braiding_element(A, params) != structure.F:
        raise CrossCheckError(f'closed form of R21 R disagrees with the product for s={s}')
    return structure.verdicts()


class Command(ReportCommand):
    help = 'Quasitriangular structures R_{s,beta} on the Hopf algebras H_nu'

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)
        scan = actions.add_parser('scan', help='check R_{s,beta} for every odd s')
        scan.add_argument('--nu', type=int, required=True)
        scan.add_argument('--beta', default='formal', help='"formal", "p/q" or a cyclotomic vector')
        check = actions.add_parser('check', help='check a single R_{s,beta}')
        check.add_argument('--nu', type=int, required=True)
        check.add_argument('--s', type=int, required=True)
        check.add_argument('--beta', default='formal')
        dump = actions.add_parser('dump', help='write H_nu as JSON')
        dump.add_argument('--nu', type=int, required=True)

    def run(self, report, action, nu, **options):
        A = build_radford(nu)
        if action == 'dump':
            return dump_hopf(A.hopf)
        beta = parse_beta(options['beta'], A.conductor)
        values = range(1, A.order, 2) if action == 'scan' else [options['s']]
        for s in values:
            RParams(s, beta).validate(A)
        results = run_jobs([lambda s=s: Report.timed(check_structure, A, s, beta) for s in values])
        report.data.update({'nu': nu, 'beta': beta_to_json(beta), 's': list(values)})
        for s, (verdicts, runtime) in zip(values, results):
            report.extend(verdicts, ANCHORS, prefix=f's={s}.', expected={'triangular': s == nu},
                          runtime_ms=runtime)
        return None
