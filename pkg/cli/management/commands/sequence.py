from cli.forms import SolveConfigForm
from cli.management.base import ConfiguredCommand
from cli.output import frame_csv, json_text, report_frame
from funcsolve.equations import EquationKind
from funcsolve.sequences import divergence_evidence, sequence_report
from funcsolve.solvers import solve


class Command(ConfiguredCommand):
    help = 'Integer sequence, EGF view and root-test diagnostics of a solution series.'
    form_class = SolveConfigForm
    defaults = {'order': 'SEQUENCE_DEFAULT_ORDER'}

    def add_arguments(self, parser):
        parser.add_argument('--kind', default='exp-inverse')
        parser.add_argument('--order', '-n', type=int)
        self.add_output_arguments(parser)

    def run(self, config):
        kind = EquationKind.from_tag(config['kind'])
        report = sequence_report(solve(kind, config['order']))
        samples, decreasing, halved = divergence_evidence(report)
        document = {
            'kind': kind.tag.value,
            'order': config['order'],
            'rows': report.rows(),
            'non_integral': report.non_integral(start=2),
            'divergence': {'samples': samples, 'decreasing': decreasing, 'halved': halved},
        }
        artifacts = [('sequence.json', json_text(document)), ('sequence.csv', frame_csv(report_frame(report)))]
        return artifacts[::-1] if config['format'] == 'csv' else artifacts
