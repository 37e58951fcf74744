from cli.forms import SolveConfigForm
from cli.management.base import ConfiguredCommand
from cli.output import frame_csv, json_text, report_frame, solve_document
from funcsolve.equations import EquationKind
from funcsolve.sequences import sequence_report
from funcsolve.solvers import solve


class Command(ConfiguredCommand):
    help = 'Solve one of the functional differential equations as an exact power series.'
    form_class = SolveConfigForm
    defaults = {'order': 'SOLVE_DEFAULT_ORDER'}

    def add_arguments(self, parser):
        parser.add_argument('--kind', default='exp-inverse')
        parser.add_argument('--order', '-n', type=int)
        parser.add_argument('--strategy', choices=['incremental', 'direct'])
        self.add_output_arguments(parser)

    def run(self, config):
        kind = EquationKind.from_tag(config['kind'])
        series = solve(kind, config['order'], strategy=config['strategy'])
        report = sequence_report(series)
        if config['format'] == 'csv':
            return [('series.csv', frame_csv(report_frame(report)))]
        return [('series.json', json_text(solve_document(kind, series, report)))]
