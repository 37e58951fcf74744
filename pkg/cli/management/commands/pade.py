from cli.forms import PadeConfigForm
from cli.management.base import ConfiguredCommand
from cli.output import frame_csv, json_text, pade_frame
from funcsolve.equations import EquationKind
from funcsolve.solvers import solve
from pade.approximants import congruence_defect, pade


class Command(ConfiguredCommand):
    help = 'Exact [L/M] Padé approximant of a solution series.'
    form_class = PadeConfigForm
    defaults = {'num': 'PADE_NUM', 'den': 'PADE_DEN'}

    def add_arguments(self, parser):
        parser.add_argument('--kind', default='exp-inverse')
        parser.add_argument('--num', type=int, help='numerator degree L')
        parser.add_argument('--den', type=int, help='denominator degree M')
        parser.add_argument('--order', '-n', type=int, help='series order, at least L + M')
        self.add_output_arguments(parser)

    def run(self, config):
        series = solve(EquationKind.from_tag(config['kind']), config['order'])
        approximant = pade(series, config['num'], config['den'])
        if any(congruence_defect(series, approximant)):
            self.stderr.write(self.style.ERROR('Q*S - P does not vanish through degree L + M'))
        if config['format'] == 'csv':
            return [('pade.csv', frame_csv(pade_frame(approximant)))]
        return [('pade.json', json_text(approximant.to_dict()))]
