from cli.forms import RungeKuttaConfigForm
from cli.management.base import ConfiguredCommand
from cli.output import frame_csv, json_text
from rungekutta.integrator import benchmark_table, plot_points
from rungekutta.tableau import get_tableau


class Command(ConfiguredCommand):
    help = "Fixed-step explicit Runge-Kutta solution of v'' v' - v' = 0, v(0) = 0, v'(0) = 2."
    form_class = RungeKuttaConfigForm
    default_format = 'csv'
    defaults = {
        'method': 'RK_METHOD',
        'step': 'RK_STEP',
        'nsteps': 'RK_STEPS',
    }

    def add_arguments(self, parser):
        parser.add_argument('--problem', default='v-quadratic')
        parser.add_argument('--method', help='tableau name, e.g. rk4')
        parser.add_argument('--step', help='step h as "0.1" or "1/10"')
        parser.add_argument('--nsteps', type=int)
        self.add_output_arguments(parser)

    def run(self, config):
        table = benchmark_table(get_tableau(config['method']), config['step'], config['nsteps'])
        if config['format'] == 'json':
            main = ('rk_table.json', json_text(table.to_dict(orient='records')))
        else:
            main = ('rk_table.csv', frame_csv(table))
        return [main, ('rk_plot.dat', plot_points(table))]
