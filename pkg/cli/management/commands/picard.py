from cli.forms import PicardConfigForm
from cli.management.base import ConfiguredCommand
from cli.output import frame_csv, iterates_frame, json_text, picard_summary
from picard.iteration import run_orbit


class Command(ConfiguredCommand):
    help = 'Numerical Picard iteration of F(x) = integral_0^x exp(f^-1(t)) dt from the identity.'
    form_class = PicardConfigForm
    defaults = {
        'iterations': 'PICARD_ITERATIONS',
        'xmax': 'PICARD_XMAX',
        'grid': 'PICARD_GRID',
    }

    def add_arguments(self, parser):
        parser.add_argument('--iterations', '-k', type=int)
        parser.add_argument('--xmax', type=float)
        parser.add_argument('--grid', type=int, help='number of grid cells M')
        parser.add_argument('--out', metavar='DIR', default=None)

    def run(self, config):
        orbit = run_orbit(config['iterations'], config['xmax'], config['grid'])
        if not orbit.interleaving_ok:
            self.stderr.write(self.style.WARNING(f"{len(orbit.violations)} interleaving violations"))
        return [
            ('summary.json', json_text(picard_summary(orbit))),
            ('iterates.csv', frame_csv(iterates_frame(orbit))),
        ]
