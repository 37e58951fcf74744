import io
import json
import shutil
import tempfile
from fractions import Fraction
from pathlib import Path

import pandas as pd
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from .checks import run_checks
from .forms import PadeConfigForm, RungeKuttaConfigForm, SolveConfigForm

EXP_INVERSE_13 = [
    '0', '1', '1/2', '0', '1/24', '-1/20', '13/180', '-197/1680', '2101/10080',
    '-48203/120960', '2938057/3628800', '-23059441/13305600', '74408941/19160064',
    '-9409883317/1037836800',
]


def run(name, **options):
    out, err = io.StringIO(), io.StringIO()
    call_command(name, stdout=out, stderr=err, no_color=True, **options)
    return out.getvalue()


class CommandTestCase(SimpleTestCase):

    def setUp(self):
        self.tmp = Path(tempfile.mkdtemp())
        self.addCleanup(shutil.rmtree, self.tmp, ignore_errors=True)

    def assertExitCode(self, code, name, **options):
        with self.assertRaises(CommandError) as ctx:
            run(name, **options)
        self.assertEqual(ctx.exception.returncode, code)
        return ctx.exception


class FormTests(SimpleTestCase):

    def test_step_parsing(self):
        for text in ('0.1', '1/10'):
            form = RungeKuttaConfigForm(data={
                'problem': 'v-quadratic', 'method': 'rk4', 'step': text, 'nsteps': 10, 'format': 'csv',
            })
            self.assertTrue(form.is_valid(), form.errors)
            self.assertEqual(form.cleaned_data['step'], Fraction(1, 10))

    def test_rejects_non_positive(self):
        form = RungeKuttaConfigForm(data={
            'problem': 'v-quadratic', 'method': 'rk4', 'step': '-1/10', 'nsteps': 10, 'format': 'csv',
        })
        self.assertFalse(form.is_valid())
        self.assertIn('step', form.errors)
        form = SolveConfigForm(data={'kind': 'exp-inverse', 'order': 0, 'format': 'json'})
        self.assertIn('order', form.errors)

    def test_general_kind_not_offered(self):
        form = SolveConfigForm(data={'kind': 'general-selfcomp', 'order': 3, 'format': 'json'})
        self.assertIn('kind', form.errors)

    def test_pade_order_defaults_to_degree_sum(self):
        form = PadeConfigForm(data={'kind': 'exp-inverse', 'num': 2, 'den': 3, 'format': 'json'})
        self.assertTrue(form.is_valid(), form.errors)
        self.assertEqual(form.cleaned_data['order'], 5)
        form = PadeConfigForm(data={'kind': 'exp-inverse', 'num': 2, 'den': 3, 'order': 4, 'format': 'json'})
        self.assertFalse(form.is_valid())


class SolveCommandTests(CommandTestCase):

    def test_default_order_reproduces_coefficients(self):
        document = json.loads(run('solve'))
        self.assertEqual(document['kind'], 'exp-inverse')
        self.assertEqual(document['series'], {'order': 13, 'coeffs': EXP_INVERSE_13})
        self.assertEqual(document['report'][10]['c'], '2938057')

    def test_selfcomp_prefix(self):
        document = json.loads(run('solve', kind='exp-selfcomp', order=4))
        self.assertEqual(document['series']['coeffs'], ['0', '1', '1/2', '1/2', '2/3'])

    def test_direct_strategy(self):
        self.assertEqual(run('solve', order=8, strategy='direct'), run('solve', order=8))

    def test_csv(self):
        lines = run('solve', order=5, format='csv').splitlines()
        self.assertEqual(lines[0], 'n,a,c,egf,root_test,integral')
        self.assertEqual(len(lines), 7)

    def test_usage_errors(self):
        self.assertExitCode(2, 'solve', order=0)
        self.assertExitCode(2, 'solve', kind='no-such-kind')

    def test_deterministic(self):
        self.assertEqual(run('solve', order=10), run('solve', order=10))

    def test_out_dir(self):
        run('solve', order=6, out=str(self.tmp))
        data = json.loads((self.tmp / 'series.json').read_text())
        self.assertEqual(data['series']['coeffs'], EXP_INVERSE_13[:7])


class SequenceCommandTests(CommandTestCase):

    def test_rows_and_divergence(self):
        document = json.loads(run('sequence', order=20))
        self.assertEqual(document['rows'][10]['c'], '2938057')
        self.assertEqual(document['rows'][3]['c'], '0')
        self.assertEqual(document['non_integral'], [])
        self.assertEqual([n for n, _ in document['divergence']['samples']], [10, 20])

    def test_both_files(self):
        run('sequence', order=12, out=str(self.tmp))
        frame = pd.read_csv(self.tmp / 'sequence.csv')
        self.assertEqual(len(frame), 13)
        self.assertTrue((self.tmp / 'sequence.json').exists())


class PicardCommandTests(CommandTestCase):

    def test_summary(self):
        summary = json.loads(run('picard', iterations=4, grid=1000))
        self.assertTrue(summary['interleaving_ok'])
        self.assertEqual(len(summary['gaps']), 2)
        self.assertTrue(all(row['ok'] for row in summary['contraction']))
        self.assertEqual(summary['params'], {'iterations': 4, 'xmax': 1.0, 'grid': 1000})

    def test_two_iterates_to_files(self):
        run('picard', iterations=2, grid=100, out=str(self.tmp))
        summary = json.loads((self.tmp / 'summary.json').read_text())
        self.assertEqual(len(summary['gaps']), 1)
        frame = pd.read_csv(self.tmp / 'iterates.csv')
        self.assertEqual(list(frame.columns), ['x', 'f_1', 'f_2'])
        self.assertEqual(len(frame), 101)

    def test_usage_errors(self):
        self.assertExitCode(2, 'picard', iterations=1)
        self.assertExitCode(2, 'picard', xmax=0.0)
        self.assertExitCode(2, 'picard', grid=5)

    def test_unwritable_output(self):
        blocker = self.tmp / 'file'
        blocker.write_text('')
        self.assertExitCode(3, 'picard', iterations=2, grid=50, out=str(blocker / 'sub'))


class RungeKuttaCommandTests(CommandTestCase):

    def test_default_table(self):
        frame = pd.read_csv(io.StringIO(run('rk', format='csv')))
        self.assertEqual(list(frame.columns), ['step', 't', 'v', 'w'])
        self.assertEqual(len(frame), 11)
        self.assertAlmostEqual(frame['v'].iloc[5], 1.125, places=12)
        self.assertAlmostEqual(frame['v'].iloc[10], 2.5, places=12)

    def test_csv_by_default(self):
        self.assertTrue(run('rk').startswith('step,t,v,w\n'))

    def test_json_on_request(self):
        rows = json.loads(run('rk', format='json'))
        self.assertEqual(len(rows), 11)
        self.assertAlmostEqual(rows[-1]['v'], 2.5, delta=1e-12)

    def test_halved_step(self):
        frame = pd.read_csv(io.StringIO(run('rk', step='0.05', nsteps=20)))
        self.assertEqual(len(frame), 21)
        self.assertAlmostEqual(frame['v'].iloc[-1], 2.5, delta=1e-12)

    def test_zero_steps(self):
        frame = pd.read_csv(io.StringIO(run('rk', nsteps=0)))
        self.assertEqual(len(frame), 1)
        self.assertEqual((frame['t'].iloc[0], frame['v'].iloc[0]), (0.0, 0.0))

    def test_plot_file(self):
        run('rk', out=str(self.tmp))
        self.assertEqual(len((self.tmp / 'rk_plot.dat').read_text().splitlines()), 11)
        self.assertTrue((self.tmp / 'rk_table.csv').exists())
        self.assertFalse((self.tmp / 'rk_table.json').exists())

    def test_usage_errors(self):
        self.assertExitCode(2, 'rk', problem='stiff')
        self.assertExitCode(2, 'rk', step='abc')
        self.assertExitCode(2, 'rk', method='rk9')


class PadeCommandTests(CommandTestCase):

    def test_default(self):
        data = json.loads(run('pade'))
        self.assertEqual((data['L'], data['M']), (3, 3))
        self.assertEqual(data['den'][0], '1')
        self.assertEqual(len(data['num']), 4)

    def test_csv(self):
        frame = pd.read_csv(io.StringIO(run('pade', num=1, den=1, format='csv')), dtype=str)
        self.assertEqual(list(frame['num']), ['0', '1'])
        self.assertEqual(list(frame['den']), ['1', '-1/2'])

    def test_degenerate(self):
        self.assertExitCode(2, 'pade', kind='affine-selfcomp', num=0, den=2, order=2)


class VerifyCommandTests(CommandTestCase):

    def corrupt_golden(self, name, edit):
        golden = self.tmp / 'golden'
        shutil.copytree(settings.GOLDEN_DATA_DIR, golden)
        path = golden / name
        data = json.loads(path.read_text())
        edit(data)
        path.write_text(json.dumps(data))
        return golden

    def test_single_suite(self):
        out = run('verify', only='rk')
        self.assertIn('PASS rk: benchmark table', out)
        self.assertNotIn('coefficients', out)

    def test_pade_reports_reference_output(self):
        out = run('verify', only='pade')
        self.assertIn('INFO pade: reported [3/3] output (not reproduced', out)

    def test_corrupted_coefficient(self):
        def edit(data):
            data['coeffs'][10] = '2938058/3628800'
        with override_settings(GOLDEN_DATA_DIR=self.corrupt_golden('exp_inverse_coefficients.json', edit)):
            error = self.assertExitCode(1, 'verify', only='coefficients')
        self.assertIn('coefficients: exp-inverse coefficients', str(error))

    def test_malformed_golden(self):
        def edit(data):
            data['rows'] = 'nonsense'
        with override_settings(GOLDEN_DATA_DIR=self.corrupt_golden('rk_table.json', edit)):
            self.assertExitCode(1, 'verify', only='rk')

    def test_missing_golden(self):
        with override_settings(GOLDEN_DATA_DIR=self.tmp / 'absent'):
            self.assertExitCode(3, 'verify', only='inverse')

    def test_unknown_suite(self):
        self.assertExitCode(2, 'verify', only='everything')

    def test_fixed_order(self):
        names = [(r.suite, r.name) for r in run_checks('residual')]
        self.assertEqual(names, [
            ('residual', 'exp-inverse residual'),
            ('residual', 'exp-selfcomp residual'),
            ('residual', 'affine-selfcomp residual'),
        ])

    def test_conjugacy_suite(self):
        results = run_checks('conjugacy')
        self.assertEqual([r.name for r in results], [
            'g(x) = -f^-1(-x)', 'exp(g(-x)) EGF terms', "1 / exp(g(-x)) = f'",
        ])
        self.assertTrue(all(r.ok for r in results), results)

    def test_full_run(self):
        out = run('verify')
        self.assertIn('checks passed', out)
        self.assertNotIn('FAIL', out)
