from fractions import Fraction

from django import forms

from funcsolve.equations import Kind
from funcsolve.solvers import STRATEGIES
from rungekutta.tableau import TABLEAUS

KIND_CHOICES = [(k.value, k.label) for k in Kind if k != Kind.GENERAL_SELFCOMP]
FORMAT_CHOICES = [('json', 'JSON'), ('csv', 'CSV')]
PROBLEM_CHOICES = [('v-quadratic', "v'' v' - v' = 0, v(0) = 0, v'(0) = 2")]
SUITE_CHOICES = [
    ('coefficients', 'Coefficient reproduction'),
    ('sequence', 'Integer sequence'),
    ('inverse', 'Inverse series'),
    ('conjugacy', 'Negation conjugacy'),
    ('fixed-point', 'Formal fixed point'),
    ('residual', 'Residuals'),
    ('picard', 'Numerical Picard orbit'),
    ('contraction', 'Contraction inequality'),
    ('rk', 'Runge-Kutta benchmark'),
    ('pade', 'Padé congruence'),
]


class SolveConfigForm(forms.Form):
    """Parameters for `solve` and `sequence`"""
    kind = forms.ChoiceField(choices=KIND_CHOICES)
    order = forms.IntegerField(min_value=1)
    strategy = forms.ChoiceField(choices=[(s, s) for s in STRATEGIES], required=False)
    format = forms.ChoiceField(choices=FORMAT_CHOICES)

    def clean_strategy(self):
        return self.cleaned_data.get('strategy') or STRATEGIES[0]


class PicardConfigForm(forms.Form):
    iterations = forms.IntegerField(min_value=2)
    xmax = forms.FloatField()
    grid = forms.IntegerField(min_value=10)

    def clean_xmax(self):
        xmax = self.cleaned_data['xmax']
        if not xmax > 0:
            raise forms.ValidationError('xmax must be positive.')
        return xmax


class RungeKuttaConfigForm(forms.Form):
    problem = forms.ChoiceField(choices=PROBLEM_CHOICES)
    method = forms.ChoiceField(choices=[(name, name) for name in TABLEAUS])
    step = forms.CharField()
    nsteps = forms.IntegerField(min_value=0)
    format = forms.ChoiceField(choices=FORMAT_CHOICES)

    def clean_step(self):
        """Accepts "0.1" or "1/10"; keeps the value exact."""
        text = self.cleaned_data['step'].strip()
        try:
            step = Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise forms.ValidationError(f'"{text}" is not a number.')
        if step <= 0:
            raise forms.ValidationError('Step must be positive.')
        return step


class PadeConfigForm(forms.Form):
    kind = forms.ChoiceField(choices=KIND_CHOICES)
    num = forms.IntegerField(min_value=0)
    den = forms.IntegerField(min_value=0)
    order = forms.IntegerField(min_value=1, required=False)
    format = forms.ChoiceField(choices=FORMAT_CHOICES)

    def clean(self):
        cleaned_data = super().clean()
        num = cleaned_data.get('num')
        den = cleaned_data.get('den')
        if num is not None and den is not None:
            order = cleaned_data.get('order') or max(num + den, 1)
            if order < num + den:
                raise forms.ValidationError(f'[{num}/{den}] needs order at least {num + den}.')
            cleaned_data['order'] = order
        return cleaned_data


class VerifyConfigForm(forms.Form):
    only = forms.ChoiceField(choices=SUITE_CHOICES, required=False)


def form_errors(form):
    """One line per invalid field, in field order."""
    lines = []
    for field, errors in form.errors.items():
        label = 'arguments' if field == '__all__' else f'--{field}'
        lines.append(f"{label}: {' '.join(errors)}")
    return '; '.join(lines)
