from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from cli.forms import form_errors
from cli.output import emit
from fps.exceptions import SeriesError
from picard.exceptions import GridError
from rungekutta.exceptions import RungeKuttaError

EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


class ConfiguredCommand(BaseCommand):
    """A command whose options are validated by ``form_class`` before ``run`` sees them.

    ``defaults`` maps option names to settings read when the option is omitted.
    ``default_format`` is the --format used when none is given.
    ``run`` returns a list of (file name, text) artifacts.
    """
    form_class = None
    defaults = {}
    default_format = 'json'

    def add_output_arguments(self, parser):
        parser.add_argument('--format', choices=['json', 'csv'], default=self.default_format)
        parser.add_argument('--out', metavar='DIR', default=None,
                            help='write every output file into DIR instead of printing the main one')

    def config(self, options):
        data = {}
        for name in self.form_class.base_fields:
            value = options.get(name)
            if value is None and name in self.defaults:
                value = getattr(settings, self.defaults[name])
            data[name] = value
        form = self.form_class(data=data)
        if not form.is_valid():
            raise CommandError(form_errors(form), returncode=EXIT_USAGE)
        return form.cleaned_data

    def handle(self, *args, **options):
        config = self.config(options)
        try:
            artifacts = self.run(config)
        except (SeriesError, GridError, RungeKuttaError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
        try:
            written = emit(artifacts, options.get('out'), self.stdout)
        except OSError as exc:
            raise CommandError(f"cannot write output: {exc}", returncode=EXIT_IO) from exc
        for path in written:
            self.stdout.write(self.style.SUCCESS(f"wrote {path}"))

    def run(self, config):
        raise NotImplementedError
