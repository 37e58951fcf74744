from django.core.management.base import BaseCommand, CommandError

from cli.checks import run_checks
from cli.forms import VerifyConfigForm, form_errors
from cli.management.base import EXIT_IO, EXIT_USAGE, EXIT_VERIFY_FAILED


class Command(BaseCommand):
    help = 'Run the consistency suites; exits non-zero if any check fails.'

    def add_arguments(self, parser):
        parser.add_argument('--only', metavar='NAME', help='run a single suite')

    def handle(self, *args, **options):
        form = VerifyConfigForm(data={'only': options.get('only')})
        if not form.is_valid():
            raise CommandError(form_errors(form), returncode=EXIT_USAGE)
        try:
            results = run_checks(form.cleaned_data['only'] or None)
        except OSError as exc:
            raise CommandError(f"cannot read golden data: {exc}", returncode=EXIT_IO) from exc

        for result in results:
            if result.informational:
                verdict = self.style.WARNING('INFO')
            elif result.ok:
                verdict = self.style.SUCCESS('PASS')
            else:
                verdict = self.style.ERROR('FAIL')
            self.stdout.write(f"{verdict} {result.suite}: {result.name} ({result.detail})")

        failed = [f"{r.suite}: {r.name}" for r in results if not r.ok]
        if failed:
            raise CommandError(
                f"{len(failed)} check(s) failed: {'; '.join(failed)}", returncode=EXIT_VERIFY_FAILED
            )
        self.stdout.write(self.style.SUCCESS(f"all {len(results)} checks passed"))
