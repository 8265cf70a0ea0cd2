from django.core.management.base import CommandError

from ..base import NOT_FOUND, GaussCommand, add_limit_arguments, limits_from_options
from ...reports import trivial_report


class Command(GaussCommand):
    help = 'Search for a sequence of moves taking the diagram to the empty diagram'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_limit_arguments(parser)

    def handle(self, *args, **options):
        report = trivial_report(self.parse(options['code']), limits_from_options(options))
        self.stdout.write(report.text)
        if not report.success:
            raise CommandError('triviality not certified', returncode=NOT_FOUND)
