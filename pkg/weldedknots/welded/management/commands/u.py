from django.core.management.base import CommandError

from ..base import NOT_FOUND, GaussCommand, add_limit_arguments, limits_from_options
from ...errors import LimitsExceeded
from ...reports import u_report


class Command(GaussCommand):
    help = 'Upper bound on the unknotting number: the smallest certified set of crossing changes'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_limit_arguments(parser)

    def handle(self, *args, **options):
        G = self.parse(options['code'])
        try:
            report = u_report(G, limits_from_options(options))
        except LimitsExceeded as e:
            raise CommandError(str(e), returncode=NOT_FOUND)
        self.stdout.write(report.text)
