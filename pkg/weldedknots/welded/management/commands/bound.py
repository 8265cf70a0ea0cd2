from django.core.management.base import CommandError

from ..base import PRECONDITION, GaussCommand
from ...errors import EmptyDiagram
from ...reports import bound_report


class Command(GaussCommand):
    help = 'Print the complementary crossing-change sets giving u <= (n - 1) / 2'

    def handle(self, *args, **options):
        G = self.parse(options['code'])
        try:
            report = bound_report(G)
        except EmptyDiagram as e:
            raise CommandError(str(e), returncode=PRECONDITION)
        self.stdout.write(report.text)
