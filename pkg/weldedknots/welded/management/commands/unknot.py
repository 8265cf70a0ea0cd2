from ..base import GaussCommand
from ...reports import unknot_report


class Command(GaussCommand):
    help = 'Make the diagram descending with the fewest crossing changes and reduce it to the empty diagram'

    def handle(self, *args, **options):
        self.stdout.write(unknot_report(self.parse(options['code'])).text)
