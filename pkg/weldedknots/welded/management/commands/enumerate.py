from django.core.management.base import BaseCommand, CommandError

from ..base import INPUT_ERROR
from ...gauss import serialize
from ...search import enumerate_gauss


class Command(BaseCommand):
    help = 'List every labelled Gauss diagram with the given number of chords'

    def add_arguments(self, parser):
        parser.add_argument('--chords', type=int, required=True)
        parser.add_argument('--dedup', action='store_true', help='one diagram per canonical code')

    def handle(self, *args, **options):
        if options['chords'] < 0:
            raise CommandError('--chords must not be negative', returncode=INPUT_ERROR)
        for G in enumerate_gauss(options['chords'], dedup=options['dedup']):
            self.stdout.write(serialize(G))
