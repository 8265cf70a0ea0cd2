from ..base import GaussCommand
from ...reports import reduce_report


class Command(GaussCommand):
    help = 'Remove chords with a head-free arc until none is left and print the result'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--emit-trace', action='store_true', help='print the W and C1 moves used')

    def handle(self, *args, **options):
        G = self.parse(options['code'])
        self.stdout.write(reduce_report(G, emit_trace=options['emit_trace']).text)
