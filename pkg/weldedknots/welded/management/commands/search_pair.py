import os

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ..base import NOT_FOUND, dump_pd
from ...search import SearchLimits, find_single_move_trivial_pair

MOVES = {'delta': 'Delta', 'sharp': 'Sharp'}


class Command(BaseCommand):
    help = 'Find two diagrams of the trivial welded knot related by a single Delta or sharp move'

    def add_arguments(self, parser):
        parser.add_argument('--move', required=True, choices=sorted(MOVES))
        parser.add_argument('--max-crossings', type=int, default=None)
        parser.add_argument('--max-states', type=int, default=None, help='number of labelled diagrams examined')
        parser.add_argument('--trivial-states', type=int, default=None)
        parser.add_argument('--trivial-depth', type=int, default=None)
        parser.add_argument('--output-dir', default=None, help='also write before.json and after.json here')

    def handle(self, *args, **options):
        config = settings.APP_CONFIG
        limits = SearchLimits(max_states=options['max_states'] or config.max_states)
        trivial_limits = SearchLimits(max_states=options['trivial_states'] or config.pair_trivial_states,
                                      max_depth=options['trivial_depth'] or config.pair_trivial_depth,
                                      chord_margin=config.chord_margin)
        pair = find_single_move_trivial_pair(MOVES[options['move']], limits,
                                             max_crossings=options['max_crossings'] or config.pair_max_crossings,
                                             trivial_limits=trivial_limits)
        if pair is None:
            self.stdout.write('UNKNOWN limits: {} trivial: {}'.format(limits, trivial_limits))
            raise CommandError('no pair found', returncode=NOT_FOUND)
        self.stdout.write('move: {}'.format(pair.move))
        self.stdout.write('before: {} TRIVIAL'.format(dump_pd(pair.before)))
        self.stdout.write('after: {} TRIVIAL'.format(dump_pd(pair.after)))
        if options['output_dir']:
            os.makedirs(options['output_dir'], exist_ok=True)
            for name, P in (('before', pair.before), ('after', pair.after)):
                with open(os.path.join(options['output_dir'], name + '.json'), 'w') as handle:
                    handle.write(dump_pd(P) + '\n')
