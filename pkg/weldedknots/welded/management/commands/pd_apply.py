import json

from django.core.management.base import BaseCommand, CommandError

from ..base import INPUT_ERROR, PRECONDITION, read_pd
from ...errors import ForbiddenMove, InapplicableMove
from ...gauss import canonical_code
from ...pdmoves import BACKWARD, FORWARD, PD_MOVE_KINDS, PDMove, apply_pd_move_with_inverse, find_sites
from ...planar import pd_to_gauss


class Command(BaseCommand):
    help = 'Apply one local move to a planar diagram file and print the result as JSON'

    def add_arguments(self, parser):
        parser.add_argument('file', help='planar diagram in JSON form')
        parser.add_argument('--move', required=True, choices=PD_MOVE_KINDS)
        parser.add_argument('--direction', default=FORWARD, choices=(FORWARD, BACKWARD))
        parser.add_argument('--site', type=int, nargs='*', default=None,
                            help='edge ids naming the site; omit to list the available sites')
        parser.add_argument('--variant', default='')

    def handle(self, *args, **options):
        P = read_pd(options['file'])
        kind, direction = options['move'], options['direction']
        if options['site'] is None:
            for move in find_sites(P, kind, direction):
                self.stdout.write(str(move))
            return
        move = PDMove(kind, direction, tuple(options['site']), options['variant'])
        try:
            applied = apply_pd_move_with_inverse(P, move)
        except ForbiddenMove as e:
            raise CommandError(str(e), returncode=PRECONDITION)
        except InapplicableMove as e:
            raise CommandError(str(e), returncode=INPUT_ERROR)
        result = {'pd': applied.pd.to_dict(),
                  'gauss': canonical_code(pd_to_gauss(applied.pd)),
                  'inverse': str(applied.inverse) if applied.inverse else None}
        self.stdout.write(json.dumps(result, sort_keys=True))
