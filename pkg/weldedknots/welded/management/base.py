import json

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ..errors import GaussCodeError, InvalidPD
from ..gauss import parse_gauss_code
from ..planar import PlanarDiagram, check_pd, pd_from_json
from ..search import SearchLimits

INPUT_ERROR = 2
PRECONDITION = 3
NOT_FOUND = 1


def add_limit_arguments(parser):
    parser.add_argument('--max-chords', type=int, default=None,
                        help='largest chord count explored (default: input chord count plus the margin)')
    parser.add_argument('--max-states', type=int, default=None)
    parser.add_argument('--max-depth', type=int, default=None)


def limits_from_options(options) -> SearchLimits:
    config = settings.APP_CONFIG
    try:
        return SearchLimits(max_chords=options.get('max_chords'),
                            max_states=options.get('max_states') or config.max_states,
                            max_depth=options.get('max_depth') or config.max_depth,
                            chord_margin=config.chord_margin)
    except ValueError as e:
        raise CommandError(str(e), returncode=INPUT_ERROR)


def read_pd(path: str) -> PlanarDiagram:
    try:
        with open(path) as handle:
            data = json.load(handle)
        return check_pd(pd_from_json(data))
    except (OSError, ValueError) as e:
        if isinstance(e, InvalidPD):
            raise CommandError(str(e), returncode=INPUT_ERROR)
        raise CommandError("cannot read {}: {}".format(path, e), returncode=INPUT_ERROR)


def dump_pd(P: PlanarDiagram) -> str:
    return json.dumps(P.to_dict(), sort_keys=True)


class GaussCommand(BaseCommand):
    """Command taking one Gauss code argument."""

    def add_arguments(self, parser):
        parser.add_argument('code', help='Gauss code such as "O1+ U2+ O3+ U1+ O2+ U3+"')

    def parse(self, code: str):
        try:
            return parse_gauss_code(code)
        except GaussCodeError as e:
            raise CommandError("{}: {}".format(type(e).__name__, e), returncode=INPUT_ERROR)
