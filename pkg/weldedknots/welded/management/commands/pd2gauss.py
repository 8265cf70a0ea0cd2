from django.core.management.base import BaseCommand

from ..base import read_pd
from ...gauss import canonical_code, serialize
from ...planar import pd_to_gauss


class Command(BaseCommand):
    help = 'Print the Gauss code of a planar diagram file'

    def add_arguments(self, parser):
        parser.add_argument('file', help='planar diagram in JSON form')

    def handle(self, *args, **options):
        G = pd_to_gauss(read_pd(options['file']))
        self.stdout.write(serialize(G))
        self.stdout.write('canonical: {}'.format(canonical_code(G)))
