"""
Management command to enumerate the admissible idempotents of the window scene.
"""

from counterexample.search import brute_force_split_search
from exactfield.fields import Field
from scenes.management.base import EXIT_INVALID, SceneCommand
from scenes.serializers import search_lines


class Command(SceneCommand):
    help = 'Exhaustive idempotent search on the Int window of radius d'
    takes_scene = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--d', type=int, default=1, help='Window radius (default 1)')
        parser.add_argument('--field', type=int, choices=[2, 3], default=2, help='Prime of the base field')

    def handle(self, *args, **options):
        report = self.guarded(brute_force_split_search, options['d'], Field.prime_field(options['field']))
        payload = report.as_dict()
        self.emit(payload, search_lines(payload), options)
        if not report.confirms_descent:
            self.fail(f"descent not confirmed for d={options['d']}", EXIT_INVALID)
        if report.restricts_admissibly is False:
            self.fail(f"an admissible e on radius {options['d']} does not restrict admissibly", EXIT_INVALID)
