"""
Management command to compute Hom(M, N) between two scene modules.
"""

from graded.homs import hom_space
from scenes.management.base import EXIT_INVALID, SceneCommand
from scenes.serializers import hom_basis, hom_lines


class Command(SceneCommand):
    help = 'Dimension and basis of Hom(M, N); checks dim Hom(A[γ], N) = dim N_γ for projective sources'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--source', required=True, help='Name of M')
        parser.add_argument('--target', required=True, help='Name of N')

    def handle(self, *args, **options):
        scene = self.load(options['scene'])
        source = self.guarded(scene.module, options['source'])
        target = self.guarded(scene.module, options['target'])
        homs = self.guarded(hom_space, source, target)
        payload = {
            'source': options['source'],
            'target': options['target'],
            'dim': len(homs),
            'basis': hom_basis(scene.field, homs),
        }
        gamma = scene.projective_arrow(options['source'])
        if gamma is not None:
            expected = target.dim(gamma)
            payload['adjunction'] = {'arrow': gamma, 'expected': expected, 'holds': expected == len(homs)}
        self.emit(payload, hom_lines(payload), options)
        if 'adjunction' in payload and not payload['adjunction']['holds']:
            self.fail(f"dim Hom disagrees with dim {options['target']}_{gamma}", EXIT_INVALID)
