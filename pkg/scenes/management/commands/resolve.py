"""
Management command to compute a minimal projective resolution and its Betti table.
"""

from covers.projective import projective_catalogue
from covers.resolutions import minimal_resolution, verify_resolution
from scenes.management.base import EXIT_INVALID, EXIT_PARSE, SceneCommand
from scenes.serializers import betti_lines, resolution_payload


class Command(SceneCommand):
    help = 'Minimal projective resolution of a scene module up to a given length'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--module', required=True, help='Name of the module to resolve')
        parser.add_argument('--length', type=int, default=3, help='Highest homological degree (default 3)')

    def handle(self, *args, **options):
        if options['length'] < 0:
            self.fail("--length must be non-negative", EXIT_PARSE)
        scene = self.load(options['scene'])
        module = self.guarded(scene.module, options['module'])
        catalogue = self.guarded(projective_catalogue, scene.algebra)
        resolution = self.guarded(minimal_resolution, module, options['length'], catalogue)
        certificate = verify_resolution(resolution)
        payload = resolution_payload(resolution, certificate, catalogue)
        self.emit(payload, betti_lines(payload), options)
        if not certificate.passed:
            self.fail(
                f"resolution failed {certificate.failure} at stage {certificate.stage}", EXIT_INVALID
            )
