"""
Management command to check a scene against the category, algebra and module axioms.
"""

from graded.validators import validate_algebra, validate_module
from scenes.management.base import EXIT_INVALID, SceneCommand
from scenes.serializers import report_lines


class Command(SceneCommand):
    help = 'Validate the category, algebra and modules of a scene file'

    def handle(self, *args, **options):
        scene = self.load(options['scene'])
        reports = [validate_algebra(scene.algebra)]
        reports.extend(validate_module(m) for m in scene.modules.values())
        payload = {
            'scene': scene.source,
            'valid': all(r.is_valid for r in reports),
            'reports': [r.as_dict() for r in reports],
        }
        self.emit(payload, report_lines(payload['reports']), options)
        if not payload['valid']:
            failed = sum(len(r.errors) for r in reports)
            self.fail(f"{failed} axiom violation(s) in {scene.source}", EXIT_INVALID)
