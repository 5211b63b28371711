"""
Shared plumbing for the scene commands.

Exit codes: 0 success, 1 validation or domain error, 2 unreadable scene,
3 not perfect, 4 hypotheses not verifiable.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from gradalg.exceptions import GradedAlgebraError, SceneFormatError
from scenes.parsers import load_scene
from scenes.serializers import canonical_json

logger = logging.getLogger(__name__)

EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_NOT_PERFECT = 3
EXIT_NOT_VERIFIABLE = 4


class SceneCommand(BaseCommand):
    requires_system_checks = []
    takes_scene = True

    def add_arguments(self, parser):
        if self.takes_scene:
            parser.add_argument('scene', help='Path to a JSON scene file')
        parser.add_argument('--pretty', action='store_true', help='Print a text view instead of JSON')

    def load(self, path):
        return self.guarded(load_scene, path)

    def guarded(self, fn, *args, **kwargs):
        """Run fn, turning domain errors into exit codes."""
        try:
            return fn(*args, **kwargs)
        except SceneFormatError as exc:
            logger.error(f"{type(exc).__name__}: {exc}")
            raise CommandError(f"{type(exc).__name__}: {exc}", returncode=EXIT_PARSE)
        except GradedAlgebraError as exc:
            logger.error(f"{type(exc).__name__}: {exc}")
            raise CommandError(f"{type(exc).__name__}: {exc}", returncode=EXIT_INVALID)

    def emit(self, payload, lines, options):
        if options['pretty']:
            self.stdout.write("\n".join(lines))
        else:
            self.stdout.write(canonical_json(payload))

    def fail(self, message, returncode):
        raise CommandError(message, returncode=returncode)
