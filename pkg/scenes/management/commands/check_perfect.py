"""
Management command to decide whether the graded module category is perfect.
"""

from perfectness.checks import check_perfect, check_semiperfect, t_nilpotency_witness
from perfectness.models import Verdict
from perfectness.sampling import cross_validate_perfectness
from scenes.management.base import EXIT_INVALID, EXIT_NOT_PERFECT, EXIT_NOT_VERIFIABLE, SceneCommand
from scenes.serializers import verdict_lines

EXIT_CODES = {
    Verdict.PERFECT: 0,
    Verdict.SEMIPERFECT: 0,
    Verdict.NOT_PERFECT: EXIT_NOT_PERFECT,
    Verdict.NOT_SEMIPERFECT: EXIT_NOT_PERFECT,
    Verdict.NOT_VERIFIABLE: EXIT_NOT_VERIFIABLE,
}


class Command(SceneCommand):
    help = 'Perfectness verdict with per-arrow certificates'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--semiperfect', action='store_true', help='Only decide semiperfectness')
        parser.add_argument(
            '--cross-validate', action='store_true', help='Build and verify covers of sample modules'
        )
        parser.add_argument(
            '--witness', action='store_true', help='Include a maximal radical chain of the total hom algebra'
        )

    def handle(self, *args, **options):
        scene = self.load(options['scene'])
        algebra = scene.algebra
        check = check_semiperfect if options['semiperfect'] else check_perfect
        verdict = self.guarded(check, algebra)
        payload = verdict.as_dict()
        lines = verdict_lines(payload)
        if options['witness']:
            witness = self.guarded(t_nilpotency_witness, algebra)
            payload['t_nilpotency'] = witness.as_dict(algebra.field)
            lines.append(f"J(E) nilpotency index: {witness.index}")
        if options['cross_validate'] and not options['semiperfect']:
            report = cross_validate_perfectness(algebra, verdict=verdict)
            payload['cross_validation'] = report.as_dict()
            lines.append(
                f"cross validation: skipped ({report.skipped})" if report.skipped
                else f"cross validation: {len(report.checks)} modules, passed={report.passed}"
            )
        self.emit(payload, lines, options)
        if 'cross_validation' in payload and not payload['cross_validation']['passed'] \
                and payload['cross_validation']['skipped'] is None:
            self.fail("a sample module received no verified cover", EXIT_INVALID)
        code = EXIT_CODES[verdict.verdict]
        if code:
            self.fail(f"{algebra.name}: {verdict.verdict.value}", code)
