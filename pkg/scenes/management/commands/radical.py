"""
Management command to compute Jacobson radicals.
"""

from graded.homs import divisor_space
from graded.total import total_hom_algebra
from radical.algorithms import algebra_radical
from radical.homs import hom_radical, module_radical
from scenes.management.base import EXIT_PARSE, SceneCommand
from scenes.serializers import radical_lines


class Command(SceneCommand):
    help = 'Radical of the algebra, of a hom space (hom:M,N) or of a module (module:M)'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--target',
            default='algebra',
            help="'algebra', 'hom:M,N' or 'module:M'",
        )

    def handle(self, *args, **options):
        scene = self.load(options['scene'])
        target = options['target']
        if target == 'algebra':
            payload = self.guarded(self.algebra_payload, scene.algebra)
            lines = radical_lines(payload)
        elif target.startswith('hom:') and target.count(',') == 1:
            source, dest = target[len('hom:'):].split(',')
            radical = self.guarded(
                lambda: hom_radical(scene.module(source.strip()), scene.module(dest.strip()))
            )
            payload = radical.as_dict()
            lines = [f"J({payload['source']}, {payload['target']}): dim {payload['dim']} of {payload['hom_dim']}"]
        elif target.startswith('module:'):
            name = target[len('module:'):].strip()
            module = self.guarded(scene.module, name)
            sub = self.guarded(module_radical, module)
            payload = {
                'module': name,
                'dim': sub.total_dim,
                'ambient_dim': module.total_dim,
                'dims': {g: sub.dim(g) for g in module.support},
                'basis': sub.describe(),
            }
            lines = [f"rad {name}: dim {sub.total_dim} of {module.total_dim}"]
            lines.extend(f"  {g}: {d}" for g, d in payload['dims'].items())
        else:
            self.fail(f"unknown --target {target!r}", EXIT_PARSE)
        self.emit(payload, lines, options)

    @staticmethod
    def algebra_payload(algebra):
        """Radical of the total hom algebra E and of every divisor ring A(γ:γ)."""
        payload = {'E': algebra_radical(total_hom_algebra(algebra).algebra).as_dict()}
        for gamma in algebra.category.support:
            ring = divisor_space(algebra, gamma, gamma).ring
            if ring.dim:
                payload[f"A({gamma}:{gamma})"] = algebra_radical(ring).as_dict()
        return payload
