"""
A parsed scene file.
"""

from dataclasses import dataclass, field

from gradalg.exceptions import SceneFormatError


@dataclass(frozen=True, eq=False)
class Scene:
    """
    Attributes:
        source: File the scene was read from
        field: Base field
        algebra: GradedAlgebra
        modules: Name -> GradedModule, in file order
        kinds: Name -> the module's shortcut kind and its arguments
    """

    source: str
    field: object
    algebra: object
    modules: dict = field(default_factory=dict)
    kinds: dict = field(default_factory=dict)

    def module(self, name):
        try:
            return self.modules[name]
        except KeyError:
            raise SceneFormatError(
                f"scene {self.source} has no module {name!r}",
                code="unknown_module",
                params={'module': name, 'known': sorted(self.modules)},
            )

    def projective_arrow(self, name):
        """γ when the module was declared as A[γ], else None."""
        kind = self.kinds.get(name, {})
        return kind.get('arrow') if kind.get('kind') == 'projective' else None
