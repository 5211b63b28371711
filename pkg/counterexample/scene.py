"""
The window scene: the polynomial algebra K[a] graded by Int, truncated to
the window {-d, …, 2d}, the module X = ⊕ K·x_k on {-d, …, d}, and the
counit f: F = F_A(X) -> X.

Every equivariant endomorphism e of F is determined by its values on the
generators a_0 ⊗ x_k,

    e(a_0 ⊗ x_k) = Σ_l λ_{k,l} a_{k-l} ⊗ x_l,   max(-d, k - 2d) ≤ l ≤ k,

and on the remaining basis by a_j·e(a_0 ⊗ x_k), clipped at the window.
"""

import logging

from category.builders import GROUP_OBJECT, interval_window
from category.models import Lattice
from exactfield.matrices import Matrix
from graded.functors import counit
from graded.homs import hom_space
from graded.models import GradedAlgebra, GradedHom, GradedModule
from graded.validators import validate_hom
from gradalg.exceptions import NotEquivariant, StructureError, WindowError

from .models import WindowScene

logger = logging.getLogger(__name__)


def build_scene(d, field):
    """
    Args:
        d: Window radius, at least 1
        field: Base field

    Raises:
        WindowError: If d < 1
    """
    if d < 1:
        raise WindowError(f"window radius must be at least 1, got {d}", code="radius_too_small", params={'d': d})
    category = interval_window(Lattice.INT, -d, 2 * d)
    one = (Matrix(field, ((field.one,),), 1),)
    powers = range(0, 2 * d + 1)
    degrees = range(-d, d + 1)
    algebra = GradedAlgebra(
        category,
        field,
        {str(k): 1 for k in powers},
        {(str(k), str(l)): one for k in powers for l in powers if k + l <= 2 * d},
        {GROUP_OBJECT: (field.one,)},
        {str(k): [f"a{k}"] for k in powers},
        name=f"K[a]/(a^{2 * d + 1})",
    )
    module = GradedModule(
        algebra,
        {str(l): 1 for l in degrees},
        {(str(j), str(l)): one for j in powers for l in degrees if j + l <= d},
        name="X",
        labels={str(l): [f"x{l}"] for l in degrees},
    )
    f = counit(module)
    logger.debug(f"window scene d={d} over {field.tag}: dim F = {f.source.total_dim}")
    return WindowScene(d, field, algebra, module, f.source, f)


def endomorphism_from_lambda(scene, coefficients):
    """
    The equivariant endomorphism of F with the given λ.

    Args:
        coefficients: (k, l) -> λ_{k,l}; missing pairs are zero

    Returns:
        GradedHom F -> F
    """
    fld = scene.field
    lam = {key: fld(value) for key, value in coefficients.items()}
    maps = {}
    for n, positions in scene.positions.items():
        size = len(positions)
        cols = []
        for (j, l), _ in sorted(positions.items(), key=lambda item: item[1]):
            col = [fld.zero] * size
            for m in scene.row(l):
                c = lam.get((l, m), fld.zero)
                if c == 0:
                    continue
                target = positions.get((n - m, m))
                if target is not None:
                    col[target] = fld.add(col[target], c)
            cols.append(col)
        maps[str(n)] = Matrix.from_columns(fld, cols, size)
    return GradedHom(scene.free, scene.free, maps)


def lambda_from_endomorphism(scene, e):
    """
    Read λ off the generator columns of an equivariant e.

    Raises:
        NotEquivariant: If e does not commute with the action
    """
    report = validate_hom(e)
    if not report.is_valid:
        raise NotEquivariant(
            f"endomorphism is not equivariant ({len(report.errors)} violations)",
            params={'violations': len(report.errors)},
        )
    lam = {}
    for k in scene.degrees:
        positions = scene.positions[k]
        column = e.at(str(k)).column(positions[(0, k)])
        for l in scene.row(k):
            lam[(k, l)] = column[positions[(k - l, l)]]
    return lam


def equivariant_parameter_count(scene):
    """
    dim Hom_A(F, F), which the λ parametrization must match.

    Raises:
        StructureError: If the dimension differs from the number of λ coefficients
    """
    count = len(hom_space(scene.free, scene.free))
    expected = scene.parameter_count()
    if count != expected:
        logger.error(f"Hom(F, F) has dimension {count}, expected {expected}")
        raise StructureError(
            f"Hom(F, F) has dimension {count} but λ has {expected} coefficients",
            code="parameter_count",
            params={'dim': count, 'expected': expected},
        )
    return count


def restrict_lambda(scene, smaller, coefficients):
    """
    Restrict λ from the window of radius d to the window of radius d − 1.

    The generators a_0 ⊗ x_k with k ≤ d − 2 see the same rows and the same
    idempotency equations as the smaller scene shifted down one degree, so
    λ'_{k,l} = λ_{k-1,l-1}.

    Raises:
        WindowError: If smaller is not the window of radius d − 1 over the same field
    """
    if smaller.d != scene.d - 1 or smaller.field != scene.field:
        raise WindowError(
            f"cannot restrict from radius {scene.d} to radius {smaller.d}",
            code="not_adjacent",
            params={'d': scene.d, 'smaller': smaller.d},
        )
    fld = scene.field
    return {
        (k, l): fld(coefficients.get((k - 1, l - 1), 0))
        for k in smaller.degrees
        for l in smaller.row(k)
    }
