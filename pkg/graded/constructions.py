"""
Direct sums and generated submodules.
"""

from exactfield.matrices import Matrix, RowSpace
from gradalg.exceptions import StructureError

from .models import GradedHom, GradedModule, GradedSubmodule


def _block_diagonal(field, blocks, rows, cols):
    out = [[field.zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for block, (nr, nc) in blocks:
        if block is not None:
            for r in range(nr):
                for c in range(nc):
                    out[r0 + r][c0 + c] = block.rows[r][c]
        r0 += nr
        c0 += nc
    return Matrix(field, tuple(tuple(row) for row in out), cols)


def direct_sum(modules, name=None):
    """
    M_1 ⊕ … ⊕ M_n with its canonical inclusions and projections.

    Returns:
        (GradedModule, list of inclusion homs, list of projection homs)
    """
    if not modules:
        raise StructureError("direct sum of no modules", code="empty_sum")
    algebra = modules[0].algebra
    if any(m.algebra is not algebra for m in modules):
        raise StructureError("modules over different algebras", code="algebra_mismatch")
    f = algebra.field
    support = algebra.category.support
    dims = {g: sum(m.dim(g) for m in modules) for g in support}
    keys = sorted({k for m in modules for k in m.action}, key=lambda p: (support.index(p[0]), support.index(p[1])))
    action = {}
    for alpha, beta in keys:
        gamma = algebra.category.compose_in_support(alpha, beta)
        if not dims.get(gamma) or not dims.get(beta):
            continue
        mats = []
        for i in range(algebra.dim(alpha)):
            blocks = [(m.act(alpha, beta, i), (m.dim(gamma), m.dim(beta))) for m in modules]
            mats.append(_block_diagonal(f, blocks, dims[gamma], dims[beta]))
        action[(alpha, beta)] = tuple(mats)
    total = GradedModule(algebra, dims, action, name=name or " ⊕ ".join(m.name for m in modules))
    inclusions, projections = [], []
    offsets = {g: 0 for g in support}
    for m in modules:
        inc, proj = {}, {}
        for g in m.support:
            n, d, off = dims[g], m.dim(g), offsets[g]
            inc[g] = Matrix(
                f, tuple(tuple(f.one if r == off + c else f.zero for c in range(d)) for r in range(n)), d
            )
            proj[g] = inc[g].transpose()
            offsets[g] += d
        inclusions.append(GradedHom(m, total, inc))
        projections.append(GradedHom(total, m, proj))
    return total, inclusions, projections


def direct_sum_hom(homs, source=None, target=None):
    """⊕ f_i: ⊕ M_i -> ⊕ N_i, block diagonal in every degree."""
    if source is None:
        source = direct_sum([h.source for h in homs])[0]
    if target is None:
        target = direct_sum([h.target for h in homs])[0]
    f = source.field
    maps = {}
    for g in source.support:
        if not target.dim(g):
            continue
        blocks = [(h.maps.get(g), (h.target.dim(g), h.source.dim(g))) for h in homs]
        maps[g] = _block_diagonal(f, blocks, target.dim(g), source.dim(g))
    return GradedHom(source, target, maps)


def sum_of_homs_from(components, source, target):
    """
    The hom ⊕_i M_i -> N restricting to components[i] on the i-th summand.
    """
    f = source.field
    maps = {}
    for g in source.support:
        if not target.dim(g):
            continue
        cols = []
        for h in components:
            if h.source.dim(g):
                cols.extend(h.at(g).transpose().rows)
        maps[g] = Matrix.from_columns(f, cols, target.dim(g))
    return GradedHom(source, target, maps)


def generated_submodule(module, elements):
    """
    The smallest submodule containing the homogeneous elements.

    Args:
        elements: Iterable of (arrow, vector in M_arrow)
    """
    algebra = module.algebra
    c = algebra.category
    f = module.field
    spaces = {g: RowSpace(f, module.dim(g)) for g in module.support}
    for gamma, v in elements:
        if gamma not in spaces:
            raise StructureError(f"element at {gamma} where the module is zero", code="zero_component")
        spaces[gamma] = RowSpace(f, module.dim(gamma), spaces[gamma].basis + (tuple(v),))
        for alpha in algebra.support:
            target = c.compose_in_support(alpha, gamma)
            if target is None or target not in spaces:
                continue
            images = []
            for i in range(algebra.dim(alpha)):
                r = module.act_vector(alpha, i, gamma, v)
                if r is not None:
                    images.append(r[1])
            spaces[target] = RowSpace(f, module.dim(target), spaces[target].basis + tuple(images))
    return GradedSubmodule(module, spaces)


def corestrict(hom, submodule, module):
    """
    Factor `hom` through a submodule of its target that contains its image.

    Args:
        submodule: GradedSubmodule of hom.target
        module: submodule.as_module()[0]

    Returns:
        GradedHom hom.source -> module
    """
    f = hom.field
    maps = {}
    for g in hom.source.support:
        space = submodule.space(g)
        if not space.dim:
            continue
        cols = []
        for j in range(hom.source.dim(g)):
            w = hom.at(g).column(j)
            if not space.contains(w):
                raise StructureError(f"image at {g} leaves the submodule", code="not_in_submodule")
            cols.append(space.coordinates(w))
        maps[g] = Matrix.from_columns(f, cols, space.dim)
    return GradedHom(hom.source, module, maps)
