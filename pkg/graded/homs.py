"""
Hom spaces, endomorphism algebras and divisor spaces.
"""

import logging

from exactfield.algebras import FiniteAlgebra
from exactfield.matrices import Matrix, kernel_basis, vec_axpy
from gradalg.exceptions import StructureError

from .models import DivisorSpace, GradedHom

logger = logging.getLogger(__name__)


def _unknown_layout(source, target):
    """Offsets of the f_γ blocks inside the flattened unknown vector."""
    layout, pos = {}, 0
    for gamma in source.category.support:
        rows, cols = target.dim(gamma), source.dim(gamma)
        if rows and cols:
            layout[gamma] = (pos, rows, cols)
            pos += rows * cols
    return layout, pos


def equivariance_equations(source, target):
    """
    The linear system f_{αβ}·r^M_{α,β,i} − r^N_{α,β,i}·f_β = 0.

    Returns:
        Matrix whose null space is Hom(M, N) in the GradedHom.as_vector layout
    """
    if source.algebra is not target.algebra:
        raise StructureError("modules over different algebras", code="algebra_mismatch")
    algebra = source.algebra
    f = algebra.field
    c = algebra.category
    layout, nvars = _unknown_layout(source, target)
    rows = []
    pairs = sorted(set(source.action) | set(target.action), key=lambda p: (c.support.index(p[0]), c.support.index(p[1])))
    for alpha, beta in pairs:
        gamma = c.compose_in_support(alpha, beta)
        for i in range(algebra.dim(alpha)):
            rm = source.act(alpha, beta, i)
            rn = target.act(alpha, beta, i)
            for r in range(target.dim(gamma)):
                for col in range(source.dim(beta)):
                    eq = [f.zero] * nvars
                    # (f_γ · r^M)[r][col]
                    if rm is not None and gamma in layout:
                        pos, _, ncols = layout[gamma]
                        for k in range(source.dim(gamma)):
                            coef = rm.rows[k][col]
                            if coef != 0:
                                eq[pos + r * ncols + k] = f.add(eq[pos + r * ncols + k], coef)
                    # − (r^N · f_β)[r][col]
                    if rn is not None and beta in layout:
                        pos, _, ncols = layout[beta]
                        for k in range(target.dim(beta)):
                            coef = rn.rows[r][k]
                            if coef != 0:
                                eq[pos + k * ncols + col] = f.sub(eq[pos + k * ncols + col], coef)
                    if any(x != 0 for x in eq):
                        rows.append(tuple(eq))
    return Matrix(f, tuple(rows), nvars)


def hom_space(source, target):
    """
    Basis of Hom_A(M, N).

    Returns:
        list of GradedHom, one per free variable of the equivariance system
    """
    system = equivariance_equations(source, target)
    basis = [GradedHom.from_vector(source, target, row) for row in kernel_basis(system).rows]
    logger.debug(f"Hom({source.name}, {target.name}) has dimension {len(basis)}")
    return basis


def end_algebra(module, basis=None):
    """
    End_A(M) as a FiniteAlgebra with product x·y = x∘y.

    Returns:
        (FiniteAlgebra, list of GradedHom basis elements)
    """
    basis = hom_space(module, module) if basis is None else basis
    f = module.field

    def compose(x, y):
        return GradedHom.from_vector(module, module, x).compose(GradedHom.from_vector(module, module, y)).as_vector()

    vectors = [h.as_vector() for h in basis]
    unit = module.identity().as_vector()
    if not vectors:
        return FiniteAlgebra(f, 0, (), ()), basis
    algebra = FiniteAlgebra.from_basis(f, vectors, compose, unit, labels=tuple(f"h{i}" for i in range(len(basis))))
    return algebra, basis


def divisor_space(algebra, gamma, beta):
    """
    A(γ:β) = ⊕_{αβ=γ} A_α, with its ring structure when β = γ.

    In the ring A(γ:γ), x ∈ A_α times y ∈ A_α' is the algebra product in
    A_{αα'}, and (αα')γ = γ keeps it inside the divisor space. The unit is
    the local unit at the target of γ.

    Raises:
        StructureError: If γ or β is not in the support
    """
    c = algebra.category
    c.arrow(gamma)
    c.arrow(beta)
    summands = tuple((alpha, algebra.dim(alpha)) for alpha in c.left_factors(gamma, beta) if algebra.dim(alpha))
    space = DivisorSpace(gamma, beta, summands)
    if gamma != beta:
        return space
    index = space.basis_index()
    position = {key: n for n, key in enumerate(index)}
    dim = len(index)
    f = algebra.field
    products = {}
    for n1, (alpha, i) in enumerate(index):
        for n2, (alpha2, j) in enumerate(index):
            product = algebra.basis_product(alpha, i, alpha2, j)
            if product is None:
                continue
            composite, coords = product
            out = [f.zero] * dim
            for r, value in enumerate(coords):
                if value != 0:
                    if (composite, r) not in position:
                        raise StructureError(
                            f"product of A_{alpha} and A_{alpha2} leaves A({gamma}:{gamma})", code="divisor_not_closed"
                        )
                    out[position[(composite, r)]] = value
            products[(n1, n2)] = out
    target = c.target(gamma)
    ident = c.identity(target)
    unit = [f.zero] * dim
    for i, value in enumerate(algebra.unit(target)):
        if value != 0:
            unit[position[(ident, i)]] = value
    labels = [f"{alpha}:{algebra.basis_labels(alpha)[i]}" for alpha, i in index]
    ring = FiniteAlgebra.from_products(f, dim, products, unit, labels)
    return DivisorSpace(gamma, beta, summands, ring)


def divisor_element(space, coords):
    """Split coordinates of A(γ:β) into {α: coordinates in A_α}."""
    out, pos = {}, 0
    for alpha, d in space.summands:
        out[alpha] = tuple(coords[pos:pos + d])
        pos += d
    return out


def endomorphism_from(module, basis, coords):
    """Σ coords[i]·basis[i] as an endomorphism of `module`."""
    f = module.field
    out = [f.zero] * len(module.identity().as_vector())
    for c, h in zip(coords, basis):
        if c != 0:
            out = list(vec_axpy(f, c, h.as_vector(), out))
    return GradedHom.from_vector(module, module, tuple(out))
