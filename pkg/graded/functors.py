"""
The free functor F_A, its unit and counit.

F_A(V)_γ = ⊕_{αβ=γ} A_α ⊗ V_β. Basis elements of F_A(V)_γ are the tuples
(α, i, β, j) meaning a_i ⊗ v_j with a_i ∈ A_α and v_j ∈ V_β; they are listed
in factorization order, then by i, then by j.
"""

import logging

from exactfield.matrices import Matrix
from gradalg.exceptions import StructureError

from .models import GradedHom, GradedModule, GradedVectorSpace

logger = logging.getLogger(__name__)


def free_basis(algebra, space):
    """
    Basis tuples of F_A(V) per arrow.

    Returns:
        dict Arrow -> list of (α, i, β, j)
    """
    if space.category is not algebra.category and space.category.support != algebra.category.support:
        raise StructureError("graded space lives over another category", code="category_mismatch")
    c = algebra.category
    basis = {}
    for gamma in c.support:
        entries = []
        for alpha, beta in c.factorizations(gamma):
            da, dv = algebra.dim(alpha), space.dim(beta)
            entries.extend((alpha, i, beta, j) for i in range(da) for j in range(dv))
        if entries:
            basis[gamma] = entries
    return basis


def free_module(algebra, space, name=None):
    """
    F_A(V), with A acting on the left tensor factor through μ.
    """
    c = algebra.category
    f = algebra.field
    basis = free_basis(algebra, space)
    index = {g: {t: n for n, t in enumerate(entries)} for g, entries in basis.items()}
    action = {}
    for delta in algebra.support:
        for gamma, entries in basis.items():
            target = c.compose_in_support(delta, gamma)
            if target is None or target not in basis:
                continue
            mats = []
            for k in range(algebra.dim(delta)):
                cols = []
                for alpha, i, beta, j in entries:
                    col = [f.zero] * len(basis[target])
                    product = algebra.basis_product(delta, k, alpha, i)
                    if product is not None:
                        composite, coords = product
                        for r, value in enumerate(coords):
                            if value != 0:
                                col[index[target][(composite, r, beta, j)]] = value
                    cols.append(col)
                mats.append(Matrix.from_columns(f, cols, len(basis[target])))
            action[(delta, gamma)] = tuple(mats)
    labels = {
        g: [f"{algebra.basis_labels(a)[i]}⊗{_space_label(space, b, j)}" for a, i, b, j in entries]
        for g, entries in basis.items()
    }
    dims = {g: len(entries) for g, entries in basis.items()}
    module = GradedModule(algebra, dims, action, name=name or "F(V)", labels=labels)
    logger.debug(f"free module {module.name} with total dimension {module.total_dim}")
    return module


def _space_label(space, beta, j):
    labels = space.labels.get(beta)
    return labels[j] if labels else f"{beta}#{j}"


def unit_section(algebra, space, beta, j):
    """
    η(v_j) = e_t ⊗ v_j in F_A(V)_β, where t is the target of β.
    """
    c = algebra.category
    basis = free_basis(algebra, space)[beta]
    ident = c.identity(c.target(beta))
    out = [algebra.field.zero] * len(basis)
    for i, value in enumerate(algebra.unit(c.target(beta))):
        if value != 0:
            out[basis.index((ident, i, beta, j))] = value
    return tuple(out)


def generator(algebra, gamma):
    """The generator e_t ⊗ 1 of A[γ], as a vector in A[γ]_γ."""
    return unit_section(algebra, GradedVectorSpace.concentrated(algebra.category, gamma), gamma, 0)


def counit(module):
    """
    ε: F_A(U(M)) -> M, a_i ⊗ m_j ↦ a_i·m_j.

    Returns:
        GradedHom from the free module on the underlying space of M
    """
    algebra = module.algebra
    f = algebra.field
    free = free_module(algebra, module.underlying(), name=f"F({module.name})")
    basis = free_basis(algebra, module.underlying())
    maps = {}
    for gamma, entries in basis.items():
        if not module.dim(gamma):
            continue
        cols = []
        for alpha, i, beta, j in entries:
            mat = module.act(alpha, beta, i)
            cols.append(mat.column(j) if mat is not None else module.zero_vector(gamma))
        maps[gamma] = Matrix.from_columns(f, cols, module.dim(gamma))
    return GradedHom(free, module, maps)


def hom_from_generator(projective_gamma, gamma, module, m):
    """
    The homomorphism A[γ] -> M sending the generator to m ∈ M_γ.

    Basis element a_i ⊗ 1 of A[γ]_δ (with αγ = δ) goes to a_i·m.
    """
    algebra = module.algebra
    f = algebra.field
    space = GradedVectorSpace.concentrated(algebra.category, gamma)
    basis = free_basis(algebra, space)
    maps = {}
    for delta, entries in basis.items():
        if not module.dim(delta):
            continue
        cols = []
        for alpha, i, _, _ in entries:
            product = module.act_vector(alpha, i, gamma, m)
            cols.append(product[1] if product is not None else module.zero_vector(delta))
        maps[delta] = Matrix.from_columns(f, cols, module.dim(delta))
    return GradedHom(projective_gamma, module, maps)


def right_multiplication(algebra, gamma, delta, element):
    """
    ρ(x): A[γ] -> A[δ] for x ∈ A(γ:δ), given as {α: coordinates in A_α}.

    a ⊗ g_γ ↦ a·x ⊗ g_δ. ρ(xy) = ρ(y)∘ρ(x), so End(A[γ]) ≅ A(γ:γ)^op.
    """
    c = algebra.category
    f = algebra.field
    source = algebra.projective(gamma)
    target = algebra.projective(delta)
    src_basis = free_basis(algebra, GradedVectorSpace.concentrated(c, gamma))
    dst_basis = free_basis(algebra, GradedVectorSpace.concentrated(c, delta))
    dst_index = {g: {(a, i): n for n, (a, i, _, _) in enumerate(entries)} for g, entries in dst_basis.items()}
    maps = {}
    for eps, entries in src_basis.items():
        if eps not in dst_basis:
            continue
        cols = []
        for beta, i, _, _ in entries:
            col = [f.zero] * len(dst_basis[eps])
            for alpha, coords in element.items():
                for k, value in enumerate(coords):
                    if value == 0:
                        continue
                    product = algebra.basis_product(beta, i, alpha, k)
                    if product is None:
                        continue
                    composite, vec = product
                    for r, x in enumerate(vec):
                        if x != 0:
                            n = dst_index[eps][(composite, r)]
                            col[n] = f.add(col[n], f.mul(value, x))
            cols.append(col)
        maps[eps] = Matrix.from_columns(f, cols, len(dst_basis[eps]))
    return GradedHom(source, target, maps)
