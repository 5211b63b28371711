"""
Poset-graded algebras from an orthogonal idempotent decomposition.

Given a unital algebra A with complete orthogonal idempotents e_λ indexed by
a poset, the arrow λ -> μ carries e_μ A e_λ and the product is the product
of A. This requires e_μ A e_λ = 0 unless λ ≤ μ.
"""

import logging

from category.builders import from_poset
from exactfield.matrices import Matrix, RowSpace, is_zero_vector
from gradalg.exceptions import IdempotentError, TriangularityViolation

from .models import GradedAlgebra

logger = logging.getLogger(__name__)


def _check_idempotents(algebra, idempotents):
    total = algebra.zero
    names = list(idempotents)
    for name in names:
        e = idempotents[name]
        if algebra.mul(e, e) != e:
            raise IdempotentError(f"e_{name} is not idempotent", code="not_idempotent", params={'element': name})
        total = algebra.add(total, e)
    for a in names:
        for b in names:
            if a != b and not is_zero_vector(algebra.mul(idempotents[a], idempotents[b])):
                raise IdempotentError(
                    f"e_{a}·e_{b} ≠ 0", code="not_orthogonal", params={'pair': [a, b]}
                )
    if total != algebra.one:
        raise IdempotentError("the idempotents do not sum to 1", code="not_complete")


def build_poset_graded(algebra, idempotents, elements, relation, name="Ã"):
    """
    The graded algebra Ã over the poset category.

    Args:
        algebra: Unital FiniteAlgebra A
        idempotents: Poset element -> coordinates of e_λ
        elements: Poset elements
        relation: Pairs (λ, μ) with λ ≤ μ, reflexive

    Raises:
        IdempotentError: If the family is not orthogonal and complete
        TriangularityViolation: If e_μ A e_λ ≠ 0 for some λ ≰ μ
    """
    algebra.require_unital()
    idempotents = {str(k): tuple(algebra.field(x) for x in v) for k, v in idempotents.items()}
    category = from_poset(elements, relation)
    if set(idempotents) != set(category.objects):
        raise IdempotentError(
            "idempotents must be indexed by the poset elements",
            code="index_mismatch",
            params={'elements': list(category.objects)},
        )
    _check_idempotents(algebra, idempotents)
    f = algebra.field
    basis = [algebra.basis_vector(i) for i in range(algebra.dim)]
    related = {(a.source, a.target): a.id for a in category.arrows}
    corners = {}
    for lam in category.objects:
        for mu in category.objects:
            space = RowSpace(
                f,
                algebra.dim,
                [algebra.mul(algebra.mul(idempotents[mu], b), idempotents[lam]) for b in basis],
            )
            if not space.dim:
                continue
            if (lam, mu) not in related:
                raise TriangularityViolation(
                    f"e_{mu}·A·e_{lam} ≠ 0 although {lam} ≤ {mu} fails",
                    params={'source': lam, 'target': mu, 'dim': space.dim},
                )
            corners[related[(lam, mu)]] = space

    action = {}
    for alpha, x_space in corners.items():
        for beta, y_space in corners.items():
            gamma = category.compose_in_support(alpha, beta)
            if gamma is None:
                continue
            z_space = corners.get(gamma)
            if z_space is None:
                continue
            mats = []
            for x in x_space.basis:
                cols = []
                for y in y_space.basis:
                    z = algebra.mul(x, y)
                    cols.append(z_space.coordinates(z))
                mats.append(Matrix.from_columns(f, cols, z_space.dim))
            action[(alpha, beta)] = tuple(mats)

    local_units = {}
    for lam in category.objects:
        ident = category.identity(lam)
        space = corners.get(ident)
        if space is not None:
            local_units[lam] = space.coordinates(idempotents[lam])
    labels = {
        arrow: [f"[{arrow}]#{i}" for i in range(space.dim)] for arrow, space in corners.items()
    }
    logger.info(
        f"poset-graded algebra on {len(category.objects)} elements with components "
        f"{ {a: s.dim for a, s in corners.items()} }"
    )
    return GradedAlgebra(
        category, f, {a: s.dim for a, s in corners.items()}, action, local_units, labels, name
    )
