"""
Jacobson radicals of finite-dimensional algebras.

Over Q and over F_p with p > dim A the radical is the kernel of the trace
form (x, y) ↦ Tr(L_{xy}). For small p the trace form is refined by the
integer-lift forms g_i(z) = Tr(ẑ^{p^i}) / p^i mod p, i = 1 … ⌊log_p dim A⌋,
each restricted to the kernel of the previous one.
"""

import logging

from django.conf import settings
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from exactfield.matrices import Matrix, RowSpace, kernel_basis
from gradalg.exceptions import CharacteristicTooSmall, StructureError

from .models import AlgebraIdeal, RadicalCertificate

logger = logging.getLogger(__name__)


def _trace_vector(algebra):
    """t_k = Tr(L_{b_k}), so Tr(L_x) = Σ x_k t_k."""
    f = algebra.field
    out = []
    for k in range(algebra.dim):
        total = f.zero
        for j in range(algebra.dim):
            total = f.add(total, algebra.table[k][j][j])
        out.append(total)
    return out


def _linear_form_kernel(algebra, rows, form):
    """
    {x ∈ span(rows) : form(x·b_j) = 0 for every basis element b_j}.

    `form` must be linear on the products that occur.
    """
    f = algebra.field
    rows = list(rows)
    if not rows:
        return RowSpace(f, algebra.dim)
    # values[s][j] = form(v_s · b_j)
    values = []
    for v in rows:
        values.append([form(algebra.mul(v, algebra.basis_vector(j))) for j in range(algebra.dim)])
    system = Matrix(f, tuple(tuple(values[s][j] for s in range(len(rows))) for j in range(algebra.dim)), len(rows))
    combos = kernel_basis(system).rows
    out = []
    for c in combos:
        x = [f.zero] * algebra.dim
        for coef, v in zip(c, rows):
            if coef != 0:
                x = [f.add(a, f.mul(coef, b)) for a, b in zip(x, v)]
        out.append(tuple(x))
    return RowSpace(f, algebra.dim, out)


def _integer_power_trace(matrix, exponent):
    """Tr(M^exponent) for an integer matrix given as nested lists."""
    n = len(matrix)
    power = DomainMatrix([[ZZ(x) for x in row] for row in matrix], (n, n), ZZ) ** exponent
    return int(sum(power.diagonal(), ZZ(0)))


def _lifted_form(algebra, i):
    p = algebra.field.prime
    power = p ** i

    def form(z):
        lifted = [[int(x) for x in row] for row in algebra.left_matrix(z).rows]
        trace = _integer_power_trace(lifted, power)
        if trace % power:
            logger.error(f"trace of the {power}-th power is not divisible by {power}")
            raise StructureError("integer trace is not divisible by the prime power", code="lift_trace")
        return (trace // power) % p

    return form


def _max_exponent(p, n):
    i = 0
    while p ** (i + 1) <= n:
        i += 1
    return i


def power_chain(algebra, space):
    """
    I, I², I³, … down to the first repeated term.

    Returns:
        list of RowSpace; the last entry is zero exactly when I is nilpotent
    """
    chain = [space]
    current = space
    while current.dim:
        following = algebra.span_products(current.basis, space.basis)
        chain.append(following)
        if following.dim == current.dim:
            break
        current = following
    return chain


def nilpotency_index(ideal):
    """
    Smallest m with I^m = 0, or None when I is not nilpotent.

    The zero ideal has index 1.
    """
    chain = power_chain(ideal.ambient, ideal.space)
    if chain[-1].dim:
        return None
    return len(chain)


def algebra_radical(algebra, policy=None):
    """
    The Jacobson radical, certified by its nilpotency index.

    Args:
        algebra: Unital FiniteAlgebra
        policy: "iterate" or "refuse" for p ≤ dim (default from settings)

    Raises:
        NotUnital: If the algebra has no identity
        CharacteristicTooSmall: If policy is "refuse" and p ≤ dim
    """
    policy = policy or settings.GRADALG_SMALL_CHARACTERISTIC
    cache = algebra.__dict__.setdefault('_radical_cache', {})
    if policy in cache:
        return cache[policy]
    algebra.require_unital()
    f = algebra.field
    n = algebra.dim
    small = f.is_finite and f.prime <= n
    if small and policy == 'refuse':
        raise CharacteristicTooSmall(
            f"characteristic {f.prime} does not exceed the dimension {n}",
            params={'prime': f.prime, 'dim': n},
        )
    traces = _trace_vector(algebra)

    def trace_form(z):
        total = f.zero
        for coef, t in zip(z, traces):
            if coef != 0 and t != 0:
                total = f.add(total, f.mul(coef, t))
        return total

    basis = [algebra.basis_vector(i) for i in range(n)]
    space = _linear_form_kernel(algebra, basis, trace_form)
    steps = [space.dim]
    method = "trace-form"
    if small:
        method = "iterated-trace-form"
        for i in range(1, _max_exponent(f.prime, n) + 1):
            space = _linear_form_kernel(algebra, space.basis, _lifted_form(algebra, i))
            steps.append(space.dim)
    if not algebra.is_ideal(space):
        logger.error(f"trace-form kernel of dimension {space.dim} is not an ideal")
        raise StructureError("radical computation produced a non-ideal", code="radical_not_ideal")
    ideal = AlgebraIdeal(algebra, space)
    index = nilpotency_index(ideal)
    if index is None:
        logger.error(f"trace-form kernel of dimension {space.dim} is not nilpotent")
        raise StructureError("radical computation produced a non-nilpotent ideal", code="radical_not_nilpotent")
    certificate = RadicalCertificate(method, index, n - space.dim, tuple(steps))
    ideal = AlgebraIdeal(algebra, space, certificate)
    logger.info(f"radical of a {n}-dimensional algebra over {f.tag}: dim {space.dim}, nilpotency index {index}")
    cache[policy] = ideal
    return ideal
