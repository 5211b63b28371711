"""
Axiom checks for graded algebras, modules and homomorphisms.

Triples whose intermediate composite leaves a window are skipped: such
products are zero by definition and carry no constraint.
"""

import itertools

from category.validators import validate_category
from exactfield.matrices import is_zero_vector, unit_vector
from gradalg.validation import ValidationReport


def _same(u, v):
    """Compare two (arrow, vector) results where None means zero."""
    if u is None or v is None:
        other = v if u is None else u
        return other is None or is_zero_vector(other[1])
    return u == v


def validate_algebra(algebra):
    """
    Associativity on basis triples and the local unit laws.

    Returns:
        ValidationReport; violations carry the arrows and basis indices
    """
    report = ValidationReport(f'algebra:{algebra.name}')
    report.extend(validate_category(algebra.category))
    c = algebra.category
    f = algebra.field
    support = algebra.support
    for alpha, beta, gamma in itertools.product(support, repeat=3):
        ab = c.compose_in_support(alpha, beta)
        bg = c.compose_in_support(beta, gamma)
        if ab is None or bg is None:
            continue
        for i, j, k in itertools.product(range(algebra.dim(alpha)), range(algebra.dim(beta)), range(algebra.dim(gamma))):
            a = unit_vector(f, algebra.dim(alpha), i)
            left = algebra.product(ab, algebra.basis_product(alpha, i, beta, j)[1], gamma, unit_vector(f, algebra.dim(gamma), k)) \
                if algebra.dim(ab) else None
            inner = algebra.basis_product(beta, j, gamma, k)
            right = algebra.product(alpha, a, bg, inner[1]) if inner is not None and algebra.dim(bg) else None
            if not _same(left, right):
                report.add(
                    f"associativity fails on ({alpha}#{i}, {beta}#{j}, {gamma}#{k})",
                    'associativity',
                    triple=[[alpha, i], [beta, j], [gamma, k]],
                )
    for alpha in support:
        s, t = c.source(alpha), c.target(alpha)
        for i in range(algebra.dim(alpha)):
            a = unit_vector(f, algebra.dim(alpha), i)
            left = algebra.product(c.identity(t), algebra.unit(t), alpha, a)
            if left is None or left[1] != a:
                report.add(f"e_{t}·{alpha}#{i} ≠ {alpha}#{i}", 'left_unit', arrow=alpha, index=i)
            right = algebra.product(alpha, a, c.identity(s), algebra.unit(s))
            if right is None or right[1] != a:
                report.add(f"{alpha}#{i}·e_{s} ≠ {alpha}#{i}", 'right_unit', arrow=alpha, index=i)
    return report


def validate_module(module):
    """
    a(bm) = (ab)m on basis triples and e_t m = m.
    """
    report = ValidationReport(f'module:{module.name}')
    algebra = module.algebra
    c = algebra.category
    f = algebra.field
    for alpha, beta, gamma in itertools.product(algebra.support, algebra.support, module.support):
        ab = c.compose_in_support(alpha, beta)
        bg = c.compose_in_support(beta, gamma)
        if ab is None or bg is None:
            continue
        for i, j, k in itertools.product(range(algebra.dim(alpha)), range(algebra.dim(beta)), range(module.dim(gamma))):
            m = unit_vector(f, module.dim(gamma), k)
            ab_elem = algebra.basis_product(alpha, i, beta, j)
            left = None
            if ab_elem is not None:
                left = _act_element(module, ab, ab_elem[1], gamma, m)
            bm = module.act_vector(beta, j, gamma, m)
            right = module.act_vector(alpha, i, bg, bm[1]) if bm is not None else None
            if not _same(left, right):
                report.add(
                    f"module associativity fails on ({alpha}#{i}, {beta}#{j}, {gamma}#{k})",
                    'module_associativity',
                    triple=[[alpha, i], [beta, j], [gamma, k]],
                )
    for gamma in module.support:
        t = c.target(gamma)
        for k in range(module.dim(gamma)):
            m = unit_vector(f, module.dim(gamma), k)
            result = _act_element(module, c.identity(t), algebra.unit(t), gamma, m)
            if result is None or result[1] != m:
                report.add(f"e_{t}·{gamma}#{k} ≠ {gamma}#{k}", 'module_unit', arrow=gamma, index=k)
    return report


def _act_element(module, alpha, a, gamma, m):
    """x·m for x = Σ a_i in A_α."""
    f = module.field
    out = None
    for i, coef in enumerate(a):
        if coef == 0:
            continue
        r = module.act_vector(alpha, i, gamma, m)
        if r is None:
            return None
        target, v = r
        acc = out[1] if out is not None else (f.zero,) * len(v)
        out = (target, tuple(f.add(x, f.mul(coef, y)) for x, y in zip(acc, v)))
    if out is None:
        target = module.category.compose_in_support(alpha, gamma)
        return None if target is None else (target, module.zero_vector(target))
    return out


def validate_hom(hom):
    """
    Equivariance f_{αβ}(a·m) = a·f_β(m) on basis pairs.
    """
    source, target = hom.source, hom.target
    report = ValidationReport(f'hom:{source.name}->{target.name}')
    algebra = source.algebra
    c = algebra.category
    f = algebra.field
    for alpha in algebra.support:
        for beta in source.support:
            gamma = c.compose_in_support(alpha, beta)
            if gamma is None:
                continue
            for i in range(algebra.dim(alpha)):
                for k in range(source.dim(beta)):
                    m = unit_vector(f, source.dim(beta), k)
                    am = source.act_vector(alpha, i, beta, m)
                    left = hom.apply(gamma, am[1]) if am is not None and source.dim(gamma) else ()
                    fm = hom.apply(beta, m) if target.dim(beta) else ()
                    right = target.act_vector(alpha, i, beta, fm) if target.dim(beta) else None
                    right = right[1] if right is not None else (f.zero,) * target.dim(gamma)
                    left = left if left else (f.zero,) * target.dim(gamma)
                    if tuple(left) != tuple(right):
                        report.add(
                            f"f is not equivariant for {alpha}#{i} acting on {beta}#{k}",
                            'not_equivariant',
                            pair=[[alpha, i], [beta, k]],
                        )
    return report
