"""
The total hom algebra E = End(⊕_i A[γ_i]) and the E-modules Hom(⊕ A[γ_i], M).

A basis element (i, j, α, k) of E is the homomorphism A[γ_i] -> A[γ_j]
sending the generator g_i to a_k ⊗ g_j, where a_k ∈ A_α and αγ_j = γ_i.
The product in E is composition, x·y = x∘y:

    (j, l, β, m) ∘ (i, j, α, k) = Σ_r μ_{α,β}(k, m)_r (i, l, αβ, r)

Hom(A[γ_i], M) ≅ M_{γ_i} by evaluation at g_i, so ⊕_i M_{γ_i} is a right
E-module: m·(i, j, α, k) = a_k·m for m ∈ M_{γ_j}.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from exactfield.algebras import FiniteAlgebra
from exactfield.matrices import Matrix, RowSpace, unit_vector, vec_axpy
from gradalg.exceptions import InfiniteSupport, StructureError

from .models import GradedModule, GradedSubmodule

logger = logging.getLogger(__name__)


def default_generators(algebra):
    """Support arrows whose generator e_t ⊗ 1 is nonzero."""
    c = algebra.category
    return tuple(g for g in c.support if algebra.dim(c.identity(c.target(g))))


@dataclass(frozen=True, eq=False)
class TotalHomAlgebra:
    """
    Attributes:
        graded: GradedAlgebra A
        generators: Tuple of arrows γ_1 … γ_n
        index: Tuple of basis keys (i, j, α, k)
        algebra: FiniteAlgebra structure of E
    """

    graded: object
    generators: tuple
    index: tuple
    algebra: FiniteAlgebra

    @property
    def dim(self):
        return self.algebra.dim

    @cached_property
    def position(self):
        return {key: n for n, key in enumerate(self.index)}

    def block(self, i, j):
        """Basis positions of Hom(A[γ_i], A[γ_j])."""
        return tuple(n for n, key in enumerate(self.index) if key[0] == i and key[1] == j)

    def block_dim(self, i, j):
        return len(self.block(i, j))

    def block_identity(self, i):
        """The idempotent 1_{γ_i}."""
        c = self.graded.category
        gamma = self.generators[i]
        target = c.target(gamma)
        ident = c.identity(target)
        f = self.graded.field
        out = [f.zero] * self.dim
        for k, value in enumerate(self.graded.unit(target)):
            if value != 0:
                out[self.position[(i, i, ident, k)]] = value
        return tuple(out)

    def embed(self, i, j, element):
        """
        The E-element of the block (i, j) given by x ∈ A(γ_i:γ_j) as {α: coordinates}.
        """
        f = self.graded.field
        out = [f.zero] * self.dim
        for alpha, coords in element.items():
            for k, value in enumerate(coords):
                if value != 0:
                    out[self.position[(i, j, alpha, k)]] = value
        return tuple(out)

    def restrict(self, x, i, j):
        """Component of x in block (i, j) as {α: coordinates}."""
        f = self.graded.field
        out = {}
        for n in self.block(i, j):
            _, _, alpha, k = self.index[n]
            coords = out.setdefault(alpha, [f.zero] * self.graded.dim(alpha))
            coords[k] = x[n]
        return {alpha: tuple(v) for alpha, v in out.items()}

    def describe(self):
        return {
            'generators': list(self.generators),
            'dim': self.dim,
            'blocks': {f"{self.generators[i]}->{self.generators[j]}": self.block_dim(i, j)
                       for i in range(len(self.generators)) for j in range(len(self.generators))},
        }


def total_hom_algebra(algebra, generators=None):
    """
    Build E for the given generator list (default: every arrow with a nonzero generator).

    Raises:
        StructureError: If a generator is outside the support
    """
    c = algebra.category
    generators = default_generators(algebra) if generators is None else tuple(generators)
    for gamma in generators:
        c.arrow(gamma)
    key = generators
    cache = _total_cache(algebra)
    if key in cache:
        return cache[key]
    index = []
    for i, gi in enumerate(generators):
        for j, gj in enumerate(generators):
            for alpha in c.left_factors(gi, gj):
                index.extend((i, j, alpha, k) for k in range(algebra.dim(alpha)))
    position = {key: n for n, key in enumerate(index)}
    f = algebra.field
    dim = len(index)
    products = {}
    for n1, (j, l, beta, m) in enumerate(index):
        for n2, (i, j2, alpha, k) in enumerate(index):
            if j2 != j:
                continue
            product = algebra.basis_product(alpha, k, beta, m)
            if product is None:
                continue
            composite, coords = product
            out = [f.zero] * dim
            for r, value in enumerate(coords):
                if value != 0:
                    out[position[(i, l, composite, r)]] = value
            products[(n1, n2)] = out
    unit = [f.zero] * dim
    for i, gamma in enumerate(generators):
        target = c.target(gamma)
        ident = c.identity(target)
        for k, value in enumerate(algebra.unit(target)):
            if value != 0:
                unit[position[(i, i, ident, k)]] = value
    labels = tuple(f"{generators[i]}->{generators[j]}:{algebra.basis_labels(a)[k]}" for i, j, a, k in index)
    e = TotalHomAlgebra(algebra, generators, tuple(index), FiniteAlgebra.from_products(f, dim, products, unit, labels))
    cache[key] = e
    logger.debug(f"total hom algebra on {len(generators)} generators has dimension {dim}")
    return e


def _total_cache(algebra):
    cache = algebra.__dict__.get('_total_cache')
    if cache is None:
        cache = {}
        object.__setattr__(algebra, '_total_cache', cache)
    return cache


class TotalModule:
    """
    ⊕_i M_{γ_i} as a right E-module.

    Attributes:
        total: TotalHomAlgebra
        module: GradedModule M
        offsets: Generator index -> (offset, dim M_{γ_i})
        dim: Total dimension
    """

    def __init__(self, total, module):
        if module.algebra is not total.graded:
            raise StructureError("module over another algebra", code="algebra_mismatch")
        missing = [g for g in module.support if g not in total.generators]
        if missing:
            raise InfiniteSupport(
                f"module {module.name} has components outside the generator list: {missing}",
                params={'arrows': missing},
            )
        self.total = total
        self.module = module
        self.offsets = {}
        pos = 0
        for i, gamma in enumerate(total.generators):
            d = module.dim(gamma)
            self.offsets[i] = (pos, d)
            pos += d
        self.dim = pos

    @cached_property
    def basis_actions(self):
        """Matrix of v ↦ v·b for every basis element b of E (acting on column vectors)."""
        f = self.module.field
        mats = []
        for i, j, alpha, k in self.total.index:
            src_pos, src_dim = self.offsets[j]
            dst_pos, dst_dim = self.offsets[i]
            entries = {}
            if src_dim and dst_dim:
                mat = self.module.act(alpha, self.total.generators[j], k)
                if mat is not None:
                    for r in range(dst_dim):
                        for col in range(src_dim):
                            if mat.rows[r][col] != 0:
                                entries[(dst_pos + r, src_pos + col)] = mat.rows[r][col]
            rows = tuple(
                tuple(entries.get((r, col), f.zero) for col in range(self.dim)) for r in range(self.dim)
            )
            mats.append(Matrix(f, rows, self.dim))
        return tuple(mats)

    def act(self, v, x):
        """v·x for v ∈ V and x ∈ E."""
        f = self.module.field
        out = (f.zero,) * self.dim
        for coef, mat in zip(x, self.basis_actions):
            if coef != 0:
                out = vec_axpy(f, coef, mat.apply(v), out)
        return out

    def component(self, v, i):
        pos, d = self.offsets[i]
        return tuple(v[pos:pos + d])

    def embed(self, i, m):
        f = self.module.field
        pos, d = self.offsets[i]
        out = [f.zero] * self.dim
        out[pos:pos + d] = list(m)
        return tuple(out)

    def span_action(self, rows, elements):
        """RowSpace spanned by v·x for v in rows and x in elements."""
        return RowSpace(self.module.field, self.dim, [self.act(v, x) for v in rows for x in elements])

    def submodule_from(self, space):
        """Read a V-subspace stable under the block idempotents as a graded submodule."""
        f = self.module.field
        spaces = {}
        for i, gamma in enumerate(self.total.generators):
            _, d = self.offsets[i]
            if not d:
                continue
            projected = [self.component(v, i) for v in space.basis]
            spaces[gamma] = RowSpace(f, d, projected)
        return GradedSubmodule(self.module, spaces)

    def full_basis(self):
        return [unit_vector(self.module.field, self.dim, n) for n in range(self.dim)]

    def reconstruct(self, name=None):
        """
        Recover the graded module: M_{γ_i} = V·1_{γ_i}, and a_k: M_{γ_j} -> M_{αγ_j}
        read off the basis element (i, j, α, k).
        """
        f = self.module.field
        dims = {g: self.offsets[i][1] for i, g in enumerate(self.total.generators) if self.offsets[i][1]}
        action = {}
        for n, (i, j, alpha, k) in enumerate(self.total.index):
            beta = self.total.generators[j]
            if not dims.get(beta) or not dims.get(self.total.generators[i]):
                continue
            src_pos, src_dim = self.offsets[j]
            dst_pos, dst_dim = self.offsets[i]
            full = self.basis_actions[n]
            block = tuple(tuple(full.rows[dst_pos + r][src_pos:src_pos + src_dim]) for r in range(dst_dim))
            mats = action.setdefault((alpha, beta), [Matrix.zeros(f, dst_dim, src_dim)] * self.module.algebra.dim(alpha))
            mats[k] = Matrix(f, block, src_dim)
        return GradedModule(
            self.module.algebra,
            dims,
            {key: tuple(mats) for key, mats in action.items()},
            name=name or self.module.name,
        )


def module_to_total(module, total=None):
    """
    The right E-module ⊕_i M_{γ_i} of M.

    Raises:
        InfiniteSupport: If M has components the generator list does not see
    """
    if total is None:
        total = total_hom_algebra(module.algebra, module.support)
    return TotalModule(total, module)
